#include "test_main.hpp"

#include <map>
#include <set>

#include "mlc/factor.hpp"

using namespace mlc;

static MidString ms(const std::string& s) { return MidString::parse(s); }

TEST_CASE("f on the gluing example") {
    CHECK(f(ms("11000")).str() == "11010");
    CHECK(f(ms("11010")).str() == "01010");
    CHECK(f(ms("01010")).str() == "01110");
    CHECK(f(ms("01110")).str() == "00110");
    CHECK(f(ms("1100100")).str() == "1101100");
}

TEST_CASE("f structure") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& v : all_vertices(n)) {
            const auto w = f(v);
            CHECK(f_inv(w) == v);
            CHECK(f(f_inv(v)) == v);
            CHECK(w.in_a() == v.in_b());
            if (v.in_a()) {
                CHECK(ell(w) == ell(v));
                CHECK(ell(f(w)) == mod_pos(ell(v) + 1, n) % (2 * n + 1));
                CHECK(tree_of(f(w)) == rho(tree_of(v)));
            }
        }
    }
}

TEST_CASE("kappa") {
    CHECK(kappa(ms("11000")) == 4);
    CHECK(kappa(ms("1110000")) == 6);
    for (int n = 1; n <= 6; ++n) {
        for (const auto& v : all_vertices(n)) {
            const int k = kappa(v);
            CHECK(kappa(f(v)) == k);
            CHECK(kappa(rotate(v, 1)) == k);
            // necklaces along the orbit are distinct until the return at kappa
            std::set<std::string> seen;
            MidString cur = v;
            for (int i = 0; i < k; ++i) {
                CHECK(seen.insert(necklace_of(cur).canon.str()).second);
                cur = f(cur);
            }
            CHECK(necklace_of(cur) == necklace_of(v));
        }
    }
}

TEST_CASE("periodic_path") {
    const auto p = periodic_path(ms("11000"));
    REQUIRE(p.vertices.size() == 4);
    CHECK(p.vertices[0].str() == "11000");
    CHECK(p.vertices[1].str() == "11010");
    CHECK(p.vertices[2].str() == "01010");
    CHECK(p.vertices[3].str() == "01110");
    auto next = p.vertices[3];
    next.flip(p.flips.entries.back());
    CHECK(next.str() == "00110");
    CHECK(necklace_of(next) == necklace_of(p.start));
    for (const auto& t : plane_trees(6)) {
        const auto v = ms(t.canon + "0");
        const auto q = periodic_path(v);
        CHECK(q.vertices.size() == static_cast<std::size_t>(2 * t.lambda));
        for (std::size_t i = 0; i < q.vertices.size(); i += 2)
            CHECK(ell(q.vertices[i]) == static_cast<int>(i / 2) % 13);
        // the end is the start rotated right by lambda
        auto end = q.vertices.back();
        end.flip(q.flips.entries.back());
        CHECK(rotate(end, t.lambda) == v);
    }
}

TEST_CASE("cycle factor census") {
    const std::vector<std::size_t> expected{1, 1, 2, 3, 6, 14, 34, 95, 280, 854};
    for (int n = 1; n <= 10; ++n) CHECK(enumerate_factor(n).size() == expected[n - 1]);
    CHECK_THROWS(enumerate_factor(13));
}

TEST_CASE("cycle factor partitions the necklaces") {
    for (int n = 1; n <= 6; ++n) {
        std::map<std::string, int> hits;
        for (const auto& c : enumerate_factor(n)) {
            CHECK(c.necklaces.size() == static_cast<std::size_t>(2 * c.tree.lambda));
            for (const auto& nk : c.necklaces) ++hits[nk.canon.str()];
        }
        std::set<std::string> all;
        for (const auto& v : all_vertices(n)) all.insert(necklace_of(v).canon.str());
        CHECK(hits.size() == all.size());
        for (const auto& [k, v] : hits) CHECK(v == 1);
    }
}

TEST_CASE("flip sequence text") {
    auto a = FlipSequence::parse(3, "6253462135");
    CHECK(a.entries.size() == 10);
    CHECK(a.str() == "6 2 5 3 4 6 2 1 3 5");
    CHECK(FlipSequence::parse(10, "12 3 21").entries == std::vector<int>{12, 3, 21});
}
