#include "test_main.hpp"

#include <set>

#include "mlc/bits.hpp"
#include "mlc/error.hpp"

using namespace mlc;

static MidString ms(const char* s) { return MidString::parse(s); }

TEST_CASE("rotate") {
    CHECK(rotate(ms("1110000"), 1).str() == "1100001");
    CHECK(rotate(ms("1110000"), 0) == ms("1110000"));
    CHECK(rotate(ms("1110000"), 7) == ms("1110000"));
    CHECK(rotate(rotate(ms("1011000"), 3), -3) == ms("1011000"));
    CHECK(rotate(ms("1100000001111"), -2).str() == "1111000000011");
}

TEST_CASE("mod_pos uses representatives 1..2n+1") {
    CHECK(mod_pos(0, 3) == 7);
    CHECK(mod_pos(7, 3) == 7);
    CHECK(mod_pos(8, 3) == 1);
    CHECK(mod_pos(-1, 3) == 6);
}

TEST_CASE("parse rejects bad weight") {
    CHECK_THROWS_AS(ms("1111100"), Error);
    CHECK_THROWS_AS(ms("0000001"), Error);
    CHECK_THROWS_AS(ms("1100"), Error);
}

TEST_CASE("packed storage beyond one word") {
    std::string s(201, '0');
    for (int i = 0; i < 100; ++i) s[2 * i] = '1';
    auto x = ms(s.c_str());
    CHECK(x.str() == s);
    CHECK(x.weight() == 100);
    CHECK(rotate(rotate(x, 77), -77) == x);
    x.flip(200);
    CHECK(x.get(200));
}

TEST_CASE("necklace_of") {
    CHECK(necklace_of(ms("11000")).canon.str() == "00011");
    auto x = ms("1101000");
    CHECK(necklace_of(rotate(x, 2)) == necklace_of(x));
    std::set<std::string> neck;
    for (const auto& v : all_vertices(3)) neck.insert(necklace_of(v).canon.str());
    CHECK(neck.size() == 10);
}

TEST_CASE("necklace_of agrees with brute minimum and separates orbits") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> canon;
        const auto all = all_vertices(n);
        for (const auto& v : all) {
            std::string best = v.str();
            for (int i = 1; i < v.length(); ++i) best = std::min(best, rotate(v, i).str());
            CHECK(necklace_of(v).canon.str() == best);
            canon.insert(best);
        }
        CHECK(canon.size() * static_cast<std::size_t>(2 * n + 1) == all.size());
    }
}

TEST_CASE("ell and tree_of") {
    CHECK(ell(ms("1110000")) == 0);
    CHECK(ell(ms("0000111")) == 4);
    CHECK(ell(ms("1110100")) == 0);
    CHECK(tree_of(ms("1110100")) == "110100");
    CHECK(tree_of(ms("1110000")) == "111000");
    CHECK(tree_of(ms("0001110")) == "111000");
}

TEST_CASE("ell is the unique Dyck exposing rotation") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& v : all_vertices(n)) {
            int found = -1, count = 0;
            for (int l = 0; l < v.length(); ++l) {
                const auto s = rotate(v, l).str();
                const bool ok = v.in_a() ? (is_dyck(s.substr(0, 2 * n)) && s.back() == '0')
                                         : (s.front() == '1' && is_dyck(s.substr(1)));
                if (ok) {
                    found = l;
                    ++count;
                }
            }
            REQUIRE(count == 1);
            CHECK(ell(v) == found);
            const auto t = tree_of(v);
            CHECK(tree_of(rotate(v, 3)) == t);
        }
    }
}

TEST_CASE("is_dyck") {
    CHECK(is_dyck(""));
    CHECK(is_dyck("110100"));
    CHECK_FALSE(is_dyck("101"));
    CHECK_FALSE(is_dyck("0110"));
}

TEST_CASE("least_rotation") {
    CHECK(least_rotation({3, 1, 2}) == 1);
    CHECK(least_rotation({1, 1, 1}) == 0);
    CHECK(least_rotation({2, 0, 1, 0, 0}) == 3);
}
