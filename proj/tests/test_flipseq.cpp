#include "test_main.hpp"

#include <map>
#include <set>

#include "mlc/error.hpp"
#include "mlc/flipseq.hpp"
#include "mlc/trees.hpp"

using namespace mlc;

static MidString ms(const std::string& s) { return MidString::parse(s); }
static FlipSequence fs(int n, std::vector<int> e) { return FlipSequence{n, std::move(e)}; }

static std::vector<GluingPair> all_pairs(int n) {
    std::vector<GluingPair> out;
    for (const auto& t : dyck_words(n))
        if (is_pullable(t)) out.push_back(gluing_pair(t));
    return out;
}

TEST_CASE("shift_of") {
    CHECK(shift_of(fs(3, {2, 1, 7, 2}), ms("1010100")).shift == 2);
    CHECK(shift_of(FlipSequence::parse(3, "6253462135"), ms("1110000")).shift == 1);
    for (const auto& t : plane_trees(6)) {
        const auto p = periodic_path(ms(t.canon + "0"));
        CHECK(shift_of(p.flips, p.start).shift == t.lambda);
    }
    CHECK_THROWS_AS(shift_of(fs(3, {2, 1}), ms("1010100")), Error);
    CHECK_THROWS_AS(shift_of(fs(3, {2, 3}), ms("1010100")), Error);
}

TEST_CASE("rev, mov, translate on the worked example") {
    const auto sf = shift_of(fs(3, {2, 1, 7, 2}), ms("1010100"));
    const auto r = rev(sf);
    CHECK(r.seq.entries == std::vector<int>{7, 5, 6, 7});
    CHECK(r.shift == 5);
    const auto rp = walk(r.start, r.seq);
    CHECK(rp[0].str() == "1010100");
    CHECK(rp[1].str() == "1010101");
    CHECK(rp[2].str() == "1010001");
    CHECK(rp[3].str() == "1010011");
    CHECK(shift_of(r.seq, r.start).shift == r.shift);

    const auto m = mov(sf);
    CHECK(m.seq.entries == std::vector<int>{1, 7, 2, 4});
    CHECK(m.shift == 2);
    CHECK(m.start.str() == "1110100");
    CHECK(shift_of(m.seq, m.start).shift == 2);

    const auto t = translate(sf, 1);
    CHECK(t.seq.entries == std::vector<int>{3, 2, 1, 3});
    CHECK(t.start.str() == "0101010");
    CHECK(shift_of(t.seq, t.start).shift == 2);
}

TEST_CASE("rev and mov laws") {
    for (const auto& t : plane_trees(5)) {
        const auto p = periodic_path(ms(t.canon + "0"));
        const auto sf = shift_of(p.flips, p.start);
        const auto rr = rev(rev(sf));
        CHECK(rr.seq == sf.seq);
        CHECK(rr.start == sf.start);
        CHECK(rr.shift == sf.shift);
        auto m = sf;
        for (std::size_t i = 0; i < sf.seq.entries.size(); ++i) m = mov(m);
        const auto tr = translate(sf, sf.shift);
        CHECK(m.seq == tr.seq);
        CHECK(m.start == tr.start);
    }
}

TEST_CASE("gluing cycle") {
    const auto c = gluing_cycle(gluing_pair("110010"));
    CHECK(c.pair.y == "101010");
    const std::vector<std::string> expect{"1100100", "1101100", "1001100", "1011100", "1010100", "1110100"};
    for (int k = 0; k < 6; ++k) CHECK(c.vertices[k].str() == expect[k]);
    CHECK(c.flips == std::array<int, 6>{4, 2, 3, 4, 2, 3});
    CHECK_THROWS_AS(gluing_pair(star(5)), Error);
}

TEST_CASE("gluing cycles are 6-cycles with three f-edges") {
    for (int n = 4; n <= 7; ++n) {
        for (const auto& pr : all_pairs(n)) {
            const auto c = gluing_cycle(pr);
            for (int k = 0; k < 6; ++k) {
                auto w = c.vertices[k];
                w.flip(c.flips[k]);
                CHECK(w == c.vertices[(k + 1) % 6]);
            }
            const auto xs = gluing_x_path(pr);
            CHECK(c.vertices[0] == xs[0]);
            CHECK(c.vertices[1] == xs[1]);
            CHECK(c.vertices[2] == xs[6]);
            CHECK(c.vertices[3] == xs[5]);
            CHECK(f(c.vertices[4]) == c.vertices[5]);
            CHECK(kappa(c.vertices[0]) >= 8);
            CHECK(kappa(c.vertices[4]) >= 4);
        }
    }
}

static std::string nk(const MidString& v) { return necklace_of(v).canon.str(); }

TEST_CASE("gluing merges two factor cycles into one") {
    for (int n = 4; n <= 6; ++n) {
        for (const auto& pr : all_pairs(n)) {
            if (canon_plane(pr.x) == canon_plane(pr.y)) continue;
            std::map<std::pair<std::string, std::string>, int> edges;
            auto add = [&](const std::string& a, const std::string& b) {
                edges[{std::min(a, b), std::max(a, b)}] ^= 1;
            };
            for (const auto& start : {ms(pr.x + "0"), ms(pr.y + "0")}) {
                const auto p = periodic_path(start);
                const auto k = p.vertices.size();
                for (std::size_t i = 0; i < k; ++i) add(nk(p.vertices[i]), nk(p.vertices[(i + 1) % k]));
            }
            const auto c = gluing_cycle(pr);
            for (int k = 0; k < 6; ++k) add(nk(c.vertices[k]), nk(c.vertices[(k + 1) % 6]));
            std::map<std::string, std::vector<std::string>> adj;
            for (const auto& [e, on] : edges) {
                if (!on) continue;
                adj[e.first].push_back(e.second);
                adj[e.second].push_back(e.first);
            }
            bool two_regular = true;
            for (const auto& [v, a] : adj) two_regular = two_regular && a.size() == 2;
            CHECK(two_regular);
            // walk one cycle and compare its length with the union size
            std::string prev, cur = adj.begin()->first;
            std::size_t len = 0;
            do {
                const auto& a = adj[cur];
                const auto next = a[0] != prev ? a[0] : a[1];
                prev = cur;
                cur = next;
                ++len;
            } while (cur != adj.begin()->first && len <= adj.size());
            CHECK(len == adj.size());
            CHECK(adj.size() == periodic_path(ms(pr.x + "0")).vertices.size() +
                                    periodic_path(ms(pr.y + "0")).vertices.size());
        }
    }
}

static ShiftedFlip factor_path(const std::string& t) {
    const auto p = periodic_path(ms(t + "0"));
    return shift_of(p.flips, p.start);
}

TEST_CASE("glue adds shifts and covers both paths") {
    for (const auto& pr : all_pairs(5)) {
        if (canon_plane(pr.x) == canon_plane(pr.y)) continue;
        const auto p1 = factor_path(pr.x), p2 = factor_path(pr.y);
        const auto g = glue(p1, p2, pr);
        CHECK(g.shift == (p1.shift + p2.shift) % 11);
        const auto verified = shift_of(g.seq, g.start);
        CHECK(verified.shift == g.shift);
        std::multiset<std::string> got, want;
        const auto w = walk(g.start, g.seq);
        for (std::size_t i = 0; i + 1 < w.size(); ++i) got.insert(nk(w[i]));
        for (const auto& v : walk(p1.start, p1.seq)) want.insert(nk(v));
        for (const auto& v : walk(p2.start, p2.seq)) want.insert(nk(v));
        want.erase(want.find(nk(walk(p1.start, p1.seq).back())));
        want.erase(want.find(nk(walk(p2.start, p2.seq).back())));
        CHECK(got == want);
    }
    const auto pr = all_pairs(5).front();
    CHECK_THROWS_AS(glue(factor_path(pr.y), factor_path(pr.x), pr), Error);
}

TEST_CASE("nested gluing flips the sign of the inner shifts") {
    const std::string x = "110" "10" "0" "11101000";
    const auto p = gluing_pair(x);
    const auto q = gluing_pair(rho_inv(p.y));
    const auto a1 = factor_path(p.x);
    const auto a2 = factor_path(q.x);
    const auto a3 = factor_path(q.y);
    CHECK(a1.shift == 7);
    CHECK(a2.shift == 14);
    CHECK(a3.shift == 14);
    const auto g23 = glue(a2, a3, q);
    const auto w = walk(g23.start, g23.seq);
    const auto y0 = MidString::parse(p.y + "0");
    const auto y1 = f(y0);
    int at = -1, back = 0;
    for (std::size_t j = 0; j + 1 < w.size() && at < 0; ++j)
        for (int i = 0; i < 15; ++i)
            if (rotate(w[j], i) == y1 && rotate(w[j + 1], i) == y0) {
                at = static_cast<int>(j);
                back = i;
                break;
            }
    REQUIRE(at >= 0);
    auto inner = translate(g23, -back);
    for (int i = 0; i <= at; ++i) inner = mov(inner);
    const auto a23 = rev(inner);
    const auto total = glue(a1, a23, p);
    CHECK(total.shift == mod_pos(7 - 28, 7) % 15);
    CHECK(shift_of(total.seq, total.start).shift == total.shift);
}

TEST_CASE("classify_relation") {
    const std::string x = "110" "10" "0" "11101000";
    const auto p = gluing_pair(x);
    const auto q = gluing_pair(rho_inv(p.y));
    CHECK(classify_relation(p, q, 0, 1) == Relation::Nested);
    CHECK(classify_relation(p, q, 0, 0) == Relation::Compatible);
    // an interleaving partner needs rho^2(x) to be pullable
    bool found = false;
    for (const auto& a : all_pairs(5)) {
        const auto r2 = rho_pow(a.x, 2);
        if (!is_pullable(r2)) continue;
        const auto b = gluing_pair(r2);
        const auto ca = canon_plane(a.x), cb = canon_plane(b.y);
        if (ca == canon_plane(a.y) || ca == cb || cb == canon_plane(a.y)) continue;
        CHECK(classify_relation(a, b, 2, 0) == Relation::Interleaved);
        CHECK(classify_relation(a, b, 3, 0) == Relation::Compatible);
        found = true;
    }
    CHECK(found);
    CHECK_THROWS_AS(classify_relation(p, p, 0, 0), Error);
}
