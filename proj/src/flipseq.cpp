#include "mlc/flipseq.hpp"

#include <algorithm>

#include "mlc/error.hpp"
#include "mlc/trees.hpp"

namespace mlc {

namespace {

int norm_shift(long long s, int n) { return mod_pos(s, n) % (2 * n + 1); }

}  // namespace

std::vector<MidString> walk(const MidString& start, const FlipSequence& seq) {
    const int n = start.n();
    std::vector<MidString> out;
    out.reserve(seq.entries.size() + 1);
    out.push_back(start);
    MidString cur = start;
    for (int p : seq.entries) {
        if (p < 1 || p > 2 * n + 1) throw Error(ErrorCode::OutOfRange, "flip position");
        cur.flip(p);
        const int w = cur.weight();
        if (w != n && w != n + 1) throw Error(ErrorCode::WeightViolation, cur.str());
        out.push_back(cur);
    }
    return out;
}

ShiftedFlip shift_of(const FlipSequence& seq, const MidString& start) {
    const auto path = walk(start, seq);
    const MidString& end = path.back();
    for (int l = 0; l < start.length(); ++l)
        if (rotate(end, l) == start) return ShiftedFlip{start, seq, l};
    throw Error(ErrorCode::NotPeriodic, "end is not a rotation of the start");
}

ShiftedFlip rev(const ShiftedFlip& sf) {
    const int n = sf.start.n();
    ShiftedFlip r{sf.start, {n, {}}, norm_shift(-sf.shift, n)};
    for (auto it = sf.seq.entries.rbegin(); it != sf.seq.entries.rend(); ++it)
        r.seq.entries.push_back(mod_pos(*it - sf.shift, n));
    return r;
}

ShiftedFlip mov(const ShiftedFlip& sf) {
    const int n = sf.start.n();
    if (sf.seq.entries.empty()) return sf;
    ShiftedFlip r{sf.start, {n, {}}, sf.shift};
    r.start.flip(sf.seq.entries.front());
    r.seq.entries.assign(sf.seq.entries.begin() + 1, sf.seq.entries.end());
    r.seq.entries.push_back(mod_pos(sf.seq.entries.front() + sf.shift, n));
    return r;
}

ShiftedFlip translate(const ShiftedFlip& sf, long long i) {
    const int n = sf.start.n();
    ShiftedFlip r{rotate(sf.start, -i), {n, {}}, sf.shift};
    for (int p : sf.seq.entries) r.seq.entries.push_back(mod_pos(p + i, n));
    return r;
}

GluingPair gluing_pair(const std::string& x) {
    const std::string y = pull(x);
    const std::size_t m = match_close(x, 0);
    // x = 1 (1 0 u) 0 v
    return GluingPair{x, y, x.substr(3, m - 4), x.substr(m)};
}

std::array<MidString, 7> gluing_x_path(const GluingPair& pair) {
    std::array<MidString, 7> xs;
    xs[0] = MidString::parse(pair.x + "0");
    for (int k = 1; k < 7; ++k) xs[k] = f(xs[k - 1]);
    return xs;
}

GluingCycle gluing_cycle(const GluingPair& pair) {
    if (!is_pullable(pair.x) || pull(pair.x) != pair.y)
        throw Error(ErrorCode::ForbiddenPair, "not a gluing pair");
    const auto& u = pair.u;
    const auto& v = pair.v;
    const int q = static_cast<int>(u.size()) + 4;
    auto m = [](const std::string& s) { return MidString::parse(s); };
    GluingCycle c{pair,
                  {m("110" + u + "0" + v + "0"), m("110" + u + "1" + v + "0"), m("100" + u + "1" + v + "0"),
                   m("101" + u + "1" + v + "0"), m("101" + u + "0" + v + "0"), m("111" + u + "0" + v + "0")},
                  {q, 2, 3, q, 2, 3}};
    return c;
}

ShiftedFlip glue(const ShiftedFlip& p1, const ShiftedFlip& p2, const GluingPair& pair) {
    const int n = p1.start.n();
    if (canon_plane(pair.x) == canon_plane(pair.y))
        throw Error(ErrorCode::PreconditionViolated, "pair joins a plane tree to itself");
    const auto& a = p1.seq.entries;
    const auto& b = p2.seq.entries;
    if (a.size() < 7 || b.size() < 2) throw Error(ErrorCode::PrefixMismatch, "paths too short");
    const auto xs = gluing_x_path(pair);
    const auto w1 = walk(p1.start, FlipSequence{n, std::vector<int>(a.begin(), a.begin() + 6)});
    for (int k = 0; k < 7; ++k)
        if (w1[k] != xs[k]) throw Error(ErrorCode::PrefixMismatch, "first path does not start with x^0..x^6");
    const auto y0 = MidString::parse(pair.y + "0");
    if (p2.start != y0 || walk(y0, FlipSequence{n, {b[0]}})[1] != f(y0))
        throw Error(ErrorCode::PrefixMismatch, "second path does not start with y^0, y^1");

    ShiftedFlip r{p1.start, {n, {}}, norm_shift(static_cast<long long>(p1.shift) + p2.shift, n)};
    auto& e = r.seq.entries;
    e.push_back(3);
    e.insert(e.end(), b.begin() + 1, b.end());
    const int l2 = p2.shift;
    const int q = static_cast<int>(pair.u.size()) + 4;
    // a_i is 1-indexed in the join formula
    for (int p : {q, a[4], a[3], a[2], a[1], 2}) e.push_back(mod_pos(p + l2, n));
    for (std::size_t i = 6; i < a.size(); ++i) e.push_back(mod_pos(a[i] + l2, n));
    return r;
}

Relation classify_relation(const GluingPair& p, const GluingPair& q, long long i, long long j) {
    const auto cx = canon_plane(p.x), cy = canon_plane(p.y);
    const auto qx = canon_plane(q.x), qy = canon_plane(q.y);
    if (cx == cy || qx == qy || ((cx == qx && cy == qy) || (cx == qy && cy == qx)))
        throw Error(ErrorCode::PreconditionViolated, "pairs must join distinct plane trees");
    const int n = static_cast<int>(p.x.size() / 2);
    const int m = 2 * n + 1;
    auto same = [m](long long a, long long b) { return ((a - b) % m + m) % m == 0; };
    if (same(i, j + 2) && q.x == rho_pow(p.x, 2)) return Relation::Interleaved;
    if (same(i, j - 1) && q.x == rho_inv(p.y)) return Relation::Nested;
    return Relation::Compatible;
}

}  // namespace mlc
