#include "mlc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <memory>
#include <queue>
#include <set>

namespace mlc::oracle {

const char* reason_name(Reason r) {
    switch (r) {
        case Reason::None: return "None";
        case Reason::NotStarTransposition: return "NotStarTransposition";
        case Reason::Duplicate: return "Duplicate";
        case Reason::Missing: return "Missing";
        case Reason::NotCyclic: return "NotCyclic";
        case Reason::BlockSymmetryBroken: return "BlockSymmetryBroken";
        case Reason::NecklaceRepeatInBlock: return "NecklaceRepeatInBlock";
    }
    return "?";
}

std::uint64_t binom(int a, int b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    unsigned __int128 r = 1;
    for (int i = 1; i <= b; ++i) r = r * static_cast<unsigned>(a - b + i) / static_cast<unsigned>(i);
    return static_cast<std::uint64_t>(r);
}

std::uint64_t catalan(int n) { return binom(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

std::uint64_t pack(std::string_view combo) {
    std::uint64_t c = 0;
    for (std::size_t q = 0; q < combo.size(); ++q)
        if (combo[q] == '1') c |= std::uint64_t{1} << q;
    return c;
}

std::string unpack(std::uint64_t c, int n) {
    std::string s(2 * n + 2, '0');
    for (int q = 0; q < 2 * n + 2; ++q)
        if ((c >> q) & 1) s[q] = '1';
    return s;
}

DyckRanker::DyckRanker(int n) : n_(n), paths_(static_cast<std::size_t>(2 * n + 1) * (n + 2), 0) {
    const int w = n + 2;
    paths_[static_cast<std::size_t>(2 * n) * w] = 1;
    for (int i = 2 * n - 1; i >= 0; --i)
        for (int h = 0; h <= n; ++h) {
            std::uint64_t v = paths_[static_cast<std::size_t>(i + 1) * w + h + 1];
            if (h > 0) v += paths_[static_cast<std::size_t>(i + 1) * w + h - 1];
            paths_[static_cast<std::size_t>(i) * w + h] = v;
        }
}

std::uint64_t DyckRanker::rank(std::uint64_t word, int len) const {
    const int w = n_ + 2;
    std::uint64_t r = 0;
    int h = 0;
    for (int j = 0; j < len; ++j) {
        if ((word >> j) & 1) {
            if (h > 0) r += paths_[static_cast<std::size_t>(j + 1) * w + h - 1];
            ++h;
        } else {
            --h;
        }
    }
    return r;
}

NecklaceIndex::NecklaceIndex(int n) : n_(n), count_(catalan(n)), ranker_(n) {}

std::uint64_t NecklaceIndex::index(std::uint64_t combo) const {
    const int m = 2 * n_ + 1;
    const std::uint64_t x = combo >> 1;
    const bool a = std::popcount(x) == n_;
    int s = 0, best = 0, at = 0;
    for (int k = 1; k <= 2 * n_; ++k) {
        s += ((x >> (k - 1)) & 1) ? 1 : -1;
        if (a ? s < best : s <= best) {
            best = s;
            at = k;
        }
    }
    const int from = a ? at : at + 1;
    std::uint64_t t = 0;
    for (int j = 0; j < 2 * n_; ++j)
        if ((x >> ((from + j) % m)) & 1) t |= std::uint64_t{1} << j;
    return (a ? 0 : count_) + ranker_.rank(t, 2 * n_);
}

BlockNecklaceChecker::BlockNecklaceChecker(int n) : index_(n), bits_((index_.size() + 63) / 64, 0) {}

bool BlockNecklaceChecker::push(std::uint64_t combo) {
    const auto i = index_.index(combo);
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (bits_[i >> 6] & bit) return false;
    bits_[i >> 6] |= bit;
    ++seen_;
    return true;
}

static constexpr int kBitsetMaxN = 12;

static std::uint64_t combo_rank(std::uint64_t c, const std::vector<std::uint64_t>& table, int len) {
    std::uint64_t r = 0;
    int k = 0;
    for (int p = 0; p < len; ++p)
        if ((c >> p) & 1) r += table[static_cast<std::size_t>(p) * (len + 1) + ++k];
    return r;
}

static std::vector<std::uint64_t> binom_table(int len) {
    std::vector<std::uint64_t> t(static_cast<std::size_t>(len) * (len + 1), 0);
    for (int p = 0; p < len; ++p)
        for (int k = 0; k <= len; ++k) t[static_cast<std::size_t>(p) * (len + 1) + k] = binom(p, k);
    return t;
}

StreamVerifier::StreamVerifier(int n, int shift)
    : n_(n), m_(2 * n + 1), shift_(((shift % (2 * n + 1)) + 2 * n + 1) % (2 * n + 1)),
      total_(binom(2 * n + 2, n + 1)), block_(total_ / (2 * n + 1)), necklaces_(n) {
    block0_.reserve(block_);
    if (n <= kBitsetMaxN) {
        ranks_ = binom_table(2 * n + 2);
        seen_bits_.assign((total_ + 63) / 64, 0);
    }
}

bool StreamVerifier::fail(std::uint64_t step, Reason r) {
    report_ = {false, step, r};
    return false;
}

bool StreamVerifier::mark(std::uint64_t c) {
    if (!seen_bits_.empty()) {
        const auto r = combo_rank(c, ranks_, 2 * n_ + 2);
        const std::uint64_t bit = std::uint64_t{1} << (r & 63);
        if (seen_bits_[r >> 6] & bit) return false;
        seen_bits_[r >> 6] |= bit;
        return true;
    }
    return seen_hash_.insert(c).second;
}

bool StreamVerifier::check_flip(std::uint64_t step, int q) {
    if (step < block_) {
        block0_.push_back(q);
        return true;
    }
    const long long b = static_cast<long long>(step / block_);
    const int expect = static_cast<int>((block0_[step % block_] - 1 + b * shift_) % m_) + 1;
    return q == expect || fail(step, Reason::BlockSymmetryBroken);
}

static bool star_step(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t d = a ^ b;
    return (d & 1) && std::popcount(d) == 2;
}

bool StreamVerifier::push(std::string_view combo) {
    if (!report_.ok) return false;
    if (static_cast<int>(combo.size()) != m_ + 1 || combo.find_first_not_of("01") != std::string_view::npos)
        return fail(count_ == 0 ? 0 : count_ - 1, Reason::NotStarTransposition);
    return push_packed(pack(combo));
}

bool StreamVerifier::push_packed(std::uint64_t c) {
    if (!report_.ok) return false;
    const std::uint64_t i = count_++;
    if (std::popcount(c) != n_ + 1) return fail(i == 0 ? 0 : i - 1, Reason::NotStarTransposition);
    if (i == 0) {
        first_ = c;
    } else {
        if (!star_step(prev_, c)) return fail(i - 1, Reason::NotStarTransposition);
        if (!check_flip(i - 1, std::countr_zero((prev_ ^ c) & ~std::uint64_t{1}))) return false;
    }
    if (i >= total_ || !mark(c)) return fail(i, Reason::Duplicate);
    if (i < block_ && !necklaces_.push(c)) return fail(i, Reason::NecklaceRepeatInBlock);
    prev_ = c;
    return true;
}

VerifyReport StreamVerifier::finish() {
    if (!report_.ok) return report_;
    if (count_ < total_) {
        fail(count_, Reason::Missing);
        return report_;
    }
    if (!star_step(prev_, first_)) {
        fail(total_ - 1, Reason::NotCyclic);
        return report_;
    }
    check_flip(total_ - 1, std::countr_zero((prev_ ^ first_) & ~std::uint64_t{1}));
    return report_;
}

VerifyReport verify_ordering(const std::vector<std::string>& combos, int n, int shift) {
    StreamVerifier v(n, shift);
    for (const auto& c : combos)
        if (!v.push(c)) break;
    return v.finish();
}

VerifyReport verify_flips(const std::string& start, const std::vector<int>& flips, int n, int shift) {
    StreamVerifier v(n, shift);
    std::uint64_t c = pack(start);
    if (!v.push(start)) return v.finish();
    for (std::size_t i = 0; i + 1 < flips.size(); ++i) {
        const int q = flips[i];
        if (q < 1 || q > 2 * n + 1) return VerifyReport{false, i, Reason::NotStarTransposition};
        c ^= 1 | (std::uint64_t{1} << q);
        if (!v.push_packed(c)) break;
    }
    auto r = v.finish();
    if (r.ok && flips.size() != binom(2 * n + 2, n + 1)) r = {false, flips.size(), Reason::Missing};
    if (r.ok) {
        const std::uint64_t last = c ^ 1 ^ (std::uint64_t{1} << flips.back());
        if (last != pack(start)) r = {false, flips.size() - 1, Reason::NotCyclic};
    }
    return r;
}

std::string block_start(const std::string& start, int n, int shift, long long b) {
    const long long m = 2 * n + 1;
    std::string s = start;
    for (long long q = 1; q <= m; ++q) {
        const long long from = (((q - 1 - b * shift) % m) + m) % m + 1;
        s[q] = start[from];
    }
    return s;
}

VerifyReport verify_blocks_parallel(const std::string& start, const std::vector<int>& block0, int n, int shift) {
    const int m = 2 * n + 1;
    const std::uint64_t total = binom(2 * n + 2, n + 1);
    const std::uint64_t len = total / m;
    if (n > kBitsetMaxN) return {false, 0, Reason::Missing};
    if (block0.size() != len) return {false, std::min<std::uint64_t>(block0.size(), len), Reason::Missing};
    const auto table = binom_table(2 * n + 2);
    std::vector<std::atomic<std::uint64_t>> seen((total + 63) / 64);
    for (auto& w : seen) w.store(0, std::memory_order_relaxed);
    std::vector<VerifyReport> per(m);

#pragma omp parallel for schedule(dynamic, 1)
    for (int b = 0; b < m; ++b) {
        auto& rep = per[b];
        std::uint64_t c = pack(block_start(start, n, shift, b));
        std::unique_ptr<BlockNecklaceChecker> neck;
        if (b == 0) neck = std::make_unique<BlockNecklaceChecker>(n);
        for (std::uint64_t k = 0; k < len; ++k) {
            const std::uint64_t step = b * len + k;
            const auto r = combo_rank(c, table, 2 * n + 2);
            const std::uint64_t bit = std::uint64_t{1} << (r & 63);
            if (seen[r >> 6].fetch_or(bit, std::memory_order_relaxed) & bit) {
                rep = {false, step, Reason::Duplicate};
                break;
            }
            if (neck && !neck->push(c)) {
                rep = {false, step, Reason::NecklaceRepeatInBlock};
                break;
            }
            const int q = static_cast<int>((block0[k] - 1 + static_cast<long long>(b) * shift) % m) + 1;
            if (q < 1 || q > m || ((c >> q) & 1) == (c & 1)) {
                rep = {false, step, Reason::NotStarTransposition};
                break;
            }
            c ^= 1 | (std::uint64_t{1} << q);
        }
        if (rep.ok && c != pack(block_start(start, n, shift, (b + 1) % m)))
            rep = {false, b * len + len - 1, b + 1 == m ? Reason::NotCyclic : Reason::BlockSymmetryBroken};
    }
    VerifyReport best;
    for (const auto& r : per)
        if (!r.ok && (best.ok || r.step < best.step)) best = r;
    return best;
}

std::string rotate_left(const std::string& x, long long i) {
    const long long m = static_cast<long long>(x.size());
    std::string y(x.size(), '0');
    for (long long k = 0; k < m; ++k) y[k] = x[(((k + i) % m) + m) % m];
    return y;
}

std::string necklace(const std::string& x) {
    std::string best = x;
    for (std::size_t i = 1; i < x.size(); ++i) best = std::min(best, rotate_left(x, static_cast<long long>(i)));
    return best;
}

static bool dyck(std::string_view w) {
    int h = 0;
    for (char c : w) {
        h += c == '1' ? 1 : -1;
        if (h < 0) return false;
    }
    return h == 0;
}

static int weight(const std::string& x) { return static_cast<int>(std::count(x.begin(), x.end(), '1')); }

int brute_ell(const std::string& x) {
    const int n = static_cast<int>(x.size() / 2);
    const bool a = weight(x) == n;
    for (int l = 0; l < static_cast<int>(x.size()); ++l) {
        const auto z = rotate_left(x, l);
        if (a ? (z.back() == '0' && dyck(std::string_view(z).substr(0, 2 * n)))
              : (z[0] == '1' && dyck(std::string_view(z).substr(1))))
            return l;
    }
    return -1;
}

std::string brute_tree(const std::string& x) {
    const int n = static_cast<int>(x.size() / 2);
    const auto z = rotate_left(x, brute_ell(x));
    return weight(x) == n ? z.substr(0, 2 * n) : z.substr(1);
}

static std::size_t first_close(const std::string& t) {
    int h = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        h += t[i] == '1' ? 1 : -1;
        if (h == 0) return i;
    }
    return t.size();
}

std::string f(const std::string& x) {
    const int n = static_cast<int>(x.size() / 2);
    const int l = brute_ell(x);
    auto z = rotate_left(x, l);
    if (weight(x) == n) z[first_close(z)] = '1';
    else z[0] = '0';
    return rotate_left(z, -l);
}

int brute_kappa(const std::string& x) {
    const auto nx = necklace(x);
    auto y = f(x);
    int k = 1;
    while (necklace(y) != nx) {
        y = f(y);
        ++k;
    }
    return k;
}

std::string brute_rho(const std::string& t) {
    const std::size_t c = first_close(t);
    return t.substr(1, c - 1) + "1" + t.substr(c + 1) + "0";
}

int brute_lambda(const std::string& t) {
    auto r = brute_rho(t);
    int k = 1;
    while (r != t) {
        r = brute_rho(r);
        ++k;
    }
    return k;
}

std::string brute_plane_class(const std::string& t) {
    std::string best = t;
    for (auto r = brute_rho(t); r != t; r = brute_rho(r)) best = std::min(best, r);
    return best;
}

static std::vector<std::vector<int>> adjacency(const std::string& t) {
    std::vector<std::vector<int>> adj(1);
    std::vector<int> stack{0};
    for (char c : t) {
        if (c == '1') {
            const int v = static_cast<int>(adj.size());
            adj.emplace_back();
            adj[stack.back()].push_back(v);
            adj[v].push_back(stack.back());
            stack.push_back(v);
        } else {
            stack.pop_back();
        }
    }
    return adj;
}

static std::vector<int> distances(const std::vector<std::vector<int>>& adj, int from, int skip = -1) {
    std::vector<int> d(adj.size(), -1);
    std::queue<int> q;
    d[from] = 0;
    q.push(from);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (w != skip && d[w] < 0) {
                d[w] = d[v] + 1;
                q.push(w);
            }
    }
    return d;
}

std::vector<long long> brute_potentials(const std::string& t) {
    const auto adj = adjacency(t);
    std::vector<long long> p(adj.size(), 0);
    for (std::size_t v = 0; v < adj.size(); ++v)
        for (int d : distances(adj, static_cast<int>(v))) p[v] += d;
    return p;
}

std::vector<int> brute_centroids(const std::string& t) {
    const auto p = brute_potentials(t);
    const long long best = *std::min_element(p.begin(), p.end());
    std::vector<int> c;
    for (std::size_t v = 0; v < p.size(); ++v)
        if (p[v] == best) c.push_back(static_cast<int>(v));
    return c;
}

std::vector<int> brute_components(const std::string& t, int v) {
    const auto adj = adjacency(t);
    std::vector<int> sizes;
    for (int w : adj[v]) {
        const auto d = distances(adj, w, v);
        sizes.push_back(static_cast<int>(std::count_if(d.begin(), d.end(), [](int x) { return x >= 0; })));
    }
    return sizes;
}

bool exhaustive_hamilton_check(int n, const std::string& start, const std::vector<int>& alpha0) {
    const int m = 2 * n + 1;
    if (static_cast<int>(start.size()) != m) return false;
    std::vector<int> flips;
    for (int b = 0; b < m; ++b)
        for (int p : alpha0) flips.push_back((p - 1 + b) % m + 1);
    if (flips.size() != 2 * binom(m, n)) return false;
    std::set<std::string> seen;
    std::string x = start;
    for (int p : flips) {
        const int w = weight(x);
        if ((w != n && w != n + 1) || !seen.insert(x).second) return false;
        x[p - 1] = x[p - 1] == '1' ? '0' : '1';
    }
    return x == start;
}

using Edge = std::pair<std::string, std::string>;

static Edge edge(const std::string& a, const std::string& b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct CycleEdges {
    std::vector<Edge> f_edges;
    std::vector<Edge> reversed;
    Edge x_edge, y_edge;
};

static CycleEdges cycle_edges(const std::string& x, const std::string& y, long long i) {
    std::vector<std::string> xs{x + "0"}, ys{y + "0"};
    for (int k = 1; k <= 6; ++k) xs.push_back(f(xs.back()));
    ys.push_back(f(ys.back()));
    for (auto& v : xs) v = rotate_left(v, i);
    for (auto& v : ys) v = rotate_left(v, i);
    CycleEdges c;
    c.x_edge = edge(xs[0], xs[1]);
    c.y_edge = edge(ys[0], ys[1]);
    c.f_edges = {c.x_edge, edge(xs[5], xs[6]), c.y_edge};
    for (int k = 1; k < 5; ++k) c.reversed.push_back(edge(xs[k], xs[k + 1]));
    return c;
}

DirectRelation direct_relation(const std::string& x, const std::string& y, const std::string& xh,
                               const std::string& yh, long long i, long long j) {
    const auto c = cycle_edges(x, y, i);
    const auto h = cycle_edges(xh, yh, j);
    DirectRelation r;
    for (const auto& e : c.f_edges)
        for (const auto& g : h.f_edges) r.common_f_edge |= e == g;
    r.nested = std::find(h.reversed.begin(), h.reversed.end(), c.y_edge) != h.reversed.end();
    r.interleaved = std::find(c.reversed.begin(), c.reversed.end(), h.x_edge) != c.reversed.end();
    return r;
}

}  // namespace mlc::oracle
