#include "mlc/arcs.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mlc/bits.hpp"
#include "mlc/error.hpp"
#include "mlc/factor.hpp"

namespace mlc {

const std::array<std::string, 10>& q_trees() {
    static const std::array<std::string, 10> q{"10",         "1100",       "110100",     "11100100",
                                               "11010100",   "1110100100", "1110010100", "1110011000",
                                               "1101011000", "1101010100"};
    return q;
}

static std::string rep(const std::string& s, int k) {
    std::string out;
    for (int i = 0; i < k; ++i) out += s;
    return out;
}

std::string dumbbell(int n) {
    if (n < 5 || n % 2 == 0) throw Error(ErrorCode::InvalidWeight, "dumbbells need odd n >= 5");
    return "1" + rep("10", (n - 1) / 2) + "0" + rep("10", (n - 1) / 2);
}

std::string dumbbell_prime(int n) {
    if (n < 5 || n % 2 == 0) throw Error(ErrorCode::InvalidWeight, "dumbbells need odd n >= 5");
    return "101" + rep("10", (n - 1) / 2) + "0" + rep("10", (n - 3) / 2);
}

const char* rule_name(ArcRule r) {
    switch (r) {
        case ArcRule::D: return "D";
        case ArcRule::Q137: return "q137";
        case ArcRule::Q24: return "q24";
        case ArcRule::Q5: return "q5";
        case ArcRule::Q8: return "q8";
        case ArcRule::E: return "e";
        case ArcRule::O1: return "o1";
        case ArcRule::O2: return "o2";
    }
    return "?";
}

static bool is_q(const std::string& s, int j) { return s == q_trees()[j]; }

// Dyck word of the c-subtree through head w.
static void subtree_word(const TreeIndex& idx, int c, int w, std::string& out, std::vector<int>* verts) {
    out.clear();
    out.push_back('1');
    if (verts) {
        verts->clear();
        verts->push_back(w);
    }
    idx.emit_away(c, w, out, verts);
    out.push_back('0');
}

void ArcFinder::order(SubtreeOrder& o, const CentroidInfo& info) {
    o.heads.clear();
    o.trees.clear();
    if (info.centroids.size() == 2) {
        std::string best;
        bool have = false;
        for (int side = 0; side < 2; ++side) {
            const int c = info.centroids[side], c2 = info.centroids[1 - side];
            const int deg = idx_.degree(c), s0 = idx_.slot(c, c2);
            std::vector<int> heads;
            std::vector<std::string> trees;
            std::string cat;
            bool all_edges = true;
            for (int i = 1; i < deg; ++i) {
                heads.push_back(idx_.neighbor(c, s0 + i));
                subtree_word(idx_, c, heads.back(), buf_, nullptr);
                all_edges = all_edges && buf_ == "10";
                trees.push_back(buf_);
                cat += buf_;
            }
            if (all_edges) continue;
            if (!have || cat < best || (cat == best && c < o.centroid)) {
                have = true;
                best = cat;
                o.centroid = c;
                o.other = c2;
                o.heads = std::move(heads);
                o.trees = std::move(trees);
            }
        }
        return;
    }
    const int c = info.centroids.front();
    const int k = idx_.degree(c);
    o.centroid = c;
    o.other = -1;
    std::vector<std::string> trees(k);
    seq_.clear();
    std::vector<int> start(k);
    for (int i = 0; i < k; ++i) {
        subtree_word(idx_, c, idx_.neighbor(c, i), trees[i], nullptr);
        start[i] = static_cast<int>(seq_.size());
        seq_.push_back(-1);
        for (char ch : trees[i]) seq_.push_back(ch - '0');
    }
    const auto r = least_rotation(seq_);
    const int first = static_cast<int>(std::find(start.begin(), start.end(), static_cast<int>(r)) - start.begin());
    for (int i = 0; i < k; ++i) {
        const int s = (first + i) % k;
        o.heads.push_back(idx_.neighbor(c, s));
        o.trees.push_back(trees[s]);
    }
}

int ArcFinder::select_subtree(const SubtreeOrder& o) {
    const int k = static_cast<int>(o.trees.size());
    if (o.other >= 0) {
        for (int i = 0; i < k; ++i)
            if (!is_q(o.trees[i], 0)) return i;
        throw Error(ErrorCode::IsStar, "no active subtree with two edges");
    }
    const auto& t = o.trees;
    auto at = [&](int i) -> const std::string& { return t[((i % k) + k) % k]; };
    for (int i = 0; i < k; ++i)
        if (is_q(t[i], 1) && is_q(at(i - 1), 0)) return i;
    for (int i = 0; i < k; ++i)
        if ((is_q(t[i], 2) || is_q(t[i], 4)) && (is_q(at(i + 1), 0) || is_q(at(i + 1), 1) || is_q(at(i + 1), 2)))
            return i;
    for (int i = 0; i < k; ++i)
        if (!is_q(t[i], 0) && !is_q(t[i], 1) && !is_q(t[i], 2) && !is_q(t[i], 4)) return i;
    for (int i = 0; i < k; ++i)
        if (!is_q(t[i], 0)) return i;
    throw Error(ErrorCode::IsStar, "the star has no arc");
}

SubtreeOrder ArcFinder::order_of(std::string_view t) {
    idx_.build(t);
    const auto info = potential_and_centroids(idx_);
    for (int v = 0; v < idx_.vertices(); ++v)
        if (idx_.degree(v) == idx_.edges()) throw Error(ErrorCode::IsStar, "the star has no arc");
    SubtreeOrder o;
    order(o, info);
    return o;
}

// 1^l q_j 0^l with j in {1,2,3,4,5,7,8}; returns j or -1.
static int spire(const std::string& s) {
    const std::size_t len = s.size();
    for (std::size_t l = 0; 2 * l < len && s[l] == '1' && s[len - 1 - l] == '0'; ++l) {
        const std::size_t m = len - 2 * l;
        for (int j : {1, 2, 3, 4, 5, 7, 8}) {
            const auto& q = q_trees()[j];
            if (q.size() == m && s.compare(l, m, q) == 0) return j;
        }
    }
    return -1;
}

Arc ArcFinder::arc_of(std::string_view t) {
    Arc arc;
    if (!find(t, arc)) throw Error(ErrorCode::IsStar, "the star has no arc");
    return arc;
}

std::size_t ArcFinder::memory_bytes() const {
    std::size_t b = idx_.memory_bytes() + buf_.capacity() + (verts_.capacity() + seq_.capacity()) * sizeof(int);
    b += order_.heads.capacity() * sizeof(int) + order_.trees.capacity() * sizeof(std::string);
    for (const auto& t : order_.trees) b += t.capacity();
    return b;
}

bool ArcFinder::find(std::string_view t, Arc& arc) {
    if (t.size() < 8) throw Error(ErrorCode::SmallN, "arcs need n >= 4");
    idx_.build(t);
    const int n = idx_.edges();
    for (int v = 0; v < idx_.vertices(); ++v)
        if (idx_.degree(v) == n) return false;
    const auto info = potential_and_centroids(idx_);

    arc = Arc{};
    if (info.centroids.size() == 2 && n % 2 == 1) {
        bool dumb = true;
        for (int v = 0; v < idx_.vertices() && dumb; ++v)
            if (v != info.centroids[0] && v != info.centroids[1]) dumb = idx_.is_leaf(v);
        if (dumb) {
            arc.rule = ArcRule::D;
            arc.pull_at_tail = false;
            arc.centroid = info.centroids[0];
            arc.pair = gluing_pair(push(dumbbell_prime(n)));
            return true;
        }
    }

    order(order_, info);
    const int i = select_subtree(order_);
    const int c = order_.centroid;
    arc.centroid = c;
    arc.subtree_index = i + 1;
    subtree_word(idx_, c, order_.heads[i], buf_, &verts_);

    int first_leaf = -1, last_leaf = -1, leaves = 0, middle = -1;
    std::size_t ones = 0;
    for (std::size_t p = 0; p + 1 < buf_.size(); ++p) {
        if (buf_[p] != '1') continue;
        // verts_ holds the vertex entered by each '1', in order
        const int v = verts_[ones++];
        if (buf_[p + 1] != '0') continue;
        if (first_leaf < 0) first_leaf = v;
        if (leaves == 1) middle = v;
        last_leaf = v;
        ++leaves;
    }

    const int j = spire(buf_);
    int a = -1;
    bool pull_rule = true;
    if (j == 1 || j == 3 || j == 7) {
        arc.rule = ArcRule::Q137;
        a = first_leaf;
    } else if (j == 2 || j == 4) {
        arc.rule = ArcRule::Q24;
        a = last_leaf;
        pull_rule = false;
    } else if (j == 5) {
        arc.rule = ArcRule::Q5;
        a = middle;
        pull_rule = false;
    } else if (j == 8) {
        arc.rule = ArcRule::Q8;
        a = last_leaf;
    } else if (info.potential % 2 == 0) {
        arc.rule = ArcRule::E;
        a = first_leaf;
    } else {
        a = last_leaf;
        const auto path = tree_path(idx_, a, c);
        if (idx_.degree(path[1]) <= 2) {
            arc.rule = ArcRule::O1;
        } else {
            arc.rule = ArcRule::O2;
            pull_rule = false;
        }
    }
    arc.leaf = a;
    arc.pull_at_tail = pull_rule;
    const auto lc = classify_leaf(idx_, a, c);
    const auto path = tree_path(idx_, a, c);
    if (pull_rule) {
        if (!lc.pullable_to) throw Error(ErrorCode::PreconditionViolated, "selected leaf is not pullable");
        arc.pair = gluing_pair(idx_.rooted(path[2], path[1]));
    } else {
        if (!lc.pushable_to || lc.thin) throw Error(ErrorCode::PreconditionViolated, "selected leaf is not a thick pushable leaf");
        arc.pair = gluing_pair(push(idx_.rooted(path[1], a)));
    }
    return true;
}

Arc arc_of(std::string_view t) {
    thread_local ArcFinder finder;
    return finder.arc_of(t);
}

Arc arc_of(const PlaneTree& t) { return arc_of(std::string_view(t.canon)); }

// Arc of [t], or none for the star.
static bool arc_if_any(std::string_view t, Arc& out) {
    try {
        out = arc_of(t);
        return true;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::IsStar) return false;
        throw;
    }
}

bool is_arc_x(std::string_view r) {
    if (r.size() < 8 || !is_pullable(r)) return false;
    Arc a;
    if (arc_if_any(r, a) && a.pair.x == r) return true;
    return arc_if_any(pull(r), a) && a.pair.x == r;
}

bool is_arc_y(std::string_view r) {
    if (r.size() < 8 || !is_pushable(r)) return false;
    Arc a;
    if (arc_if_any(r, a) && a.pair.y == r) return true;
    return arc_if_any(push(r), a) && a.pair.y == r;
}

std::vector<Arc> build_tree(int n, int max_n) {
    if (n > max_n) throw Error(ErrorCode::BoundExceeded, "n exceeds the spanning tree bound");
    if (n < 4) throw Error(ErrorCode::SmallN, "arcs need n >= 4");
    const std::string s = canon_plane(star(n)).canon;
    std::vector<Arc> out;
    for (const auto& t : plane_trees(n))
        if (t.canon != s) out.push_back(arc_of(t));
    return out;
}

bool circular_property(const PlaneTree& t) {
    ArcFinder f;
    const auto o = f.order_of(t.canon);
    if (o.other >= 0) throw Error(ErrorCode::PreconditionViolated, "tree has two centroids");
    const int i = ArcFinder::select_subtree(o);
    const int k = static_cast<int>(o.trees.size());
    auto all = [&](int j) {
        return std::all_of(o.trees.begin(), o.trees.end(), [&](const std::string& s) { return is_q(s, j); });
    };
    const auto& ti = o.trees[i];
    const auto& prev = o.trees[(i + k - 1) % k];
    const auto& next = o.trees[(i + 1) % k];
    if (is_q(ti, 1) && !(is_q(prev, 0) || all(1))) return false;
    if ((is_q(ti, 2) || is_q(ti, 4)) && !(is_q(next, 0) || is_q(next, 1) || is_q(next, 2) || all(4))) return false;
    return true;
}

std::string tree_to_dot(int n, const std::vector<Arc>& arcs) {
    std::map<std::string, long long> level;
    for (const auto& t : plane_trees(n)) level[t.canon] = potential_and_centroids(t).potential;
    std::map<long long, std::vector<std::string>> by_level;
    for (const auto& [c, p] : level) by_level[p].push_back(c);
    std::ostringstream os;
    os << "digraph T" << n << " {\n  rankdir=BT;\n";
    for (const auto& [p, cs] : by_level) {
        os << "  { rank=same; label=\"phi=" << p << "\";";
        for (const auto& c : cs) os << " \"" << c << "\";";
        os << " }\n";
    }
    for (const auto& a : arcs) {
        os << "  \"" << canon_plane(a.pair.x).canon << "\" -> \"" << canon_plane(a.pair.y).canon << "\" [label=\""
           << a.pair.x << "," << a.pair.y << " (" << rule_name(a.rule) << ")\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace mlc
