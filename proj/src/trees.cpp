#include "mlc/trees.hpp"

#include <algorithm>
#include <sstream>

#include "mlc/error.hpp"

namespace mlc {

std::size_t match_close(std::string_view t, std::size_t i) {
    int e = 0;
    for (std::size_t j = i; j < t.size(); ++j) {
        e += t[j] == '1' ? 1 : -1;
        if (e == 0) return j + 1;
    }
    throw Error(ErrorCode::PreconditionViolated, "unbalanced word");
}

std::string rho(std::string_view t) {
    if (t.empty()) throw Error(ErrorCode::EmptyTree, "rho of empty tree");
    const std::size_t m = match_close(t, 0);
    std::string r;
    r.reserve(t.size());
    r.append(t.substr(1, m - 2));
    r.push_back('1');
    r.append(t.substr(m));
    r.push_back('0');
    return r;
}

std::string rho_inv(std::string_view t) {
    if (t.empty()) throw Error(ErrorCode::EmptyTree, "rho_inv of empty tree");
    // start of the last prime component 1 v 0
    std::size_t s = 0;
    int e = 0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        e += t[i] == '1' ? 1 : -1;
        if (e == 0) s = i + 1;
    }
    std::string r;
    r.reserve(t.size());
    r.push_back('1');
    r.append(t.substr(0, s));
    r.push_back('0');
    r.append(t.substr(s + 1, t.size() - s - 2));
    return r;
}

std::string rho_pow(std::string_view t, long long k) {
    std::string r(t);
    if (t.empty()) throw Error(ErrorCode::EmptyTree, "rotation of empty tree");
    const long long period = static_cast<long long>(t.size());
    k %= period;
    if (k < 0) k += period;
    if (k <= period / 2) {
        for (long long i = 0; i < k; ++i) r = rho(r);
    } else {
        for (long long i = k; i < period; ++i) r = rho_inv(r);
    }
    return r;
}

void TreeIndex::build(std::string_view dyck) {
    const int v = static_cast<int>(dyck.size() / 2) + 1;
    parent_.assign(v, -1);
    std::vector<int> nchild(v, 0);
    stack_.clear();
    stack_.push_back(0);
    int next = 1;
    for (char ch : dyck) {
        if (ch == '1') {
            parent_[next] = stack_.back();
            ++nchild[stack_.back()];
            stack_.push_back(next++);
        } else {
            stack_.pop_back();
        }
    }
    off_.assign(v + 1, 0);
    for (int u = 0; u < v; ++u) off_[u + 1] = off_[u] + nchild[u] + (u > 0 ? 1 : 0);
    nb_.assign(off_[v], 0);
    slot_.assign(v, 0);
    std::vector<int> fill(v, 0);
    for (int u = 1; u < v; ++u) {
        nb_[off_[u]] = parent_[u];
        fill[u] = 1;
    }
    for (int u = 1; u < v; ++u) {
        const int p = parent_[u];
        slot_[u] = fill[p];
        nb_[off_[p] + fill[p]++] = u;
    }
}

void TreeIndex::emit_away(int from, int v, std::string& out, std::vector<int>* verts) const {
    // frames of (vertex, came-from, neighbours still to visit)
    stack_.clear();
    auto push_frame = [&](int w, int f) {
        stack_.push_back(w);
        stack_.push_back(f);
        stack_.push_back(degree(w) - 1);
    };
    push_frame(v, from);
    while (!stack_.empty()) {
        const std::size_t top = stack_.size() - 3;
        const int w = stack_[top];
        const int f = stack_[top + 1];
        int& left = stack_[top + 2];
        if (left == 0) {
            stack_.resize(top);
            if (!stack_.empty()) out.push_back('0');
            continue;
        }
        const int k = degree(w) - left;
        --left;
        const int u = neighbor(w, slot(w, f) + k);
        out.push_back('1');
        if (verts) verts->push_back(u);
        push_frame(u, w);
    }
}

std::string TreeIndex::rooted(int a, int b) const {
    std::string out;
    out.reserve(2 * static_cast<std::size_t>(edges()));
    const int s = slot(a, b);
    for (int k = 0; k < degree(a); ++k) {
        const int u = neighbor(a, s + k);
        out.push_back('1');
        emit_away(a, u, out);
        out.push_back('0');
    }
    return out;
}

std::string TreeIndex::branch(int a, int b) const {
    std::string out = "1";
    emit_away(a, b, out);
    out.push_back('0');
    return out;
}

std::vector<long long> vertex_potentials(const TreeIndex& idx) {
    const int v = idx.vertices();
    std::vector<long long> size(v, 1), depth(v, 0), phi(v, 0);
    long long root = 0;
    for (int u = 1; u < v; ++u) {
        depth[u] = depth[idx.parent(u)] + 1;
        root += depth[u];
    }
    for (int u = v - 1; u >= 1; --u) size[idx.parent(u)] += size[u];
    phi[0] = root;
    for (int u = 1; u < v; ++u) phi[u] = phi[idx.parent(u)] + v - 2 * size[u];
    return phi;
}

CentroidInfo potential_and_centroids(const TreeIndex& idx) {
    const auto phi = vertex_potentials(idx);
    CentroidInfo info;
    info.potential = *std::min_element(phi.begin(), phi.end());
    for (int u = 0; u < idx.vertices(); ++u)
        if (phi[u] == info.potential) info.centroids.push_back(u);
    return info;
}

CentroidInfo potential_and_centroids(const PlaneTree& t) {
    return potential_and_centroids(TreeIndex(t.canon));
}

std::vector<std::string> subtrees_at(const TreeIndex& idx, int c) {
    if (c < 0 || c >= idx.vertices()) throw Error(ErrorCode::OutOfRange, "vertex out of range");
    std::vector<std::string> out;
    for (int k = 0; k < idx.degree(c); ++k) out.push_back(idx.branch(c, idx.neighbor(c, k)));
    return out;
}

std::vector<std::string> subtrees_at(const PlaneTree& t, int c) {
    return subtrees_at(TreeIndex(t.canon), c);
}

int lambda_of(std::string_view t) {
    if (t.empty()) throw Error(ErrorCode::EmptyTree, "lambda of empty tree");
    const int n = static_cast<int>(t.size() / 2);
    TreeIndex idx(t);
    const auto info = potential_and_centroids(idx);
    if (info.centroids.size() == 2) {
        const int c = info.centroids[0];
        const int d = info.centroids[1];
        std::string tc, td;
        idx.emit_away(d, c, tc);
        idx.emit_away(c, d, td);
        return tc == td ? n : 2 * n;
    }
    const int c = info.centroids[0];
    std::vector<int> seq;
    for (int k = 0; k < idx.degree(c); ++k) {
        seq.push_back(-1);
        for (char ch : idx.branch(c, idx.neighbor(c, k))) seq.push_back(ch - '0');
    }
    // smallest period of the separated subtree sequence
    const std::size_t len = seq.size();
    std::vector<std::size_t> pi(len, 0);
    for (std::size_t i = 1; i < len; ++i) {
        std::size_t j = pi[i - 1];
        while (j > 0 && seq[i] != seq[j]) j = pi[j - 1];
        if (seq[i] == seq[j]) ++j;
        pi[i] = j;
    }
    const std::size_t q = len - pi[len - 1];
    const std::size_t sym = len % q == 0 ? len / q : 1;
    return static_cast<int>(2 * n / static_cast<int>(sym));
}

PlaneTree canon_plane(std::string_view t) {
    if (t.empty()) throw Error(ErrorCode::EmptyTree, "canon of empty tree");
    PlaneTree p{std::string(t), 1};
    std::string r = rho(t);
    while (r != t) {
        if (r < p.canon) p.canon = r;
        ++p.lambda;
        r = rho(r);
    }
    return p;
}

std::vector<int> tree_path(const TreeIndex& idx, int a, int c) {
    const int v = idx.vertices();
    if (a < 0 || a >= v || c < 0 || c >= v) throw Error(ErrorCode::OutOfRange, "vertex out of range");
    std::vector<int> depth(v, 0);
    for (int u = 1; u < v; ++u) depth[u] = depth[idx.parent(u)] + 1;
    std::vector<int> up, down;
    int x = a, y = c;
    while (depth[x] > depth[y]) { up.push_back(x); x = idx.parent(x); }
    while (depth[y] > depth[x]) { down.push_back(y); y = idx.parent(y); }
    while (x != y) {
        up.push_back(x);
        down.push_back(y);
        x = idx.parent(x);
        y = idx.parent(y);
    }
    up.push_back(x);
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

LeafClass classify_leaf(const TreeIndex& idx, int a, int c) {
    if (a < 0 || a >= idx.vertices() || !idx.is_leaf(a))
        throw Error(ErrorCode::PreconditionViolated, "vertex is not a leaf");
    if (a == c) throw Error(ErrorCode::PreconditionViolated, "leaf must differ from c");
    const auto path = tree_path(idx, a, c);
    const int d = static_cast<int>(path.size()) - 1;
    LeafClass lc;
    const int a1 = path[1];
    lc.thin = idx.degree(a1) <= 2;
    if (d == 1) {
        lc.pullable_from = lc.pushable_from = !idx.is_leaf(c);
        return lc;
    }
    const int a2 = path[2];
    const int deg = idx.degree(a1);
    const int sa = idx.slot(a1, a);
    const int s2 = idx.slot(a1, a2);
    lc.pullable_to = (s2 + 1) % deg == sa;
    lc.pushable_to = (sa + 1) % deg == s2;
    lc.pullable_from = !lc.pullable_to;
    lc.pushable_from = !lc.pushable_to;
    return lc;
}

std::string star(int n) {
    std::string s = "1";
    for (int i = 1; i < n; ++i) s += "10";
    return s + "0";
}

std::string star_prime(int n) { return "10" + star(n - 1); }

bool is_pullable(std::string_view x) {
    if (x.size() < 4 || x.substr(0, 3) != "110") return false;
    return x != star(static_cast<int>(x.size() / 2));
}

bool is_pushable(std::string_view y) {
    if (y.size() < 4 || y.substr(0, 3) != "101") return false;
    return y != star_prime(static_cast<int>(y.size() / 2));
}

std::string pull(std::string_view x) {
    if (x.size() < 4 || x.substr(0, 3) != "110") throw Error(ErrorCode::NotPullable, std::string(x));
    if (!is_pullable(x)) throw Error(ErrorCode::ForbiddenPair, "(s_n, s_n') is excluded");
    std::string y(x);
    std::swap(y[1], y[2]);
    return y;
}

std::string push(std::string_view y) {
    if (y.size() < 4 || y.substr(0, 3) != "101") throw Error(ErrorCode::NotPushable, std::string(y));
    if (!is_pushable(y)) throw Error(ErrorCode::ForbiddenPair, "(s_n, s_n') is excluded");
    std::string x(y);
    std::swap(x[1], x[2]);
    return x;
}

std::string to_dot(const PlaneTree& t, const std::string& name) {
    TreeIndex idx(t.canon);
    std::ostringstream os;
    os << "graph " << name << " {\n";
    os << "  label=\"" << t.canon << " lambda=" << t.lambda << "\";\n";
    for (int u = 1; u < idx.vertices(); ++u) os << "  v" << idx.parent(u) << " -- v" << u << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace mlc
