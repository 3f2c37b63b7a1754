#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mlc {

// Rooted trees are Dyck words over '0'/'1'.

std::string rho(std::string_view t);
std::string rho_inv(std::string_view t);
// rho^k for any integer k.
std::string rho_pow(std::string_view t, long long k);

// Position just past the subtree opened at index i (t[i] == '1').
std::size_t match_close(std::string_view t, std::size_t i);

int lambda_of(std::string_view t);

struct PlaneTree {
    std::string canon;
    int lambda = 0;
    int edges() const { return static_cast<int>(canon.size() / 2); }
    bool operator==(const PlaneTree& o) const { return canon == o.canon; }
    bool operator<(const PlaneTree& o) const { return canon < o.canon; }
};

// Lexicographically least member of {rho^i(t)}.
PlaneTree canon_plane(std::string_view t);

// Adjacency view of a rooted tree with vertex ids in preorder (root = 0).
// The neighbours of every vertex are stored in ccw order: parent first, then children.
class TreeIndex {
public:
    TreeIndex() = default;
    explicit TreeIndex(std::string_view dyck) { build(dyck); }
    void build(std::string_view dyck);

    int vertices() const { return static_cast<int>(parent_.size()); }
    int edges() const { return vertices() - 1; }
    int parent(int v) const { return parent_[v]; }
    int degree(int v) const { return off_[v + 1] - off_[v]; }
    int neighbor(int v, int k) const {
        const int d = degree(v);
        k %= d;
        if (k < 0) k += d;
        return nb_[off_[v] + k];
    }
    // Index of neighbour u in the ccw list of v.
    int slot(int v, int u) const { return u == parent_[v] ? 0 : slot_[u]; }
    bool is_leaf(int v) const { return degree(v) == 1; }

    // T^{(a,b)}: rooted at a with b as leftmost child.
    std::string rooted(int a, int b) const;
    // T^{(a,b)-}: only the branch through b.
    std::string branch(int a, int b) const;
    // Appends to out the Dyck word of the branch of b seen from a, without the enclosing edge.
    // When verts is non-null, the vertex entered by every '1' is appended to it.
    void emit_away(int from, int v, std::string& out, std::vector<int>* verts = nullptr) const;
    std::size_t memory_bytes() const {
        return (parent_.capacity() + off_.capacity() + nb_.capacity() + slot_.capacity() + stack_.capacity()) *
               sizeof(int);
    }

private:
    std::vector<int> parent_;
    std::vector<int> off_;
    std::vector<int> nb_;
    std::vector<int> slot_;
    mutable std::vector<int> stack_;
};

struct CentroidInfo {
    std::vector<int> centroids;
    long long potential = 0;
};

// Sum of distances from every vertex.
std::vector<long long> vertex_potentials(const TreeIndex& idx);
CentroidInfo potential_and_centroids(const TreeIndex& idx);
CentroidInfo potential_and_centroids(const PlaneTree& t);

// The c-subtrees in ccw order, starting with the neighbour in slot 0.
std::vector<std::string> subtrees_at(const TreeIndex& idx, int c);
std::vector<std::string> subtrees_at(const PlaneTree& t, int c);

struct LeafClass {
    bool thin = false;
    bool pullable_to = false;
    bool pushable_to = false;
    bool pullable_from = false;
    bool pushable_from = false;
};

// p^i(a, c) for i = 0..d(a, c).
std::vector<int> tree_path(const TreeIndex& idx, int a, int c);
LeafClass classify_leaf(const TreeIndex& idx, int a, int c);

// s_n = 1(10)^{n-1}0 and s_n' = 10 s_{n-1}.
std::string star(int n);
std::string star_prime(int n);

bool is_pullable(std::string_view x);
bool is_pushable(std::string_view y);
std::string pull(std::string_view x);
std::string push(std::string_view y);

std::string to_dot(const PlaneTree& t, const std::string& name = "T");

}  // namespace mlc
