#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "mlc/flipseq.hpp"
#include "mlc/trees.hpp"

namespace mlc {

// q_0 .. q_9
const std::array<std::string, 10>& q_trees();
// d_n and d_n' for odd n >= 5.
std::string dumbbell(int n);
std::string dumbbell_prime(int n);

enum class ArcRule { D, Q137, Q24, Q5, Q8, E, O1, O2 };
const char* rule_name(ArcRule r);

struct Arc {
    GluingPair pair;
    bool pull_at_tail = true;  // T = [x] (pull rule) or T = [y] (push rule)
    ArcRule rule = ArcRule::E;
    int centroid = 0;          // vertex ids refer to the TreeIndex of the input word
    int subtree_index = 0;     // 1-based index into the subtree ordering
    int leaf = 0;
};

// Canonical cyclic ordering of the active subtrees around the chosen centroid.
struct SubtreeOrder {
    int centroid = 0;
    int other = -1;                  // second centroid, if any
    std::vector<int> heads;          // neighbours of the centroid, t_1 .. t_k
    std::vector<std::string> trees;  // t_1 .. t_k
};

// Computes arcs of the spanning tree for plane trees given by any of their rooted words.
class ArcFinder {
public:
    Arc arc_of(std::string_view t);
    // Same as arc_of, but returns false for the star instead of throwing.
    bool find(std::string_view t, Arc& out);
    SubtreeOrder order_of(std::string_view t);
    // Index (0-based) of the subtree the selection rule picks in an ordering.
    static int select_subtree(const SubtreeOrder& o);
    const TreeIndex& index() const { return idx_; }
    std::size_t memory_bytes() const;

private:
    void order(SubtreeOrder& o, const CentroidInfo& info);
    TreeIndex idx_;
    SubtreeOrder order_;
    std::string buf_;
    std::vector<int> verts_;
    std::vector<int> seq_;
};

Arc arc_of(std::string_view t);
Arc arc_of(const PlaneTree& t);

// Whether the rooted word r is the x (resp. y) of some arc of the spanning tree.
bool is_arc_x(std::string_view r);
bool is_arc_y(std::string_view r);

// One arc per non-star plane tree with n edges.
std::vector<Arc> build_tree(int n, int max_n = 9);

// Checks the two circular conditions on the selected subtree (unique centroid only).
bool circular_property(const PlaneTree& t);

std::string tree_to_dot(int n, const std::vector<Arc>& arcs);

}  // namespace mlc
