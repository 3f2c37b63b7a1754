#pragma once

#include <string>
#include <vector>

#include "mlc/bits.hpp"
#include "mlc/trees.hpp"

namespace mlc {

struct FlipSequence {
    int n = 0;
    std::vector<int> entries;

    bool operator==(const FlipSequence& o) const { return n == o.n && entries == o.entries; }
    std::string str() const;
    static FlipSequence parse(int n, const std::string& text);
};

MidString f(const MidString& v);
MidString f_inv(const MidString& v);
// Position flipped by f (resp. f^{-1}) at v.
int f_position(const MidString& v);
int f_inv_position(const MidString& v);

int kappa(const MidString& v);

struct PeriodicPath {
    MidString start;
    std::vector<MidString> vertices;
    FlipSequence flips;
};

PeriodicPath periodic_path(const MidString& v);

struct FactorCycle {
    PlaneTree tree;
    std::vector<Necklace> necklaces;
};

// All Dyck words of length 2n.
std::vector<std::string> dyck_words(int n);
// One canonical representative per plane tree with n edges.
std::vector<PlaneTree> plane_trees(int n);

std::vector<FactorCycle> enumerate_factor(int n, int max_n = 12);
std::string factor_to_dot(const std::vector<FactorCycle>& cycles);
std::string factor_to_text(const std::vector<FactorCycle>& cycles);

}  // namespace mlc
