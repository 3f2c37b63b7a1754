#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

// Brute-force ground truth. Nothing here uses the rest of the library.
namespace mlc::oracle {

enum class Reason { None, NotStarTransposition, Duplicate, Missing, NotCyclic, BlockSymmetryBroken, NecklaceRepeatInBlock };
const char* reason_name(Reason r);

struct VerifyReport {
    bool ok = true;
    std::uint64_t step = 0;
    Reason reason = Reason::None;
};

std::uint64_t binom(int a, int b);
std::uint64_t catalan(int n);

// Combinations of length 2n+2 <= 62 packed with position q at bit q.
std::uint64_t pack(std::string_view combo);
std::string unpack(std::uint64_t c, int n);

// Rank of a Dyck word among all Dyck words of the same length.
class DyckRanker {
public:
    explicit DyckRanker(int n);
    std::uint64_t rank(std::uint64_t word, int len) const;

private:
    int n_;
    std::vector<std::uint64_t> paths_;  // paths_[i * (n+2) + h]: completions after i bits at height h
};

// Index of the necklace of the suffix (positions 1..2n+1) of a packed combination:
// necklaces of weight n come first, then those of weight n+1.
class NecklaceIndex {
public:
    explicit NecklaceIndex(int n);
    std::uint64_t index(std::uint64_t combo) const;
    std::uint64_t size() const { return 2 * count_; }

private:
    int n_;
    std::uint64_t count_;
    DyckRanker ranker_;
};

// Marks each necklace of one block at most once.
class BlockNecklaceChecker {
public:
    explicit BlockNecklaceChecker(int n);
    // False if the necklace of combo was already seen.
    bool push(std::uint64_t combo);
    std::uint64_t seen() const { return seen_; }
    bool complete() const { return seen_ == index_.size(); }

private:
    NecklaceIndex index_;
    std::vector<std::uint64_t> bits_;
    std::uint64_t seen_ = 0;
};

// Streaming check of a full ordering of the (n+1, n+1)-combinations with block shift s.
class StreamVerifier {
public:
    StreamVerifier(int n, int shift);
    // Returns false once a violation has been found.
    bool push(std::string_view combo);
    bool push_packed(std::uint64_t combo);
    VerifyReport finish();

private:
    bool fail(std::uint64_t step, Reason r);
    bool check_flip(std::uint64_t step, int q);
    bool mark(std::uint64_t c);

    int n_, m_, shift_;
    std::uint64_t total_, block_;
    std::uint64_t count_ = 0;
    std::uint64_t first_ = 0, prev_ = 0;
    std::vector<int> block0_;
    std::vector<std::uint64_t> ranks_;  // binomials for the combination rank
    std::vector<std::uint64_t> seen_bits_;
    std::unordered_set<std::uint64_t> seen_hash_;
    BlockNecklaceChecker necklaces_;
    VerifyReport report_;
};

VerifyReport verify_ordering(const std::vector<std::string>& combos, int n, int shift);
// Full flip sequence (length N) applied to start.
VerifyReport verify_flips(const std::string& start, const std::vector<int>& flips, int n, int shift);
// Expands block 0 into 2n+1 blocks and checks them in parallel (n <= 12).
VerifyReport verify_blocks_parallel(const std::string& start, const std::vector<int>& block0, int n, int shift);

// Start of block b of an ordering with block shift s whose block 0 starts at start.
std::string block_start(const std::string& start, int n, int shift, long long b);

// Definitional f, kappa, lambda, potentials and centroids.
std::string rotate_left(const std::string& x, long long i);
std::string necklace(const std::string& x);
std::string f(const std::string& x);
int brute_kappa(const std::string& x);
std::string brute_rho(const std::string& t);
int brute_lambda(const std::string& t);
std::string brute_plane_class(const std::string& t);
// Sum of distances from each vertex (preorder ids) of the rooted tree t.
std::vector<long long> brute_potentials(const std::string& t);
std::vector<int> brute_centroids(const std::string& t);
// Sizes of the components left when vertex v is removed.
std::vector<int> brute_components(const std::string& t, int v);
int brute_ell(const std::string& x);
std::string brute_tree(const std::string& x);

// Expands alpha0 with shift 1 from start and checks for a Hamilton cycle of the middle levels graph.
bool exhaustive_hamilton_check(int n, const std::string& start, const std::vector<int>& alpha0);

// Relations between the gluing cycles sigma^i C(x, y) and sigma^j C(xh, yh), read off their edges.
struct DirectRelation {
    bool common_f_edge = false;
    bool nested = false;
    bool interleaved = false;
};
DirectRelation direct_relation(const std::string& x, const std::string& y, const std::string& xh,
                               const std::string& yh, long long i, long long j);

}  // namespace mlc::oracle
