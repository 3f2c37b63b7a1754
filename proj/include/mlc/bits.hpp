#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mlc {

// Residue of p modulo 2n+1 with representatives 1..2n+1.
int mod_pos(long long p, int n);

// Index of the lexicographically least rotation of s (Booth).
std::size_t least_rotation(const std::vector<int>& s);

// Bitstring of length 2n+1, positions 1..2n+1, packed into 64-bit words.
class MidString {
public:
    MidString() = default;

    // Parses '0'/'1' text; length must be odd and the weight n or n+1.
    static MidString parse(std::string_view text);
    // All-zero string of length 2n+1; callers fill it with set().
    static MidString zeros(int n);

    int n() const { return n_; }
    int length() const { return 2 * n_ + 1; }

    bool get(int p) const {
        const int i = p - 1;
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int p, bool v) {
        const int i = p - 1;
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= m;
        else words_[i >> 6] &= ~m;
    }
    void flip(int p) {
        const int i = p - 1;
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    int weight() const;
    bool in_a() const { return weight() == n_; }
    bool in_b() const { return weight() == n_ + 1; }
    std::string str() const;
    std::uint64_t hash() const;

    bool operator==(const MidString& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const MidString& o) const { return !(*this == o); }
    // Lexicographic order on the text form.
    bool operator<(const MidString& o) const { return str() < o.str(); }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// sigma^i: cyclic left rotation by i (negative i rotates right).
MidString rotate(const MidString& x, long long i);

struct Necklace {
    MidString canon;
    int n = 0;
    bool operator==(const Necklace& o) const { return canon == o.canon; }
};

Necklace necklace_of(const MidString& x);

// The rotation offset exposing the Dyck word: A: sigma^l(x) = t 0, B: sigma^l(y) = 1 t.
int ell(const MidString& x);
std::string tree_of(const MidString& x);

bool is_dyck(std::string_view w);

// Enumerates A_n followed by B_n, each in decreasing lexicographic order.
std::vector<MidString> all_vertices(int n);

}  // namespace mlc
