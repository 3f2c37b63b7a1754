#include "mlc/bits.hpp"

#include <algorithm>
#include <bit>

#include "mlc/error.hpp"

namespace mlc {

int mod_pos(long long p, int n) {
    const long long m = 2LL * n + 1;
    long long r = p % m;
    if (r <= 0) r += m;
    return static_cast<int>(r);
}

std::size_t least_rotation(const std::vector<int>& s) {
    const std::size_t len = s.size();
    if (len == 0) return 0;
    std::vector<long long> f(2 * len, -1);
    std::size_t k = 0;
    auto at = [&](std::size_t i) { return s[i % len]; };
    for (std::size_t j = 1; j < 2 * len; ++j) {
        const int sj = at(j);
        long long i = f[j - k - 1];
        while (i != -1 && sj != at(k + i + 1)) {
            if (sj < at(k + i + 1)) k = j - i - 1;
            i = f[i];
        }
        if (sj != at(k + i + 1)) {
            if (sj < at(k)) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % len;
}

MidString MidString::zeros(int n) {
    if (n < 1) throw Error(ErrorCode::OutOfRange, "n must be positive");
    MidString x;
    x.n_ = n;
    x.words_.assign(static_cast<std::size_t>((2 * n + 1 + 63) / 64), 0);
    return x;
}

MidString MidString::parse(std::string_view text) {
    if (text.size() < 3 || text.size() % 2 == 0)
        throw Error(ErrorCode::InvalidWeight, "length must be 2n+1 with n >= 1");
    MidString x = zeros(static_cast<int>(text.size() / 2));
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') x.set(static_cast<int>(i) + 1, true);
        else if (text[i] != '0') throw Error(ErrorCode::InvalidWeight, "not a bitstring");
    }
    const int w = x.weight();
    if (w != x.n_ && w != x.n_ + 1) throw Error(ErrorCode::InvalidWeight, std::string(text));
    return x;
}

int MidString::weight() const {
    int w = 0;
    for (auto word : words_) w += std::popcount(word);
    return w;
}

std::string MidString::str() const {
    std::string s(static_cast<std::size_t>(length()), '0');
    for (int p = 1; p <= length(); ++p)
        if (get(p)) s[p - 1] = '1';
    return s;
}

std::uint64_t MidString::hash() const {
    std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(n_);
    for (auto w : words_) {
        h ^= w;
        h *= 1099511628211ull;
        h ^= h >> 29;
    }
    return h;
}

MidString rotate(const MidString& x, long long i) {
    const int len = x.length();
    MidString y = MidString::zeros(x.n());
    for (int p = 1; p <= len; ++p)
        if (x.get(mod_pos(p + i, x.n()))) y.set(p, true);
    return y;
}

Necklace necklace_of(const MidString& x) {
    const int w = x.weight();
    if (w != x.n() && w != x.n() + 1) throw Error(ErrorCode::InvalidWeight, x.str());
    std::vector<int> s(static_cast<std::size_t>(x.length()));
    for (int p = 1; p <= x.length(); ++p) s[p - 1] = x.get(p);
    const auto k = least_rotation(s);
    return Necklace{rotate(x, static_cast<long long>(k)), x.n()};
}

int ell(const MidString& x) {
    const int n = x.n();
    const int len = x.length();
    const int w = x.weight();
    if (w != n && w != n + 1) throw Error(ErrorCode::InvalidWeight, x.str());
    int sum = 0;
    int best = 0;
    int best_j = 0;
    if (w == n) {
        // first index in 1..2n+1 attaining the minimum prefix sum
        best = 1 << 30;
        for (int j = 1; j <= len; ++j) {
            sum += x.get(j) ? 1 : -1;
            if (sum < best) {
                best = sum;
                best_j = j;
            }
        }
        return best_j % len;
    }
    // last index in 0..2n attaining the minimum prefix sum
    best = 0;
    best_j = 0;
    for (int j = 1; j < len; ++j) {
        sum += x.get(j) ? 1 : -1;
        if (sum <= best) {
            best = sum;
            best_j = j;
        }
    }
    return best_j;
}

std::string tree_of(const MidString& x) {
    const int l = ell(x);
    const int n = x.n();
    const int off = x.in_a() ? 1 : 2;
    std::string t(static_cast<std::size_t>(2 * n), '0');
    for (int k = 0; k < 2 * n; ++k)
        if (x.get(mod_pos(l + off + k, n))) t[k] = '1';
    return t;
}

bool is_dyck(std::string_view w) {
    int e = 0;
    for (char c : w) {
        e += c == '1' ? 1 : -1;
        if (e < 0) return false;
    }
    return e == 0;
}

std::vector<MidString> all_vertices(int n) {
    std::vector<MidString> out;
    const int len = 2 * n + 1;
    for (int w : {n, n + 1}) {
        // lexicographic enumeration of weight-w strings via index combinations
        std::string s(static_cast<std::size_t>(len), '0');
        for (int i = 0; i < w; ++i) s[i] = '1';
        do {
            out.push_back(MidString::parse(s));
        } while (std::prev_permutation(s.begin(), s.end()));
    }
    return out;
}

}  // namespace mlc
