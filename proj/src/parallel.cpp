#include "mlc/parallel.hpp"

#include "mlc/engine.hpp"
#include "mlc/error.hpp"

namespace mlc {

std::vector<int> generate_serial(int n, int shift, const std::string& start, std::uint64_t count) {
    Generator g(n, shift, start);
    std::vector<int> flips(count);
    for (auto& p : flips) p = g.next();
    return flips;
}

std::string block_start_of(const std::string& start, int n, int shift, long long b) {
    const std::string s = start.empty() ? Generator::default_start(n) : start;
    std::string out = s;
    for (int q = 1; q <= 2 * n + 1; ++q) out[q] = s[mod_pos(q - b * shift, n)];
    return out;
}

std::vector<int> generate_block(int n, int shift, const std::string& start, long long b) {
    const auto len = block_length(n);
    if (len == 0) throw Error(ErrorCode::BoundExceeded, "block length does not fit in 64 bits");
    return generate_serial(n, shift, block_start_of(start, n, shift, b), len);
}

std::vector<int> generate_parallel(int n, int shift, const std::string& start) {
    const auto len = block_length(n);
    if (len == 0) throw Error(ErrorCode::BoundExceeded, "cycle length does not fit in 64 bits");
    const int m = 2 * n + 1;
    std::vector<int> flips(len * m);
    Generator probe(n, shift, start);
#pragma omp parallel for schedule(dynamic, 1)
    for (int b = 0; b < m; ++b) {
        Generator g(n, shift, block_start_of(start, n, shift, b));
        int* out = flips.data() + static_cast<std::size_t>(b) * len;
        for (std::uint64_t i = 0; i < len; ++i) out[i] = g.next();
    }
    return flips;
}

}  // namespace mlc
