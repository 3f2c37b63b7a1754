#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mlc {

// The first count flips from one Generator.
std::vector<int> generate_serial(int n, int shift, const std::string& start, std::uint64_t count);

// Start combination of block b, given the start of block 0.
std::string block_start_of(const std::string& start, int n, int shift, long long b);

// The flips of block b, produced by a Generator started at that block.
std::vector<int> generate_block(int n, int shift, const std::string& start, long long b);

// The whole cycle, one Generator per block, blocks run in parallel.
std::vector<int> generate_parallel(int n, int shift, const std::string& start);

}  // namespace mlc
