#pragma once

#include <array>
#include <string>
#include <vector>

#include "mlc/bits.hpp"
#include "mlc/factor.hpp"

namespace mlc {

// A flip sequence together with the path start it is applied to and its shift.
struct ShiftedFlip {
    MidString start;
    FlipSequence seq;
    int shift = 0;  // in 0..2n
};

// The vertices x_1..x_k visited by seq from start, plus x_{k+1}.
std::vector<MidString> walk(const MidString& start, const FlipSequence& seq);

ShiftedFlip shift_of(const FlipSequence& seq, const MidString& start);

ShiftedFlip rev(const ShiftedFlip& sf);
ShiftedFlip mov(const ShiftedFlip& sf);
ShiftedFlip translate(const ShiftedFlip& sf, long long i);

struct GluingPair {
    std::string x, y, u, v;
};

// (x, pull(x)) with the decomposition x = 110u0v.
GluingPair gluing_pair(const std::string& x);

struct GluingCycle {
    GluingPair pair;
    // x^0, x^1, x^6, x^5, y^0, y^1
    std::array<MidString, 6> vertices;
    std::array<int, 6> flips;
};

// The vertices x^0..x^6 of the periodic path through x 0.
std::array<MidString, 7> gluing_x_path(const GluingPair& pair);
GluingCycle gluing_cycle(const GluingPair& pair);

ShiftedFlip glue(const ShiftedFlip& p1, const ShiftedFlip& p2, const GluingPair& pair);

enum class Relation { Compatible, Nested, Interleaved };

Relation classify_relation(const GluingPair& p, const GluingPair& q, long long i, long long j);

}  // namespace mlc
