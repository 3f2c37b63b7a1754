#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mlc/arcs.hpp"
#include "mlc/bits.hpp"

namespace mlc {

// The (s, d)-orbit: s, s+d, s+2d, ... modulo 2n+1 until it repeats, as positions 1..2n+1.
std::vector<int> orbit(int s, int d, int n);

std::vector<long long> prime_factors(long long m);
long long gcd_ll(long long a, long long b);

enum class SwitchKind { Tau1, Tau2, TauNdz };
const char* kind_name(SwitchKind k);
enum class Conformal { PlusF, MinusF, Neither };

struct Switch {
    SwitchKind kind = SwitchKind::Tau1;
    int d = 1;
    MidString x;
    int p_y = 0;
    int p_y2 = 0;  // p(x, y')
    int shift = 0;
    Conformal conformal = Conformal::Neither;
    bool reversed = false;
    int effective_shift = 0;

    MidString y() const;
    MidString y2() const;
    // The f-edge (a, f(a)).
    std::pair<MidString, MidString> f_edge() const;
    std::string str() const;
};

// The orbit construction with base switch tau_{(l_d-1)/2,1} on the (1,d)-orbit and z on the others.
MidString orbit_switch(int n, int d, const std::string& z, int& p_y, int& p_y2);

// tau_{n,1}, tau_{n,2} or tau_{n,d,z} with z = 1^{(d-1)/2} 0^{(d-1)/2}.
Switch make_switch(int n, SwitchKind kind, int d = 0);

// Whether (x, y, y') is a switch; returns its shift through shift.
bool is_switch(const MidString& x, int p_y, int p_y2, int* shift = nullptr);

struct SwitchPlan {
    std::vector<Switch> switches;
    int s_before = 0;
    int s_after = 0;
};

// Prime factors of 2n+1 not dividing s (empty for s = 0).
std::vector<long long> coprime_part(long long m, long long s);

SwitchPlan plan_switches(int n, int s);

// Role of an f-edge (a, f(a)) with respect to the gluing cycles of a set of arcs.
enum class EdgeRole { Free, Removed, Reversed };
EdgeRole edge_role(const MidString& a, const std::vector<Arc>& arcs);
// Same, against the full spanning tree, using local arc lookups.
EdgeRole edge_role(const MidString& a);

bool usable_wrt(const Switch& sw, const std::vector<Arc>& arcs);
bool reversed_wrt(const Switch& sw, const std::vector<Arc>& arcs);

}  // namespace mlc
