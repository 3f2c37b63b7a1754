#include "mlc/switching.hpp"

#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "mlc/error.hpp"
#include "mlc/factor.hpp"
#include "mlc/trees.hpp"

namespace mlc {

std::vector<int> orbit(int s, int d, int n) {
    const long long m = 2LL * n + 1;
    const long long len = m / std::gcd(m, static_cast<long long>(d));
    std::vector<int> out;
    out.reserve(len);
    for (long long i = 0; i < len; ++i) out.push_back(mod_pos(s + i * d, n));
    return out;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

std::vector<long long> prime_factors(long long m) {
    std::vector<long long> out;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        out.push_back(p);
        while (m % p == 0) m /= p;
    }
    if (m > 1) out.push_back(m);
    return out;
}

MidString Switch::y() const {
    auto v = x;
    v.flip(p_y);
    return v;
}

MidString Switch::y2() const {
    auto v = x;
    v.flip(p_y2);
    return v;
}

std::pair<MidString, MidString> Switch::f_edge() const {
    const auto a = y(), b = y2();
    if (f(x) == a) return {x, a};
    if (f(b) == x) return {b, x};
    if (f(x) == b) return {x, b};
    if (f(a) == x) return {a, x};
    throw Error(ErrorCode::PreconditionViolated, "switch is not conformal");
}

const char* kind_name(SwitchKind k) {
    switch (k) {
        case SwitchKind::Tau1: return "tau1";
        case SwitchKind::Tau2: return "tau2";
        case SwitchKind::TauNdz: return "tau_ndz";
    }
    return "?";
}

std::string Switch::str() const {
    std::ostringstream os;
    os << x.str() << " p(x,y)=" << p_y << " p(x,y')=" << p_y2 << " shift=" << shift << " effective=" << effective_shift;
    return os.str();
}

MidString orbit_switch(int n, int d, const std::string& z, int& p_y, int& p_y2) {
    const long long m = 2LL * n + 1;
    const int nd = static_cast<int>(std::gcd(m, static_cast<long long>(d)));
    if (static_cast<int>(z.size()) != nd - 1) throw Error(ErrorCode::OutOfRange, "z has the wrong length");
    const int ld = static_cast<int>(m / nd);
    const int half = (ld - 1) / 2;
    auto x = MidString::zeros(n);
    const auto base = orbit(1, d, n);
    // tau_{half,1} = 1^half [over 0] 0^{half-1} [under 0]
    for (int i = 0; i < half; ++i) x.set(base[i], true);
    p_y2 = base[half];
    p_y = base[ld - 1];
    for (int j = 2; j <= nd; ++j)
        if (z[j - 2] == '1')
            for (int p : orbit(j, d, n)) x.set(p, true);
    return x;
}

bool is_switch(const MidString& x, int p_y, int p_y2, int* shift) {
    if (!x.in_a() || p_y == p_y2 || x.get(p_y) || x.get(p_y2)) return false;
    auto y = x, y2 = x;
    y.flip(p_y);
    y2.flip(p_y2);
    const int m = x.length();
    for (int i = 0; i < m; ++i)
        if (rotate(y2, i) == y) {
            if (shift) *shift = i;
            return true;
        }
    return false;
}

EdgeRole edge_role(const MidString& a, const std::vector<Arc>& arcs) {
    std::set<std::string> xs, ys;
    for (const auto& arc : arcs) {
        xs.insert(arc.pair.x);
        ys.insert(arc.pair.y);
    }
    const auto t = tree_of(a);
    auto isx = [&](long long k) { return xs.count(rho_pow(t, -k)) == 1; };
    if (a.in_a()) {
        if (xs.count(t) || ys.count(t)) return EdgeRole::Removed;
        if (isx(1) || isx(2)) return EdgeRole::Reversed;
    } else {
        if (isx(3)) return EdgeRole::Removed;
        if (isx(1) || isx(2)) return EdgeRole::Reversed;
    }
    return EdgeRole::Free;
}

EdgeRole edge_role(const MidString& a) {
    const auto t = tree_of(a);
    if (t.size() < 8) return EdgeRole::Free;
    auto isx = [&](long long k) { return is_arc_x(rho_pow(t, -k)); };
    if (a.in_a()) {
        if (is_arc_x(t) || is_arc_y(t)) return EdgeRole::Removed;
        if (isx(1) || isx(2)) return EdgeRole::Reversed;
    } else {
        if (isx(3)) return EdgeRole::Removed;
        if (isx(1) || isx(2)) return EdgeRole::Reversed;
    }
    return EdgeRole::Free;
}

bool usable_wrt(const Switch& sw, const std::vector<Arc>& arcs) {
    return edge_role(sw.f_edge().first, arcs) != EdgeRole::Removed;
}

bool reversed_wrt(const Switch& sw, const std::vector<Arc>& arcs) {
    return edge_role(sw.f_edge().first, arcs) == EdgeRole::Reversed;
}

Switch make_switch(int n, SwitchKind kind, int d) {
    Switch sw;
    sw.kind = kind;
    std::string z;
    switch (kind) {
        case SwitchKind::Tau1:
            if (n < 1) throw Error(ErrorCode::OutOfRange, "tau1 needs n >= 1");
            sw.d = 1;
            break;
        case SwitchKind::Tau2:
            if (n < 2) throw Error(ErrorCode::OutOfRange, "tau2 needs n >= 2");
            sw.d = 2;
            break;
        case SwitchKind::TauNdz: {
            const int m = 2 * n + 1;
            if (n < 11 || d < 3 || m % d != 0 || m / d < 3)
                throw Error(ErrorCode::OutOfRange, "tau_ndz needs n >= 11 and 2n+1 = c*d with c, d >= 3");
            sw.d = d;
            z = std::string((d - 1) / 2, '1') + std::string((d - 1) / 2, '0');
            break;
        }
    }
    sw.x = orbit_switch(n, sw.d, z, sw.p_y, sw.p_y2);
    if (!is_switch(sw.x, sw.p_y, sw.p_y2, &sw.shift)) throw Error(ErrorCode::PreconditionViolated, "not a switch");
    const auto y = sw.y(), y2 = sw.y2();
    if (f(sw.x) == y || f(y2) == sw.x)
        sw.conformal = Conformal::PlusF;
    else if (f(sw.x) == y2 || f(y) == sw.x)
        sw.conformal = Conformal::MinusF;
    int sign = sw.conformal == Conformal::MinusF ? -1 : 1;
    if (n >= 4 && sw.conformal != Conformal::Neither) {
        sw.reversed = edge_role(sw.f_edge().first) == EdgeRole::Reversed;
        if (sw.reversed) sign = -sign;
    }
    sw.effective_shift = sign * sw.shift;
    return sw;
}

std::vector<long long> coprime_part(long long m, long long s) {
    std::vector<long long> out;
    s %= m;
    if (s < 0) s += m;
    if (s == 0) return out;
    for (long long p : prime_factors(m))
        if (s % p) out.push_back(p);
    return out;
}

static long long product(const std::vector<long long>& v) {
    return std::accumulate(v.begin(), v.end(), 1LL, std::multiplies<>());
}

SwitchPlan plan_switches(int n, int s) {
    if (n <= 3) throw Error(ErrorCode::SmallN, "n <= 3 uses hardcoded sequences");
    const long long m = 2LL * n + 1;
    SwitchPlan plan;
    plan.s_before = static_cast<int>(((s % m) + m) % m);
    auto finish = [&]() {
        long long t = plan.s_before;
        for (const auto& sw : plan.switches) t += sw.effective_shift;
        plan.s_after = static_cast<int>(((t % m) + m) % m);
        return plan;
    };
    if (gcd_ll(plan.s_before, m) == 1) return finish();
    if (n <= 10) {
        for (int delta = 1; delta <= 3; ++delta) {
            if (gcd_ll(plan.s_before + delta, m) != 1) continue;
            if (delta & 1) plan.switches.push_back(make_switch(n, SwitchKind::Tau1));
            if (delta & 2) plan.switches.push_back(make_switch(n, SwitchKind::Tau2));
            return finish();
        }
        throw Error(ErrorCode::PreconditionViolated, "no small repair found");
    }
    const auto primes = prime_factors(m);
    if (primes.size() == 1) {
        plan.switches.push_back(make_switch(n, SwitchKind::Tau1));
        return finish();
    }
    auto part = coprime_part(m, plan.s_before);
    long long cur = plan.s_before;
    if (part.empty()) {
        const auto d = primes.front();
        plan.switches.push_back(make_switch(n, SwitchKind::TauNdz, static_cast<int>(d)));
        cur += plan.switches.back().effective_shift;
        part = coprime_part(m, cur);
    }
    plan.switches.push_back(make_switch(n, SwitchKind::TauNdz, static_cast<int>(product(part))));
    return finish();
}

}  // namespace mlc
