#include "mlc/engine.hpp"

#include <numeric>
#include <tuple>

#include "mlc/error.hpp"
#include "mlc/factor.hpp"
#include "mlc/trees.hpp"

namespace mlc {

int catalan_mod(int n) {
    const long long m = 2LL * n + 1;
    std::vector<long long> c(n + 1, 0);
    c[0] = 1 % m;
    for (int k = 0; k < n; ++k) {
        long long s = 0;
        for (int i = 0; i <= k; ++i) s = (s + c[i] * c[k - i]) % m;
        c[k + 1] = s;
    }
    return static_cast<int>(c[n]);
}

std::uint64_t cycle_length(int n) {
    unsigned __int128 b = 1;
    const int k = 2 * n + 2;
    for (int i = 1; i <= n + 1; ++i) {
        b = b * static_cast<unsigned>(k - n - 1 + i) / static_cast<unsigned>(i);
        if (b > ~std::uint64_t{0}) return 0;
    }
    return static_cast<std::uint64_t>(b);
}

std::uint64_t block_length(int n) {
    const auto c = cycle_length(n);
    return c == 0 ? 0 : c / static_cast<std::uint64_t>(2 * n + 1);
}

int inverse_mod(int a, int m) {
    long long r0 = m, r1 = ((a % m) + m) % m, s0 = 0, s1 = 1;
    while (r1) {
        const long long q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    if (r0 != 1) throw Error(ErrorCode::NotCoprime, "value is not invertible");
    return static_cast<int>(((s0 % m) + m) % m);
}

const char* step_name(StepKind k) {
    switch (k) {
        case StepKind::FStep: return "f";
        case StepKind::FInvStep: return "f^-1";
        case StepKind::Glue: return "glue";
        case StepKind::Switch: return "switch";
        case StepKind::Table: return "table";
    }
    return "?";
}

// rho(1u0v) = u1v0
static void rho_into(const std::string& t, std::string& out) {
    const std::size_t m = match_close(t, 0);
    out.assign(t, 1, m - 2);
    out.push_back('1');
    out.append(t, m, std::string::npos);
    out.push_back('0');
}

// Start of the last prime component.
static std::size_t last_component(const std::string& s) {
    std::size_t j = 0;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (depth == 0) j = i;
        depth += s[i] == '1' ? 1 : -1;
    }
    return j;
}

// rho^{-1}(u1v0) = 1u0v
static void rho_inv_into(const std::string& s, std::string& out) {
    const std::size_t j = last_component(s);
    out.assign(1, '1');
    out.append(s, 0, j);
    out.push_back('0');
    out.append(s, j + 1, s.size() - j - 2);
}

static bool root_is_leaf(const std::string& r) { return match_close(r, 0) == r.size(); }

std::string Generator::default_start(int n) { return std::string(n + 1, '1') + std::string(n + 1, '0'); }

Generator::Generator(int n, int target_shift, const std::string& start) : n_(n), m_(2 * n + 1) {
    if (n < 1) throw Error(ErrorCode::OutOfRange, "n must be positive");
    target_ = ((target_shift % m_) + m_) % m_;
    if (std::gcd(target_, m_) != 1) throw Error(ErrorCode::NotCoprime, "shift must be coprime to 2n+1");
    const std::string s = start.empty() ? default_start(n) : start;
    if (static_cast<int>(s.size()) != m_ + 1) throw Error(ErrorCode::BadStart, "start must have length 2n+2");
    int w = 0;
    for (char ch : s) {
        if (ch != '0' && ch != '1') throw Error(ErrorCode::BadStart, "start must be a bitstring");
        w += ch == '1';
    }
    if (w != n + 1) throw Error(ErrorCode::BadStart, "start must have weight n+1");

    catalan_ = catalan_mod(n);
    if (n <= 3) {
        realized_ = 1;
    } else {
        plan_ = plan_switches(n, catalan_);
        realized_ = plan_.s_after;
    }
    scale_ = static_cast<int>(static_cast<long long>(inverse_mod(realized_, m_)) * target_ % m_);
    auto v0 = MidString::zeros(n);
    for (int i = 1; i <= m_; ++i) v0.set(i, s[mod_pos(static_cast<long long>(scale_) * i, n)] == '1');
    comb_ = s;
    if (n <= 3) {
        init_table(v0);
    } else {
        init_walk(v0);
        for (const auto& sw : plan_.switches) plan_switch(sw);
    }
}

void Generator::init_table(const MidString& start) {
    static const char* const alpha[] = {"", "21", "5135", "6253462135"};
    static const char* const first[] = {"", "100", "11000", "1110000"};
    const auto a0 = FlipSequence::parse(n_, alpha[n_]);
    std::vector<int> flips;
    for (int b = 0; b < m_; ++b)
        for (int p : a0.entries) flips.push_back(mod_pos(p + b, n_));
    auto v = MidString::parse(first[n_]);
    std::size_t at = flips.size();
    for (std::size_t i = 0; i < flips.size(); ++i) {
        if (v == start) at = i;
        v.flip(flips[i]);
    }
    if (at == flips.size()) throw Error(ErrorCode::BadStart, "start is not on the cycle");
    table_flips_.assign(flips.begin() + static_cast<long>(at), flips.end());
    table_flips_.insert(table_flips_.end(), flips.begin(), flips.begin() + static_cast<long>(at));
    x_ = start;
    in_a_ = start.in_a();
}

void Generator::init_walk(const MidString& start) {
    x_ = start;
    in_a_ = start.in_a();
    ell_ = mlc::ell(start);
    t_ = tree_of(start);
    refresh_arc();
    back_ = initial_backward();
}

void Generator::refresh_arc() { has_arc_ = finder_.find(t_, arc_); }

bool Generator::arc_x(const std::string& r) const {
    if (r[0] != '1' || r[1] != '1' || r[2] != '0' || root_is_leaf(r)) return false;
    if (has_arc_ && arc_.pair.x == r) return true;
    s3_ = r;
    std::swap(s3_[1], s3_[2]);
    Arc a;
    return finder_.find(s3_, a) && a.pair.x == r;
}

bool Generator::arc_y(const std::string& r) const {
    if (r[0] != '1' || r[1] != '0' || r[2] != '1' || match_close(r, 2) == r.size()) return false;
    if (has_arc_ && arc_.pair.y == r) return true;
    s3_ = r;
    std::swap(s3_[1], s3_[2]);
    Arc a;
    return finder_.find(s3_, a) && a.pair.y == r;
}

bool Generator::initial_backward() const {
    rho_inv_into(t_, s1_);
    if (arc_x(s1_)) return true;
    rho_inv_into(s1_, s2_);
    if (arc_x(s2_)) return true;
    if (in_a_) return false;
    rho_inv_into(s2_, s1_);
    return arc_x(s1_);
}

void Generator::plan_switch(const Switch& sw) {
    const auto [a, b] = sw.f_edge();
    const auto& e0 = sw.reversed ? b : a;
    const auto& e1 = sw.reversed ? a : b;
    Planned p;
    p.back = sw.reversed;
    p.e0_in_a = e0.in_a();
    p.t_e0 = tree_of(e0);
    p.ell_e0 = mlc::ell(e0);
    p.e0_is_x = e0 == sw.x;
    const auto& z = p.e0_is_x ? e1 : e0;
    const bool z_is_y = z == sw.y();
    const auto zbar = z_is_y ? sw.y2() : sw.y();
    p.p_target = z_is_y ? sw.p_y2 : sw.p_y;
    if (p.e0_is_x) {
        p.ell_target = mlc::ell(zbar);
        p.t_target = tree_of(zbar);
    } else {
        p.ell_target = mlc::ell(sw.x);
        p.t_target = tree_of(sw.x);
        for (int i = 0; i < m_; ++i)
            if (rotate(zbar, i) == z) p.mu = i;
    }
    planned_.push_back(std::move(p));
}

void Generator::decide(Move& mv) const {
    const int l = ell_;
    mv.back = back_;
    mv.class_change = false;
    auto fire_switch = [&]() {
        for (const auto& p : planned_) {
            if (p.back != back_ || p.e0_in_a != in_a_ || p.t_e0 != t_) continue;
            long long k = p.ell_e0 - l;
            if (p.e0_is_x) {
                mv.to_a = false;
            } else {
                k += p.mu;
                mv.to_a = true;
            }
            mv.kind = StepKind::Switch;
            mv.flip = mod_pos(p.p_target - k, n_);
            mv.ell = static_cast<int>(((p.ell_target - k) % m_ + m_) % m_);
            next_t_ = p.t_target;
            return true;
        }
        return false;
    };
    if (!back_) {
        if (in_a_) {
            if (arc_x(t_)) {
                // x^0 -> y^1
                mv.kind = StepKind::Glue;
                mv.flip = mod_pos(l + 3, n_);
                mv.ell = l;
                mv.to_a = false;
                mv.class_change = true;
                s1_ = t_;
                std::swap(s1_[1], s1_[2]);
                rho_into(s1_, next_t_);
                return;
            }
            if (arc_y(t_)) {
                // y^0 -> x^5
                const std::size_t u = match_close(t_, 2) - 4;
                mv.kind = StepKind::Glue;
                mv.flip = mod_pos(l + static_cast<long long>(u) + 4, n_);
                mv.ell = (l + 2) % m_;
                mv.to_a = false;
                mv.back = true;
                mv.class_change = true;
                s1_ = t_;
                std::swap(s1_[1], s1_[2]);
                rho_into(s1_, s2_);
                rho_into(s2_, s1_);
                rho_into(s1_, next_t_);
                return;
            }
            if (fire_switch()) return;
            mv.kind = StepKind::FStep;
            mv.flip = mod_pos(l + static_cast<long long>(match_close(t_, 0)), n_);
            mv.ell = l;
            mv.to_a = false;
            rho_into(t_, next_t_);
            return;
        }
        rho_inv_into(t_, s1_);
        rho_inv_into(s1_, s2_);
        rho_inv_into(s2_, s1_);
        if (arc_x(s1_)) {
            // x^5 -> y^0
            const int o = ((l - 2) % m_ + m_) % m_;
            const std::size_t u = match_close(s1_, 0) - 4;
            mv.kind = StepKind::Glue;
            mv.flip = mod_pos(o + static_cast<long long>(u) + 4, n_);
            mv.ell = o;
            mv.to_a = true;
            mv.back = true;
            mv.class_change = true;
            next_t_ = s1_;
            std::swap(next_t_[1], next_t_[2]);
            return;
        }
        if (fire_switch()) return;
        mv.kind = StepKind::FStep;
        mv.flip = mod_pos(l + 1, n_);
        mv.ell = (l + 1) % m_;
        mv.to_a = true;
        next_t_ = t_;
        return;
    }
    if (in_a_) {
        rho_inv_into(t_, s1_);
        rho_inv_into(s1_, s2_);
        rho_inv_into(s2_, s1_);
        if (arc_x(s1_)) {
            // x^6 -> x^1
            const int o = ((l - 3) % m_ + m_) % m_;
            mv.kind = StepKind::Glue;
            mv.flip = mod_pos(o + 2, n_);
            mv.ell = o;
            mv.to_a = false;
            mv.back = false;
            rho_into(s1_, next_t_);
            return;
        }
        if (fire_switch()) return;
        mv.kind = StepKind::FInvStep;
        mv.flip = mod_pos(l, n_);
        mv.ell = ((l - 1) % m_ + m_) % m_;
        mv.to_a = false;
        next_t_ = t_;
        return;
    }
    rho_inv_into(t_, s1_);
    if (arc_x(s1_)) {
        // x^1 -> x^6
        mv.kind = StepKind::Glue;
        mv.flip = mod_pos(l + 2, n_);
        mv.ell = (l + 3) % m_;
        mv.to_a = true;
        mv.back = false;
        rho_into(t_, s2_);
        rho_into(s2_, next_t_);
        return;
    }
    if (arc_y(s1_)) {
        // y^1 -> x^0
        mv.kind = StepKind::Glue;
        mv.flip = mod_pos(l + 3, n_);
        mv.ell = l;
        mv.to_a = true;
        mv.back = true;
        mv.class_change = true;
        next_t_ = s1_;
        std::swap(next_t_[1], next_t_[2]);
        return;
    }
    if (fire_switch()) return;
    mv.kind = StepKind::FInvStep;
    mv.flip = mod_pos(l + static_cast<long long>(last_component(t_)) + 2, n_);
    mv.ell = l;
    mv.to_a = true;
    next_t_ = s1_;
}

StepKind Generator::classify() const {
    if (n_ <= 3) return StepKind::Table;
    Move mv;
    decide(mv);
    return mv.kind;
}

int Generator::next() {
    int p;
    if (n_ <= 3) {
        p = table_flips_[table_pos_];
        table_pos_ = (table_pos_ + 1) % table_flips_.size();
        in_a_ = !in_a_;
    } else {
        Move mv;
        decide(mv);
        p = mv.flip;
        ell_ = mv.ell;
        back_ = mv.back;
        in_a_ = mv.to_a;
        t_.swap(next_t_);
        if (mv.class_change) refresh_arc();
    }
    x_.flip(p);
    const int q = mod_pos(static_cast<long long>(scale_) * p, n_);
    std::swap(comb_[0], comb_[q]);
    ++emitted_;
    return q;
}

std::size_t Generator::memory_bytes() const {
    std::size_t b = sizeof(*this);
    b += t_.capacity() + next_t_.capacity() + s1_.capacity() + s2_.capacity() + s3_.capacity() + comb_.capacity();
    b += (x_.length() + 63) / 64 * 8;
    b += arc_.pair.x.capacity() + arc_.pair.y.capacity() + arc_.pair.u.capacity() + arc_.pair.v.capacity();
    for (const auto& p : planned_) b += sizeof(p) + p.t_e0.capacity() + p.t_target.capacity();
    b += table_flips_.capacity() * sizeof(int);
    b += finder_.memory_bytes();
    return b;
}

}  // namespace mlc
