#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mlc/arcs.hpp"
#include "mlc/bits.hpp"
#include "mlc/switching.hpp"

namespace mlc {

// C_n mod 2n+1 by Segner's recurrence.
int catalan_mod(int n);
// binom(2n+2, n+1), or 0 when it does not fit in 64 bits.
std::uint64_t cycle_length(int n);
// 2 C_n, or 0 when it does not fit in 64 bits.
std::uint64_t block_length(int n);
int inverse_mod(int a, int m);

enum class StepKind { FStep, FInvStep, Glue, Switch, Table };
const char* step_name(StepKind k);

// Streams a cyclic star-transposition ordering of the (n+1, n+1)-combinations whose flip
// sequence consists of 2n+1 blocks, block b being block 0 plus b * target_shift.
class Generator {
public:
    explicit Generator(int n, int target_shift = 1, const std::string& start = "");

    int n() const { return n_; }
    int target_shift() const { return target_; }
    int catalan_shift() const { return catalan_; }
    int realized_shift() const { return realized_; }
    int scale() const { return scale_; }
    const SwitchPlan& plan() const { return plan_; }

    // Current combination, length 2n+2.
    const std::string& combination() const { return comb_; }
    std::uint64_t emitted() const { return emitted_; }

    // Internal walk state.
    const MidString& vertex() const { return x_; }
    int ell() const { return ell_; }
    const std::string& tree() const { return t_; }
    bool backward() const { return back_; }

    StepKind classify() const;
    // Advances one step and returns the flipped position (1..2n+1) of the combination.
    int next();

    // Bytes held by the state, including scratch buffers.
    std::size_t memory_bytes() const;

    static std::string default_start(int n);

private:
    struct Planned {
        bool e0_in_a = false;
        bool back = false;
        std::string t_e0;
        int ell_e0 = 0;
        bool e0_is_x = false;
        // target when e0 = x: the other partner z'
        int p_target = 0;    // p(x, z') in x coordinates
        int ell_target = 0;  // ell(z') or ell(x)
        std::string t_target;
        int mu = 0;          // z = sigma^mu (z')
    };
    struct Move {
        StepKind kind = StepKind::FStep;
        int flip = 0;
        int ell = 0;
        bool back = false;
        bool class_change = false;
        bool to_a = false;
    };

    void init_table(const MidString& start);
    void init_walk(const MidString& start);
    void plan_switch(const Switch& sw);
    void decide(Move& mv) const;
    bool arc_x(const std::string& r) const;
    bool arc_y(const std::string& r) const;
    void refresh_arc();
    bool initial_backward() const;

    int n_ = 0;
    int m_ = 0;
    int target_ = 1;
    int catalan_ = 0;
    int realized_ = 0;
    int scale_ = 1;
    SwitchPlan plan_;
    std::vector<Planned> planned_;

    MidString x_;
    bool in_a_ = true;
    int ell_ = 0;
    std::string t_;
    bool back_ = false;
    std::string comb_;
    std::uint64_t emitted_ = 0;

    bool has_arc_ = false;
    Arc arc_;
    mutable ArcFinder finder_;
    mutable std::string next_t_;
    mutable std::string s1_, s2_, s3_;

    // n <= 3: the whole internal cycle
    std::vector<int> table_flips_;
    std::size_t table_pos_ = 0;
};

}  // namespace mlc
