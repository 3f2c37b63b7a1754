#include <sys/resource.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mlc/arcs.hpp"
#include "mlc/engine.hpp"
#include "mlc/error.hpp"
#include "mlc/factor.hpp"
#include "mlc/oracle.hpp"
#include "mlc/parallel.hpp"
#include "mlc/switching.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int max_n(int fallback) {
    if (const char* env = std::getenv("MLC_MAX_N")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1) throw Usage("MLC_MAX_N must be a positive integer");
        return static_cast<int>(v);
    }
    return fallback;
}

void check_shift(int n, int shift) {
    if (n < 1) throw Usage("--n must be at least 1");
    if (std::gcd(((shift % (2 * n + 1)) + 2 * n + 1) % (2 * n + 1), 2 * n + 1) != 1)
        throw Usage("--shift must be coprime to 2n+1 = " + std::to_string(2 * n + 1));
}

int cmd_gen(int n, int shift, const std::string& start, const std::string& output, std::uint64_t limit) {
    check_shift(n, shift);
    mlc::Generator g(n, shift, start);
    if (limit == 0) limit = mlc::cycle_length(n);
    if (limit == 0) throw Usage("the cycle is too long to print; pass --limit");
    const std::uint64_t len = mlc::block_length(n);
    std::ostringstream line;
    auto& out = std::cout;
    if (output == "combos") {
        for (std::uint64_t i = 0; i < limit; ++i) {
            out << g.combination() << '\n';
            g.next();
        }
        return 0;
    }
    for (std::uint64_t i = 0; i < limit; ++i) {
        const int p = g.next();
        if (output == "blocks" && i > 0 && i % len == 0) out << '\n';
        else if (i > 0) out << ' ';
        out << p;
    }
    out << '\n';
    return 0;
}

int report(const mlc::oracle::VerifyReport& r) {
    if (r.ok) {
        std::cout << "ok\n";
        return 0;
    }
    std::cout << "violation at step " << r.step << ": " << mlc::oracle::reason_name(r.reason) << '\n';
    return kExitViolation;
}

int cmd_verify(int n, int shift, const std::string& input, const std::string& start) {
    check_shift(n, shift);
    if (n > max_n(20)) throw Usage("n exceeds MLC_MAX_N");
    if (input.empty()) {
        const auto s = start.empty() ? mlc::Generator::default_start(n) : start;
        if (n <= 12) return report(mlc::oracle::verify_blocks_parallel(s, mlc::generate_block(n, shift, s, 0), n, shift));
        mlc::Generator g(n, shift, s);
        mlc::oracle::StreamVerifier v(n, shift);
        for (std::uint64_t i = 0, total = mlc::cycle_length(n); i < total; ++i) {
            if (!v.push(g.combination())) break;
            g.next();
        }
        return report(v.finish());
    }
    std::ifstream file;
    std::istream* in = &std::cin;
    if (input != "-") {
        file.open(input);
        if (!file) throw Usage("cannot open " + input);
        in = &file;
    }
    std::string tok;
    std::vector<int> flips;
    mlc::oracle::StreamVerifier v(n, shift);
    bool combos = false, first = true;
    while (*in >> tok) {
        if (first) {
            combos = tok.size() == static_cast<std::size_t>(2 * n + 2) && tok.find_first_not_of("01") == std::string::npos;
            first = false;
        }
        if (combos) {
            if (!v.push(tok)) break;
        } else {
            try {
                flips.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw Usage("bad flip position '" + tok + "'");
            }
        }
    }
    if (combos) return report(v.finish());
    const auto s = start.empty() ? mlc::Generator::default_start(n) : start;
    if (flips.size() == mlc::block_length(n) && mlc::cycle_length(n) != flips.size() && n <= 12)
        return report(mlc::oracle::verify_blocks_parallel(s, flips, n, shift));
    return report(mlc::oracle::verify_flips(s, flips, n, shift));
}

int cmd_factor(int n, const std::string& format) {
    const int cap = max_n(12);
    if (n < 1 || n > cap) throw Usage("--n must be in 1.." + std::to_string(cap));
    const auto cycles = mlc::enumerate_factor(n, cap);
    std::cout << (format == "dot" ? mlc::factor_to_dot(cycles) : mlc::factor_to_text(cycles));
    return 0;
}

int cmd_tree(int n, const std::string& format) {
    const int cap = max_n(9);
    if (n < 4 || n > cap) throw Usage("--n must be in 4.." + std::to_string(cap));
    const auto arcs = mlc::build_tree(n, cap);
    if (format == "dot") {
        std::cout << mlc::tree_to_dot(n, arcs);
    } else {
        for (const auto& a : arcs)
            std::cout << a.pair.x << ' ' << a.pair.y << ' ' << mlc::rule_name(a.rule) << '\n';
    }
    return 0;
}

int cmd_switches(int n) {
    if (n < 1) throw Usage("--n must be at least 1");
    const int s = mlc::catalan_mod(n);
    if (n <= 3) {
        std::cout << "s=" << s << ", plan=[], s'=1 (fixed table)\n";
        return 0;
    }
    const auto plan = mlc::plan_switches(n, s);
    std::cout << "s=" << s << ", plan=[";
    for (std::size_t i = 0; i < plan.switches.size(); ++i) {
        const auto& sw = plan.switches[i];
        if (i) std::cout << ", ";
        std::cout << mlc::kind_name(sw.kind);
        if (sw.kind == mlc::SwitchKind::TauNdz) std::cout << " d=" << sw.d;
    }
    std::cout << "], s'=" << plan.s_after << '\n';
    for (const auto& sw : plan.switches) std::cout << "  " << mlc::kind_name(sw.kind) << ' ' << sw.str() << '\n';
    return 0;
}

int cmd_bench(int n, std::uint64_t steps) {
    check_shift(n, 1);
    mlc::Generator g(n, 1);
    const auto t0 = std::chrono::steady_clock::now();
    long long acc = 0;
    for (std::uint64_t i = 0; i < steps; ++i) acc += g.next();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rusage ru{};
    getrusage(RUSAGE_SELF, &ru);
    std::cout << "n=" << n << " steps=" << steps << " ns/step=" << (steps ? secs * 1e9 / steps : 0.0)
              << " state_bytes=" << g.memory_bytes() << " peak_rss_kb=" << ru.ru_maxrss << " checksum=" << acc << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Star-transposition Gray codes for (n+1, n+1)-combinations"};
    app.require_subcommand(1);

    int n = 0, shift = 1;
    std::string start, output = "combos", input, format = "text";
    std::uint64_t limit = 0, steps = 1000000;

    auto* gen = app.add_subcommand("gen", "stream the ordering");
    gen->add_option("--n", n, "n")->required();
    gen->add_option("--shift", shift, "block shift, coprime to 2n+1");
    gen->add_option("--start", start, "first combination (length 2n+2, weight n+1)");
    gen->add_option("--output", output, "combos, flips or blocks")->check(CLI::IsMember({"combos", "flips", "blocks"}));
    gen->add_option("--limit", limit, "number of lines or flips");

    auto* verify = app.add_subcommand("verify", "check an ordering with the brute-force oracle");
    verify->add_option("--n", n, "n")->required();
    verify->add_option("--shift", shift, "block shift");
    verify->add_option("--input", input, "combinations or flips, '-' for stdin; omitted: generate and check");
    verify->add_option("--start", start, "start combination for flip input");

    auto* factor = app.add_subcommand("factor", "dump the cycle factor");
    factor->add_option("--n", n, "n")->required();
    factor->add_option("--format", format, "dot or text")->check(CLI::IsMember({"dot", "text"}));

    auto* tree = app.add_subcommand("tree", "dump the spanning tree of plane trees");
    tree->add_option("--n", n, "n")->required();
    tree->add_option("--format", format, "dot or text")->check(CLI::IsMember({"dot", "text"}));

    auto* switches = app.add_subcommand("switches", "show the Catalan shift and the switch plan");
    switches->add_option("--n", n, "n")->required();

    auto* bench = app.add_subcommand("bench", "time the generator");
    bench->add_option("--n", n, "n")->required();
    bench->add_option("--steps", steps, "steps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen) return cmd_gen(n, shift, start, output, limit);
        if (*verify) return cmd_verify(n, shift, input, start);
        if (*factor) return cmd_factor(n, format);
        if (*tree) return cmd_tree(n, format);
        if (*switches) return cmd_switches(n);
        if (*bench) return cmd_bench(n, steps);
    } catch (const Usage& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const mlc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
