#include "mlc/factor.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mlc/error.hpp"

namespace mlc {

std::string FlipSequence::str() const {
    std::string s;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s.push_back(' ');
        s += std::to_string(entries[i]);
    }
    return s;
}

FlipSequence FlipSequence::parse(int n, const std::string& text) {
    FlipSequence fs{n, {}};
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        // a token made of single digits, like 6253462135, is read digit by digit
        if (2 * n + 1 < 10 && tok.size() > 1) {
            for (char c : tok) fs.entries.push_back(c - '0');
        } else {
            fs.entries.push_back(std::stoi(tok));
        }
    }
    for (int p : fs.entries)
        if (p < 1 || p > 2 * n + 1) throw Error(ErrorCode::OutOfRange, "flip position " + std::to_string(p));
    return fs;
}

int f_position(const MidString& v) {
    const int l = ell(v);
    if (!v.in_a()) return mod_pos(l + 1, v.n());
    const std::string t = tree_of(v);
    const int u = static_cast<int>(match_close(t, 0)) - 2;
    return mod_pos(l + u + 2, v.n());
}

int f_inv_position(const MidString& v) {
    const int l = ell(v);
    if (v.in_a()) return mod_pos(l, v.n());
    const std::string t = tree_of(v);
    int e = 0;
    int s = 0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        e += t[i] == '1' ? 1 : -1;
        if (e == 0) s = static_cast<int>(i) + 1;
    }
    return mod_pos(l + s + 2, v.n());
}

MidString f(const MidString& v) {
    MidString w = v;
    w.flip(f_position(v));
    return w;
}

MidString f_inv(const MidString& v) {
    MidString w = v;
    w.flip(f_inv_position(v));
    return w;
}

int kappa(const MidString& v) { return 2 * lambda_of(tree_of(v)); }

PeriodicPath periodic_path(const MidString& v) {
    PeriodicPath p{v, {}, {v.n(), {}}};
    const int k = kappa(v);
    MidString cur = v;
    for (int i = 0; i < k; ++i) {
        p.vertices.push_back(cur);
        const int pos = f_position(cur);
        p.flips.entries.push_back(pos);
        cur.flip(pos);
    }
    return p;
}

std::vector<std::string> dyck_words(int n) {
    std::vector<std::string> out;
    std::string s;
    // depth-first generation in lexicographic order
    auto rec = [&](auto&& self, int open, int close) -> void {
        if (open == n && close == n) {
            out.push_back(s);
            return;
        }
        if (close < open) {
            s.push_back('0');
            self(self, open, close + 1);
            s.pop_back();
        }
        if (open < n) {
            s.push_back('1');
            self(self, open + 1, close);
            s.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<PlaneTree> plane_trees(int n) {
    std::set<std::string> seen;
    std::vector<PlaneTree> out;
    for (const auto& t : dyck_words(n)) {
        auto p = canon_plane(t);
        if (seen.insert(p.canon).second) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FactorCycle> enumerate_factor(int n, int max_n) {
    if (n < 1) throw Error(ErrorCode::OutOfRange, "n must be positive");
    if (n > max_n) throw Error(ErrorCode::BoundExceeded, "n exceeds enumeration bound");
    std::vector<FactorCycle> out;
    for (const auto& t : plane_trees(n)) {
        FactorCycle c{t, {}};
        const auto p = periodic_path(MidString::parse(t.canon + "0"));
        for (const auto& v : p.vertices) c.necklaces.push_back(necklace_of(v));
        out.push_back(std::move(c));
    }
    return out;
}

std::string factor_to_dot(const std::vector<FactorCycle>& cycles) {
    std::ostringstream os;
    os << "graph F {\n";
    int id = 0;
    for (const auto& c : cycles) {
        os << "  subgraph cluster_" << id++ << " {\n    label=\"" << c.tree.canon << "\";\n";
        const auto k = c.necklaces.size();
        for (std::size_t i = 0; i < k; ++i) {
            os << "    \"" << c.necklaces[i].canon.str() << "\" -- \""
               << c.necklaces[(i + 1) % k].canon.str() << "\";\n";
        }
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

std::string factor_to_text(const std::vector<FactorCycle>& cycles) {
    std::ostringstream os;
    for (const auto& c : cycles) {
        os << c.tree.canon << " lambda=" << c.tree.lambda << ":";
        for (const auto& nk : c.necklaces) os << ' ' << nk.canon.str();
        os << '\n';
    }
    return os.str();
}

}  // namespace mlc
