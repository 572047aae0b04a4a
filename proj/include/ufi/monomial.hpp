#ifndef UFI_MONOMIAL_HPP
#define UFI_MONOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <functional>
#include <string>
#include <vector>

#include "error.hpp"

namespace ufi {

struct Monomial {
    std::vector<int> exp;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exp(nvars, 0) {}
    explicit Monomial(std::vector<int> e) : exp(std::move(e)) {}

    std::size_t size() const { return exp.size(); }
    int operator[](std::size_t i) const { return exp[i]; }
    int& operator[](std::size_t i) { return exp[i]; }

    int degree() const {
        int d = 0;
        for (int e : exp) {
            d += e;
        }
        return d;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exp.size(); ++i) {
            if (exp[i] > other.exp[i]) {
                return false;
            }
        }
        return true;
    }

    bool is_squarefree() const {
        return std::all_of(exp.begin(), exp.end(), [](int e) { return e <= 1; });
    }

    /// Largest variable index with a positive exponent, or -1 for 1.
    int max_index() const {
        for (int i = static_cast<int>(exp.size()) - 1; i >= 0; --i) {
            if (exp[static_cast<std::size_t>(i)] > 0) {
                return i;
            }
        }
        return -1;
    }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        m.exp[i] = a.exp[i] + b.exp[i];
    }
    return m;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        m.exp[i] = std::max(a.exp[i], b.exp[i]);
    }
    return m;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        m.exp[i] = std::min(a.exp[i], b.exp[i]);
    }
    return m;
}

/// a / b, assuming b divides a.
inline Monomial quotient(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        m.exp[i] = a.exp[i] - b.exp[i];
    }
    return m;
}

/// Canonical generator order: degree ascending, then lexicographically descending.
inline bool monomial_less(const Monomial& a, const Monomial& b) {
    int da = a.degree();
    int db = b.degree();
    if (da != db) {
        return da < db;
    }
    return a.exp > b.exp;
}

inline std::string to_string(const Monomial& m, const std::vector<std::string>& vars) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.exp[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += vars[i];
        if (m.exp[i] > 1) {
            out += '^' + std::to_string(m.exp[i]);
        }
    }
    return out.empty() ? "1" : out;
}

/// Parse `x1^2*y3` style text over the given variable names.
inline Monomial parse_monomial(const std::string& text, const std::vector<std::string>& vars) {
    Monomial m(vars.size());
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s += ch;
        }
    }
    if (s == "1") {
        return m;
    }
    if (s.empty()) {
        fail_parse("empty monomial");
    }
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t end = s.find('*', pos);
        std::string factor = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        std::string name = factor;
        int e = 1;
        if (auto caret = factor.find('^'); caret != std::string::npos) {
            name = factor.substr(0, caret);
            std::string digits = factor.substr(caret + 1);
            if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
                fail_parse("bad exponent in '" + factor + "'");
            }
            e = std::stoi(digits);
        }
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) {
            fail_parse("unknown variable '" + name + "'");
        }
        m.exp[static_cast<std::size_t>(it - vars.begin())] += e;
        if (end == std::string::npos) {
            break;
        }
        pos = end + 1;
    }
    return m;
}

/// Monomial ideal stored by its minimal generators in canonical order.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    MonomialIdeal(std::vector<std::string> vars, std::vector<Monomial> gens) : vars_(std::move(vars)) {
        for (const auto& g : gens) {
            if (g.size() != vars_.size()) {
                fail_precondition("monomial length does not match the variable list");
            }
        }
        gens_ = minimalize(std::move(gens));
    }

    static MonomialIdeal zero(std::vector<std::string> vars) { return MonomialIdeal(std::move(vars), {}); }

    static MonomialIdeal unit(std::vector<std::string> vars) {
        std::size_t n = vars.size();
        return MonomialIdeal(std::move(vars), {Monomial(n)});
    }

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }

    bool is_unit() const { return gens_.size() == 1 && gens_[0].degree() == 0; }

    bool contains(const Monomial& m) const {
        return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
    }

    bool contains(const MonomialIdeal& other) const {
        return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
    }

    bool is_equigenerated() const {
        return std::all_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.degree() == gens_.front().degree(); });
    }

    bool is_squarefree() const {
        return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
    }

    std::vector<std::string> generator_strings() const {
        std::vector<std::string> out;
        for (const auto& g : gens_) {
            out.push_back(to_string(g, vars_));
        }
        return out;
    }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i > 0) {
                out += ", ";
            }
            out += to_string(gens_[i], vars_);
        }
        return out + ")";
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.vars_ == b.vars_ && a.gens_ == b.gens_;
    }

    static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
        std::sort(gens.begin(), gens.end(), monomial_less);
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Monomial> kept;
        for (auto& g : gens) {
            bool redundant = false;
            for (const auto& k : kept) {
                if (k.divides(g)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) {
                kept.push_back(std::move(g));
            }
        }
        return kept;
    }

private:
    std::vector<std::string> vars_;
    std::vector<Monomial> gens_;
};

inline void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.variables() != b.variables()) {
        fail_precondition("ideals live over different variable lists");
    }
}

inline MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    std::vector<Monomial> gens;
    gens.reserve(a.size() * b.size());
    for (const auto& g : a.generators()) {
        for (const auto& h : b.generators()) {
            gens.push_back(g * h);
        }
    }
    return MonomialIdeal(a.variables(), std::move(gens));
}

inline MonomialIdeal power(const MonomialIdeal& a, int t) {
    require(t >= 0, "negative power");
    MonomialIdeal result = MonomialIdeal::unit(a.variables());
    for (int i = 0; i < t; ++i) {
        result = multiply(result, a);
    }
    return result;
}

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.variables(), std::move(gens));
}

/// Monomial ideals intersect via pairwise lcms of generators.
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    std::vector<Monomial> gens;
    gens.reserve(a.size() * b.size());
    for (const auto& g : a.generators()) {
        for (const auto& h : b.generators()) {
            gens.push_back(lcm(g, h));
        }
    }
    return MonomialIdeal(a.variables(), std::move(gens));
}

inline MonomialIdeal parse_ideal(const std::vector<std::string>& gens, const std::vector<std::string>& vars) {
    std::vector<Monomial> ms;
    for (const auto& g : gens) {
        ms.push_back(parse_monomial(g, vars));
    }
    return MonomialIdeal(vars, std::move(ms));
}

/// Variable names x1..xk followed by y1..yk.
inline std::vector<std::string> paired_variables(int k) {
    std::vector<std::string> v;
    for (int i = 1; i <= k; ++i) {
        v.push_back("x" + std::to_string(i));
    }
    for (int i = 1; i <= k; ++i) {
        v.push_back("y" + std::to_string(i));
    }
    return v;
}

} // namespace ufi

#endif
