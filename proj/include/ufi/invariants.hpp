#ifndef UFI_INVARIANTS_HPP
#define UFI_INVARIANTS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "betti.hpp"
#include "colouring.hpp"
#include "simplicial.hpp"
#include "ufi.hpp"

namespace ufi {

using Rational = boost::multiprecision::cpp_rational;

inline long long binomial(long long n, long long r) {
    if (r < 0 || r > n) {
        return 0;
    }
    long long out = 1;
    for (long long i = 1; i <= r; ++i) {
        out = out * (n - r + i) / i;
    }
    return out;
}

inline long long factorial(int n) {
    long long out = 1;
    for (int i = 2; i <= n; ++i) {
        out *= i;
    }
    return out;
}

/// beta_{i, n+i}(I) = sum_{j=i}^{1+dim} C(j, i) f_{j-1}; everything else vanishes.
inline BettiTable betti_closed_form(const SimplicialComplex& c, const Colouring& col, const Limits& limits = {}) {
    require_ufi_input(c, col, limits);
    require_nesting_order(c, col);
    const int n = c.ground_size();
    auto f = f_vector(c);
    BettiTable t;
    const int top = c.dimension() + 1;
    for (int i = 0; i <= top; ++i) {
        long long b = 0;
        for (int j = i; j <= top; ++j) {
            b += binomial(j, i) * f[static_cast<std::size_t>(j)];
        }
        t.add(i, n + i, b);
    }
    return t;
}

struct HilbertSummary {
    bool zero_quotient = false; // no vertices and only the empty face: I = R
    Polynomial q;               // Hilbert series of R/I is q / (1 - t)^krull_dim
    int krull_dim = 0;
    int codim = 0;
    long long multiplicity = 0;
    int pdim = 0;          // of R/I
    int depth = 0;         // of R/I
    int reg_ideal = 0;     // reg(I) = n
    int reg_quotient = 0;  // reg(R/I) = n - 1
    bool cohen_macaulay = false;
    int variables = 0;
};

/// Closed forms for nested colourings.
inline HilbertSummary hilbert_summary(const SimplicialComplex& c, const Colouring& col, const Limits& limits = {}) {
    require_ufi_input(c, col, limits);
    require_nesting_order(c, col);
    HilbertSummary h;
    const int k = col.size();
    h.variables = 2 * k;
    const int n = c.ground_size();
    const int dim = c.dimension();
    h.reg_ideal = n;
    h.reg_quotient = n - 1;
    if (dim < 0) {
        if (n == 0) {
            h.zero_quotient = true;
            return h;
        }
        // principal ideal generated in degree n: R/I has series (1 + ... + t^{n-1}) / (1-t)^{2k-1}
        for (int i = 0; i < n; ++i) {
            h.q.add_term(static_cast<std::size_t>(i), 1);
        }
        h.codim = 1;
        h.krull_dim = 2 * k - 1;
        h.multiplicity = n;
        h.pdim = 1;
        h.depth = 2 * k - 1;
        h.cohen_macaulay = true;
        return h;
    }
    auto f = f_vector(c);
    // sum_{i=0}^{n-1} (i+1) t^i - t^n sum_{i=2}^{1+dim} f_{i-1} (1-t)^{i-2}
    Polynomial q;
    for (int i = 0; i < n; ++i) {
        q.add_term(static_cast<std::size_t>(i), i + 1);
    }
    Polynomial tail;
    Polynomial one_minus_t(std::vector<long long>{1, -1});
    Polynomial pw(std::vector<long long>{1});
    for (int i = 2; i <= 1 + dim; ++i) {
        Polynomial term = pw * Polynomial(std::vector<long long>{f[static_cast<std::size_t>(i)]});
        tail = tail + term;
        pw = pw * one_minus_t;
    }
    std::vector<long long> shift(static_cast<std::size_t>(n), 0);
    shift.push_back(1);
    h.q = q - Polynomial(shift) * tail;
    h.codim = 2;
    h.krull_dim = 2 * k - 2;
    h.multiplicity = binomial(n + 1, 2) - (f.size() > 2 ? f[2] : 0);
    h.pdim = dim + 2;
    h.depth = 2 * (k - 1) - dim;
    h.cohen_macaulay = dim == 0;
    return h;
}

/// reg(I^i) = i * n; the quotient's regularity is one less.
inline int power_regularity(const SimplicialComplex& c, int i) { return i * c.ground_size(); }

/// pdim(R/I^i) weakly increases to `limit` = k - t + 1 (t empty classes) and
/// reaches it once i >= `threshold` = k - t - dim.
struct PowerPdim {
    int limit = 0;
    int threshold = 1;
};

inline PowerPdim power_pdim(const SimplicialComplex& c, const Colouring& col) {
    int t = 0;
    for (int i = 0; i < col.size(); ++i) {
        t += col.class_size(i) == 0 ? 1 : 0;
    }
    PowerPdim p;
    p.limit = col.size() - t + 1;
    p.threshold = std::max(1, col.size() - t - c.dimension());
    return p;
}

/// Pure diagram with degree sequence d_0 < ... < d_s; entry i sits at (i, d_i).
struct PureDiagram {
    std::vector<int> degrees;
    std::vector<Rational> entries;

    std::string str() const {
        std::string out = "pi(";
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            out += (i ? "," : "") + std::to_string(degrees[i]);
        }
        return out + ")";
    }
};

inline PureDiagram pure_diagram(const std::vector<int>& d) {
    require(!d.empty(), "pure diagram needs at least one degree");
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        require(d[i] < d[i + 1], "pure diagram degrees must increase strictly");
    }
    PureDiagram p;
    p.degrees = d;
    for (std::size_t i = 0; i < d.size(); ++i) {
        Rational v = (i % 2 == 0) ? 1 : -1;
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (j != i) {
                v /= Rational(d[j] - d[i]);
            }
        }
        p.entries.push_back(v);
    }
    return p;
}

/// pi(d) <= pi(d') iff d is at least as long and d_i <= d'_i on the common range.
inline bool diagram_leq(const PureDiagram& a, const PureDiagram& b) {
    if (a.degrees.size() < b.degrees.size()) {
        return false;
    }
    for (std::size_t i = 0; i < b.degrees.size(); ++i) {
        if (a.degrees[i] > b.degrees[i]) {
            return false;
        }
    }
    return true;
}

using RationalTable = std::map<std::pair<int, int>, Rational>;

inline RationalTable to_rational(const BettiTable& t) {
    RationalTable r;
    for (const auto& [k, v] : t.entries) {
        r[k] = Rational(v);
    }
    return r;
}

struct BSTerm {
    Rational coefficient;
    PureDiagram diagram;
};

/// Terms in peeling order, which is increasing in the diagram order.
struct BSDecomposition {
    std::vector<BSTerm> terms;

    RationalTable reconstruct() const {
        RationalTable r;
        for (const auto& t : terms) {
            for (std::size_t i = 0; i < t.diagram.degrees.size(); ++i) {
                auto key = std::make_pair(static_cast<int>(i), t.diagram.degrees[i]);
                r[key] += t.coefficient * t.diagram.entries[i];
            }
        }
        for (auto it = r.begin(); it != r.end();) {
            it = (it->second == 0) ? r.erase(it) : std::next(it);
        }
        return r;
    }

    bool is_chain() const {
        for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
            const auto& a = terms[i].diagram;
            const auto& b = terms[i + 1].diagram;
            if (!diagram_leq(a, b) || a.degrees == b.degrees) {
                return false;
            }
        }
        return true;
    }

    bool integral() const {
        return std::all_of(terms.begin(), terms.end(),
                           [](const BSTerm& t) { return boost::multiprecision::denominator(t.coefficient) == 1; });
    }

    bool matches(const BettiTable& t) const { return reconstruct() == to_rational(t); }

    std::vector<Rational> coefficients() const {
        std::vector<Rational> c;
        for (const auto& t : terms) {
            c.push_back(t.coefficient);
        }
        return c;
    }
};

/// Greedy peel: take the minimal degree in each nonzero column, subtract the
/// largest multiple of that pure diagram keeping every entry nonnegative.
inline BSDecomposition bsd_generic(const BettiTable& table) {
    RationalTable rest = to_rational(table);
    BSDecomposition out;
    while (!rest.empty()) {
        std::map<int, int> low;
        for (const auto& [k, v] : rest) {
            require(v > 0, "Boij–Söderberg peel produced a negative entry", "column " + std::to_string(k.first));
            auto it = low.find(k.first);
            if (it == low.end() || k.second < it->second) {
                low[k.first] = k.second;
            }
        }
        std::vector<int> d;
        int expect = low.begin()->first;
        for (const auto& [col, deg] : low) {
            if (col != expect) {
                fail_precondition("table has a gap in its columns; not a module's Betti table");
            }
            ++expect;
            d.push_back(deg);
        }
        if (low.begin()->first != 0) {
            fail_precondition("table does not start in column 0");
        }
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            if (d[i] >= d[i + 1]) {
                fail_precondition("top strand degrees are not increasing; peel fails");
            }
        }
        PureDiagram p = pure_diagram(d);
        std::optional<Rational> c;
        for (std::size_t i = 0; i < d.size(); ++i) {
            Rational ratio = rest[{static_cast<int>(i), d[i]}] / p.entries[i];
            if (!c || ratio < *c) {
                c = ratio;
            }
        }
        for (std::size_t i = 0; i < d.size(); ++i) {
            auto key = std::make_pair(static_cast<int>(i), d[i]);
            rest[key] -= *c * p.entries[i];
            if (rest[key] < 0) {
                fail_precondition("Boij–Söderberg peel produced a negative entry");
            }
            if (rest[key] == 0) {
                rest.erase(key);
            }
        }
        out.terms.push_back({*c, p});
    }
    return out;
}

/// j! f_{j-1} on pi(n, ..., n+j), listed from the longest diagram down.
inline BSDecomposition bsd_ideal(const SimplicialComplex& c, const Colouring& col, const Limits& limits = {}) {
    require_ufi_input(c, col, limits);
    require_nesting_order(c, col);
    const int n = c.ground_size();
    auto f = f_vector(c);
    BSDecomposition out;
    for (int j = c.dimension() + 1; j >= 0; --j) {
        std::vector<int> d;
        for (int t = 0; t <= j; ++t) {
            d.push_back(n + t);
        }
        out.terms.push_back({Rational(factorial(j) * f[static_cast<std::size_t>(j)]), pure_diagram(d)});
    }
    return out;
}

/// a_j = j! (n f_{j-1} + sum_v (f_{j-2}(lk v) - f_{j-1}(lk v))) on pi(0, n, ..., n+j).
inline BSDecomposition bsd_quotient(const SimplicialComplex& c, const Colouring& col, const Limits& limits = {}) {
    require_ufi_input(c, col, limits);
    require_nesting_order(c, col);
    const int n = c.ground_size();
    BSDecomposition out;
    if (c.dimension() < 0) {
        return out; // R/I = 0
    }
    auto f = f_vector(c);
    std::vector<std::vector<long long>> lf;
    for (int v = 0; v < n; ++v) {
        lf.push_back(f_vector(link_of_vertex(c, v)));
    }
    auto at = [](const std::vector<long long>& fv, int dimension) -> long long {
        // f_{dimension}, stored at dimension + 1
        auto idx = static_cast<std::size_t>(dimension + 1);
        return (dimension + 1 >= 0 && idx < fv.size()) ? fv[idx] : 0;
    };
    for (int j = c.dimension() + 1; j >= 1; --j) {
        long long s = static_cast<long long>(n) * at(f, j - 1);
        for (const auto& fv : lf) {
            s += at(fv, j - 2) - at(fv, j - 1);
        }
        std::vector<int> d{0};
        for (int t = 0; t <= j; ++t) {
            d.push_back(n + t);
        }
        out.terms.push_back({Rational(factorial(j) * s), pure_diagram(d)});
    }
    return out;
}

inline std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

/// Grid with rows j - i and columns i; zeros print as periods.
inline std::string render_betti(const BettiTable& t, bool suppress_zero_rows = false) {
    if (t.empty()) {
        return "       0\n    0: .\n";
    }
    int max_col = t.length();
    int min_row = t.entries.begin()->first.second - t.entries.begin()->first.first;
    int max_row = min_row;
    for (const auto& [k, v] : t.entries) {
        min_row = std::min(min_row, k.second - k.first);
        max_row = std::max(max_row, k.second - k.first);
    }
    min_row = std::min(min_row, 0);
    std::size_t width = 1;
    for (const auto& [k, v] : t.entries) {
        width = std::max(width, std::to_string(v).size());
    }
    width = std::max(width, std::to_string(max_col).size());
    std::size_t label_width = std::max(std::to_string(max_row).size(), std::to_string(min_row).size()) + 1;
    auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
    std::string out = std::string(label_width + 1, ' ');
    for (int i = 0; i <= max_col; ++i) {
        out += " " + pad(std::to_string(i), width);
    }
    out += "\n";
    for (int r = min_row; r <= max_row; ++r) {
        bool any = false;
        std::string line = pad(std::to_string(r) + ":", label_width + 1);
        for (int i = 0; i <= max_col; ++i) {
            long long v = t.at(i, i + r);
            any = any || v != 0;
            line += " " + pad(v == 0 ? "." : std::to_string(v), width);
        }
        if (suppress_zero_rows && !any) {
            continue;
        }
        out += line + "\n";
    }
    return out;
}

} // namespace ufi

#endif
