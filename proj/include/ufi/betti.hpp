#ifndef UFI_BETTI_HPP
#define UFI_BETTI_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "homology.hpp"
#include "monomial.hpp"
#include "simplicial.hpp"

namespace ufi {

/// Graded Betti numbers beta_{i,j}, keyed by (homological index i, degree j).
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;

    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    void add(int i, int j, long long v) {
        if (v == 0) {
            return;
        }
        auto& slot = entries[{i, j}];
        slot += v;
        if (slot == 0) {
            entries.erase({i, j});
        }
    }

    bool empty() const { return entries.empty(); }

    /// Largest homological index with a nonzero entry (-1 if none).
    int length() const {
        int m = -1;
        for (const auto& [k, v] : entries) {
            m = std::max(m, k.first);
        }
        return m;
    }

    /// max over nonzero entries of j - i (-1 if none).
    int regularity() const {
        int r = -1;
        bool any = false;
        for (const auto& [k, v] : entries) {
            r = any ? std::max(r, k.second - k.first) : k.second - k.first;
            any = true;
        }
        return r;
    }

    long long total(int i) const {
        long long t = 0;
        for (const auto& [k, v] : entries) {
            if (k.first == i) {
                t += v;
            }
        }
        return t;
    }

    /// Table of R/I from the table of I: prepend beta_{0,0} = 1 and shift columns.
    BettiTable quotient_of_ideal() const {
        BettiTable q;
        q.add(0, 0, 1);
        for (const auto& [k, v] : entries) {
            q.add(k.first + 1, k.second, v);
        }
        return q;
    }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

struct MultigradedBettiTable {
    std::map<std::pair<int, Monomial>, long long> entries;

    long long at(int i, const Monomial& a) const {
        auto it = entries.find({i, a});
        return it == entries.end() ? 0 : it->second;
    }

    BettiTable graded() const {
        BettiTable t;
        for (const auto& [k, v] : entries) {
            t.add(k.first, k.second.degree(), v);
        }
        return t;
    }

    friend bool operator==(const MultigradedBettiTable&, const MultigradedBettiTable&) = default;
};

inline void check_oracle_size(const MonomialIdeal& I, const Limits& limits) {
    if (I.size() > limits.max_generators) {
        fail_guard("oracle limited to " + std::to_string(limits.max_generators) + " generators (ideal has " +
                   std::to_string(I.size()) + ")");
    }
    if (I.nvars() > limits.max_variables || I.nvars() > static_cast<std::size_t>(max_ground)) {
        fail_guard("oracle limited to " + std::to_string(limits.max_variables) + " variables");
    }
}

/// lcms of nonempty sets of generators; `max_subset` bounds the set size (0 = no bound).
inline std::vector<Monomial> lcm_lattice(const MonomialIdeal& I, const Limits& limits = {}, int max_subset = 0) {
    std::set<Monomial> all(I.generators().begin(), I.generators().end());
    std::vector<Monomial> frontier(all.begin(), all.end());
    for (int level = 2; !frontier.empty() && (max_subset == 0 || level <= max_subset); ++level) {
        std::vector<Monomial> next;
        for (const auto& a : frontier) {
            for (const auto& g : I.generators()) {
                Monomial l = lcm(a, g);
                if (all.insert(l).second) {
                    next.push_back(l);
                    if (all.size() > limits.max_lattice) {
                        fail_guard("lcm lattice exceeds " + std::to_string(limits.max_lattice) + " elements");
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return {all.begin(), all.end()};
}

namespace detail {

inline VertexSet support(const Monomial& m) {
    VertexSet s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] > 0) {
            s |= bit(static_cast<int>(i));
        }
    }
    return s;
}

/// Facets of the upper Koszul complex of I at degree a: for each generator
/// g | a, the variables v of supp(a) with g_v <= a_v - 1.
inline std::vector<VertexSet> koszul_facets(const MonomialIdeal& I, const Monomial& a) {
    std::vector<VertexSet> facets;
    for (const auto& g : I.generators()) {
        if (!g.divides(a)) {
            continue;
        }
        VertexSet s = 0;
        for (std::size_t v = 0; v < a.size(); ++v) {
            if (a[v] > 0 && g[v] <= a[v] - 1) {
                s |= bit(static_cast<int>(v));
            }
        }
        facets.push_back(s);
    }
    return maximal_sets(facets);
}

inline std::vector<long long> koszul_homology(const std::vector<VertexSet>& facets, VertexSet supp, int top_dim) {
    std::vector<long long> zero(static_cast<std::size_t>(top_dim + 2), 0);
    if (facets.empty()) {
        return zero;
    }
    VertexSet common = facets.front();
    for (VertexSet f : facets) {
        if (f == supp && supp != 0) {
            return zero; // full simplex
        }
        common &= f;
    }
    if (common != 0) {
        return zero; // cone
    }
    if (top_dim <= 0) {
        // only H_{-1} and H_0 are needed: count components
        VertexSet verts = 0;
        for (VertexSet f : facets) {
            verts |= f;
        }
        if (verts == 0) {
            zero[0] = 1;
            return zero;
        }
        std::vector<VertexSet> comps;
        for (VertexSet f : facets) {
            if (f == 0) {
                continue;
            }
            VertexSet merged = f;
            std::vector<VertexSet> rest;
            for (VertexSet c : comps) {
                if ((c & merged) != 0) {
                    merged |= c;
                } else {
                    rest.push_back(c);
                }
            }
            rest.push_back(merged);
            comps = std::move(rest);
        }
        if (top_dim == 0) {
            zero[1] = static_cast<long long>(comps.size()) - 1;
        }
        return zero;
    }
    std::set<VertexSet> faces;
    for (VertexSet f : facets) {
        for_each_subset(f, [&](VertexSet s) { faces.insert(s); });
    }
    return reduced_homology({faces.begin(), faces.end()}, top_dim);
}

} // namespace detail

/// beta_{i,a}(I) = dim H~_{i-1}(K^a(I)) over Q, for a in the lcm lattice.
/// `max_index` < 0 computes every homological index.
inline MultigradedBettiTable betti_oracle(const MonomialIdeal& I, const Limits& limits = {}, int max_index = -1) {
    check_oracle_size(I, limits);
    MultigradedBettiTable out;
    if (I.is_zero()) {
        return out;
    }
    if (I.is_unit()) {
        out.entries[{0, I.generators().front()}] = 1;
        return out;
    }
    // beta_i lives on lcms of at most i+1 generators
    int subset_bound = max_index < 0 ? 0 : max_index + 1;
    for (const auto& a : lcm_lattice(I, limits, subset_bound)) {
        VertexSet supp = detail::support(a);
        int top = max_index < 0 ? cardinality(supp) - 1 : max_index - 1;
        auto h = detail::koszul_homology(detail::koszul_facets(I, a), supp, top);
        for (std::size_t d = 0; d < h.size(); ++d) {
            if (h[d] != 0) {
                out.entries[{static_cast<int>(d), a}] = h[d];
            }
        }
    }
    return out;
}

/// Dense integer polynomial in t, coefficient of t^i at index i.
struct Polynomial {
    std::vector<long long> coeff;

    Polynomial() = default;
    explicit Polynomial(std::vector<long long> c) : coeff(std::move(c)) { trim(); }

    void trim() {
        while (!coeff.empty() && coeff.back() == 0) {
            coeff.pop_back();
        }
    }

    bool is_zero() const { return coeff.empty(); }
    int degree() const { return static_cast<int>(coeff.size()) - 1; }

    long long at(std::size_t i) const { return i < coeff.size() ? coeff[i] : 0; }

    void add_term(std::size_t deg, long long c) {
        if (coeff.size() <= deg) {
            coeff.resize(deg + 1, 0);
        }
        coeff[deg] += c;
        trim();
    }

    long long value_at_one() const { return std::accumulate(coeff.begin(), coeff.end(), 0LL); }

    /// Exact division by (1 - t); requires value_at_one() == 0.
    Polynomial divide_one_minus_t() const {
        require(value_at_one() == 0, "polynomial not divisible by (1 - t)");
        // p = (1 - t) q  =>  q_i = sum_{j <= i} p_j
        std::vector<long long> q;
        long long acc = 0;
        for (std::size_t i = 0; i + 1 < coeff.size(); ++i) {
            acc += coeff[i];
            q.push_back(acc);
        }
        return Polynomial(q);
    }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) {
            return {};
        }
        std::vector<long long> r(coeff.size() + o.coeff.size() - 1, 0);
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            for (std::size_t j = 0; j < o.coeff.size(); ++j) {
                r[i + j] += coeff[i] * o.coeff[j];
            }
        }
        return Polynomial(r);
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<long long> r(std::max(coeff.size(), o.coeff.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = at(i) + o.at(i);
        }
        return Polynomial(r);
    }

    Polynomial operator-(const Polynomial& o) const {
        std::vector<long long> r(std::max(coeff.size(), o.coeff.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = at(i) - o.at(i);
        }
        return Polynomial(r);
    }

    std::string str() const {
        if (is_zero()) {
            return "0";
        }
        std::string out;
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            long long c = coeff[i];
            if (c == 0) {
                continue;
            }
            long long mag = c < 0 ? -c : c;
            if (out.empty()) {
                out += c < 0 ? "-" : "";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (i == 0 || mag != 1) {
                out += std::to_string(mag);
            }
            if (i >= 1) {
                out += "t";
            }
            if (i >= 2) {
                out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Multigraded numerator of the Hilbert series of R/I: sum over generator sets S
/// of (-1)^|S| x^{lcm S}, with equal lcms merged as they appear.
inline std::map<Monomial, long long> multigraded_hilbert_numerator(const MonomialIdeal& I, const Limits& limits = {}) {
    std::map<Monomial, long long> terms;
    terms[Monomial(I.nvars())] = 1;
    for (const auto& g : I.generators()) {
        std::map<Monomial, long long> next = terms;
        for (const auto& [m, c] : terms) {
            auto& slot = next[lcm(m, g)];
            slot -= c;
        }
        terms.clear();
        for (auto& [m, c] : next) {
            if (c != 0) {
                terms.emplace(m, c);
            }
        }
        if (terms.size() > limits.max_lattice) {
            fail_guard("Hilbert numerator expansion exceeds " + std::to_string(limits.max_lattice) + " terms");
        }
    }
    return terms;
}

/// Numerator of the Hilbert series of R/I over (1 - t)^{#variables}.
inline Polynomial hilbert_numerator(const MonomialIdeal& I, const Limits& limits = {}) {
    Polynomial p;
    for (const auto& [m, c] : multigraded_hilbert_numerator(I, limits)) {
        p.add_term(static_cast<std::size_t>(m.degree()), c);
    }
    return p;
}

/// Alternating sum of the table of R/I built from the table of I.
inline Polynomial euler_polynomial_of_quotient(const BettiTable& ideal_table) {
    Polynomial p(std::vector<long long>{1});
    for (const auto& [k, v] : ideal_table.entries) {
        long long sign = (k.first % 2 == 0) ? -1 : 1;
        p.add_term(static_cast<std::size_t>(k.second), sign * v);
    }
    return p;
}

} // namespace ufi

#endif
