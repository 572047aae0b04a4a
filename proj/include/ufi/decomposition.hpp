#ifndef UFI_DECOMPOSITION_HPP
#define UFI_DECOMPOSITION_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "monomial.hpp"

namespace ufi {

/// The irreducible ideal (x_i^{b_i} : b_i >= 1).
struct IrreducibleComponent {
    std::vector<int> b;

    std::vector<int> support() const {
        std::vector<int> s;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] > 0) {
                s.push_back(static_cast<int>(i));
            }
        }
        return s;
    }

    MonomialIdeal ideal(const std::vector<std::string>& vars) const {
        std::vector<Monomial> gens;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] > 0) {
                Monomial m(b.size());
                m[i] = b[i];
                gens.push_back(m);
            }
        }
        return MonomialIdeal(vars, gens);
    }

    /// this ⊆ other
    bool inside(const IrreducibleComponent& other) const {
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] > 0 && (other.b[i] == 0 || other.b[i] > b[i])) {
                return false;
            }
        }
        return true;
    }

    std::string str(const std::vector<std::string>& vars) const { return ideal(vars).str(); }

    friend auto operator<=>(const IrreducibleComponent&, const IrreducibleComponent&) = default;
    friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
};

/// Prime monomial ideals as sorted variable-index lists.
using PrimeSet = std::set<std::vector<int>>;

inline std::string prime_name(const std::vector<int>& p, const std::vector<std::string>& vars) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += vars[static_cast<std::size_t>(p[i])];
    }
    return out + ")";
}

/// Drop components that contain another component; sort canonically.
inline std::vector<IrreducibleComponent> irredundant(std::vector<IrreducibleComponent> comps) {
    std::sort(comps.begin(), comps.end());
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
    std::vector<IrreducibleComponent> out;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < comps.size() && !redundant; ++j) {
            if (i != j && comps[j].inside(comps[i])) {
                redundant = true;
            }
        }
        if (!redundant) {
            out.push_back(comps[i]);
        }
    }
    return out;
}

/// Irredundant irreducible decomposition of a monomial ideal. Generators are
/// added one at a time; for an irreducible Q not containing g = u*v with u, v
/// coprime, Q + (g) = (Q + (u)) ∩ (Q + (v)), split down to pure powers.
inline std::vector<IrreducibleComponent> irreducible_decomposition_generic(const MonomialIdeal& I,
                                                                            const Limits& limits = {}) {
    require(!I.is_zero(), "the zero ideal has no irreducible decomposition");
    const std::size_t n = I.nvars();
    if (I.is_unit()) {
        return {};
    }
    // start from the unit ideal, represented by a single "empty" marker
    std::vector<IrreducibleComponent> comps;
    bool unit = true;
    for (const auto& g : I.generators()) {
        std::vector<IrreducibleComponent> next;
        if (unit) {
            for (std::size_t v = 0; v < n; ++v) {
                if (g[v] > 0) {
                    IrreducibleComponent c{std::vector<int>(n, 0)};
                    c.b[v] = g[v];
                    next.push_back(c);
                }
            }
            unit = false;
        } else {
            for (const auto& q : comps) {
                bool member = false;
                for (std::size_t v = 0; v < n && !member; ++v) {
                    if (q.b[v] > 0 && g[v] >= q.b[v]) {
                        member = true;
                    }
                }
                if (member) {
                    next.push_back(q);
                    continue;
                }
                for (std::size_t v = 0; v < n; ++v) {
                    if (g[v] == 0) {
                        continue;
                    }
                    IrreducibleComponent c = q;
                    c.b[v] = (q.b[v] == 0) ? g[v] : std::min(q.b[v], g[v]);
                    next.push_back(c);
                }
            }
        }
        comps = irredundant(std::move(next));
        if (comps.size() > limits.max_decomposition_nodes) {
            fail_guard("irreducible decomposition exceeds the component limit");
        }
    }
    return comps;
}

inline MonomialIdeal intersect_components(const std::vector<IrreducibleComponent>& comps,
                                          const std::vector<std::string>& vars) {
    MonomialIdeal acc = MonomialIdeal::unit(vars);
    for (const auto& c : comps) {
        acc = intersect(acc, c.ideal(vars));
    }
    return acc;
}

inline PrimeSet supports(const std::vector<IrreducibleComponent>& comps) {
    PrimeSet out;
    for (const auto& c : comps) {
        out.insert(c.support());
    }
    return out;
}

inline PrimeSet associated_primes_generic(const MonomialIdeal& I, const Limits& limits = {}) {
    return supports(irreducible_decomposition_generic(I, limits));
}

/// Inclusion-minimal members of a prime set.
inline PrimeSet minimal_primes(const PrimeSet& primes) {
    PrimeSet out;
    for (const auto& p : primes) {
        bool minimal = true;
        for (const auto& q : primes) {
            if (q != p && std::includes(p.begin(), p.end(), q.begin(), q.end())) {
                minimal = false;
                break;
            }
        }
        if (minimal) {
            out.insert(p);
        }
    }
    return out;
}

} // namespace ufi

#endif
