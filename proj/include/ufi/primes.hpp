#ifndef UFI_PRIMES_HPP
#define UFI_PRIMES_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "colouring.hpp"
#include "decomposition.hpp"
#include "poset.hpp"
#include "simplicial.hpp"
#include "ufi.hpp"

namespace ufi {

struct ClassComponent {
    int colour; // 0-based class i
    int j;      // (x_i^j, y_i^{#C_i - j + 1})
};

struct UfiDecomposition {
    std::vector<int> sizes;
    std::vector<ClassComponent> class_components;
    std::vector<IndexVector> minima; // min N, sorted descending
    std::vector<IrreducibleComponent> nonface_components;

    /// All components as exponent vectors over x1..xk, y1..yk.
    std::vector<IrreducibleComponent> components() const {
        const std::size_t k = sizes.size();
        std::vector<IrreducibleComponent> out;
        for (const auto& cc : class_components) {
            IrreducibleComponent c{std::vector<int>(2 * k, 0)};
            c.b[static_cast<std::size_t>(cc.colour)] = cc.j;
            c.b[k + static_cast<std::size_t>(cc.colour)] = sizes[static_cast<std::size_t>(cc.colour)] - cc.j + 1;
            out.push_back(c);
        }
        out.insert(out.end(), nonface_components.begin(), nonface_components.end());
        return out;
    }
};

inline IrreducibleComponent nonface_component(const IndexVector& e, const std::vector<int>& sizes) {
    const std::size_t k = sizes.size();
    IrreducibleComponent c{std::vector<int>(2 * k, 0)};
    for (std::size_t j = 0; j < k; ++j) {
        if (e[j] > 0) {
            c.b[j] = sizes[j] - e[j] + 1;
        }
    }
    return c;
}

/// Closed-form decomposition; the intersection is recomputed and compared
/// with the ideal before returning.
inline UfiDecomposition ufi_irreducible_decomposition(const SimplicialComplex& c, const Colouring& col,
                                                      const Limits& limits = {}, bool verify = true) {
    require_ufi_input(c, col, limits);
    require_nesting_order(c, col);
    UfiDecomposition d;
    d.sizes = class_sizes(col);
    for (int i = 0; i < col.size(); ++i) {
        for (int j = 1; j <= d.sizes[static_cast<std::size_t>(i)]; ++j) {
            d.class_components.push_back({i, j});
        }
    }
    d.minima = minimal_elements(minimal_nonface_poset(c, col));
    for (const auto& e : d.minima) {
        d.nonface_components.push_back(nonface_component(e, d.sizes));
    }
    if (verify) {
        auto vars = paired_variables(col.size());
        MonomialIdeal I = uniform_face_ideal(c, col, limits);
        if (!(intersect_components(d.components(), vars) == I)) {
            fail_precondition("internal check failed: closed-form components do not intersect to the ideal");
        }
    }
    return d;
}

/// {(x_i, y_i)} together with the x-supports of the minimal non-face vectors.
inline PrimeSet ufi_associated_primes(const SimplicialComplex& c, const Colouring& col, const Limits& limits = {}) {
    require_ufi_input(c, col, limits);
    require_nesting_order(c, col);
    const int k = col.size();
    PrimeSet out;
    for (int i = 0; i < k; ++i) {
        if (col.class_size(i) > 0) {
            out.insert({i, k + i});
        }
    }
    for (const auto& e : minimal_elements(minimal_nonface_poset(c, col))) {
        std::vector<int> p;
        for (int j = 0; j < k; ++j) {
            if (e[static_cast<std::size_t>(j)] > 0) {
                p.push_back(j);
            }
        }
        out.insert(p);
    }
    return out;
}

/// Minimal primes all share one height.
inline bool is_unmixed(const PrimeSet& primes) {
    PrimeSet mins = minimal_primes(primes);
    if (mins.empty()) {
        return true;
    }
    std::size_t h = mins.begin()->size();
    return std::all_of(mins.begin(), mins.end(), [h](const std::vector<int>& p) { return p.size() == h; });
}

inline bool is_unmixed(const SimplicialComplex& c, const Colouring& col, const Limits& limits = {}) {
    return is_unmixed(ufi_associated_primes(c, col, limits));
}

struct PersistenceStep {
    int power;
    PrimeSet primes;
    bool contains_previous; // Ass at power-1 ⊆ Ass at power; true for power 1
};

inline std::vector<PersistenceStep> persistence_report(const SimplicialComplex& c, const Colouring& col, int max_power,
                                                       const Limits& limits = {}) {
    require_ufi_input(c, col, limits);
    require_nesting_order(c, col);
    require(max_power >= 1, "max power must be at least 1");
    if (max_power > limits.max_power) {
        fail_guard("powers limited to " + std::to_string(limits.max_power));
    }
    Limits relaxed = limits;
    relaxed.max_vertices = max_ground;
    relaxed.max_faces = std::max<std::size_t>(limits.max_faces, std::size_t{1} << 16);
    std::vector<PersistenceStep> out;
    for (int t = 1; t <= max_power; ++t) {
        UfiPair p = power_as_ufi(c, col, t, limits);
        PersistenceStep s{t, ufi_associated_primes(p.complex, p.colouring, relaxed), true};
        if (!out.empty()) {
            const auto& prev = out.back().primes;
            s.contains_previous = std::includes(s.primes.begin(), s.primes.end(), prev.begin(), prev.end());
        }
        out.push_back(std::move(s));
    }
    return out;
}

inline std::string prime_set_str(const PrimeSet& ps, const std::vector<std::string>& vars) {
    std::string out = "{";
    bool first = true;
    for (const auto& p : ps) {
        out += (first ? "" : ", ") + prime_name(p, vars);
        first = false;
    }
    return out + "}";
}

} // namespace ufi

#endif
