#ifndef UFI_UFI_HPP
#define UFI_UFI_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "colouring.hpp"
#include "exchange.hpp"
#include "monomial.hpp"
#include "simplicial.hpp"

namespace ufi {

using IndexVector = std::vector<int>;

/// Position (1-based) of the face's vertex in each class, 0 when the class is missed.
inline IndexVector index_vector(VertexSet face, const Colouring& col) {
    IndexVector e(col.classes.size(), 0);
    for (std::size_t i = 0; i < col.classes.size(); ++i) {
        const auto& cls = col.classes[i];
        for (std::size_t j = 0; j < cls.size(); ++j) {
            if (has(face, cls[j])) {
                require(e[i] == 0, "face meets a colour class twice");
                e[i] = static_cast<int>(j) + 1;
            }
        }
    }
    return e;
}

inline std::vector<int> class_sizes(const Colouring& col) {
    std::vector<int> s;
    for (const auto& cls : col.classes) {
        s.push_back(static_cast<int>(cls.size()));
    }
    return s;
}

/// prod x_i^{#C_i - e_i} y_i^{e_i} over variables x1..xk, y1..yk.
inline Monomial monomial_of_index(const IndexVector& e, const std::vector<int>& sizes) {
    const std::size_t k = sizes.size();
    Monomial m(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        m[i] = sizes[i] - e[i];
        m[k + i] = e[i];
    }
    return m;
}

inline Monomial uniform_monomial(VertexSet face, const Colouring& col) {
    return monomial_of_index(index_vector(face, col), class_sizes(col));
}

inline IndexVector index_of_monomial(const Monomial& m) {
    const std::size_t k = m.size() / 2;
    return IndexVector(m.exp.begin() + static_cast<std::ptrdiff_t>(k), m.exp.end());
}

inline void require_ufi_input(const SimplicialComplex& c, const Colouring& col, const Limits& limits) {
    require(!c.is_void(), "the void complex has no uniform face ideal");
    if (c.ground_size() > limits.max_vertices) {
        fail_guard("limited to " + std::to_string(limits.max_vertices) + " vertices");
    }
    require(is_proper(c, col), "colouring is not proper");
    if (c.faces().size() > limits.max_faces) {
        fail_guard("limited to " + std::to_string(limits.max_faces) + " faces");
    }
}

inline MonomialIdeal uniform_face_ideal(const SimplicialComplex& c, const Colouring& col, const Limits& limits = {}) {
    require_ufi_input(c, col, limits);
    std::vector<Monomial> gens;
    for (VertexSet f : c.faces()) {
        gens.push_back(uniform_monomial(f, col));
    }
    return MonomialIdeal(paired_variables(col.size()), std::move(gens));
}

struct TaggedGenerator {
    VertexSet face;
    Monomial monomial;
};

/// Generators listed face by face in canonical face order.
inline std::vector<TaggedGenerator> tagged_generators(const SimplicialComplex& c, const Colouring& col,
                                                      const Limits& limits = {}) {
    require_ufi_input(c, col, limits);
    std::vector<TaggedGenerator> out;
    for (VertexSet f : c.faces()) {
        out.push_back({f, uniform_monomial(f, col)});
    }
    return out;
}

/// Relations x_i < y_i only.
inline BorelPoset q_k_poset(int k) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < k; ++i) {
        rel.emplace_back(i, k + i);
    }
    return BorelPoset(2 * k, rel);
}

/// Stanley–Reisner ideal over variables named by `vars` (one per ground vertex).
inline MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c, const std::vector<std::string>& vars) {
    require(static_cast<int>(vars.size()) == c.ground_size(), "one variable per vertex expected");
    std::vector<Monomial> gens;
    for (VertexSet nf : minimal_nonfaces(c)) {
        Monomial m(vars.size());
        for (int v : members(nf)) {
            m[static_cast<std::size_t>(v)] = 1;
        }
        gens.push_back(m);
    }
    return MonomialIdeal(vars, std::move(gens));
}

struct UfiPair {
    SimplicialComplex complex;
    Colouring colouring;
};

/// Complex and colouring whose faces are exactly the given index vectors over
/// classes of the given sizes. Vertices are named a, b, ... in class order when
/// there are at most 26 of them.
inline UfiPair complex_from_index_vectors(const std::set<IndexVector>& vectors, const std::vector<int>& sizes) {
    int total = 0;
    for (int s : sizes) {
        total += s;
    }
    if (total > max_ground) {
        fail_guard("product has more than 64 vertices");
    }
    std::vector<std::string> labels;
    Colouring col;
    col.allow_empty = std::any_of(sizes.begin(), sizes.end(), [](int s) { return s == 0; });
    int next = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        std::vector<int> cls;
        for (int j = 1; j <= sizes[i]; ++j) {
            if (total <= 26) {
                labels.push_back(std::string(1, static_cast<char>('a' + next)));
            } else {
                labels.push_back("v" + std::to_string(i + 1) + "_" + std::to_string(j));
            }
            cls.push_back(next++);
        }
        col.classes.push_back(cls);
    }
    std::vector<VertexSet> faces;
    for (const auto& e : vectors) {
        VertexSet f = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) {
                f |= bit(col.classes[i][static_cast<std::size_t>(e[i] - 1)]);
            }
        }
        faces.push_back(f);
    }
    return {SimplicialComplex::from_masks(labels, faces), col};
}

/// (Σ, ℰ) with I(Σ, ℰ) = I(Δ, 𝒞) · I(Γ, 𝒟); the result is re-checked against
/// the product computed in the monomial kernel.
inline UfiPair product_as_ufi(const SimplicialComplex& d1, const Colouring& c1, const SimplicialComplex& d2,
                              const Colouring& c2, const Limits& limits = {}) {
    if (c1.size() != c2.size()) {
        fail_precondition("colourings have different numbers of classes (" + std::to_string(c1.size()) + " vs " +
                          std::to_string(c2.size()) + ")");
    }
    require_ufi_input(d1, c1, limits);
    require_ufi_input(d2, c2, limits);
    std::vector<int> sizes;
    for (int i = 0; i < c1.size(); ++i) {
        sizes.push_back(c1.class_size(i) + c2.class_size(i));
    }
    std::set<IndexVector> sums;
    for (VertexSet f : d1.faces()) {
        IndexVector e = index_vector(f, c1);
        for (VertexSet g : d2.faces()) {
            IndexVector h = index_vector(g, c2);
            for (std::size_t i = 0; i < e.size(); ++i) {
                h[i] += e[i];
            }
            sums.insert(h);
        }
    }
    UfiPair out = complex_from_index_vectors(sums, sizes);
    MonomialIdeal expected = multiply(uniform_face_ideal(d1, c1, limits), uniform_face_ideal(d2, c2, limits));
    Limits relaxed = limits;
    relaxed.max_vertices = max_ground;
    relaxed.max_faces = std::max<std::size_t>(limits.max_faces, sums.size());
    if (!(uniform_face_ideal(out.complex, out.colouring, relaxed) == expected)) {
        fail_precondition("internal check failed: product complex does not reproduce the product ideal");
    }
    return out;
}

/// (Γ_t, 𝒟_t) with I(Γ_t, 𝒟_t) = I(Δ, 𝒞)^t.
inline UfiPair power_as_ufi(const SimplicialComplex& c, const Colouring& col, int t, const Limits& limits = {}) {
    require(t >= 1, "power must be at least 1");
    if (t > limits.max_power) {
        fail_guard("powers limited to " + std::to_string(limits.max_power));
    }
    UfiPair acc{c, col};
    Limits relaxed = limits;
    relaxed.max_vertices = max_ground;
    relaxed.max_faces = std::max<std::size_t>(limits.max_faces, std::size_t{1} << 16);
    for (int i = 2; i <= t; ++i) {
        acc = product_as_ufi(acc.complex, acc.colouring, c, col, relaxed);
    }
    return acc;
}

} // namespace ufi

#endif
