#ifndef UFI_TEST_FIXTURES_HPP
#define UFI_TEST_FIXTURES_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ufi/ufi_all.hpp"

namespace fixtures {

using namespace ufi;

inline int idx(const SimplicialComplex& c, const std::string& label) {
    const auto& l = c.labels();
    return static_cast<int>(std::find(l.begin(), l.end(), label) - l.begin());
}

inline std::vector<std::vector<std::string>> split(const std::vector<std::string>& words) {
    std::vector<std::vector<std::string>> out;
    for (const auto& w : words) {
        std::vector<std::string> t;
        for (char ch : w) {
            t.emplace_back(1, ch);
        }
        out.push_back(t);
    }
    return out;
}

inline SimplicialComplex complex_of(const std::string& vertices, const std::vector<std::string>& facets) {
    std::vector<std::string> labels;
    for (char ch : vertices) {
        labels.emplace_back(1, ch);
    }
    return SimplicialComplex::from_facets(labels, split(facets));
}

inline Colouring colouring_of(const SimplicialComplex& c, const std::vector<std::string>& classes) {
    Colouring col;
    for (const auto& w : classes) {
        std::vector<int> cls;
        for (char ch : w) {
            cls.push_back(idx(c, std::string(1, ch)));
        }
        col.classes.push_back(cls);
    }
    return col;
}

/// Δ = <abc, bcd, ce, de, df>
inline SimplicialComplex running() { return complex_of("abcdef", {"abc", "bcd", "ce", "de", "df"}); }
inline Colouring running_c(const SimplicialComplex& d) { return colouring_of(d, {"da", "be", "cf"}); }
/// four-class colouring used with the generator listing
inline Colouring running_d_generators(const SimplicialComplex& d) { return colouring_of(d, {"af", "be", "c", "d"}); }
/// four-class colouring used with the associated primes
inline Colouring running_d_primes(const SimplicialComplex& d) { return colouring_of(d, {"da", "be", "c", "f"}); }

/// Γ = <abc, bd, cde>
inline SimplicialComplex gamma() { return complex_of("abcde", {"abc", "bd", "cde"}); }

inline std::vector<std::string> generator_list(const MonomialIdeal& I) { return I.generator_strings(); }

// ---------------------------------------------------------------- random inputs

inline SimplicialComplex random_complex(std::mt19937& rng, int n, int max_facets = 5) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        labels.emplace_back(1, static_cast<char>('a' + i));
    }
    std::uniform_int_distribution<int> count(1, max_facets);
    std::uniform_int_distribution<unsigned> mask(1, (1u << n) - 1);
    std::uniform_int_distribution<int> size(1, std::min(n, 4));
    std::vector<VertexSet> facets;
    int m = count(rng);
    for (int i = 0; i < m; ++i) {
        // random subset of bounded size
        std::vector<int> verts(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            verts[static_cast<std::size_t>(v)] = v;
        }
        std::shuffle(verts.begin(), verts.end(), rng);
        int s = size(rng);
        VertexSet f = 0;
        for (int j = 0; j < s; ++j) {
            f |= bit(verts[static_cast<std::size_t>(j)]);
        }
        facets.push_back(f);
    }
    VertexSet used = 0;
    for (VertexSet f : facets) {
        used |= f;
    }
    for (int v = 0; v < n; ++v) {
        if (!has(used, v)) {
            facets.push_back(bit(v));
        }
    }
    return SimplicialComplex::from_masks(labels, facets);
}

/// Random proper colouring with random class order inside each class.
inline Colouring random_proper_colouring(std::mt19937& rng, const SimplicialComplex& c) {
    std::vector<int> verts = members(c.ground_mask());
    std::shuffle(verts.begin(), verts.end(), rng);
    Colouring col;
    for (int v : verts) {
        std::vector<std::size_t> order(col.classes.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        std::shuffle(order.begin(), order.end(), rng);
        bool placed = false;
        for (std::size_t i : order) {
            bool ok = std::none_of(col.classes[i].begin(), col.classes[i].end(),
                                   [&](int u) { return c.contains(bit(u) | bit(v)); });
            if (ok && (rng() % 3 != 0)) {
                col.classes[i].push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed) {
            col.classes.push_back({v});
        }
    }
    return col;
}

/// Random nested colouring, classes listed in nesting order.
inline Colouring random_nested_colouring(std::mt19937& rng, const SimplicialComplex& c) {
    LinkPreorder p = link_preorder(c);
    std::vector<int> verts = members(c.ground_mask());
    std::shuffle(verts.begin(), verts.end(), rng);
    Colouring col;
    for (int v : verts) {
        bool placed = false;
        for (auto& cls : col.classes) {
            bool chain = std::all_of(cls.begin(), cls.end(), [&](int u) { return p.comparable(u, v); });
            if (chain && (rng() % 4 != 0)) {
                cls.push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed) {
            col.classes.push_back({v});
        }
    }
    std::shuffle(col.classes.begin(), col.classes.end(), rng);
    return check_nested(c, col).ordered;
}

} // namespace fixtures

#endif
