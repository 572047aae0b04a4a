#ifndef UFI_COLOURING_HPP
#define UFI_COLOURING_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simplicial.hpp"

namespace ufi {

/// Ordered partition of the vertices into ordered classes. The j-th listed
/// vertex of a class has position j; for a nesting order the first listed
/// vertex has the largest link.
struct Colouring {
    std::vector<std::vector<int>> classes;
    bool allow_empty = false;

    int size() const { return static_cast<int>(classes.size()); }
    int class_size(int i) const { return static_cast<int>(classes[static_cast<std::size_t>(i)].size()); }

    friend bool operator==(const Colouring& a, const Colouring& b) { return a.classes == b.classes; }
};

inline std::string colouring_name(const SimplicialComplex& c, const Colouring& col) {
    std::string out;
    for (std::size_t i = 0; i < col.classes.size(); ++i) {
        if (i > 0) {
            out += " | ";
        }
        out += "{";
        for (std::size_t j = 0; j < col.classes[i].size(); ++j) {
            if (j > 0) {
                out += ",";
            }
            out += c.labels()[static_cast<std::size_t>(col.classes[i][j])];
        }
        out += "}";
    }
    return out;
}

/// Throws unless the classes partition the ground set of `c`.
inline void check_partition(const SimplicialComplex& c, const Colouring& col) {
    std::vector<int> seen(static_cast<std::size_t>(c.ground_size()), 0);
    for (const auto& cls : col.classes) {
        if (cls.empty() && !col.allow_empty) {
            fail_precondition("empty colour class (enable empty classes explicitly)");
        }
        for (int v : cls) {
            if (v < 0 || v >= c.ground_size()) {
                fail_precondition("colour class names a vertex outside the complex");
            }
            if (seen[static_cast<std::size_t>(v)]++ != 0) {
                fail_precondition("vertex '" + c.labels()[static_cast<std::size_t>(v)] + "' coloured twice");
            }
        }
    }
    for (int v = 0; v < c.ground_size(); ++v) {
        if (seen[static_cast<std::size_t>(v)] == 0) {
            fail_precondition("vertex '" + c.labels()[static_cast<std::size_t>(v)] + "' has no colour");
        }
    }
}

inline bool is_independent(const SimplicialComplex& c, const std::vector<int>& cls) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
            if (c.contains(bit(cls[i]) | bit(cls[j]))) {
                return false;
            }
        }
    }
    return true;
}

inline bool is_proper(const SimplicialComplex& c, const Colouring& col) {
    check_partition(c, col);
    return std::all_of(col.classes.begin(), col.classes.end(),
                       [&](const std::vector<int>& cls) { return is_independent(c, cls); });
}

inline bool is_proper(const SimpleGraph& g, const Colouring& col) {
    for (const auto& cls : col.classes) {
        for (std::size_t i = 0; i < cls.size(); ++i) {
            for (std::size_t j = i + 1; j < cls.size(); ++j) {
                if (g.adjacent(cls[i], cls[j])) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Containment preorder on vertices: contains[u][v] iff link(u) ⊇ link(v).
/// For graphs the neighbourhoods play the role of links.
struct LinkPreorder {
    int n = 0;
    std::vector<std::vector<char>> contains;
    std::vector<long long> weight; // face count of the link, or neighbourhood size

    bool geq(int u, int v) const { return contains[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != 0; }
    bool equivalent(int u, int v) const { return geq(u, v) && geq(v, u); }
    bool comparable(int u, int v) const { return geq(u, v) || geq(v, u); }
};

inline bool complex_contains(const SimplicialComplex& big, const SimplicialComplex& small) {
    for (VertexSet f : small.facets()) {
        if (!big.contains(f)) {
            return false;
        }
    }
    return true;
}

inline LinkPreorder link_preorder(const SimplicialComplex& c) {
    LinkPreorder p;
    p.n = c.ground_size();
    std::vector<SimplicialComplex> links;
    VertexSet used = c.vertex_set();
    for (int v = 0; v < p.n; ++v) {
        // an unused ground vertex has the void link
        links.push_back(has(used, v) ? link_of_vertex(c, v) : SimplicialComplex::void_complex(c.labels()));
        p.weight.push_back(links.back().is_void() ? 0 : static_cast<long long>(links.back().faces().size()));
    }
    p.contains.assign(static_cast<std::size_t>(p.n), std::vector<char>(static_cast<std::size_t>(p.n), 0));
    for (int u = 0; u < p.n; ++u) {
        for (int v = 0; v < p.n; ++v) {
            p.contains[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
                complex_contains(links[static_cast<std::size_t>(u)], links[static_cast<std::size_t>(v)]) ? 1 : 0;
        }
    }
    return p;
}

inline LinkPreorder neighbourhood_preorder(const SimpleGraph& g) {
    LinkPreorder p;
    p.n = g.size();
    p.contains.assign(static_cast<std::size_t>(p.n), std::vector<char>(static_cast<std::size_t>(p.n), 0));
    for (int u = 0; u < p.n; ++u) {
        p.weight.push_back(cardinality(g.adjacency[static_cast<std::size_t>(u)]));
        for (int v = 0; v < p.n; ++v) {
            p.contains[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
                subset_of(g.adjacency[static_cast<std::size_t>(v)], g.adjacency[static_cast<std::size_t>(u)]) ? 1 : 0;
        }
    }
    return p;
}

struct NestingOrder {
    bool nested = false;
    std::vector<int> order;                    // largest link first
    std::optional<std::pair<int, int>> witness; // (u, v) with link(u) not inside link(v)
};

/// Sort a class by decreasing link (ties keep input order) and check the chain.
inline NestingOrder nesting_order(const LinkPreorder& p, const std::vector<int>& cls) {
    NestingOrder r;
    r.order = cls;
    std::stable_sort(r.order.begin(), r.order.end(), [&](int a, int b) {
        return p.weight[static_cast<std::size_t>(a)] > p.weight[static_cast<std::size_t>(b)];
    });
    for (std::size_t i = 0; i + 1 < r.order.size(); ++i) {
        if (!p.geq(r.order[i], r.order[i + 1])) {
            r.witness = std::make_pair(r.order[i + 1], r.order[i]);
            return r;
        }
    }
    r.nested = true;
    return r;
}

inline NestingOrder nesting_order(const SimplicialComplex& c, const std::vector<int>& cls) {
    require(is_independent(c, cls), "class is not an independent set");
    return nesting_order(link_preorder(c), cls);
}

inline std::string link_witness(const SimplicialComplex& c, std::pair<int, int> w) {
    return "link(" + c.labels()[static_cast<std::size_t>(w.first)] + ") ⊄ link(" +
           c.labels()[static_cast<std::size_t>(w.second)] + ")";
}

struct NestedCheck {
    bool nested = false;           // every class admits a nesting order
    bool in_nesting_order = false; // the given class orders are nesting orders
    Colouring ordered;             // classes rearranged into nesting order where possible
    std::optional<std::pair<int, int>> witness;
    int witness_class = -1;
};

inline NestedCheck check_nested(const LinkPreorder& p, const Colouring& col) {
    NestedCheck r;
    r.ordered = col;
    r.nested = true;
    r.in_nesting_order = true;
    for (std::size_t i = 0; i < col.classes.size(); ++i) {
        NestingOrder o = nesting_order(p, col.classes[i]);
        if (!o.nested) {
            r.nested = false;
            r.in_nesting_order = false;
            if (!r.witness) {
                r.witness = o.witness;
                r.witness_class = static_cast<int>(i);
            }
            continue;
        }
        r.ordered.classes[i] = o.order;
        const auto& given = col.classes[i];
        for (std::size_t j = 0; j + 1 < given.size(); ++j) {
            if (!p.geq(given[j], given[j + 1])) {
                r.in_nesting_order = false;
                if (!r.witness) {
                    r.witness = std::make_pair(given[j + 1], given[j]);
                    r.witness_class = static_cast<int>(i);
                }
            }
        }
    }
    return r;
}

inline NestedCheck check_nested(const SimplicialComplex& c, const Colouring& col) {
    require(is_proper(c, col), "colouring is not proper");
    return check_nested(link_preorder(c), col);
}

inline bool is_nested(const SimplicialComplex& c, const Colouring& col) { return check_nested(c, col).nested; }

/// Throws a precondition error (with a witness) unless the class orders are nesting orders.
inline void require_nesting_order(const SimplicialComplex& c, const Colouring& col) {
    NestedCheck chk = check_nested(c, col);
    if (!chk.nested) {
        fail_precondition("colouring is not nested", link_witness(c, *chk.witness));
    }
    if (!chk.in_nesting_order) {
        fail_precondition("colour classes are not listed in nesting order (largest link first); reorder as " +
                              colouring_name(c, chk.ordered),
                          link_witness(c, *chk.witness));
    }
}

struct ChainCover {
    int count = 0;
    Colouring witness;
};

namespace detail {

inline bool augment(int a, const std::vector<std::vector<int>>& adj, std::vector<int>& match_right,
                    std::vector<char>& visited) {
    for (int b : adj[static_cast<std::size_t>(a)]) {
        if (visited[static_cast<std::size_t>(b)]) {
            continue;
        }
        visited[static_cast<std::size_t>(b)] = 1;
        if (match_right[static_cast<std::size_t>(b)] < 0 ||
            augment(match_right[static_cast<std::size_t>(b)], adj, match_right, visited)) {
            match_right[static_cast<std::size_t>(b)] = a;
            return true;
        }
    }
    return false;
}

/// Minimum chain cover of the quotient of a preorder restricted to `verts`.
inline ChainCover min_chain_cover(const LinkPreorder& p, const std::vector<int>& verts) {
    // equal-link blocks
    std::vector<std::vector<int>> blocks;
    for (int v : verts) {
        bool placed = false;
        for (auto& b : blocks) {
            if (p.equivalent(b.front(), v)) {
                b.push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed) {
            blocks.push_back({v});
        }
    }
    const int m = static_cast<int>(blocks.size());
    // strict relation a -> b: block a has the strictly larger link
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            if (a != b && p.geq(blocks[static_cast<std::size_t>(a)].front(), blocks[static_cast<std::size_t>(b)].front())) {
                adj[static_cast<std::size_t>(a)].push_back(b);
            }
        }
    }
    std::vector<int> match_right(static_cast<std::size_t>(m), -1);
    int matched = 0;
    for (int a = 0; a < m; ++a) {
        std::vector<char> visited(static_cast<std::size_t>(m), 0);
        if (augment(a, adj, match_right, visited)) {
            ++matched;
        }
    }
    std::vector<int> next(static_cast<std::size_t>(m), -1);
    std::vector<char> has_prev(static_cast<std::size_t>(m), 0);
    for (int b = 0; b < m; ++b) {
        if (match_right[static_cast<std::size_t>(b)] >= 0) {
            next[static_cast<std::size_t>(match_right[static_cast<std::size_t>(b)])] = b;
            has_prev[static_cast<std::size_t>(b)] = 1;
        }
    }
    ChainCover cover;
    cover.count = m - matched;
    for (int start = 0; start < m; ++start) {
        if (has_prev[static_cast<std::size_t>(start)]) {
            continue;
        }
        std::vector<int> cls;
        for (int b = start; b >= 0; b = next[static_cast<std::size_t>(b)]) {
            for (int v : blocks[static_cast<std::size_t>(b)]) {
                cls.push_back(v);
            }
        }
        cover.witness.classes.push_back(cls);
    }
    std::sort(cover.witness.classes.begin(), cover.witness.classes.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
              });
    return cover;
}

} // namespace detail

/// Least number of nested classes: the width of the link-containment order.
inline ChainCover nested_chromatic_number(const SimplicialComplex& c) {
    require(!c.is_void(), "nested chromatic number of the void complex");
    LinkPreorder p = link_preorder(c);
    return detail::min_chain_cover(p, members(c.vertex_set()));
}

inline ChainCover graph_nested_chromatic_number(const SimpleGraph& g) {
    LinkPreorder p = neighbourhood_preorder(g);
    std::vector<int> verts(static_cast<std::size_t>(g.size()));
    std::iota(verts.begin(), verts.end(), 0);
    return detail::min_chain_cover(p, verts);
}

namespace detail {

inline bool colourable(const SimpleGraph& g, const std::vector<int>& order, std::size_t pos, int k,
                       std::vector<int>& colour) {
    if (pos == order.size()) {
        return true;
    }
    int v = order[pos];
    int used_max = -1;
    for (std::size_t i = 0; i < pos; ++i) {
        used_max = std::max(used_max, colour[static_cast<std::size_t>(order[i])]);
    }
    // symmetry breaking: a fresh colour is only tried once
    for (int c = 0; c <= std::min(k - 1, used_max + 1); ++c) {
        bool ok = true;
        for (int u : members(g.adjacency[static_cast<std::size_t>(v)])) {
            if (colour[static_cast<std::size_t>(u)] == c) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        colour[static_cast<std::size_t>(v)] = c;
        if (colourable(g, order, pos + 1, k, colour)) {
            return true;
        }
        colour[static_cast<std::size_t>(v)] = -1;
    }
    return false;
}

} // namespace detail

inline int chromatic_number(const SimpleGraph& g, const Limits& limits = {}) {
    if (g.size() > limits.max_chromatic_vertices) {
        fail_guard("chromatic number search limited to " + std::to_string(limits.max_chromatic_vertices) + " vertices");
    }
    if (g.size() == 0) {
        return 0;
    }
    // clique lower bound
    std::vector<VertexSet> cliques;
    VertexSet all = bit(g.size()) - 1;
    detail::maximal_cliques(g, 0, all, 0, cliques);
    int lower = 1;
    for (VertexSet q : cliques) {
        lower = std::max(lower, cardinality(q));
    }
    std::vector<int> order(static_cast<std::size_t>(g.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return cardinality(g.adjacency[static_cast<std::size_t>(a)]) > cardinality(g.adjacency[static_cast<std::size_t>(b)]);
    });
    for (int k = lower; k <= g.size(); ++k) {
        std::vector<int> colour(static_cast<std::size_t>(g.size()), -1);
        if (detail::colourable(g, order, 0, k, colour)) {
            return k;
        }
    }
    return g.size();
}

inline int chromatic_number(const SimplicialComplex& c, const Limits& limits = {}) {
    require(!c.is_void(), "chromatic number of the void complex");
    return chromatic_number(underlying_graph(c), limits);
}

inline Colouring singleton_colouring(const SimplicialComplex& c) {
    Colouring col;
    for (int v = 0; v < c.ground_size(); ++v) {
        col.classes.push_back({v});
    }
    return col;
}

/// Faces σ ∪ τ with σ ∈ Δ and τ a set of class markers j' whose classes miss σ.
inline SimplicialComplex bvt_complex(const SimplicialComplex& c, const Colouring& col) {
    require(is_proper(c, col), "colouring is not proper");
    const int n = c.ground_size();
    const int k = col.size();
    if (n + k > max_ground) {
        fail_guard("too many vertices for the marker construction");
    }
    std::vector<std::string> labels = c.labels();
    for (int j = 1; j <= k; ++j) {
        labels.push_back(std::to_string(j) + "'");
    }
    std::vector<VertexSet> class_mask;
    for (const auto& cls : col.classes) {
        class_mask.push_back(from_members(cls));
    }
    std::vector<VertexSet> facets;
    for (VertexSet s : c.faces()) {
        VertexSet f = s;
        for (int j = 0; j < k; ++j) {
            if ((s & class_mask[static_cast<std::size_t>(j)]) == 0) {
                f |= bit(n + j);
            }
        }
        facets.push_back(f);
    }
    return SimplicialComplex::from_masks(labels, facets);
}

} // namespace ufi

#endif
