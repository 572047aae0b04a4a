#ifndef UFI_SIMPLICIAL_HPP
#define UFI_SIMPLICIAL_HPP

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "bits.hpp"
#include "error.hpp"

namespace ufi {

/// Keep only inclusion-maximal sets, canonically sorted.
inline std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) { return cardinality(a) > cardinality(b); });
    std::vector<VertexSet> kept;
    for (VertexSet s : sets) {
        bool covered = false;
        for (VertexSet k : kept) {
            if (subset_of(s, k)) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            kept.push_back(s);
        }
    }
    std::sort(kept.begin(), kept.end(), face_less);
    return kept;
}

/// Keep only inclusion-minimal sets, canonically sorted.
inline std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), face_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    for (VertexSet s : sets) {
        bool above = false;
        for (VertexSet k : kept) {
            if (subset_of(k, s)) {
                above = true;
                break;
            }
        }
        if (!above) {
            kept.push_back(s);
        }
    }
    return kept;
}

class SimplicialComplex {
public:
    SimplicialComplex() : SimplicialComplex(void_complex({})) {}

    /// Build from token facets. Every label must occur in some facet unless
    /// `allow_unused` is set.
    static SimplicialComplex from_facets(const std::vector<std::string>& labels,
                                         const std::vector<std::vector<std::string>>& facets,
                                         bool allow_unused = false) {
        check_labels(labels);
        std::vector<VertexSet> masks;
        for (const auto& facet : facets) {
            VertexSet m = 0;
            for (const auto& tok : facet) {
                auto it = std::find(labels.begin(), labels.end(), tok);
                if (it == labels.end()) {
                    fail_parse("unknown vertex '" + tok + "' in facet");
                }
                int idx = static_cast<int>(it - labels.begin());
                if (has(m, idx)) {
                    fail_parse("vertex '" + tok + "' repeated in a facet");
                }
                m |= bit(idx);
            }
            masks.push_back(m);
        }
        SimplicialComplex c = from_masks(labels, masks);
        if (!allow_unused && !c.is_void()) {
            VertexSet used = c.vertex_set();
            for (std::size_t i = 0; i < labels.size(); ++i) {
                if (!has(used, static_cast<int>(i))) {
                    fail_parse("vertex '" + labels[i] + "' lies in no facet");
                }
            }
        }
        return c;
    }

    /// Build from index-set facets over `labels`; an empty facet list gives the void complex.
    static SimplicialComplex from_masks(std::vector<std::string> labels, const std::vector<VertexSet>& facets) {
        check_labels(labels);
        SimplicialComplex c;
        c.labels_ = std::move(labels);
        c.void_ = facets.empty();
        VertexSet ground = c.ground_mask();
        for (VertexSet f : facets) {
            if (!subset_of(f, ground)) {
                fail_precondition("facet outside the vertex range");
            }
        }
        c.facets_ = maximal_sets(facets);
        return c;
    }

    static SimplicialComplex void_complex(std::vector<std::string> labels) {
        SimplicialComplex c(Raw{});
        c.labels_ = std::move(labels);
        c.void_ = true;
        return c;
    }

    /// The complex whose only face is the empty set.
    static SimplicialComplex empty_face_complex(std::vector<std::string> labels = {}) {
        return from_masks(std::move(labels), {VertexSet{0}});
    }

    static SimplicialComplex simplex(std::vector<std::string> labels) {
        VertexSet all = labels.size() >= 64 ? ~VertexSet{0} : bit(static_cast<int>(labels.size())) - 1;
        return from_masks(std::move(labels), {all});
    }

    const std::vector<std::string>& labels() const { return labels_; }
    int ground_size() const { return static_cast<int>(labels_.size()); }
    VertexSet ground_mask() const {
        return labels_.size() >= 64 ? ~VertexSet{0} : bit(static_cast<int>(labels_.size())) - 1;
    }
    bool is_void() const { return void_; }
    const std::vector<VertexSet>& facets() const { return facets_; }

    VertexSet vertex_set() const {
        VertexSet v = 0;
        for (VertexSet f : facets_) {
            v |= f;
        }
        return v;
    }
    int vertex_count() const { return cardinality(vertex_set()); }

    int label_index(const std::string& tok) const {
        auto it = std::find(labels_.begin(), labels_.end(), tok);
        if (it == labels_.end()) {
            fail_parse("unknown vertex '" + tok + "'");
        }
        return static_cast<int>(it - labels_.begin());
    }

    VertexSet mask_of(const std::vector<std::string>& toks) const {
        VertexSet m = 0;
        for (const auto& t : toks) {
            m |= bit(label_index(t));
        }
        return m;
    }

    bool contains(VertexSet face) const {
        for (VertexSet f : facets_) {
            if (subset_of(face, f)) {
                return true;
            }
        }
        return false;
    }

    /// -1 for the empty-face complex; the void complex is rejected.
    int dimension() const {
        require(!void_, "the void complex has no dimension");
        int d = -1;
        for (VertexSet f : facets_) {
            d = std::max(d, cardinality(f) - 1);
        }
        return d;
    }

    /// All faces in canonical order (empty face first). Computed once, lazily.
    const std::vector<VertexSet>& faces() const {
        std::call_once(cache_->once, [this] {
            std::unordered_set<VertexSet> seen;
            for (VertexSet f : facets_) {
                if (cardinality(f) > 22) {
                    fail_guard("facet too large to enumerate faces");
                }
                for_each_subset(f, [&](VertexSet s) { seen.insert(s); });
                if (seen.size() > (std::size_t{1} << 22)) {
                    fail_guard("too many faces to enumerate");
                }
            }
            cache_->faces.assign(seen.begin(), seen.end());
            std::sort(cache_->faces.begin(), cache_->faces.end(), face_less);
        });
        return cache_->faces;
    }

    std::string face_name(VertexSet face) const {
        std::string out;
        bool single = std::all_of(labels_.begin(), labels_.end(), [](const std::string& s) { return s.size() == 1; });
        for (int v : members(face)) {
            if (!single && !out.empty()) {
                out += ',';
            }
            out += labels_[static_cast<std::size_t>(v)];
        }
        if (out.empty()) {
            out = "{}";
        }
        return out;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.labels_ == b.labels_ && a.void_ == b.void_ && a.facets_ == b.facets_;
    }

private:
    struct Raw {};
    struct Cache {
        std::once_flag once;
        std::vector<VertexSet> faces;
    };

    explicit SimplicialComplex(Raw) : cache_(std::make_shared<Cache>()) {}

    static void check_labels(const std::vector<std::string>& labels) {
        if (labels.size() > static_cast<std::size_t>(max_ground)) {
            fail_guard("more than 64 vertices");
        }
        std::set<std::string> seen;
        for (const auto& l : labels) {
            if (l.empty()) {
                fail_parse("empty vertex label");
            }
            if (!seen.insert(l).second) {
                fail_parse("duplicate vertex label '" + l + "'");
            }
        }
    }

    std::vector<std::string> labels_;
    std::vector<VertexSet> facets_;
    bool void_ = true;
    std::shared_ptr<Cache> cache_;
};

/// Entry i+1 counts the i-dimensional faces.
inline std::vector<long long> f_vector(const SimplicialComplex& c) {
    require(!c.is_void(), "f-vector of the void complex");
    std::vector<long long> f(static_cast<std::size_t>(c.dimension() + 2), 0);
    for (VertexSet face : c.faces()) {
        ++f[static_cast<std::size_t>(cardinality(face))];
    }
    return f;
}

inline SimplicialComplex link(const SimplicialComplex& c, VertexSet sigma) {
    require(!c.is_void() && c.contains(sigma), "link of a non-face", c.face_name(sigma));
    std::vector<VertexSet> out;
    for (VertexSet f : c.facets()) {
        if (subset_of(sigma, f)) {
            out.push_back(f & ~sigma);
        }
    }
    return SimplicialComplex::from_masks(c.labels(), out);
}

inline SimplicialComplex link_of_vertex(const SimplicialComplex& c, int v) { return link(c, bit(v)); }

/// Inclusion-minimal subsets of the ground set that are not faces.
inline std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& c) {
    if (c.is_void()) {
        return {VertexSet{0}};
    }
    std::vector<VertexSet> out;
    const int n = c.ground_size();
    std::unordered_set<VertexSet> seen;
    for (VertexSet s : c.faces()) {
        for (int v = 0; v < n; ++v) {
            if (has(s, v)) {
                continue;
            }
            VertexSet cand = s | bit(v);
            if (c.contains(cand) || seen.count(cand) != 0) {
                continue;
            }
            bool minimal = true;
            for (int u : members(cand)) {
                if (!c.contains(cand & ~bit(u))) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) {
                seen.insert(cand);
                out.push_back(cand);
            }
        }
    }
    std::sort(out.begin(), out.end(), face_less);
    return out;
}

/// Complements (within the ground set) of the non-faces.
inline SimplicialComplex alexander_dual(const SimplicialComplex& c) {
    const VertexSet ground = c.ground_mask();
    std::vector<VertexSet> facets;
    for (VertexSet nf : minimal_nonfaces(c)) {
        facets.push_back(ground & ~nf);
    }
    return SimplicialComplex::from_masks(c.labels(), facets);
}

inline SimplicialComplex delete_vertex(const SimplicialComplex& c, int v) {
    std::vector<VertexSet> out;
    for (VertexSet f : c.facets()) {
        out.push_back(f & ~bit(v));
    }
    return SimplicialComplex::from_masks(c.labels(), out);
}

struct SimpleGraph {
    std::vector<std::string> labels;
    std::vector<VertexSet> adjacency;

    int size() const { return static_cast<int>(adjacency.size()); }

    static SimpleGraph edgeless(std::vector<std::string> labels) {
        SimpleGraph g;
        g.adjacency.assign(labels.size(), 0);
        g.labels = std::move(labels);
        return g;
    }

    void add_edge(int u, int v) {
        require(u != v, "loops are not allowed");
        adjacency[static_cast<std::size_t>(u)] |= bit(v);
        adjacency[static_cast<std::size_t>(v)] |= bit(u);
    }

    bool adjacent(int u, int v) const { return has(adjacency[static_cast<std::size_t>(u)], v); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < size(); ++u) {
            for (int v : members(adjacency[static_cast<std::size_t>(u)])) {
                if (u < v) {
                    out.emplace_back(u, v);
                }
            }
        }
        return out;
    }

    SimpleGraph complement() const {
        SimpleGraph g = edgeless(labels);
        for (int u = 0; u < size(); ++u) {
            for (int v = u + 1; v < size(); ++v) {
                if (!adjacent(u, v)) {
                    g.add_edge(u, v);
                }
            }
        }
        return g;
    }

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

inline SimpleGraph underlying_graph(const SimplicialComplex& c) {
    SimpleGraph g = SimpleGraph::edgeless(c.labels());
    for (VertexSet f : c.facets()) {
        auto vs = members(f);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                g.add_edge(vs[i], vs[j]);
            }
        }
    }
    return g;
}

namespace detail {

// Bron–Kerbosch with pivoting.
inline void maximal_cliques(const SimpleGraph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    int pivot = lowest(p | x);
    int best = -1;
    for (int u : members(p | x)) {
        int deg = cardinality(p & g.adjacency[static_cast<std::size_t>(u)]);
        if (deg > best) {
            best = deg;
            pivot = u;
        }
    }
    for (int v : members(p & ~g.adjacency[static_cast<std::size_t>(pivot)])) {
        VertexSet nb = g.adjacency[static_cast<std::size_t>(v)];
        maximal_cliques(g, r | bit(v), p & nb, x & nb, out);
        p &= ~bit(v);
        x |= bit(v);
    }
}

} // namespace detail

inline SimplicialComplex clique_complex(const SimpleGraph& g) {
    std::vector<VertexSet> cliques;
    VertexSet all = g.size() >= 64 ? ~VertexSet{0} : bit(g.size()) - 1;
    detail::maximal_cliques(g, 0, all, 0, cliques);
    return SimplicialComplex::from_masks(g.labels, cliques);
}

inline SimplicialComplex independence_complex(const SimpleGraph& g) { return clique_complex(g.complement()); }

/// Flag means every clique of the 1-skeleton is a face.
inline bool is_flag(const SimplicialComplex& c) {
    if (c.is_void()) {
        return false;
    }
    SimplicialComplex closure = clique_complex(underlying_graph(c));
    // compare on used vertices only; unused ground vertices would show up as cliques
    VertexSet used = c.vertex_set();
    for (VertexSet f : closure.facets()) {
        if (subset_of(f, used) && !c.contains(f)) {
            return false;
        }
    }
    return true;
}

} // namespace ufi

#endif
