#ifndef UFI_POSET_HPP
#define UFI_POSET_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "colouring.hpp"
#include "monomial.hpp"
#include "simplicial.hpp"
#include "ufi.hpp"

namespace ufi {

inline bool leq(const IndexVector& a, const IndexVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

inline int total(const IndexVector& a) {
    int s = 0;
    for (int x : a) {
        s += x;
    }
    return s;
}

inline std::string vector_name(const IndexVector& e) {
    std::string out = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(e[i]);
    }
    return out + ")";
}

struct Cover {
    int lower;
    int upper;
    int gap; // total coordinate difference
};

/// Finite set of index vectors under the componentwise order.
class IndexVectorPoset {
public:
    IndexVectorPoset() = default;

    explicit IndexVectorPoset(std::vector<IndexVector> elems) : elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end(), [](const IndexVector& a, const IndexVector& b) {
            int ta = total(a);
            int tb = total(b);
            return ta != tb ? ta < tb : a < b;
        });
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            index_[elems_[i]] = static_cast<int>(i);
        }
        compute_covers();
    }

    std::size_t size() const { return elems_.size(); }
    const std::vector<IndexVector>& elements() const { return elems_; }
    const IndexVector& operator[](std::size_t i) const { return elems_[i]; }
    const std::vector<Cover>& covers() const { return covers_; }

    int find(const IndexVector& e) const {
        auto it = index_.find(e);
        return it == index_.end() ? -1 : it->second;
    }
    bool contains(const IndexVector& e) const { return find(e) >= 0; }

    bool less_eq(int a, int b) const { return leq(elems_[static_cast<std::size_t>(a)], elems_[static_cast<std::size_t>(b)]); }

    /// Elements covered by b.
    const std::vector<int>& lower_covers(int b) const { return lower_covers_[static_cast<std::size_t>(b)]; }

    /// Unique maximal common lower bound, if one exists.
    std::optional<int> meet(const std::vector<int>& xs) const {
        std::vector<int> lower;
        for (std::size_t c = 0; c < elems_.size(); ++c) {
            bool below_all = std::all_of(xs.begin(), xs.end(), [&](int x) { return less_eq(static_cast<int>(c), x); });
            if (below_all) {
                lower.push_back(static_cast<int>(c));
            }
        }
        std::optional<int> best;
        for (int c : lower) {
            if (std::all_of(lower.begin(), lower.end(), [&](int d) { return less_eq(d, c); })) {
                best = c;
            }
        }
        return best;
    }

private:
    void compute_covers() {
        const std::size_t n = elems_.size();
        lower_covers_.assign(n, {});
        covers_.clear();
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<int> below;
            for (std::size_t a = 0; a < b; ++a) {
                if (leq(elems_[a], elems_[b])) {
                    below.push_back(static_cast<int>(a));
                }
            }
            // covers are the maximal elements strictly below b
            for (int a : below) {
                bool maximal = true;
                for (int c : below) {
                    if (c != a && leq(elems_[static_cast<std::size_t>(a)], elems_[static_cast<std::size_t>(c)])) {
                        maximal = false;
                        break;
                    }
                }
                if (maximal) {
                    lower_covers_[b].push_back(a);
                    covers_.push_back({a, static_cast<int>(b), total(elems_[b]) - total(elems_[static_cast<std::size_t>(a)])});
                }
            }
        }
    }

    std::vector<IndexVector> elems_;
    std::map<IndexVector, int> index_;
    std::vector<std::vector<int>> lower_covers_;
    std::vector<Cover> covers_;
};

inline IndexVectorPoset index_vector_poset(const SimplicialComplex& c, const Colouring& col, const Limits& limits = {}) {
    require_ufi_input(c, col, limits);
    std::vector<IndexVector> elems;
    for (VertexSet f : c.faces()) {
        elems.push_back(index_vector(f, col));
    }
    return IndexVectorPoset(std::move(elems));
}

inline bool is_order_ideal(const IndexVectorPoset& p) {
    for (const auto& e : p.elements()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) {
                IndexVector d = e;
                --d[i];
                if (!p.contains(d)) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool is_meet_semilattice(const IndexVectorPoset& p) {
    const int n = static_cast<int>(p.size());
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!p.meet({a, b})) {
                return false;
            }
        }
    }
    return true;
}

/// Every interval [u, v] in which u is the meet of the elements of [u, v]
/// covered by v is a boolean lattice.
inline bool is_meet_distributive(const IndexVectorPoset& p) {
    if (!is_meet_semilattice(p)) {
        return false;
    }
    const int n = static_cast<int>(p.size());
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u) {
            if (u == v || !p.less_eq(u, v)) {
                continue;
            }
            std::vector<int> s;
            for (int c : p.lower_covers(v)) {
                if (p.less_eq(u, c)) {
                    s.push_back(c);
                }
            }
            auto m = p.meet(s);
            if (!m || *m != u) {
                continue;
            }
            // [u, v] must be isomorphic to the boolean lattice on s via w -> {c in s : w <= c}
            const std::size_t t = s.size();
            if (t >= 20) {
                return false;
            }
            std::vector<int> interval;
            for (int w = 0; w < n; ++w) {
                if (p.less_eq(u, w) && p.less_eq(w, v)) {
                    interval.push_back(w);
                }
            }
            if (interval.size() != (std::size_t{1} << t)) {
                return false;
            }
            std::map<int, unsigned> code;
            std::set<unsigned> codes;
            for (int w : interval) {
                unsigned cset = 0;
                for (std::size_t i = 0; i < t; ++i) {
                    if (p.less_eq(w, s[i])) {
                        cset |= 1u << i;
                    }
                }
                code[w] = cset;
                codes.insert(cset);
            }
            if (codes.size() != interval.size()) {
                return false;
            }
            for (int a : interval) {
                for (int b : interval) {
                    bool order = p.less_eq(a, b);
                    bool sets = (code[b] & ~code[a]) == 0; // code[b] ⊆ code[a]
                    if (order != sets) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

/// All covering pairs with their total-degree gaps.
inline std::vector<Cover> covering_relations(const IndexVectorPoset& p) { return p.covers(); }

struct BooleanIntervalCount {
    long long count = 0;
    bool supported = true; // false when P is not an order ideal
};

/// Intervals [u, u + 0/1 vector of weight i] all of whose vectors lie in P.
inline BooleanIntervalCount boolean_interval_count(const IndexVectorPoset& p, int i) {
    BooleanIntervalCount r;
    r.supported = is_order_ideal(p);
    if (p.size() == 0 || i < 0) {
        return r;
    }
    const int k = static_cast<int>(p[0].size());
    if (i > k) {
        return r;
    }
    for (const auto& u : p.elements()) {
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            if (std::popcount(mask) != i) {
                continue;
            }
            bool all_in = true;
            for (unsigned sub = mask;; sub = (sub - 1) & mask) {
                IndexVector w = u;
                for (int j = 0; j < k; ++j) {
                    if (sub & (1u << j)) {
                        ++w[static_cast<std::size_t>(j)];
                    }
                }
                if (!p.contains(w)) {
                    all_in = false;
                    break;
                }
                if (sub == 0) {
                    break;
                }
            }
            if (all_in) {
                ++r.count;
            }
        }
    }
    return r;
}

struct NonfacePoset {
    std::vector<VertexSet> nonfaces;   // minimal non-faces meeting at least two classes
    std::vector<IndexVector> elements; // their index vectors, same order
};

inline NonfacePoset minimal_nonface_poset(const SimplicialComplex& c, const Colouring& col) {
    require(is_proper(c, col), "colouring is not proper");
    NonfacePoset n;
    for (VertexSet nf : minimal_nonfaces(c)) {
        bool inside_one = std::any_of(col.classes.begin(), col.classes.end(),
                                      [&](const std::vector<int>& cls) { return subset_of(nf, from_members(cls)); });
        if (inside_one) {
            continue;
        }
        n.nonfaces.push_back(nf);
        n.elements.push_back(index_vector(nf, col));
    }
    return n;
}

inline std::vector<IndexVector> minimal_elements(const std::vector<IndexVector>& elems) {
    std::vector<IndexVector> out;
    for (const auto& e : elems) {
        bool minimal = true;
        for (const auto& f : elems) {
            if (f != e && leq(f, e)) {
                minimal = false;
                break;
            }
        }
        if (minimal) {
            out.push_back(e);
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<IndexVector> minimal_elements(const NonfacePoset& n) { return minimal_elements(n.elements); }

/// The binomial eps_lower * y^{e(upper)-e(lower)} - eps_upper * x^{e(upper)-e(lower)}.
struct CoverSyzygy {
    VertexSet lower_face;
    VertexSet upper_face;
    Monomial y_part;
    Monomial x_part;
    int degree; // n + gap
};

inline std::vector<CoverSyzygy> first_syzygies_covering(const SimplicialComplex& c, const Colouring& col,
                                                        const Limits& limits = {}) {
    IndexVectorPoset p = index_vector_poset(c, col, limits);
    std::map<IndexVector, VertexSet> face_of;
    for (VertexSet f : c.faces()) {
        face_of[index_vector(f, col)] = f;
    }
    const std::size_t k = static_cast<std::size_t>(col.size());
    const int n = c.ground_size();
    std::vector<CoverSyzygy> out;
    for (const auto& cv : p.covers()) {
        const auto& lo = p[static_cast<std::size_t>(cv.lower)];
        const auto& hi = p[static_cast<std::size_t>(cv.upper)];
        Monomial y(2 * k);
        Monomial x(2 * k);
        for (std::size_t i = 0; i < k; ++i) {
            y[k + i] = hi[i] - lo[i];
            x[i] = hi[i] - lo[i];
        }
        out.push_back({face_of[lo], face_of[hi], y, x, n + cv.gap});
    }
    return out;
}

struct FirstBettiBound {
    std::map<int, long long> by_degree; // degree n + gap -> number of covers with that gap
    long long cover_total = 0;
    long long coarse = 0;               // sum_j j f_{j-1}
    bool meet_semilattice = false;      // equality holds in this case
};

inline FirstBettiBound first_betti_lower_bound(const SimplicialComplex& c, const Colouring& col,
                                               const Limits& limits = {}) {
    IndexVectorPoset p = index_vector_poset(c, col, limits);
    FirstBettiBound b;
    const int n = c.ground_size();
    for (const auto& cv : p.covers()) {
        ++b.by_degree[n + cv.gap];
        ++b.cover_total;
    }
    auto f = f_vector(c);
    for (std::size_t j = 1; j < f.size(); ++j) {
        b.coarse += static_cast<long long>(j) * f[j];
    }
    b.meet_semilattice = is_meet_semilattice(p);
    return b;
}

} // namespace ufi

#endif
