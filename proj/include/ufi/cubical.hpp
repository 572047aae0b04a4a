#ifndef UFI_CUBICAL_HPP
#define UFI_CUBICAL_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "betti.hpp"
#include "linalg.hpp"
#include "poset.hpp"
#include "ufi.hpp"

namespace ufi {

/// The box [lower, lower + sum of unit vectors over `free`].
struct Cube {
    IndexVector lower;
    unsigned free = 0;

    int dim() const { return std::popcount(free); }

    IndexVector upper() const {
        IndexVector u = lower;
        for (std::size_t j = 0; j < u.size(); ++j) {
            if (free & (1u << j)) {
                ++u[j];
            }
        }
        return u;
    }

    std::vector<int> free_coords() const {
        std::vector<int> c;
        for (int j = 0; j < 32; ++j) {
            if (free & (1u << j)) {
                c.push_back(j);
            }
        }
        return c;
    }

    /// this ⊆ other as boxes
    bool inside(const Cube& other) const { return leq(other.lower, lower) && leq(upper(), other.upper()); }

    friend auto operator<=>(const Cube&, const Cube&) = default;
    friend bool operator==(const Cube&, const Cube&) = default;
};

inline bool cube_less(const Cube& a, const Cube& b) {
    if (a.dim() != b.dim()) {
        return a.dim() < b.dim();
    }
    int ta = total(a.lower);
    int tb = total(b.lower);
    if (ta != tb) {
        return ta < tb;
    }
    if (a.lower != b.lower) {
        return a.lower < b.lower;
    }
    return a.free < b.free;
}

class CubicalComplex {
public:
    CubicalComplex() = default;

    CubicalComplex(int k, std::vector<Cube> cubes) : k_(k), cubes_(std::move(cubes)) {
        std::sort(cubes_.begin(), cubes_.end(), cube_less);
        cubes_.erase(std::unique(cubes_.begin(), cubes_.end()), cubes_.end());
        for (std::size_t i = 0; i < cubes_.size(); ++i) {
            index_[cubes_[i]] = static_cast<int>(i);
        }
    }

    int coordinates() const { return k_; }
    std::size_t size() const { return cubes_.size(); }
    const std::vector<Cube>& cubes() const { return cubes_; }
    const Cube& operator[](std::size_t i) const { return cubes_[i]; }

    int find(const Cube& c) const {
        auto it = index_.find(c);
        return it == index_.end() ? -1 : it->second;
    }

    int dimension() const {
        int d = -1;
        for (const auto& c : cubes_) {
            d = std::max(d, c.dim());
        }
        return d;
    }

    /// Number of cubes of each dimension 0..dimension().
    std::vector<long long> f_vector() const {
        std::vector<long long> f(static_cast<std::size_t>(dimension() + 1), 0);
        for (const auto& c : cubes_) {
            ++f[static_cast<std::size_t>(c.dim())];
        }
        return f;
    }

private:
    int k_ = 0;
    std::vector<Cube> cubes_;
    std::map<Cube, int> index_;
};

/// Facet of `c` obtained by fixing free coordinate j at its bottom or top value.
inline Cube facet_of(const Cube& c, int j, bool top) {
    Cube f = c;
    f.free &= ~(1u << j);
    if (top) {
        ++f.lower[static_cast<std::size_t>(j)];
    }
    return f;
}

/// Cubes are the boolean intervals of the index-vector poset.
inline CubicalComplex cubes_of_poset(const IndexVectorPoset& p, int k) {
    if (k > 31) {
        fail_guard("too many colour classes for the cube complex");
    }
    std::vector<Cube> cubes;
    for (const auto& u : p.elements()) {
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            bool ok = true;
            for (unsigned sub = mask;; sub = (sub - 1) & mask) {
                Cube probe{u, 0};
                IndexVector w = probe.lower;
                for (int j = 0; j < k; ++j) {
                    if (sub & (1u << j)) {
                        ++w[static_cast<std::size_t>(j)];
                    }
                }
                if (!p.contains(w)) {
                    ok = false;
                    break;
                }
                if (sub == 0) {
                    break;
                }
            }
            if (ok) {
                cubes.push_back({u, mask});
            }
        }
    }
    return CubicalComplex(k, std::move(cubes));
}

inline CubicalComplex cubical_complex(const SimplicialComplex& c, const Colouring& col, const Limits& limits = {}) {
    require_ufi_input(c, col, limits);
    require_nesting_order(c, col);
    return cubes_of_poset(index_vector_poset(c, col, limits), col.size());
}

struct CubicalAxioms {
    bool vertices_present = true;   // every element of the poset is a 0-cube
    bool closed_under_faces = true; // every facet of a cube is a cube
    bool intersections = true;      // intersections of cubes are empty or cubes
    bool ok() const { return vertices_present && closed_under_faces && intersections; }
};

inline CubicalAxioms validate_cubical(const CubicalComplex& cx, const IndexVectorPoset& p) {
    CubicalAxioms r;
    for (const auto& e : p.elements()) {
        if (cx.find({e, 0}) < 0) {
            r.vertices_present = false;
        }
    }
    for (const auto& c : cx.cubes()) {
        for (int j : c.free_coords()) {
            if (cx.find(facet_of(c, j, false)) < 0 || cx.find(facet_of(c, j, true)) < 0) {
                r.closed_under_faces = false;
            }
        }
    }
    const std::size_t k = static_cast<std::size_t>(cx.coordinates());
    for (std::size_t a = 0; a < cx.size(); ++a) {
        for (std::size_t b = a + 1; b < cx.size(); ++b) {
            IndexVector lo(k);
            IndexVector hi(k);
            IndexVector ua = cx[a].upper();
            IndexVector ub = cx[b].upper();
            bool empty = false;
            Cube meet;
            meet.lower.assign(k, 0);
            for (std::size_t j = 0; j < k; ++j) {
                lo[j] = std::max(cx[a].lower[j], cx[b].lower[j]);
                hi[j] = std::min(ua[j], ub[j]);
                if (lo[j] > hi[j]) {
                    empty = true;
                    break;
                }
                meet.lower[j] = lo[j];
                if (hi[j] > lo[j]) {
                    meet.free |= 1u << j;
                }
            }
            if (!empty && cx.find(meet) < 0) {
                r.intersections = false;
            }
        }
    }
    return r;
}

struct Collapse {
    int free_face;
    int coface;
};

/// Elementary collapses peeling the cubes under each top vector in turn, largest
/// index sums first. Under a top e with support c_1 < ... < c_d, round i pairs
/// [e - eps_B, e] with [e - eps_{B + c_d}, e] for every B ⊆ {c_1..c_{d-1}} of size d - i.
inline std::vector<Collapse> collapse_sequence(const CubicalComplex& cx) {
    std::vector<IndexVector> tops;
    for (const auto& c : cx.cubes()) {
        if (c.dim() == 0) {
            tops.push_back(c.lower);
        }
    }
    std::sort(tops.begin(), tops.end(), [](const IndexVector& a, const IndexVector& b) {
        int ta = total(a);
        int tb = total(b);
        return ta != tb ? ta > tb : a > b;
    });
    std::vector<Collapse> out;
    for (const auto& e : tops) {
        std::vector<int> supp;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] > 0) {
                supp.push_back(static_cast<int>(j));
            }
        }
        const int d = static_cast<int>(supp.size());
        if (d == 0) {
            continue;
        }
        const int last = supp.back();
        auto cube_below = [&](unsigned b) {
            Cube c{e, b};
            for (int j = 0; j < 32; ++j) {
                if (b & (1u << j)) {
                    --c.lower[static_cast<std::size_t>(j)];
                }
            }
            return c;
        };
        for (int round = 1; round <= d; ++round) {
            const int want = d - round;
            for (unsigned sel = 0; sel < (1u << (d - 1)); ++sel) {
                if (std::popcount(sel) != want) {
                    continue;
                }
                unsigned b = 0;
                for (int t = 0; t < d - 1; ++t) {
                    if (sel & (1u << t)) {
                        b |= 1u << supp[static_cast<std::size_t>(t)];
                    }
                }
                int f = cx.find(cube_below(b));
                int g = cx.find(cube_below(b | (1u << last)));
                require(f >= 0 && g >= 0, "collapse schedule needs a cube that is missing (poset not an order ideal?)");
                out.push_back({f, g});
            }
        }
    }
    return out;
}

struct CollapseCheck {
    bool valid = false;
    std::size_t steps_checked = 0;
    std::string failure;
};

/// Replays the sequence: each free face must have its coface as the only proper
/// coface still present, and a single vertex must remain.
inline CollapseCheck validate_collapses(const CubicalComplex& cx, const std::vector<Collapse>& seq) {
    CollapseCheck r;
    std::vector<char> alive(cx.size(), 1);
    for (const auto& step : seq) {
        const auto f = static_cast<std::size_t>(step.free_face);
        const auto g = static_cast<std::size_t>(step.coface);
        if (!alive[f] || !alive[g]) {
            r.failure = "step " + std::to_string(r.steps_checked) + " uses a removed cube";
            return r;
        }
        if (cx[g].dim() != cx[f].dim() + 1 || !cx[f].inside(cx[g])) {
            r.failure = "step " + std::to_string(r.steps_checked) + " is not a facet pair";
            return r;
        }
        int cofaces = 0;
        for (std::size_t h = 0; h < cx.size(); ++h) {
            if (alive[h] && h != f && cx[f].inside(cx[h])) {
                ++cofaces;
            }
        }
        if (cofaces != 1) {
            r.failure = "step " + std::to_string(r.steps_checked) + " face is not free (" + std::to_string(cofaces) +
                        " cofaces)";
            return r;
        }
        alive[f] = 0;
        alive[g] = 0;
        ++r.steps_checked;
    }
    std::size_t left = 0;
    std::size_t left_dim = 0;
    for (std::size_t h = 0; h < cx.size(); ++h) {
        if (alive[h]) {
            ++left;
            left_dim = static_cast<std::size_t>(cx[h].dim());
        }
    }
    if (left != 1 || left_dim != 0) {
        r.failure = std::to_string(left) + " cubes remain";
        return r;
    }
    r.valid = true;
    return r;
}

/// Cube complex plus the lcm label of every cube.
struct LabeledCellComplex {
    CubicalComplex cubes;
    std::vector<Monomial> labels; // parallel to cubes.cubes()
    std::vector<int> class_sizes;
    std::vector<std::string> variables;
    int n = 0;
};

inline Monomial cube_label(const Cube& c, const std::vector<int>& sizes) {
    const std::size_t k = sizes.size();
    Monomial m(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        int top = c.lower[i] + ((c.free >> i) & 1u);
        m[i] = sizes[i] - c.lower[i];
        m[k + i] = top;
    }
    return m;
}

inline LabeledCellComplex labeled_complex(const SimplicialComplex& c, const Colouring& col, const Limits& limits = {}) {
    LabeledCellComplex l;
    l.cubes = cubical_complex(c, col, limits);
    l.class_sizes = class_sizes(col);
    l.variables = paired_variables(col.size());
    l.n = c.ground_size();
    for (const auto& cube : l.cubes.cubes()) {
        l.labels.push_back(cube_label(cube, l.class_sizes));
    }
    return l;
}

/// sign(P, facet) for the facet fixing free coordinate j at the bottom/top.
using IncidenceSign = std::function<int(const Cube& cell, int coord, bool top)>;

inline int standard_sign(const Cube& cell, int coord, bool top) {
    int pos = std::popcount(cell.free & ((1u << coord) - 1u));
    int s = (pos % 2 == 0) ? 1 : -1;
    return top ? -s : s;
}

struct FreeEntry {
    int target; // index into basis[h - 1]
    int source; // index into basis[h]
    int sign;
    Monomial coefficient; // label(source) / label(target)
};

/// Homological degree h holds the cubes of dimension h - 1; degree 0 is the
/// empty cell with label 1 (a free module of rank one mapping onto R/I).
struct CellularFreeComplex {
    std::vector<std::vector<int>> basis; // cube indices; basis[0] = {-1}
    std::vector<std::vector<FreeEntry>> differential; // differential[h] : F_h -> F_{h-1}, h >= 1
    std::vector<Monomial> labels;                       // per cube
    std::vector<std::string> variables;

    long long rank(int h) const {
        return h < static_cast<int>(basis.size()) ? static_cast<long long>(basis[static_cast<std::size_t>(h)].size()) : 0;
    }
};

inline CellularFreeComplex cellular_free_complex(const LabeledCellComplex& l, const IncidenceSign& sign = standard_sign) {
    CellularFreeComplex fc;
    fc.labels = l.labels;
    fc.variables = l.variables;
    const int top = l.cubes.dimension();
    fc.basis.assign(static_cast<std::size_t>(top + 2), {});
    fc.basis[0] = {-1};
    std::vector<int> position(l.cubes.size(), -1);
    for (std::size_t i = 0; i < l.cubes.size(); ++i) {
        auto h = static_cast<std::size_t>(l.cubes[i].dim() + 1);
        position[i] = static_cast<int>(fc.basis[h].size());
        fc.basis[h].push_back(static_cast<int>(i));
    }
    fc.differential.assign(fc.basis.size(), {});
    for (std::size_t i = 0; i < l.cubes.size(); ++i) {
        const Cube& cell = l.cubes[i];
        auto h = static_cast<std::size_t>(cell.dim() + 1);
        if (cell.dim() == 0) {
            fc.differential[h].push_back({0, position[i], 1, l.labels[i]});
            continue;
        }
        for (int j : cell.free_coords()) {
            for (bool up : {false, true}) {
                int q = l.cubes.find(facet_of(cell, j, up));
                require(q >= 0, "cube complex is missing a facet");
                const Monomial& lq = l.labels[static_cast<std::size_t>(q)];
                require(lq.divides(l.labels[i]), "facet label does not divide the cell label");
                fc.differential[h].push_back(
                    {position[static_cast<std::size_t>(q)], position[i], sign(cell, j, up), quotient(l.labels[i], lq)});
            }
        }
    }
    return fc;
}

/// Checks that every composite F_h -> F_{h-1} -> F_{h-2} vanishes.
inline bool differential_squares_to_zero(const CellularFreeComplex& fc) {
    for (std::size_t h = 2; h < fc.differential.size(); ++h) {
        // entries of d_{h-1} grouped by source
        std::map<int, std::vector<const FreeEntry*>> lower_by_source;
        for (const auto& e : fc.differential[h - 1]) {
            lower_by_source[e.source].push_back(&e);
        }
        std::map<std::pair<int, std::pair<int, Monomial>>, long long> acc;
        for (const auto& e : fc.differential[h]) {
            for (const FreeEntry* f : lower_by_source[e.target]) {
                acc[{e.source, {f->target, e.coefficient * f->coefficient}}] += e.sign * f->sign;
            }
        }
        for (const auto& [k, v] : acc) {
            if (v != 0) {
                return false;
            }
        }
    }
    return true;
}

/// Minimality: no differential entry is a unit, and label degree is n + dim.
inline bool is_minimal(const CellularFreeComplex& fc, const LabeledCellComplex& l) {
    for (std::size_t h = 1; h < fc.differential.size(); ++h) {
        for (const auto& e : fc.differential[h]) {
            if (e.coefficient.degree() == 0) {
                return false;
            }
        }
    }
    for (std::size_t i = 0; i < l.cubes.size(); ++i) {
        if (l.labels[i].degree() != l.n + l.cubes[i].dim()) {
            return false;
        }
    }
    return true;
}

namespace detail {

/// Reduced homology over Q of the subcomplex of cubes selected by `keep`
/// (the empty cell is always included). Entry d+1 is H~_d.
inline std::vector<long long> cube_subcomplex_homology(const CubicalComplex& cx, const std::vector<char>& keep,
                                                       const IncidenceSign& sign, int top_dim) {
    std::vector<std::vector<int>> by_dim(static_cast<std::size_t>(top_dim + 3));
    std::vector<int> position(cx.size(), -1);
    by_dim[0].push_back(-1);
    for (std::size_t i = 0; i < cx.size(); ++i) {
        if (!keep[i]) {
            continue;
        }
        auto d = static_cast<std::size_t>(cx[i].dim() + 1);
        if (d < by_dim.size()) {
            position[i] = static_cast<int>(by_dim[d].size());
            by_dim[d].push_back(static_cast<int>(i));
        }
    }
    std::vector<long long> rank(by_dim.size() + 1, 0);
    for (std::size_t d = 1; d < by_dim.size(); ++d) {
        std::vector<SparseRow> rows;
        for (int i : by_dim[d]) {
            const Cube& cell = cx[static_cast<std::size_t>(i)];
            SparseRow row;
            if (cell.dim() == 0) {
                row.emplace_back(0, 1);
            } else {
                for (int j : cell.free_coords()) {
                    for (bool up : {false, true}) {
                        int q = cx.find(facet_of(cell, j, up));
                        if (q >= 0 && keep[static_cast<std::size_t>(q)]) {
                            row.emplace_back(position[static_cast<std::size_t>(q)], sign(cell, j, up));
                        }
                    }
                }
            }
            std::sort(row.begin(), row.end());
            rows.push_back(std::move(row));
        }
        rank[d] = exact_rank(std::move(rows));
    }
    std::vector<long long> h(static_cast<std::size_t>(top_dim + 2), 0);
    for (std::size_t d = 0; d < h.size(); ++d) {
        h[d] = static_cast<long long>(by_dim[d].size()) - rank[d] - rank[d + 1];
    }
    return h;
}

} // namespace detail

struct ResolutionReport {
    std::size_t lattice_size = 0;
    std::size_t distinct_labels = 0;
    std::size_t acyclic_degrees = 0;
    bool acyclic = true;
    bool betti_match = true;
    std::vector<std::string> failures;
    bool ok() const { return acyclic && betti_match; }
};

/// For each a in the lcm lattice: the cells with label dividing a form an
/// acyclic complex, and H~_{i-1} of the cells with label strictly dividing a
/// equals beta_{i,a}(I) from the Koszul oracle.
inline ResolutionReport verify_resolution(const LabeledCellComplex& l, const MonomialIdeal& I, const Limits& limits = {},
                                          const IncidenceSign& sign = standard_sign) {
    ResolutionReport rep;
    std::set<Monomial> distinct(l.labels.begin(), l.labels.end());
    rep.distinct_labels = distinct.size();
    MultigradedBettiTable oracle = betti_oracle(I, limits);
    auto lattice = lcm_lattice(I, limits);
    rep.lattice_size = lattice.size();
    const int top = l.cubes.dimension();
    for (const auto& a : lattice) {
        std::vector<char> le(l.cubes.size(), 0);
        std::vector<char> lt(l.cubes.size(), 0);
        for (std::size_t i = 0; i < l.cubes.size(); ++i) {
            if (l.labels[i].divides(a)) {
                le[i] = 1;
                lt[i] = l.labels[i] == a ? 0 : 1;
            }
        }
        auto h_le = detail::cube_subcomplex_homology(l.cubes, le, sign, top);
        bool zero = std::all_of(h_le.begin(), h_le.end(), [](long long x) { return x == 0; });
        if (zero) {
            ++rep.acyclic_degrees;
        } else {
            rep.acyclic = false;
            rep.failures.push_back("not acyclic at " + to_string(a, l.variables));
        }
        auto h_lt = detail::cube_subcomplex_homology(l.cubes, lt, sign, top);
        for (std::size_t d = 0; d < h_lt.size(); ++d) {
            int i = static_cast<int>(d); // H~_{i-1} sits at index i
            if (h_lt[d] != oracle.at(i, a)) {
                rep.betti_match = false;
                rep.failures.push_back("beta_" + std::to_string(i) + " mismatch at " + to_string(a, l.variables));
            }
        }
    }
    for (const auto& [k, v] : oracle.entries) {
        if (!std::binary_search(lattice.begin(), lattice.end(), k.second)) {
            rep.betti_match = false;
            rep.failures.push_back("oracle support outside the lcm lattice");
        }
    }
    return rep;
}

} // namespace ufi

#endif
