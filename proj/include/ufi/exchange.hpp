#ifndef UFI_EXCHANGE_HPP
#define UFI_EXCHANGE_HPP

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "monomial.hpp"

namespace ufi {

namespace detail {

inline Monomial exchanged(const Monomial& m, int up, int down) {
    Monomial r = m;
    ++r.exp[static_cast<std::size_t>(up)];
    --r.exp[static_cast<std::size_t>(down)];
    return r;
}

} // namespace detail

/// x_i m / x_mu(m) ∈ I for all i below the maximal index of each generator.
inline bool is_stable(const MonomialIdeal& I) {
    for (const auto& m : I.generators()) {
        int mu = m.max_index();
        for (int i = 0; i < mu; ++i) {
            if (!I.contains(detail::exchanged(m, i, mu))) {
                return false;
            }
        }
    }
    return true;
}

inline bool is_strongly_stable(const MonomialIdeal& I) {
    for (const auto& m : I.generators()) {
        for (int j = 0; j < static_cast<int>(m.size()); ++j) {
            if (m[static_cast<std::size_t>(j)] == 0) {
                continue;
            }
            for (int i = 0; i < j; ++i) {
                if (!I.contains(detail::exchanged(m, i, j))) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// A partial order on variable indices; `below[i][j]` means x_i < x_j.
class BorelPoset {
public:
    explicit BorelPoset(int n = 0) : n_(n), below_(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0)) {}

    BorelPoset(int n, const std::vector<std::pair<int, int>>& relations) : BorelPoset(n) {
        for (auto [i, j] : relations) {
            require(i >= 0 && j >= 0 && i < n && j < n && i != j, "relation outside the variable range");
            below_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        }
        // transitive closure
        for (int k = 0; k < n; ++k) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (below_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                        below_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) {
                        below_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
                    }
                }
            }
        }
        for (int i = 0; i < n; ++i) {
            require(!below_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)], "relations contain a cycle");
        }
    }

    /// The chain x_1 < x_2 < ... < x_n.
    static BorelPoset chain(int n) {
        std::vector<std::pair<int, int>> r;
        for (int i = 0; i + 1 < n; ++i) {
            r.emplace_back(i, i + 1);
        }
        return BorelPoset(n, r);
    }

    int size() const { return n_; }
    bool less(int i, int j) const { return below_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0; }

    std::vector<std::pair<int, int>> relations() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                if (less(i, j)) {
                    out.emplace_back(i, j);
                }
            }
        }
        return out;
    }

    /// Upward-closed subsets of the variable indices, as membership vectors.
    std::vector<std::vector<char>> up_sets(std::size_t cap = 1u << 20) const {
        // maximal elements are decided first
        std::vector<int> order(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            order[static_cast<std::size_t>(i)] = i;
        }
        auto above = [&](int i) {
            int c = 0;
            for (int j = 0; j < n_; ++j) {
                c += less(i, j) ? 1 : 0;
            }
            return c;
        };
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return above(a) < above(b); });
        std::vector<std::vector<char>> out;
        std::vector<char> cur(static_cast<std::size_t>(n_), 0);
        std::function<void(std::size_t)> rec = [&](std::size_t pos) {
            if (out.size() > cap) {
                fail_guard("too many up-sets in the relation poset");
            }
            if (pos == order.size()) {
                out.push_back(cur);
                return;
            }
            int v = order[pos];
            rec(pos + 1);
            bool ok = true;
            for (int j = 0; j < n_; ++j) {
                if (less(v, j) && !cur[static_cast<std::size_t>(j)]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                cur[static_cast<std::size_t>(v)] = 1;
                rec(pos + 1);
                cur[static_cast<std::size_t>(v)] = 0;
            }
        };
        rec(0);
        return out;
    }

private:
    int n_;
    std::vector<std::vector<char>> below_;
};

/// Closed under x_i m / x_j whenever x_i < x_j.
inline bool is_q_borel(const MonomialIdeal& I, const BorelPoset& q) {
    require(q.size() == static_cast<int>(I.nvars()), "relation poset size differs from the variable count");
    for (const auto& m : I.generators()) {
        for (auto [i, j] : q.relations()) {
            if (m[static_cast<std::size_t>(j)] > 0 && !I.contains(detail::exchanged(m, i, j))) {
                return false;
            }
        }
    }
    return true;
}

/// Whether `target` is reachable from `source` by moves x_j -> x_i with x_i < x_j.
/// Mass only moves downward, so this holds iff every up-set carries no more
/// weight in `target` than in `source`.
inline bool borel_reachable(const Monomial& source, const Monomial& target,
                            const std::vector<std::vector<char>>& up_sets) {
    if (source.degree() != target.degree()) {
        return false;
    }
    for (const auto& u : up_sets) {
        int s = 0;
        int t = 0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i]) {
                s += source[i];
                t += target[i];
            }
        }
        if (t > s) {
            return false;
        }
    }
    return true;
}

/// Minimal generators not obtainable from another minimal generator by moves.
inline std::vector<Monomial> q_borel_generators(const MonomialIdeal& I, const BorelPoset& q) {
    auto ups = q.up_sets();
    std::vector<Monomial> out;
    const auto& gens = I.generators();
    for (std::size_t a = 0; a < gens.size(); ++a) {
        bool reached = false;
        for (std::size_t b = 0; b < gens.size() && !reached; ++b) {
            if (a != b && borel_reachable(gens[b], gens[a], ups)) {
                reached = true;
            }
        }
        if (!reached) {
            out.push_back(gens[a]);
        }
    }
    return out;
}

inline bool is_principal_q_borel(const MonomialIdeal& I, const BorelPoset& q) {
    return is_q_borel(I, q) && q_borel_generators(I, q).size() == 1;
}

/// Exchange property on an equigenerated ideal.
inline bool is_polymatroidal(const MonomialIdeal& I) {
    require(I.is_equigenerated(), "polymatroidal test needs equigenerated input");
    const auto& gens = I.generators();
    const std::size_t n = I.nvars();
    for (const auto& u : gens) {
        for (const auto& v : gens) {
            for (std::size_t i = 0; i < n; ++i) {
                if (u[i] <= v[i]) {
                    continue;
                }
                bool found = false;
                for (std::size_t j = 0; j < n && !found; ++j) {
                    if (u[j] < v[j] && I.contains(detail::exchanged(u, static_cast<int>(j), static_cast<int>(i)))) {
                        found = true;
                    }
                }
                if (!found) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool is_matroidal(const MonomialIdeal& I) { return I.is_squarefree() && is_polymatroidal(I); }

/// Exchange along the variable order: if u and v agree before t and u_t > v_t,
/// some j > t has x_t v / x_j in I.
inline bool is_weakly_polymatroidal(const MonomialIdeal& I) {
    const auto& gens = I.generators();
    const std::size_t n = I.nvars();
    for (const auto& u : gens) {
        for (const auto& v : gens) {
            std::size_t t = 0;
            while (t < n && u[t] == v[t]) {
                ++t;
            }
            if (t == n || u[t] < v[t]) {
                continue;
            }
            bool found = false;
            for (std::size_t j = t + 1; j < n && !found; ++j) {
                if (v[j] > 0 && I.contains(detail::exchanged(v, static_cast<int>(t), static_cast<int>(j)))) {
                    found = true;
                }
            }
            if (!found) {
                return false;
            }
        }
    }
    return true;
}

} // namespace ufi

#endif
