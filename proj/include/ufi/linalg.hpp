#ifndef UFI_LINALG_HPP
#define UFI_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ufi {

/// Sparse integer row: (column, value) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<int, std::int64_t>>;

namespace detail {

struct Overflow {};

inline std::int64_t checked_fma(std::int64_t a, std::int64_t b, std::int64_t c) {
    std::int64_t prod = 0;
    std::int64_t sum = 0;
    if (__builtin_mul_overflow(b, c, &prod) || __builtin_add_overflow(a, prod, &sum)) {
        throw Overflow{};
    }
    return sum;
}

// row += factor * pivot
inline SparseRow axpy(const SparseRow& row, std::int64_t factor, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, checked_fma(0, factor, pivot[j].second));
            ++j;
        } else {
            std::int64_t v = checked_fma(row[i].second, factor, pivot[j].second);
            if (v != 0) {
                out.emplace_back(row[i].first, v);
            }
            ++i;
            ++j;
        }
    }
    return out;
}

inline int bareiss_rank(std::vector<std::vector<boost::multiprecision::cpp_int>> m) {
    using boost::multiprecision::cpp_int;
    const std::size_t rows = m.size();
    if (rows == 0) {
        return 0;
    }
    const std::size_t cols = m[0].size();
    int rank = 0;
    cpp_int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
        ++rank;
    }
    return rank;
}

inline int dense_rank(const std::vector<SparseRow>& rows) {
    std::vector<int> cols;
    for (const auto& row : rows) {
        for (const auto& [c, v] : row) {
            cols.push_back(c);
        }
    }
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    if (cols.empty()) {
        return 0;
    }
    std::vector<std::vector<boost::multiprecision::cpp_int>> m(
        rows.size(), std::vector<boost::multiprecision::cpp_int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (const auto& [c, v] : rows[i]) {
            auto pos = std::lower_bound(cols.begin(), cols.end(), c) - cols.begin();
            m[i][static_cast<std::size_t>(pos)] = v;
        }
    }
    return bareiss_rank(std::move(m));
}

} // namespace detail

/// Exact rank over the rationals of an integer matrix given by sparse rows.
/// Unit pivots are eliminated in machine integers; whatever remains goes through
/// fraction-free elimination in arbitrary precision.
inline int exact_rank(std::vector<SparseRow> rows) {
    const std::vector<SparseRow> original = rows;
    try {
        int rank = 0;
        std::vector<char> alive(rows.size(), 1);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].empty()) {
                alive[i] = 0;
            }
        }
        while (true) {
            std::size_t best = rows.size();
            int best_col = -1;
            std::int64_t best_val = 0;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (!alive[i]) {
                    continue;
                }
                if (best != rows.size() && rows[i].size() >= rows[best].size()) {
                    continue;
                }
                for (const auto& [c, v] : rows[i]) {
                    if (v == 1 || v == -1) {
                        best = i;
                        best_col = c;
                        best_val = v;
                        break;
                    }
                }
            }
            if (best == rows.size()) {
                break;
            }
            alive[best] = 0;
            ++rank;
            const SparseRow pivot = rows[best];
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (!alive[i]) {
                    continue;
                }
                auto it = std::lower_bound(rows[i].begin(), rows[i].end(), std::make_pair(best_col, std::int64_t{0}),
                                           [](const auto& a, const auto& b) { return a.first < b.first; });
                if (it == rows[i].end() || it->first != best_col) {
                    continue;
                }
                // pivot value is +-1, so its inverse is itself
                std::int64_t factor = detail::checked_fma(0, -it->second, best_val);
                rows[i] = detail::axpy(rows[i], factor, pivot);
                if (rows[i].empty()) {
                    alive[i] = 0;
                }
            }
        }
        std::vector<SparseRow> rest;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (alive[i]) {
                rest.push_back(std::move(rows[i]));
            }
        }
        return rank + detail::dense_rank(rest);
    } catch (const detail::Overflow&) {
        return detail::dense_rank(original);
    }
}

} // namespace ufi

#endif
