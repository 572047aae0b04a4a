#ifndef UFI_HOMOLOGY_HPP
#define UFI_HOMOLOGY_HPP

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "bits.hpp"
#include "linalg.hpp"

namespace ufi {

/// Reduced Betti numbers over Q of the simplicial complex whose faces are `faces`.
/// The result has entries for dimensions -1 .. top_dim (index d+1).
/// `faces` must be closed under taking subsets; an empty list is the void complex.
inline std::vector<long long> reduced_homology(const std::vector<VertexSet>& faces, int top_dim) {
    std::vector<long long> out(static_cast<std::size_t>(top_dim + 2), 0);
    if (faces.empty()) {
        return out;
    }
    int max_dim = -1;
    for (VertexSet f : faces) {
        max_dim = std::max(max_dim, cardinality(f) - 1);
    }
    // chain groups up to top_dim + 1 are needed
    const int limit = std::min(max_dim, top_dim + 1);
    std::vector<std::vector<VertexSet>> by_dim(static_cast<std::size_t>(limit + 2));
    for (VertexSet f : faces) {
        int d = cardinality(f) - 1;
        if (d <= limit) {
            by_dim[static_cast<std::size_t>(d + 1)].push_back(f);
        }
    }
    std::vector<std::unordered_map<VertexSet, int>> index(by_dim.size());
    for (std::size_t d = 0; d < by_dim.size(); ++d) {
        std::sort(by_dim[d].begin(), by_dim[d].end(), face_less);
        for (std::size_t i = 0; i < by_dim[d].size(); ++i) {
            index[d][by_dim[d][i]] = static_cast<int>(i);
        }
    }
    // rank of the boundary from dimension d to d-1, stored at d+1
    std::vector<long long> rank(by_dim.size() + 1, 0);
    for (std::size_t d = 1; d < by_dim.size(); ++d) {
        std::vector<SparseRow> rows;
        rows.reserve(by_dim[d].size());
        for (VertexSet f : by_dim[d]) {
            SparseRow row;
            int pos = 0;
            for (int v : members(f)) {
                auto it = index[d - 1].find(f & ~bit(v));
                if (it != index[d - 1].end()) {
                    row.emplace_back(it->second, (pos % 2 == 0) ? 1 : -1);
                }
                ++pos;
            }
            std::sort(row.begin(), row.end());
            rows.push_back(std::move(row));
        }
        rank[d] = exact_rank(std::move(rows));
    }
    for (int d = -1; d <= top_dim; ++d) {
        auto k = static_cast<std::size_t>(d + 1);
        if (k >= by_dim.size()) {
            break;
        }
        out[k] = static_cast<long long>(by_dim[k].size()) - rank[k] - rank[k + 1];
    }
    return out;
}

} // namespace ufi

#endif
