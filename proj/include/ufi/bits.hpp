#ifndef UFI_BITS_HPP
#define UFI_BITS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace ufi {

/// A subset of at most 64 vertex (or variable) indices.
using VertexSet = std::uint64_t;

constexpr int max_ground = 64;

inline int cardinality(VertexSet s) { return std::popcount(s); }

inline VertexSet bit(int i) { return VertexSet{1} << i; }

inline bool has(VertexSet s, int i) { return ((s >> i) & 1u) != 0; }

inline bool subset_of(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

inline int lowest(VertexSet s) { return std::countr_zero(s); }

inline std::vector<int> members(VertexSet s) {
    std::vector<int> out;
    while (s != 0) {
        out.push_back(lowest(s));
        s &= s - 1;
    }
    return out;
}

inline VertexSet from_members(const std::vector<int>& idx) {
    VertexSet s = 0;
    for (int i : idx) {
        s |= bit(i);
    }
    return s;
}

/// Canonical order: by cardinality, then lexicographically on sorted index lists.
inline bool face_less(VertexSet a, VertexSet b) {
    int ca = cardinality(a);
    int cb = cardinality(b);
    if (ca != cb) {
        return ca < cb;
    }
    if (a == b) {
        return false;
    }
    return has(a, lowest(a ^ b));
}

/// Iterate over all subsets of `s` (including 0 and s itself).
template <class F>
void for_each_subset(VertexSet s, F&& f) {
    VertexSet sub = s;
    while (true) {
        f(sub);
        if (sub == 0) {
            break;
        }
        sub = (sub - 1) & s;
    }
}

} // namespace ufi

#endif
