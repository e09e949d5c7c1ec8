// Colex enumeration and ranking of r-subsets of [n], stored as 64-bit masks.
#ifndef RAMSEY_SUBSETS_HPP
#define RAMSEY_SUBSETS_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ramsey {

// A vertex set over at most 64 vertices.
using VertexSet = std::uint64_t;

constexpr int MAX_VERTICES = 64;

inline int set_size(VertexSet s) { return std::popcount(s); }

inline bool contains(VertexSet s, int v) { return (s >> v) & 1u; }

inline VertexSet with_vertex(VertexSet s, int v) { return s | (VertexSet{1} << v); }

// C(n, k); returns 0 for k < 0 or k > n. Overflow-safe for the desk
// scale this library targets (n <= 64, k <= 20).
std::uint64_t binomial(int n, int k);

// Colex rank of an r-subset among all r-subsets of [n]. The rank does
// not depend on n beyond validity of the subset.
std::uint64_t colex_rank(VertexSet edge);

// Inverse of colex_rank for subsets of size r.
VertexSet colex_unrank(std::uint64_t rank, int r);

// All C(n, r) r-subsets of [n] in colex order. Throws std::invalid_argument
// unless 2 <= r <= n.
std::vector<VertexSet> complete_edge_set(int n, int r);

std::vector<int> set_to_vertices(VertexSet s);
VertexSet vertices_to_set(const std::vector<int>& vs);

// In-place advance to the next set of the same size in colex order
// (Gosper's hack). Returns false when the set no longer fits in [n].
inline bool next_subset(VertexSet& s, int n) {
    VertexSet c = s & (~s + 1);
    VertexSet r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
    return n >= MAX_VERTICES || s < (VertexSet{1} << n);
}

inline VertexSet first_subset(int r) { return (r >= MAX_VERTICES) ? ~VertexSet{0} : (VertexSet{1} << r) - 1; }

// Calls f(subset) for every r-subset of [n] in colex order. f returning
// false stops the enumeration early.
template <typename F>
void for_each_subset(int n, int r, F&& f) {
    if (r < 0 || r > n) return;
    if (r == 0) { f(VertexSet{0}); return; }
    VertexSet s = first_subset(r);
    if (n < MAX_VERTICES && s >= (VertexSet{1} << n)) return;
    for (;;) {
        if constexpr (std::is_same_v<decltype(f(s)), bool>) {
            if (!f(s)) return;
        } else {
            f(s);
        }
        if (!next_subset(s, n)) return;
    }
}

}  // namespace ramsey

#endif
