#include "ramsey/subsets.hpp"

namespace ramsey {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return result;
}

std::uint64_t colex_rank(VertexSet edge) {
    std::uint64_t rank = 0;
    int i = 1;
    while (edge) {
        int v = std::countr_zero(edge);
        rank += binomial(v, i);
        ++i;
        edge &= edge - 1;
    }
    return rank;
}

VertexSet colex_unrank(std::uint64_t rank, int r) {
    VertexSet edge = 0;
    for (int i = r; i >= 1; --i) {
        // largest v with C(v, i) <= rank
        int v = i - 1;
        while (binomial(v + 1, i) <= rank) ++v;
        rank -= binomial(v, i);
        edge = with_vertex(edge, v);
    }
    return edge;
}

std::vector<VertexSet> complete_edge_set(int n, int r) {
    if (r < 2 || r > n || n > MAX_VERTICES) {
        throw std::invalid_argument("complete_edge_set: need 2 <= r <= n <= 64");
    }
    std::vector<VertexSet> edges;
    edges.reserve(binomial(n, r));
    for_each_subset(n, r, [&](VertexSet s) { edges.push_back(s); });
    return edges;
}

std::vector<int> set_to_vertices(VertexSet s) {
    std::vector<int> vs;
    vs.reserve(set_size(s));
    while (s) {
        vs.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return vs;
}

VertexSet vertices_to_set(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) {
        if (v < 0 || v >= MAX_VERTICES) throw std::invalid_argument("vertex out of range");
        s = with_vertex(s, v);
    }
    return s;
}

}  // namespace ramsey
