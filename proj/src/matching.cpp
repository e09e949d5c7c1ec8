#include "ramsey/matching.hpp"

namespace ramsey {

namespace {

bool augment(int u, const std::vector<std::vector<int>>& adj,
             std::vector<int>& match_left, std::vector<int>& match_right,
             std::vector<char>& visited) {
    for (int v : adj[u]) {
        if (visited[v]) continue;
        visited[v] = 1;
        if (match_right[v] < 0 ||
            augment(match_right[v], adj, match_left, match_right, visited)) {
            match_left[u] = v;
            match_right[v] = u;
            return true;
        }
    }
    return false;
}

}  // namespace

MatchingResult max_bipartite_matching(const std::vector<std::vector<int>>& adjacency,
                                      int right_count) {
    MatchingResult res;
    res.match_left.assign(adjacency.size(), -1);
    std::vector<int> match_right(right_count, -1);
    std::vector<char> visited(right_count, 0);
    for (std::size_t u = 0; u < adjacency.size(); ++u) {
        std::fill(visited.begin(), visited.end(), 0);
        if (augment(static_cast<int>(u), adjacency, res.match_left, match_right, visited)) {
            ++res.size;
        }
    }
    return res;
}

}  // namespace ramsey
