// Maximum bipartite matching by augmenting paths (Kuhn). Left sides here
// are pattern edge lists, so they stay tiny; no need for Hopcroft-Karp.
#ifndef RAMSEY_MATCHING_HPP
#define RAMSEY_MATCHING_HPP

#include <vector>

namespace ramsey {

struct MatchingResult {
    // match_left[i] = right index matched to left i, or -1
    std::vector<int> match_left;
    int size = 0;

    bool saturates_left() const {
        for (int m : match_left) if (m < 0) return false;
        return true;
    }
};

// adjacency[i] lists the right-side neighbors of left vertex i; right
// indices may be any non-negative ints below right_count.
MatchingResult max_bipartite_matching(const std::vector<std::vector<int>>& adjacency,
                                      int right_count);

}  // namespace ramsey

#endif
