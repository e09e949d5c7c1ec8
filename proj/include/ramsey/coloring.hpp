// Colorings of complete r-uniform hypergraphs and the vertex permutation action.
#ifndef RAMSEY_COLORING_HPP
#define RAMSEY_COLORING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/subsets.hpp"

namespace ramsey {

using Color = std::uint8_t;

// One color per r-subset of [n], indexed by colex rank. For n < r there
// are no edges and the coloring is empty but still well-formed.
struct Coloring {
    int n = 0;
    int r = 2;
    int k = 2;
    std::vector<Color> colors;

    Coloring() = default;
    Coloring(int n_, int r_, int k_)
        : n(n_), r(r_), k(k_), colors(binomial(n_, r_), 0) {}

    std::uint64_t edge_count() const { return colors.size(); }
    Color color_of(VertexSet edge) const { return colors[colex_rank(edge)]; }

    bool operator==(const Coloring&) const = default;

    std::string to_json() const;
    static Coloring from_json(const std::string& text);
};

struct ColoringViolation {
    std::string what;             // "length" or "color-range" or "parameters"
    std::int64_t index = -1;      // offending rank for color-range
};

// Checks the structural invariants; nullopt means well-formed.
std::optional<ColoringViolation> validate_coloring(const Coloring& c);

// Search state: edges of colex rank < assigned are colored, the rest blank.
struct PartialColoring {
    Coloring coloring;
    std::uint64_t assigned = 0;
};

struct Permutation {
    std::vector<int> image;  // image[v] = where v goes

    static Permutation identity(int n);
    Permutation inverse() const;
    // (*this) after other: result(v) = this(other(v))
    Permutation compose(const Permutation& other) const;
    bool is_valid() const;

    int operator()(int v) const { return image[v]; }
    VertexSet apply(VertexSet s) const;
};

// Relabels vertices: the returned coloring gives edge e the color c gives
// p^{-1}(e). Throws std::invalid_argument on size mismatch.
Coloring apply_permutation(const Coloring& c, const Permutation& p);

}  // namespace ramsey

#endif
