// Monochromatic structure detection. Each detector returns the first witness
// in colex order of core subsets, or nullopt.
#ifndef RAMSEY_DETECT_HPP
#define RAMSEY_DETECT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/pattern.hpp"
#include "ramsey/witness.hpp"

namespace ramsey {

std::optional<Witness> detect_berge(const Coloring& c, int color, const PatternSpec& p);
std::optional<Witness> detect_trace(const Coloring& c, int color, const PatternSpec& p);
std::optional<Witness> detect_expansion(const Coloring& c, int color, const PatternSpec& p);
std::optional<Witness> detect_suspension(const Coloring& c, int color, const PatternSpec& p);
std::optional<Witness> detect_shadow(const Coloring& c, int color, const PatternSpec& p);

// Dispatch on p.kind.
std::optional<Witness> detect(const Coloring& c, int color, const PatternSpec& p);

// Berge detection restricted to one fixed core placement.
std::optional<Witness> detect_berge_with_core(const Coloring& c, int color,
                                              const PatternSpec& p,
                                              const std::vector<int>& core);

// One optional target per color; a disengaged entry leaves that color
// unconstrained.
using TargetList = std::vector<std::optional<PatternSpec>>;

// First satisfied target in color order. This is the "coloring is good"
// predicate the search negates.
std::optional<std::pair<int, Witness>> detect_any(const Coloring& c, const TargetList& targets);

}  // namespace ramsey

#endif
