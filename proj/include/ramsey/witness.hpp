// Embedding certificates and their independent re-verification.
#ifndef RAMSEY_WITNESS_HPP
#define RAMSEY_WITNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/pattern.hpp"

namespace ramsey {

struct Witness {
    StructureKind kind = StructureKind::Berge;
    int color = 0;
    std::vector<int> core;                 // core[i] = host vertex of pattern vertex i
    std::vector<VertexSet> edge_assignment;  // aligned with pattern edges; empty for shadow
    std::vector<VertexSet> extras;         // expansion: per-edge extra sets
    VertexSet suspension_set = 0;          // suspension: the shared (r-s)-set

    VertexSet core_image() const;
    VertexSet mapped_edge(VertexSet pattern_edge) const;

    std::string to_json() const;
    static Witness from_json_text(const std::string& text);
};

struct WitnessViolation {
    std::string what;  // e.g. "injectivity", "color", "containment", "trace-exact"
};

// Re-checks every structural invariant of the witness against the actual
// coloring, independently of how the witness was produced.
std::optional<WitnessViolation> verify_witness(const Coloring& c, const Witness& w,
                                               const PatternSpec& p);

}  // namespace ramsey

#endif
