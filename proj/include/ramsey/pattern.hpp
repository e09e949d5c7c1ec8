// Target structures: an s-uniform pattern hypergraph plus the containment
// notion (berge / trace / expansion / suspension / shadow) it is sought under.
#ifndef RAMSEY_PATTERN_HPP
#define RAMSEY_PATTERN_HPP

#include <string>
#include <vector>

#include "ramsey/subsets.hpp"

namespace ramsey {

enum class StructureKind { Berge, Trace, Expansion, Suspension, Shadow };

const char* kind_name(StructureKind k);
StructureKind kind_from_name(const std::string& name);

struct PatternSpec {
    StructureKind kind = StructureKind::Berge;
    int s = 2;                      // pattern uniformity
    int t = 0;                      // pattern vertex count
    std::vector<VertexSet> edges;   // s-subsets of [t], colex order
    bool is_clique = false;         // all C(t,s) s-subsets present

    // K_t^{(s)}: the complete s-uniform pattern on t vertices.
    static PatternSpec clique(StructureKind kind, int t, int s = 2);

    bool operator==(const PatternSpec&) const = default;

    // Compact grammar: "<kind>:K<t>" or "<kind>:K<t>^(<s>)", e.g. "berge:K4",
    // "trace:K5^(3)". Throws std::invalid_argument on malformed input.
    static PatternSpec parse(const std::string& text);
    std::string render() const;  // inverse of parse for clique patterns

    std::string to_json() const;
    static PatternSpec from_json_text(const std::string& text);
};

// Structural sanity against a host: every edge has exactly s vertices in [t],
// s <= r, and shadow patterns are graphs.
bool pattern_valid(const PatternSpec& p, int host_r);

}  // namespace ramsey

#endif
