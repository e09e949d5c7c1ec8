// Arrowing decisions by exhaustive depth-first search over colex edge order,
// with early-witness pruning and optional symmetry reduction. A serial
// reference implementation is kept alongside the OpenMP-parallel search;
// both return identical results.
#ifndef RAMSEY_SEARCH_HPP
#define RAMSEY_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/detect.hpp"

namespace ramsey {

enum class PruningMode { None, FirstEdge, LexLeader };

const char* pruning_name(PruningMode m);
PruningMode pruning_from_name(const std::string& name);

struct SearchOptions {
    PruningMode pruning = PruningMode::None;
    int threads = 1;
    int split_depth = 0;              // 0 = pick automatically
    std::uint64_t max_nodes = 0;      // 0 = unlimited
    double max_seconds = 0.0;         // 0 = unlimited
    bool serial_reference = false;    // force the serial implementation
};

enum class DecisionStatus { Arrows, CounterexampleFound, Indeterminate };

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t symmetry_prunes = 0;
    std::uint64_t witness_prunes = 0;
    double seconds = 0.0;
};

struct Decision {
    DecisionStatus status = DecisionStatus::Indeterminate;
    std::optional<Coloring> counterexample;
    SearchStats stats;

    bool arrows() const { return status == DecisionStatus::Arrows; }
};

// Does every k-coloring of K_n^{(r)} contain a monochromatic target?
// k = targets.size(). Budget exhaustion yields Indeterminate, never a bound.
Decision decide(int n, int r, const TargetList& targets, const SearchOptions& opts = {});

// decide(...).counterexample, as its own entry point.
std::optional<Coloring> find_counterexample(int n, int r, const TargetList& targets,
                                            const SearchOptions& opts = {});

// Spec-level pruning predicate: does the colored prefix (blank edges absent)
// already contain a monochromatic target?
bool prune_subsumed(const PartialColoring& pc, const TargetList& targets);

// True iff no permutation in the group maps the colored prefix to a strictly
// colex-smaller color word (comparison stops at the first blank position).
bool is_lex_leader(const PartialColoring& pc, const std::vector<Permutation>& group);

std::vector<Permutation> symmetric_group(int n);

struct Certificate {
    int r = 0;
    int k = 0;
    std::vector<std::string> targets;  // rendered pattern grammar, color order
    int value = 0;
    Coloring lower_witness;
    struct UpperToken {
        std::string pruning;
        std::uint64_t nodes = 0;
        std::uint64_t seed = 0;
    } upper_token;

    std::string to_json() const;
    static Certificate from_json_text(const std::string& text);
};

enum class RamseyStatus { Found, NotFound, Indeterminate };

struct RamseyResult {
    RamseyStatus status = RamseyStatus::Indeterminate;
    std::optional<Certificate> certificate;
    SearchStats stats;  // accumulated over all decide calls
};

// Smallest N in [n_lo, n_hi] that arrows, with the N-1 counterexample.
RamseyResult ramsey_number(int r, const TargetList& targets, int n_lo, int n_hi,
                           const SearchOptions& opts = {});

}  // namespace ramsey

#endif
