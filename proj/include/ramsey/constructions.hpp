// Lower-bound colorings, each paired with machine verification through the
// detectors, plus the local-lemma bound evaluator.
#ifndef RAMSEY_CONSTRUCTIONS_HPP
#define RAMSEY_CONSTRUCTIONS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ramsey/coloring.hpp"
#include "ramsey/detect.hpp"

namespace ramsey {

struct ConstructionRecipe {
    std::string name;
    std::map<std::string, std::int64_t> params;
    TargetList guarantee;  // per-color patterns asserted absent
    std::optional<std::uint64_t> seed;
    bool verified = false;

    std::string to_json() const;
    static ConstructionRecipe from_json_text(const std::string& text);
};

struct Construction {
    Coloring coloring;
    ConstructionRecipe recipe;
};

enum class TwoBlockMode { Berge, Shadow };

// Runs detect_any over the claimed guarantee; nullopt means the claim holds.
std::optional<std::pair<int, Witness>> verify_recipe(const Coloring& c,
                                                     const ConstructionRecipe& recipe);

// Blocks A (t-2) and B (s-2) on t+s-4 vertices; a triple is blue iff it has
// at least two vertices in A. Berge mode claims no blue BK_t / red BK_s,
// shadow mode no blue shadow-K_t / red shadow-K_s.
Construction two_block(int t, int s, TwoBlockMode mode, bool check = true);

// Blue iff the hyperedge contains both distinguished vertices 0 and 1.
Construction special_pair(int n, int r, bool check = true);

// s-1 classes of floor(t/a) vertices, uniformity a+1; red iff the edge meets
// every class in at most one vertex. Claims no red shadow-K_s and no blue
// suspension-K_t^{(a)}.
Construction class_partition_suspension(int t, int s, int a, bool check = true);

// All edges one color.
Construction monochromatic_clique(int n, int r, int color, TargetList guarantee,
                                  bool check = true);

// Multicolor class blow-up. epsilon is the exact rational eps_num/eps_den in
// (0,1); base_colorings[s] must be an s-uniform coloring with no monochromatic
// Berge clique of size ceil(t^(1-epsilon)) (caller-verified or generated via
// find_clique_free_base). r = 3 uses the three-color layout; r >= 4 the
// recursive one with within-class edges on color 0 and a dedicated color for
// edges spanning r classes. The clique-freeness guarantee only kicks in for
// large t, so verification is opt-in; verified stays false when skipped.
Construction superlinear_multicolor(int r, int t, std::int64_t eps_num, std::int64_t eps_den,
                                    const std::map<int, Coloring>& base_colorings,
                                    bool check = false);

// Seeded random sampling until a k-coloring of K_n^{(s)} without a
// monochromatic Berge-K_q^{(s)} appears; throws after max_tries failures.
Coloring find_clique_free_base(int n, int s, int k, int q, std::uint64_t seed,
                               int max_tries = 10000);

// smallest m with m^den >= t^num, i.e. ceil(t^(num/den))
std::int64_t pow_ceil(std::int64_t t, std::int64_t num, std::int64_t den);

// Largest n >= t for which the symmetric-local-lemma condition
//   e * (1 + C(t,2) C(r,2) C(n,t-2)) * 2^(1-C(t,2)) < 1
// holds, evaluated with exact integers against a rational upper bound on e.
// nullopt when even n = t fails.
std::optional<std::int64_t> lll_suspension_bound(int t, int r);

// The raw condition above at a specific n, same exact evaluation.
bool lll_condition_holds(int t, int r, std::int64_t n);

}  // namespace ramsey

#endif
