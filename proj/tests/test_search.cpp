#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "ramsey/detect.hpp"
#include "ramsey/search.hpp"

using namespace ramsey;

namespace {

PatternSpec bk(int t) { return PatternSpec::clique(StructureKind::Berge, t); }

// Ground truth by enumerating every coloring.
bool arrows_naive(int n, int r, const TargetList& targets) {
    const int k = static_cast<int>(targets.size());
    const std::uint64_t edges = binomial(n, r);
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < edges; ++i) total *= k;
    for (std::uint64_t code = 0; code < total; ++code) {
        Coloring c(n, r, k);
        std::uint64_t x = code;
        for (std::uint64_t i = 0; i < edges; ++i) {
            c.colors[i] = x % k;
            x /= k;
        }
        if (!detect_any(c, targets)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("decide matches exhaustive enumeration for n <= 5, r = 3") {
    for (int n = 3; n <= 5; ++n) {
        for (int t1 = 2; t1 <= 4; ++t1) {
            for (int t2 = t1; t2 <= 4; ++t2) {
                TargetList targets = {bk(t1), bk(t2)};
                bool truth = arrows_naive(n, 3, targets);
                for (PruningMode pruning : {PruningMode::None, PruningMode::FirstEdge,
                                            PruningMode::LexLeader}) {
                    SearchOptions opts;
                    opts.pruning = pruning;
                    Decision d = decide(n, 3, targets, opts);
                    REQUIRE(d.status != DecisionStatus::Indeterminate);
                    CHECK(d.arrows() == truth);
                    if (!d.arrows()) {
                        REQUIRE(d.counterexample.has_value());
                        CHECK(!detect_any(*d.counterexample, targets).has_value());
                    }
                }
            }
        }
    }
}

TEST_CASE("pruning never changes the answer on asymmetric targets") {
    TargetList targets = {bk(2), bk(4)};
    for (int n = 3; n <= 5; ++n) {
        SearchOptions none, lex;
        lex.pruning = PruningMode::LexLeader;
        CHECK(decide(n, 3, targets, none).arrows() == decide(n, 3, targets, lex).arrows());
    }
}

TEST_CASE("serial reference and parallel search agree") {
    for (int n = 5; n <= 6; ++n) {
        TargetList targets = {bk(3), bk(4)};
        SearchOptions serial, parallel;
        serial.serial_reference = true;
        parallel.threads = 4;
        Decision a = decide(n, 3, targets, serial);
        Decision b = decide(n, 3, targets, parallel);
        CHECK(a.status == b.status);
        if (a.counterexample && b.counterexample) {
            CHECK(!detect_any(*a.counterexample, targets).has_value());
            CHECK(!detect_any(*b.counterexample, targets).has_value());
        }
    }
}

TEST_CASE("node budget yields indeterminate, never a wrong bound") {
    SearchOptions opts;
    opts.max_nodes = 3;
    Decision d = decide(6, 3, {bk(4), bk(4)}, opts);
    CHECK(d.status == DecisionStatus::Indeterminate);
    CHECK(!d.counterexample.has_value());
}

TEST_CASE("prune_subsumed sees witnesses in the colored prefix only") {
    // all-blue prefix on K_5^(3): after enough edges a blue BK_3 exists
    PartialColoring pc;
    pc.coloring = Coloring(5, 3, 2);
    pc.assigned = 0;
    TargetList targets = {bk(3), bk(3)};
    CHECK(!prune_subsumed(pc, targets));
    pc.assigned = pc.coloring.edge_count();
    CHECK(prune_subsumed(pc, targets));
    // a prefix of 2 edges cannot hold the 3 distinct edges BK_3 needs
    pc.assigned = 2;
    CHECK(!prune_subsumed(pc, targets));
}

TEST_CASE("lex-leader count equals orbit count under vertex relabeling") {
    const int n = 4, r = 3;
    const std::uint64_t E = binomial(n, r);
    std::vector<Permutation> group = symmetric_group(n);
    CHECK(group.size() == 24);

    // orbit count by brute force union over the action
    std::set<std::vector<Color>> seen;
    int orbits = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << E); ++bits) {
        Coloring c(n, r, 2);
        for (std::uint64_t i = 0; i < E; ++i) c.colors[i] = (bits >> i) & 1;
        if (seen.count(c.colors)) continue;
        ++orbits;
        for (const Permutation& p : group) seen.insert(apply_permutation(c, p).colors);
    }

    int leaders = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << E); ++bits) {
        PartialColoring pc;
        pc.coloring = Coloring(n, r, 2);
        for (std::uint64_t i = 0; i < E; ++i) pc.coloring.colors[i] = (bits >> i) & 1;
        pc.assigned = E;
        if (is_lex_leader(pc, group)) ++leaders;
    }
    CHECK(leaders == orbits);
}

TEST_CASE("is_lex_leader is sound on partial words") {
    // a partial word must never be pruned if some completion is a leader
    const int n = 4, r = 3;
    const std::uint64_t E = binomial(n, r);
    std::vector<Permutation> group = symmetric_group(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << E); ++bits) {
        PartialColoring full;
        full.coloring = Coloring(n, r, 2);
        for (std::uint64_t i = 0; i < E; ++i) full.coloring.colors[i] = (bits >> i) & 1;
        full.assigned = E;
        if (!is_lex_leader(full, group)) continue;
        for (std::uint64_t cut = 0; cut <= E; ++cut) {
            PartialColoring pre = full;
            pre.assigned = cut;
            CHECK(is_lex_leader(pre, group));
        }
    }
}

TEST_CASE("ramsey_number produces verified certificates") {
    SearchOptions opts;
    RamseyResult res = ramsey_number(3, {bk(3), bk(3)}, 2, 8, opts);
    REQUIRE(res.status == RamseyStatus::Found);
    const Certificate& cert = *res.certificate;
    CHECK(cert.value == 5);
    CHECK(cert.lower_witness.n == 4);
    CHECK(!detect_any(cert.lower_witness, {bk(3), bk(3)}).has_value());

    Certificate back = Certificate::from_json_text(cert.to_json());
    CHECK(back.to_json() == cert.to_json());
    CHECK(back.value == cert.value);
    CHECK(back.lower_witness == cert.lower_witness);
}

TEST_CASE("ramsey_number reports not-found when the range is too low") {
    RamseyResult res = ramsey_number(3, {bk(3), bk(3)}, 2, 4, {});
    CHECK(res.status == RamseyStatus::NotFound);
}

TEST_CASE("degenerate hosts: n < r means the empty coloring is a counterexample") {
    Decision d = decide(2, 3, {bk(2), bk(2)});
    CHECK(d.status == DecisionStatus::CounterexampleFound);
    REQUIRE(d.counterexample.has_value());
    CHECK(d.counterexample->edge_count() == 0);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(decide(5, 1, {bk(2), bk(2)}), std::invalid_argument);
    CHECK_THROWS_AS(decide(5, 3, {bk(2)}), std::invalid_argument);
    SearchOptions lex;
    lex.pruning = PruningMode::LexLeader;
    CHECK_THROWS_AS(decide(10, 3, {bk(3), bk(3)}, lex), std::invalid_argument);
    CHECK_THROWS_AS(pruning_from_name("bogus"), std::invalid_argument);
    CHECK(pruning_from_name("lex-leader") == PruningMode::LexLeader);
    CHECK(pruning_from_name(pruning_name(PruningMode::FirstEdge)) == PruningMode::FirstEdge);
}
