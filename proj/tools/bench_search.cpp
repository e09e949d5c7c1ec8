// Benchmarks the OpenMP-parallel arrowing search against the serial
// reference on a few representative instances and checks they agree.
#include <cstdlib>
#include <iostream>

#include "ramsey/search.hpp"

using namespace ramsey;

namespace {

struct Instance {
    std::string label;
    int n;
    int r;
    TargetList targets;
    bool lex_only = false;  // too large without symmetry reduction
};

double run(const Instance& inst, bool serial, int threads, PruningMode pruning,
           DecisionStatus& status, std::uint64_t& nodes) {
    SearchOptions opts;
    opts.pruning = pruning;
    opts.serial_reference = serial;
    opts.threads = threads;
    Decision d = decide(inst.n, inst.r, inst.targets, opts);
    status = d.status;
    nodes = d.stats.nodes;
    return d.stats.seconds;
}

}  // namespace

int main(int argc, char** argv) {
    int threads = argc > 1 ? std::atoi(argv[1]) : 4;
    auto bk = [](int t) { return PatternSpec::clique(StructureKind::Berge, t); };
    std::vector<Instance> instances = {
        {"K6^(3) -> (BK4,BK4)", 6, 3, {bk(4), bk(4)}},
        {"K6^(3) -> (BK4,BK5)", 6, 3, {bk(4), bk(5)}},
        {"K6^(4) -> (BK4,BK4)", 6, 4, {bk(4), bk(4)}},
        {"K7^(3) -> (BK3,BK6)", 7, 3, {bk(3), bk(6)}},
        {"K7^(4) -> (BK6,BK6)", 7, 4, {bk(6), bk(6)}, true},
    };

    std::cout << "threads=" << threads << "\n";
    bool ok = true;
    for (const Instance& inst : instances) {
        for (PruningMode pruning : {PruningMode::None, PruningMode::LexLeader}) {
            if (inst.lex_only && pruning != PruningMode::LexLeader) continue;
            DecisionStatus st_s, st_p;
            std::uint64_t nodes_s = 0, nodes_p = 0;
            double t_serial = run(inst, true, 1, pruning, st_s, nodes_s);
            double t_par = run(inst, false, threads, pruning, st_p, nodes_p);
            bool agree = st_s == st_p;
            ok = ok && agree;
            std::cout << inst.label << " [" << pruning_name(pruning) << "]"
                      << "  serial " << t_serial << "s (" << nodes_s << " nodes)"
                      << "  parallel " << t_par << "s (" << nodes_p << " nodes)"
                      << "  speedup " << (t_par > 0 ? t_serial / t_par : 0.0)
                      << (agree ? "" : "  STATUS MISMATCH") << "\n";
        }
    }
    return ok ? 0 : 1;
}
