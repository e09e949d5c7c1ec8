#include "ramsey/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"
#include "ramsey/matching.hpp"

namespace ramsey {

const char* pruning_name(PruningMode m) {
    switch (m) {
        case PruningMode::None: return "none";
        case PruningMode::FirstEdge: return "first-edge";
        case PruningMode::LexLeader: return "lex-leader";
    }
    return "?";
}

PruningMode pruning_from_name(const std::string& name) {
    if (name == "none") return PruningMode::None;
    if (name == "first-edge") return PruningMode::FirstEdge;
    if (name == "lex-leader") return PruningMode::LexLeader;
    throw std::invalid_argument("unknown pruning mode '" + name + "'");
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<Permutation> group;
    Permutation p = Permutation::identity(n);
    do {
        group.push_back(p);
    } while (std::next_permutation(p.image.begin(), p.image.end()));
    return group;
}

bool prune_subsumed(const PartialColoring& pc, const TargetList& targets) {
    // Blank edges get a sentinel color no target refers to.
    Coloring c = pc.coloring;
    c.k = pc.coloring.k + 1;
    Color sentinel = static_cast<Color>(pc.coloring.k);
    for (std::uint64_t i = pc.assigned; i < c.colors.size(); ++i) c.colors[i] = sentinel;
    return detect_any(c, targets).has_value();
}

bool is_lex_leader(const PartialColoring& pc, const std::vector<Permutation>& group) {
    const Coloring& c = pc.coloring;
    std::vector<VertexSet> edges;
    edges.reserve(c.colors.size());
    for_each_subset(c.n, c.r, [&](VertexSet e) { edges.push_back(e); });
    for (const Permutation& p : group) {
        Permutation inv = p.inverse();
        for (std::uint64_t i = 0; i < pc.assigned; ++i) {
            std::uint64_t j = colex_rank(inv.apply(edges[i]));
            if (j >= pc.assigned) break;  // undefined; this permutation cannot refute
            if (c.colors[j] < c.colors[i]) return false;
            if (c.colors[j] > c.colors[i]) break;
        }
    }
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

struct TargetPlan {
    enum class Type { None, BergeClique, ShadowClique, Slow } type = Type::None;
    int t = 0;
    std::size_t needed_edges = 0;
};

enum class DfsOutcome { Exhausted, Found, Budget, Cancelled };

struct SymEntry {
    std::uint32_t sym;  // row index; bit 31 set = compare against the swapped word
    std::uint32_t pos;
};

constexpr std::uint32_t SWAP_BIT = 0x80000000u;

struct SearchContext {
    int n = 0, r = 0, k = 0;
    std::uint64_t E = 0;
    int P = 0;  // C(n,2)
    TargetList targets;
    std::vector<TargetPlan> plans;
    bool diagonal = false;
    SearchOptions opts;

    std::vector<VertexSet> edges;                 // rank -> set
    std::vector<std::vector<int>> edge_pairs;     // rank -> pair ranks inside edge
    std::vector<VertexSet> pair_sets;             // pair rank -> 2-subset
    std::map<int, std::vector<VertexSet>> tsubsets;
    std::map<int, std::vector<std::vector<int>>> tsubset_pairs;

    // mutable search state
    std::vector<Color> word;
    std::vector<std::uint64_t> color_count;
    std::vector<std::vector<std::vector<int>>> pair_edge_list;  // [color][pair]
    std::vector<std::vector<int>> pair_count;                   // [color][pair]
    std::vector<std::vector<VertexSet>> shadow_adj;             // [color][vertex]

    // matching scratch (right side indexed by edge rank); match_stamp
    // validates ownership for one whole matching instance, visit_stamp for
    // one augmentation within it
    std::vector<int> match_right;
    std::vector<std::uint32_t> right_stamp;
    std::vector<std::uint32_t> visit_stamp;
    std::uint32_t match_stamp = 0;
    std::uint32_t visit_counter = 0;

    // symmetry tables: rho[row][i] = rank of perm^{-1}(edge_i)
    std::vector<std::vector<std::uint16_t>> rho;
    std::vector<std::vector<SymEntry>> active_stack;

    // budget / cancellation
    std::uint64_t nodes = 0;
    std::uint64_t symmetry_prunes = 0;
    std::uint64_t witness_prunes = 0;
    std::uint64_t local_max_nodes = 0;
    Clock::time_point deadline{};
    bool has_deadline = false;
    std::atomic<std::uint64_t>* shared_nodes = nullptr;
    std::atomic<int>* best_found = nullptr;
    int task_index = -1;
    std::uint64_t since_check = 0;

    std::vector<Color> found_word;
};

TargetPlan classify(const std::optional<PatternSpec>& t) {
    TargetPlan plan;
    if (!t) return plan;
    if (t->is_clique && t->s == 2 && t->kind == StructureKind::Berge) {
        plan.type = TargetPlan::Type::BergeClique;
    } else if (t->is_clique && t->kind == StructureKind::Shadow) {
        plan.type = TargetPlan::Type::ShadowClique;
    } else {
        plan.type = TargetPlan::Type::Slow;
    }
    plan.t = t->t;
    plan.needed_edges = t->edges.size();
    return plan;
}

void build_context(SearchContext& ctx, int n, int r, const TargetList& targets,
                   const SearchOptions& opts) {
    ctx.n = n;
    ctx.r = r;
    ctx.k = static_cast<int>(targets.size());
    ctx.targets = targets;
    ctx.opts = opts;
    ctx.E = binomial(n, r);
    ctx.P = static_cast<int>(binomial(n, 2));

    ctx.edges.reserve(ctx.E);
    for_each_subset(n, r, [&](VertexSet e) { ctx.edges.push_back(e); });
    ctx.pair_sets.reserve(ctx.P);
    for_each_subset(n, 2, [&](VertexSet e) { ctx.pair_sets.push_back(e); });
    ctx.edge_pairs.resize(ctx.E);
    for (std::uint64_t i = 0; i < ctx.E; ++i) {
        std::vector<int> vs = set_to_vertices(ctx.edges[i]);
        for (std::size_t a = 0; a < vs.size(); ++a) {
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                VertexSet pair = with_vertex(with_vertex(0, vs[a]), vs[b]);
                ctx.edge_pairs[i].push_back(static_cast<int>(colex_rank(pair)));
            }
        }
    }

    for (const auto& t : targets) ctx.plans.push_back(classify(t));
    ctx.diagonal = true;
    for (const auto& t : targets) {
        if (!t || !(targets[0]) || !(*t == *targets[0])) ctx.diagonal = false;
    }

    for (const TargetPlan& plan : ctx.plans) {
        if (plan.type == TargetPlan::Type::BergeClique ||
            plan.type == TargetPlan::Type::ShadowClique) {
            int t = plan.t;
            if (t > n || ctx.tsubsets.count(t)) continue;
            auto& subs = ctx.tsubsets[t];
            auto& prs = ctx.tsubset_pairs[t];
            for_each_subset(n, t, [&](VertexSet s) {
                subs.push_back(s);
                std::vector<int> vs = set_to_vertices(s);
                std::vector<int> pair_ranks;
                for (std::size_t a = 0; a < vs.size(); ++a) {
                    for (std::size_t b = a + 1; b < vs.size(); ++b) {
                        VertexSet pair = with_vertex(with_vertex(0, vs[a]), vs[b]);
                        pair_ranks.push_back(static_cast<int>(colex_rank(pair)));
                    }
                }
                prs.push_back(std::move(pair_ranks));
            });
        }
    }

    ctx.word.assign(ctx.E, 0);
    ctx.color_count.assign(ctx.k, 0);
    ctx.pair_edge_list.assign(ctx.k, std::vector<std::vector<int>>(ctx.P));
    ctx.pair_count.assign(ctx.k, std::vector<int>(ctx.P, 0));
    ctx.shadow_adj.assign(ctx.k, std::vector<VertexSet>(n, 0));
    ctx.match_right.assign(ctx.E, -1);
    ctx.right_stamp.assign(ctx.E, 0);
    ctx.visit_stamp.assign(ctx.E, 0);

    if (opts.pruning == PruningMode::LexLeader) {
        if (n > 9) {
            throw std::invalid_argument(
                "lex-leader pruning builds S_n tables; supported for n <= 9");
        }
        Permutation p = Permutation::identity(n);
        do {
            Permutation inv = p.inverse();
            std::vector<std::uint16_t> row(ctx.E);
            for (std::uint64_t i = 0; i < ctx.E; ++i) {
                row[i] = static_cast<std::uint16_t>(colex_rank(inv.apply(ctx.edges[i])));
            }
            ctx.rho.push_back(std::move(row));
        } while (std::next_permutation(p.image.begin(), p.image.end()));
        ctx.active_stack.resize(ctx.E + 1);
    }
}

std::vector<SymEntry> root_active(const SearchContext& ctx) {
    std::vector<SymEntry> active;
    if (ctx.opts.pruning != PruningMode::LexLeader) return active;
    const bool swap_half = ctx.diagonal && ctx.k == 2;
    for (std::uint32_t row = 0; row < ctx.rho.size(); ++row) {
        if (row != 0) active.push_back({row, 0});  // row 0 is the identity
        if (swap_half) active.push_back({row | SWAP_BIT, 0});
    }
    return active;
}

void assign_edge(SearchContext& ctx, std::uint64_t idx, Color c) {
    ctx.word[idx] = c;
    ++ctx.color_count[c];
    for (int q : ctx.edge_pairs[idx]) {
        ctx.pair_edge_list[c][q].push_back(static_cast<int>(idx));
        if (++ctx.pair_count[c][q] == 1) {
            VertexSet pair = ctx.pair_sets[q];
            int u = std::countr_zero(pair);
            int v = std::countr_zero(pair & (pair - 1));
            ctx.shadow_adj[c][u] = with_vertex(ctx.shadow_adj[c][u], v);
            ctx.shadow_adj[c][v] = with_vertex(ctx.shadow_adj[c][v], u);
        }
    }
}

void unassign_edge(SearchContext& ctx, std::uint64_t idx, Color c) {
    --ctx.color_count[c];
    for (int q : ctx.edge_pairs[idx]) {
        ctx.pair_edge_list[c][q].pop_back();
        if (--ctx.pair_count[c][q] == 0) {
            VertexSet pair = ctx.pair_sets[q];
            int u = std::countr_zero(pair);
            int v = std::countr_zero(pair & (pair - 1));
            ctx.shadow_adj[c][u] &= ~(VertexSet{1} << v);
            ctx.shadow_adj[c][v] &= ~(VertexSet{1} << u);
        }
    }
}

bool kuhn_augment(SearchContext& ctx, int color, const std::vector<int>& left_pairs,
                  std::vector<int>& match_left, int u) {
    for (int e : ctx.pair_edge_list[color][left_pairs[u]]) {
        if (ctx.visit_stamp[e] == ctx.visit_counter) continue;
        ctx.visit_stamp[e] = ctx.visit_counter;
        int owner = ctx.right_stamp[e] == ctx.match_stamp ? ctx.match_right[e] : -1;
        if (owner < 0 || kuhn_augment(ctx, color, left_pairs, match_left, owner)) {
            ctx.match_right[e] = u;
            ctx.right_stamp[e] = ctx.match_stamp;
            match_left[u] = e;
            return true;
        }
    }
    return false;
}

// Saturating matching of the pairs of one core candidate into distinct
// same-color edges.
bool core_has_berge_clique(SearchContext& ctx, int color, const std::vector<int>& left_pairs) {
    for (int q : left_pairs) {
        if (ctx.pair_edge_list[color][q].empty()) return false;
    }
    std::vector<int> match_left(left_pairs.size(), -1);
    ++ctx.match_stamp;
    for (std::size_t u = 0; u < left_pairs.size(); ++u) {
        ++ctx.visit_counter;  // fresh visited marks per augmentation
        if (!kuhn_augment(ctx, color, left_pairs, match_left, static_cast<int>(u))) return false;
    }
    return true;
}

// A monochromatic target in color c can only have appeared through the edge
// just colored; restrict the scan accordingly.
bool has_new_witness(SearchContext& ctx, std::uint64_t idx, Color c) {
    const TargetPlan& plan = ctx.plans[c];
    switch (plan.type) {
        case TargetPlan::Type::None:
            return false;
        case TargetPlan::Type::BergeClique: {
            if (plan.t > ctx.n) return false;
            if (ctx.color_count[c] < plan.needed_edges) return false;
            VertexSet e = ctx.edges[idx];
            const auto& subs = ctx.tsubsets[plan.t];
            const auto& prs = ctx.tsubset_pairs[plan.t];
            for (std::size_t i = 0; i < subs.size(); ++i) {
                if (std::popcount(subs[i] & e) < 2) continue;
                if (core_has_berge_clique(ctx, c, prs[i])) return true;
            }
            return false;
        }
        case TargetPlan::Type::ShadowClique: {
            if (plan.t > ctx.n) return false;
            bool fresh = false;
            for (int q : ctx.edge_pairs[idx]) {
                if (ctx.pair_count[c][q] == 1) { fresh = true; break; }
            }
            if (!fresh) return false;
            VertexSet e = ctx.edges[idx];
            const auto& subs = ctx.tsubsets[plan.t];
            for (VertexSet T : subs) {
                if (std::popcount(T & e) < 2) continue;
                bool clique = true;
                VertexSet bits = T;
                while (bits) {
                    int v = std::countr_zero(bits);
                    if ((ctx.shadow_adj[c][v] & T) != (T & ~(VertexSet{1} << v))) {
                        clique = false;
                        break;
                    }
                    bits &= bits - 1;
                }
                if (clique) return true;
            }
            return false;
        }
        case TargetPlan::Type::Slow: {
            Coloring cc(ctx.n, ctx.r, ctx.k + 1);
            for (std::uint64_t i = 0; i <= idx; ++i) cc.colors[i] = ctx.word[i];
            for (std::uint64_t i = idx + 1; i < ctx.E; ++i) cc.colors[i] = static_cast<Color>(ctx.k);
            return detect(cc, c, *ctx.targets[c]).has_value();
        }
    }
    return false;
}

// Extends the lex-leader comparison states after the prefix grew to `prefix`.
// Returns false if some symmetry maps the prefix to a strictly smaller word.
bool extend_symmetries(SearchContext& ctx, std::uint64_t prefix,
                       const std::vector<SymEntry>& parent, std::vector<SymEntry>& child) {
    child.clear();
    for (SymEntry s : parent) {
        const auto& row = ctx.rho[s.sym & ~SWAP_BIT];
        const bool swap = (s.sym & SWAP_BIT) != 0;
        std::uint32_t pos = s.pos;
        int verdict = 0;  // 0 tied, -1 smaller image exists, +1 larger
        while (pos < prefix && row[pos] < prefix) {
            Color a = ctx.word[row[pos]];
            if (swap) a = static_cast<Color>(1 - a);
            Color b = ctx.word[pos];
            if (a != b) { verdict = a < b ? -1 : 1; break; }
            ++pos;
        }
        if (verdict < 0) return false;
        if (verdict == 0) child.push_back({s.sym, pos});
        // verdict > 0: image is strictly larger on this whole subtree; drop.
    }
    return true;
}

DfsOutcome dfs(SearchContext& ctx, std::uint64_t depth, const std::vector<SymEntry>& active) {
    if (depth == ctx.E) {
        ctx.found_word = ctx.word;
        return DfsOutcome::Found;
    }
    const bool lex = ctx.opts.pruning == PruningMode::LexLeader;
    int first_color_limit = ctx.k;
    if (depth == 0 && ctx.diagonal && ctx.opts.pruning != PruningMode::None) {
        first_color_limit = 1;  // color relabeling fixes the first edge
    }
    for (int c = 0; c < first_color_limit; ++c) {
        ++ctx.nodes;
        if (++ctx.since_check >= 1024) {
            ctx.since_check = 0;
            if (ctx.shared_nodes) ctx.shared_nodes->fetch_add(1024, std::memory_order_relaxed);
            if (ctx.best_found &&
                ctx.best_found->load(std::memory_order_relaxed) < ctx.task_index) {
                return DfsOutcome::Cancelled;
            }
            if (ctx.has_deadline && Clock::now() > ctx.deadline) return DfsOutcome::Budget;
        }
        if (ctx.local_max_nodes && ctx.nodes > ctx.local_max_nodes) return DfsOutcome::Budget;

        assign_edge(ctx, depth, static_cast<Color>(c));
        bool pruned = false;
        if (has_new_witness(ctx, depth, static_cast<Color>(c))) {
            ++ctx.witness_prunes;
            pruned = true;
        } else if (lex) {
            auto& child = ctx.active_stack[depth + 1];
            if (!extend_symmetries(ctx, depth + 1, active, child)) {
                ++ctx.symmetry_prunes;
                pruned = true;
            } else {
                // child must survive the recursive call; copy-free since each
                // depth owns its slot and colors at a depth run sequentially
                DfsOutcome out = dfs(ctx, depth + 1, child);
                unassign_edge(ctx, depth, static_cast<Color>(c));
                if (out != DfsOutcome::Exhausted) return out;
                continue;
            }
        }
        if (!pruned) {
            DfsOutcome out = dfs(ctx, depth + 1, active);
            unassign_edge(ctx, depth, static_cast<Color>(c));
            if (out != DfsOutcome::Exhausted) return out;
            continue;
        }
        unassign_edge(ctx, depth, static_cast<Color>(c));
    }
    return DfsOutcome::Exhausted;
}

struct FrontierTask {
    std::vector<Color> prefix;
    std::vector<SymEntry> active;
};

void collect_frontier(SearchContext& ctx, std::uint64_t depth, std::uint64_t split,
                      const std::vector<SymEntry>& active, std::vector<FrontierTask>& out) {
    if (depth == split) {
        FrontierTask task;
        task.prefix.assign(ctx.word.begin(), ctx.word.begin() + depth);
        task.active = active;
        out.push_back(std::move(task));
        return;
    }
    const bool lex = ctx.opts.pruning == PruningMode::LexLeader;
    int first_color_limit = ctx.k;
    if (depth == 0 && ctx.diagonal && ctx.opts.pruning != PruningMode::None) {
        first_color_limit = 1;
    }
    for (int c = 0; c < first_color_limit; ++c) {
        ++ctx.nodes;
        assign_edge(ctx, depth, static_cast<Color>(c));
        bool pruned = false;
        if (has_new_witness(ctx, depth, static_cast<Color>(c))) {
            ++ctx.witness_prunes;
            pruned = true;
        } else if (lex) {
            std::vector<SymEntry> child;
            if (!extend_symmetries(ctx, depth + 1, active, child)) {
                ++ctx.symmetry_prunes;
                pruned = true;
            } else {
                collect_frontier(ctx, depth + 1, split, child, out);
            }
        } else {
            collect_frontier(ctx, depth + 1, split, active, out);
        }
        (void)pruned;
        unassign_edge(ctx, depth, static_cast<Color>(c));
    }
}

Decision decide_serial(int n, int r, const TargetList& targets, const SearchOptions& opts) {
    SearchContext ctx;
    build_context(ctx, n, r, targets, opts);
    ctx.local_max_nodes = opts.max_nodes;
    if (opts.max_seconds > 0) {
        ctx.has_deadline = true;
        ctx.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(opts.max_seconds));
    }
    std::vector<SymEntry> active = root_active(ctx);
    DfsOutcome out = dfs(ctx, 0, active);

    Decision d;
    d.stats.nodes = ctx.nodes;
    d.stats.symmetry_prunes = ctx.symmetry_prunes;
    d.stats.witness_prunes = ctx.witness_prunes;
    switch (out) {
        case DfsOutcome::Found: {
            Coloring cex(n, r, ctx.k);
            cex.colors = ctx.found_word;
            d.status = DecisionStatus::CounterexampleFound;
            d.counterexample = std::move(cex);
            break;
        }
        case DfsOutcome::Exhausted:
            d.status = DecisionStatus::Arrows;
            break;
        default:
            d.status = DecisionStatus::Indeterminate;
            break;
    }
    return d;
}

Decision decide_parallel(int n, int r, const TargetList& targets, const SearchOptions& opts) {
    SearchContext root;
    build_context(root, n, r, targets, opts);

    std::uint64_t split = opts.split_depth;
    if (split == 0) {
        std::uint64_t width = 1;
        while (width < static_cast<std::uint64_t>(8 * opts.threads) && split < root.E &&
               split < 14) {
            width *= root.k;
            ++split;
        }
    }
    split = std::min<std::uint64_t>(split, root.E);

    std::vector<FrontierTask> tasks;
    std::vector<SymEntry> active = root_active(root);
    collect_frontier(root, 0, split, active, tasks);

    std::atomic<int> best_found{static_cast<int>(tasks.size())};
    std::atomic<std::uint64_t> shared_nodes{root.nodes};
    std::vector<std::vector<Color>> found(tasks.size());
    std::vector<DfsOutcome> outcomes(tasks.size(), DfsOutcome::Exhausted);
    std::vector<SearchStats> stats(tasks.size());

    Clock::time_point deadline{};
    bool has_deadline = opts.max_seconds > 0;
    if (has_deadline) {
        deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(opts.max_seconds));
    }

#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.threads)
    for (int ti = 0; ti < static_cast<int>(tasks.size()); ++ti) {
        if (best_found.load(std::memory_order_relaxed) < ti) continue;
        SearchContext ctx;
        build_context(ctx, n, r, targets, opts);
        ctx.best_found = &best_found;
        ctx.task_index = ti;
        ctx.shared_nodes = &shared_nodes;
        ctx.has_deadline = has_deadline;
        ctx.deadline = deadline;
        if (opts.max_nodes) {
            // budget shared approximately across tasks
            std::uint64_t used = shared_nodes.load(std::memory_order_relaxed);
            ctx.local_max_nodes = used >= opts.max_nodes ? 1 : opts.max_nodes - used;
        }
        for (std::uint64_t d = 0; d < split; ++d) {
            assign_edge(ctx, d, tasks[ti].prefix[d]);
        }
        DfsOutcome out = dfs(ctx, split, tasks[ti].active);
        outcomes[ti] = out;
        stats[ti].nodes = ctx.nodes;
        stats[ti].symmetry_prunes = ctx.symmetry_prunes;
        stats[ti].witness_prunes = ctx.witness_prunes;
        if (out == DfsOutcome::Found) {
            found[ti] = ctx.found_word;
            int expected = best_found.load();
            while (ti < expected && !best_found.compare_exchange_weak(expected, ti)) {
            }
        }
    }

    Decision d;
    d.stats.nodes = root.nodes;
    d.stats.symmetry_prunes = root.symmetry_prunes;
    d.stats.witness_prunes = root.witness_prunes;
    for (const auto& s : stats) {
        d.stats.nodes += s.nodes;
        d.stats.symmetry_prunes += s.symmetry_prunes;
        d.stats.witness_prunes += s.witness_prunes;
    }
    int winner = best_found.load();
    bool budget_before_winner = false;
    for (int ti = 0; ti < winner && ti < static_cast<int>(tasks.size()); ++ti) {
        if (outcomes[ti] == DfsOutcome::Budget) budget_before_winner = true;
    }
    if (winner < static_cast<int>(tasks.size()) && !budget_before_winner) {
        Coloring cex(n, r, root.k);
        cex.colors = found[winner];
        d.status = DecisionStatus::CounterexampleFound;
        d.counterexample = std::move(cex);
    } else if (budget_before_winner ||
               std::any_of(outcomes.begin(), outcomes.end(),
                           [](DfsOutcome o) { return o == DfsOutcome::Budget; })) {
        d.status = DecisionStatus::Indeterminate;
    } else {
        d.status = DecisionStatus::Arrows;
    }
    return d;
}

void validate_inputs(int n, int r, const TargetList& targets) {
    if (n < 0 || n > MAX_VERTICES || r < 2) {
        throw std::invalid_argument("decide: need 0 <= n <= 64 and r >= 2");
    }
    if (targets.size() < 2) {
        throw std::invalid_argument("decide: need one target slot per color, k >= 2");
    }
    bool any = false;
    for (const auto& t : targets) {
        if (!t) continue;
        any = true;
        if (!pattern_valid(*t, r)) throw std::invalid_argument("decide: invalid target pattern");
    }
    if (!any) throw std::invalid_argument("decide: all targets absent");
}

}  // namespace

Decision decide(int n, int r, const TargetList& targets, const SearchOptions& opts) {
    validate_inputs(n, r, targets);
    auto start = Clock::now();

    Decision d;
    if (binomial(n, r) == 0) {
        // No edges at all: the empty coloring is a counterexample whenever the
        // targets need at least one edge, which every valid pattern does.
        Coloring empty;
        empty.n = n;
        empty.r = r;
        empty.k = static_cast<int>(targets.size());
        if (detect_any(empty, targets)) {
            d.status = DecisionStatus::Arrows;
        } else {
            d.status = DecisionStatus::CounterexampleFound;
            d.counterexample = std::move(empty);
        }
    } else if (opts.threads > 1 && !opts.serial_reference) {
        d = decide_parallel(n, r, targets, opts);
    } else {
        d = decide_serial(n, r, targets, opts);
    }
    d.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();

    // Soundness check on every run: a returned counterexample really has no
    // monochromatic target.
    if (d.counterexample && detect_any(*d.counterexample, targets)) {
        throw std::logic_error("search returned a coloring that contains a target");
    }
    return d;
}

std::optional<Coloring> find_counterexample(int n, int r, const TargetList& targets,
                                            const SearchOptions& opts) {
    return decide(n, r, targets, opts).counterexample;
}

std::string Certificate::to_json() const {
    nlohmann::json j;
    j["r"] = r;
    j["k"] = k;
    j["targets"] = targets;
    j["value"] = value;
    j["lower_witness"] = nlohmann::json::parse(lower_witness.to_json());
    j["upper_token"] = {{"pruning", upper_token.pruning},
                        {"nodes", upper_token.nodes},
                        {"seed", upper_token.seed}};
    return j.dump();
}

Certificate Certificate::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Certificate c;
    c.r = j.at("r").get<int>();
    c.k = j.at("k").get<int>();
    c.targets = j.at("targets").get<std::vector<std::string>>();
    c.value = j.at("value").get<int>();
    c.lower_witness = Coloring::from_json(j.at("lower_witness").dump());
    c.upper_token.pruning = j.at("upper_token").at("pruning").get<std::string>();
    c.upper_token.nodes = j.at("upper_token").at("nodes").get<std::uint64_t>();
    c.upper_token.seed = j.at("upper_token").at("seed").get<std::uint64_t>();
    return c;
}

RamseyResult ramsey_number(int r, const TargetList& targets, int n_lo, int n_hi,
                           const SearchOptions& opts) {
    if (n_lo > n_hi) throw std::invalid_argument("ramsey_number: n_lo > n_hi");
    RamseyResult result;
    std::optional<Coloring> last_cex;
    auto accumulate = [&](const SearchStats& s) {
        result.stats.nodes += s.nodes;
        result.stats.symmetry_prunes += s.symmetry_prunes;
        result.stats.witness_prunes += s.witness_prunes;
        result.stats.seconds += s.seconds;
    };
    for (int n = n_lo; n <= n_hi; ++n) {
        Decision d = decide(n, r, targets, opts);
        accumulate(d.stats);
        if (d.status == DecisionStatus::Indeterminate) {
            result.status = RamseyStatus::Indeterminate;
            return result;
        }
        if (d.arrows()) {
            if (!last_cex) {
                Decision below = decide(n - 1, r, targets, opts);
                accumulate(below.stats);
                if (below.status != DecisionStatus::CounterexampleFound) {
                    // n_lo was not a tight starting point; report indeterminate
                    // rather than fabricate a lower witness.
                    result.status = RamseyStatus::Indeterminate;
                    return result;
                }
                last_cex = below.counterexample;
            }
            Certificate cert;
            cert.r = r;
            cert.k = static_cast<int>(targets.size());
            for (const auto& t : targets) cert.targets.push_back(t ? t->render() : "-");
            cert.value = n;
            cert.lower_witness = *last_cex;
            cert.upper_token.pruning = pruning_name(opts.pruning);
            cert.upper_token.nodes = result.stats.nodes;
            cert.upper_token.seed = 0;
            result.status = RamseyStatus::Found;
            result.certificate = std::move(cert);
            return result;
        }
        last_cex = d.counterexample;
    }
    result.status = RamseyStatus::NotFound;
    return result;
}

}  // namespace ramsey
