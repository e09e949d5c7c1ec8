#include "ramsey/detect.hpp"

#include <algorithm>
#include <stdexcept>

#include "ramsey/matching.hpp"

namespace ramsey {

namespace {

void require_compatible(const Coloring& c, const PatternSpec& p) {
    if (!pattern_valid(p, c.r)) {
        throw std::invalid_argument("pattern incompatible with host uniformity");
    }
}

// Enumerates injective core placements, colex order on the core subset.
// Cliques are vertex-transitive, so the sorted subset itself suffices;
// general patterns additionally run through all orderings of the subset.
// f returns true to stop (witness found).
template <typename F>
bool for_each_core(int n, const PatternSpec& p, F&& f) {
    if (p.t > n) return false;
    bool found = false;
    for_each_subset(n, p.t, [&](VertexSet core_set) {
        std::vector<int> core = set_to_vertices(core_set);
        if (p.is_clique) {
            found = f(core);
        } else {
            std::sort(core.begin(), core.end());
            do {
                found = f(core);
            } while (!found && std::next_permutation(core.begin(), core.end()));
        }
        return !found;
    });
    return found;
}

std::vector<VertexSet> mapped_edges(const PatternSpec& p, const std::vector<int>& core) {
    std::vector<VertexSet> out;
    out.reserve(p.edges.size());
    for (VertexSet e : p.edges) {
        VertexSet m = 0;
        VertexSet bits = e;
        while (bits) {
            m = with_vertex(m, core[std::countr_zero(bits)]);
            bits &= bits - 1;
        }
        out.push_back(m);
    }
    return out;
}

std::vector<VertexSet> edges_of_color(const Coloring& c, int color) {
    std::vector<VertexSet> out;
    for_each_subset(c.n, c.r, [&](VertexSet h) {
        if (c.color_of(h) == color) out.push_back(h);
    });
    return out;
}

}  // namespace

std::optional<Witness> detect_berge_with_core(const Coloring& c, int color,
                                              const PatternSpec& p,
                                              const std::vector<int>& core) {
    std::vector<VertexSet> host = edges_of_color(c, color);
    std::vector<VertexSet> mapped = mapped_edges(p, core);
    std::vector<std::vector<int>> adj(mapped.size());
    for (std::size_t i = 0; i < mapped.size(); ++i) {
        for (std::size_t h = 0; h < host.size(); ++h) {
            if ((mapped[i] & ~host[h]) == 0) adj[i].push_back(static_cast<int>(h));
        }
        if (adj[i].empty()) return std::nullopt;  // Hall prefilter
    }
    MatchingResult m = max_bipartite_matching(adj, static_cast<int>(host.size()));
    if (!m.saturates_left()) return std::nullopt;
    Witness w;
    w.kind = StructureKind::Berge;
    w.color = color;
    w.core = core;
    for (std::size_t i = 0; i < mapped.size(); ++i) {
        w.edge_assignment.push_back(host[m.match_left[i]]);
    }
    return w;
}

std::optional<Witness> detect_berge(const Coloring& c, int color, const PatternSpec& p) {
    require_compatible(c, p);
    std::vector<VertexSet> host = edges_of_color(c, color);
    if (host.size() < p.edges.size()) return std::nullopt;

    std::optional<Witness> result;
    for_each_core(c.n, p, [&](const std::vector<int>& core) {
        std::vector<VertexSet> mapped = mapped_edges(p, core);
        std::vector<std::vector<int>> adj(mapped.size());
        for (std::size_t i = 0; i < mapped.size(); ++i) {
            for (std::size_t h = 0; h < host.size(); ++h) {
                if ((mapped[i] & ~host[h]) == 0) adj[i].push_back(static_cast<int>(h));
            }
            if (adj[i].empty()) return false;
        }
        MatchingResult m = max_bipartite_matching(adj, static_cast<int>(host.size()));
        if (!m.saturates_left()) return false;
        Witness w;
        w.kind = StructureKind::Berge;
        w.color = color;
        w.core = core;
        for (std::size_t i = 0; i < mapped.size(); ++i) {
            w.edge_assignment.push_back(host[m.match_left[i]]);
        }
        result = std::move(w);
        return true;
    });
    return result;
}

std::optional<Witness> detect_trace(const Coloring& c, int color, const PatternSpec& p) {
    require_compatible(c, p);
    std::vector<VertexSet> host = edges_of_color(c, color);
    std::optional<Witness> result;
    for_each_core(c.n, p, [&](const std::vector<int>& core) {
        VertexSet core_img = vertices_to_set(core);
        std::vector<VertexSet> mapped = mapped_edges(p, core);
        std::vector<VertexSet> chosen;
        chosen.reserve(mapped.size());
        for (VertexSet target : mapped) {
            bool ok = false;
            for (VertexSet h : host) {
                if ((h & core_img) == target) {
                    chosen.push_back(h);
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
        Witness w;
        w.kind = StructureKind::Trace;
        w.color = color;
        w.core = core;
        w.edge_assignment = std::move(chosen);
        result = std::move(w);
        return true;
    });
    return result;
}

std::optional<Witness> detect_expansion(const Coloring& c, int color, const PatternSpec& p) {
    require_compatible(c, p);
    const int ext = c.r - p.s;
    std::optional<Witness> result;
    for_each_core(c.n, p, [&](const std::vector<int>& core) {
        VertexSet core_img = vertices_to_set(core);
        VertexSet outside = 0;
        for (int v = 0; v < c.n; ++v) {
            if (!contains(core_img, v)) outside = with_vertex(outside, v);
        }
        std::vector<VertexSet> mapped = mapped_edges(p, core);

        if (ext == 0) {
            for (VertexSet m : mapped) {
                if (c.color_of(m) != color) return false;
            }
            Witness w;
            w.kind = StructureKind::Expansion;
            w.color = color;
            w.core = core;
            w.edge_assignment = mapped;
            w.extras.assign(mapped.size(), 0);
            result = std::move(w);
            return true;
        }

        // Candidate extra sets per pattern edge.
        std::vector<std::vector<VertexSet>> cands(mapped.size());
        for (std::size_t i = 0; i < mapped.size(); ++i) {
            for_each_subset(c.n, ext, [&](VertexSet d) {
                if ((d & ~outside) == 0 && c.color_of(mapped[i] | d) == color) {
                    cands[i].push_back(d);
                }
            });
            if (cands[i].empty()) return false;
        }

        if (ext == 1) {
            // Exact via matching: extras are single vertices, disjointness is
            // just distinctness.
            std::vector<std::vector<int>> adj(mapped.size());
            for (std::size_t i = 0; i < mapped.size(); ++i) {
                for (VertexSet d : cands[i]) adj[i].push_back(std::countr_zero(d));
            }
            MatchingResult m = max_bipartite_matching(adj, c.n);
            if (!m.saturates_left()) return false;
            Witness w;
            w.kind = StructureKind::Expansion;
            w.color = color;
            w.core = core;
            for (std::size_t i = 0; i < mapped.size(); ++i) {
                VertexSet d = VertexSet{1} << m.match_left[i];
                w.extras.push_back(d);
                w.edge_assignment.push_back(mapped[i] | d);
            }
            result = std::move(w);
            return true;
        }

        // ext >= 2: depth-first disjoint packing, fewest candidates first.
        std::vector<std::size_t> order(mapped.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return cands[a].size() < cands[b].size();
        });
        std::vector<VertexSet> picked(mapped.size(), 0);
        auto dfs = [&](auto&& self, std::size_t pos, VertexSet used) -> bool {
            if (pos == order.size()) return true;
            std::size_t i = order[pos];
            for (VertexSet d : cands[i]) {
                if ((d & used) != 0) continue;
                picked[i] = d;
                if (self(self, pos + 1, used | d)) return true;
            }
            return false;
        };
        if (!dfs(dfs, 0, 0)) return false;
        Witness w;
        w.kind = StructureKind::Expansion;
        w.color = color;
        w.core = core;
        for (std::size_t i = 0; i < mapped.size(); ++i) {
            w.extras.push_back(picked[i]);
            w.edge_assignment.push_back(mapped[i] | picked[i]);
        }
        result = std::move(w);
        return true;
    });
    return result;
}

std::optional<Witness> detect_suspension(const Coloring& c, int color, const PatternSpec& p) {
    require_compatible(c, p);
    const int ext = c.r - p.s;
    std::optional<Witness> result;
    for_each_core(c.n, p, [&](const std::vector<int>& core) {
        VertexSet core_img = vertices_to_set(core);
        std::vector<VertexSet> mapped = mapped_edges(p, core);
        bool found = false;
        for_each_subset(c.n, ext, [&](VertexSet u) {
            if ((u & core_img) != 0) return true;
            for (VertexSet m : mapped) {
                if (c.color_of(m | u) != color) return true;
            }
            Witness w;
            w.kind = StructureKind::Suspension;
            w.color = color;
            w.core = core;
            w.suspension_set = u;
            for (VertexSet m : mapped) w.edge_assignment.push_back(m | u);
            result = std::move(w);
            found = true;
            return false;
        });
        return found;
    });
    return result;
}

std::optional<Witness> detect_shadow(const Coloring& c, int color, const PatternSpec& p) {
    require_compatible(c, p);
    // Pair adjacency of the color class.
    std::vector<VertexSet> adj(c.n, 0);
    for_each_subset(c.n, c.r, [&](VertexSet h) {
        if (c.color_of(h) != color) return;
        std::vector<int> vs = set_to_vertices(h);
        for (std::size_t a = 0; a < vs.size(); ++a) {
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                adj[vs[a]] = with_vertex(adj[vs[a]], vs[b]);
                adj[vs[b]] = with_vertex(adj[vs[b]], vs[a]);
            }
        }
    });
    std::optional<Witness> result;
    for_each_core(c.n, p, [&](const std::vector<int>& core) {
        for (VertexSet e : p.edges) {
            std::vector<int> uv = set_to_vertices(e);
            if (!contains(adj[core[uv[0]]], core[uv[1]])) return false;
        }
        Witness w;
        w.kind = StructureKind::Shadow;
        w.color = color;
        w.core = core;
        result = std::move(w);
        return true;
    });
    return result;
}

std::optional<Witness> detect(const Coloring& c, int color, const PatternSpec& p) {
    switch (p.kind) {
        case StructureKind::Berge: return detect_berge(c, color, p);
        case StructureKind::Trace: return detect_trace(c, color, p);
        case StructureKind::Expansion: return detect_expansion(c, color, p);
        case StructureKind::Suspension: return detect_suspension(c, color, p);
        case StructureKind::Shadow: return detect_shadow(c, color, p);
    }
    return std::nullopt;
}

std::optional<std::pair<int, Witness>> detect_any(const Coloring& c, const TargetList& targets) {
    for (std::size_t color = 0; color < targets.size(); ++color) {
        if (!targets[color]) continue;
        if (auto w = detect(c, static_cast<int>(color), *targets[color])) {
            return std::make_pair(static_cast<int>(color), std::move(*w));
        }
    }
    return std::nullopt;
}

}  // namespace ramsey
