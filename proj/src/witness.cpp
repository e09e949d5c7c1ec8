#include "ramsey/witness.hpp"

#include <stdexcept>

#include "json.hpp"

namespace ramsey {

VertexSet Witness::core_image() const {
    VertexSet s = 0;
    for (int v : core) s = with_vertex(s, v);
    return s;
}

VertexSet Witness::mapped_edge(VertexSet pattern_edge) const {
    VertexSet out = 0;
    while (pattern_edge) {
        int u = std::countr_zero(pattern_edge);
        out = with_vertex(out, core[u]);
        pattern_edge &= pattern_edge - 1;
    }
    return out;
}

std::string Witness::to_json() const {
    nlohmann::json j;
    j["kind"] = kind_name(kind);
    j["color"] = color;
    j["core"] = core;
    if (kind != StructureKind::Shadow) {
        nlohmann::json es = nlohmann::json::array();
        for (std::size_t i = 0; i < edge_assignment.size(); ++i) {
            nlohmann::json item;
            item["host_edge"] = set_to_vertices(edge_assignment[i]);
            es.push_back(item);
        }
        j["edges"] = es;
    }
    if (kind == StructureKind::Expansion) {
        nlohmann::json ex = nlohmann::json::array();
        for (VertexSet e : extras) ex.push_back(set_to_vertices(e));
        j["extra"] = ex;
    } else if (kind == StructureKind::Suspension) {
        j["extra"] = set_to_vertices(suspension_set);
    }
    return j.dump();
}

Witness Witness::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Witness w;
    w.kind = kind_from_name(j.at("kind").get<std::string>());
    w.color = j.at("color").get<int>();
    w.core = j.at("core").get<std::vector<int>>();
    if (j.contains("edges")) {
        for (const auto& item : j.at("edges")) {
            w.edge_assignment.push_back(vertices_to_set(item.at("host_edge").get<std::vector<int>>()));
        }
    }
    if (w.kind == StructureKind::Expansion && j.contains("extra")) {
        for (const auto& e : j.at("extra")) w.extras.push_back(vertices_to_set(e.get<std::vector<int>>()));
    } else if (w.kind == StructureKind::Suspension && j.contains("extra")) {
        w.suspension_set = vertices_to_set(j.at("extra").get<std::vector<int>>());
    }
    return w;
}

namespace {

std::optional<WitnessViolation> check_host_edge(const Coloring& c, VertexSet h, int color) {
    if (set_size(h) != c.r) return WitnessViolation{"host-edge-size"};
    if (c.n < MAX_VERTICES && h >= (VertexSet{1} << c.n)) return WitnessViolation{"host-edge-range"};
    if (c.color_of(h) != color) return WitnessViolation{"color"};
    return std::nullopt;
}

}  // namespace

std::optional<WitnessViolation> verify_witness(const Coloring& c, const Witness& w,
                                               const PatternSpec& p) {
    if (w.kind != p.kind) return WitnessViolation{"kind-mismatch"};
    if (w.color < 0 || w.color >= c.k) return WitnessViolation{"color-range"};
    if (static_cast<int>(w.core.size()) != p.t) return WitnessViolation{"core-size"};
    VertexSet core_img = 0;
    for (int v : w.core) {
        if (v < 0 || v >= c.n) return WitnessViolation{"core-range"};
        if (contains(core_img, v)) return WitnessViolation{"injectivity"};
        core_img = with_vertex(core_img, v);
    }

    const std::size_t m = p.edges.size();
    const bool needs_assignment = p.kind != StructureKind::Shadow;
    if (needs_assignment && w.edge_assignment.size() != m)
        return WitnessViolation{"edge-assignment-size"};

    switch (p.kind) {
        case StructureKind::Berge: {
            for (std::size_t i = 0; i < m; ++i) {
                VertexSet h = w.edge_assignment[i];
                if (auto v = check_host_edge(c, h, w.color)) return v;
                if ((w.mapped_edge(p.edges[i]) & ~h) != 0) return WitnessViolation{"containment"};
                for (std::size_t j = 0; j < i; ++j) {
                    if (w.edge_assignment[j] == h) return WitnessViolation{"injectivity"};
                }
            }
            break;
        }
        case StructureKind::Trace: {
            for (std::size_t i = 0; i < m; ++i) {
                VertexSet h = w.edge_assignment[i];
                if (auto v = check_host_edge(c, h, w.color)) return v;
                if ((h & core_img) != w.mapped_edge(p.edges[i])) return WitnessViolation{"trace-exact"};
            }
            break;
        }
        case StructureKind::Expansion: {
            if (w.extras.size() != m) return WitnessViolation{"extras-size"};
            VertexSet used = core_img;
            for (std::size_t i = 0; i < m; ++i) {
                VertexSet extra = w.extras[i];
                if (set_size(extra) != c.r - p.s) return WitnessViolation{"extras-size"};
                if ((extra & used) != 0) return WitnessViolation{"extras-disjoint"};
                used |= extra;
                VertexSet h = w.mapped_edge(p.edges[i]) | extra;
                if (w.edge_assignment[i] != h) return WitnessViolation{"edge-assignment"};
                if (auto v = check_host_edge(c, h, w.color)) return v;
            }
            break;
        }
        case StructureKind::Suspension: {
            if (set_size(w.suspension_set) != c.r - p.s) return WitnessViolation{"suspension-size"};
            if ((w.suspension_set & core_img) != 0) return WitnessViolation{"suspension-disjoint"};
            for (std::size_t i = 0; i < m; ++i) {
                VertexSet h = w.mapped_edge(p.edges[i]) | w.suspension_set;
                if (w.edge_assignment[i] != h) return WitnessViolation{"edge-assignment"};
                if (auto v = check_host_edge(c, h, w.color)) return v;
            }
            break;
        }
        case StructureKind::Shadow: {
            for (VertexSet e : p.edges) {
                VertexSet pair = w.mapped_edge(e);
                bool covered = false;
                for_each_subset(c.n, c.r, [&](VertexSet h) {
                    if ((pair & ~h) == 0 && c.color_of(h) == w.color) {
                        covered = true;
                        return false;
                    }
                    return true;
                });
                if (!covered) return WitnessViolation{"shadow-pair"};
            }
            break;
        }
    }
    return std::nullopt;
}

}  // namespace ramsey
