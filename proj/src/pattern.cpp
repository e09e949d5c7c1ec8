#include "ramsey/pattern.hpp"

#include <stdexcept>

#include "json.hpp"

namespace ramsey {

const char* kind_name(StructureKind k) {
    switch (k) {
        case StructureKind::Berge: return "berge";
        case StructureKind::Trace: return "trace";
        case StructureKind::Expansion: return "expansion";
        case StructureKind::Suspension: return "suspension";
        case StructureKind::Shadow: return "shadow";
    }
    return "?";
}

StructureKind kind_from_name(const std::string& name) {
    if (name == "berge") return StructureKind::Berge;
    if (name == "trace") return StructureKind::Trace;
    if (name == "expansion") return StructureKind::Expansion;
    if (name == "suspension") return StructureKind::Suspension;
    if (name == "shadow") return StructureKind::Shadow;
    throw std::invalid_argument("unknown structure kind '" + name + "'");
}

PatternSpec PatternSpec::clique(StructureKind kind, int t, int s) {
    if (t < s || s < 2) throw std::invalid_argument("clique pattern needs t >= s >= 2");
    PatternSpec p;
    p.kind = kind;
    p.s = s;
    p.t = t;
    p.is_clique = true;
    for_each_subset(t, s, [&](VertexSet e) { p.edges.push_back(e); });
    return p;
}

PatternSpec PatternSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("target must look like kind:K<t>[^(s)]");
    StructureKind kind = kind_from_name(text.substr(0, colon));
    std::string rest = text.substr(colon + 1);
    if (rest.empty() || rest[0] != 'K') throw std::invalid_argument("target pattern must start with K");
    std::size_t pos = 1;
    int t = 0;
    while (pos < rest.size() && isdigit(static_cast<unsigned char>(rest[pos]))) {
        t = t * 10 + (rest[pos] - '0');
        ++pos;
    }
    if (pos == 1) throw std::invalid_argument("missing clique size in target '" + text + "'");
    int s = 2;
    if (pos < rest.size()) {
        if (rest.compare(pos, 2, "^(") != 0 || rest.back() != ')')
            throw std::invalid_argument("malformed uniformity suffix in target '" + text + "'");
        s = std::stoi(rest.substr(pos + 2, rest.size() - pos - 3));
    }
    return clique(kind, t, s);
}

std::string PatternSpec::render() const {
    std::string out = std::string(kind_name(kind)) + ":K" + std::to_string(t);
    if (s != 2) out += "^(" + std::to_string(s) + ")";
    return out;
}

std::string PatternSpec::to_json() const {
    nlohmann::json j;
    j["kind"] = kind_name(kind);
    j["s"] = s;
    j["t"] = t;
    if (is_clique) {
        j["clique"] = true;
    } else {
        nlohmann::json es = nlohmann::json::array();
        for (VertexSet e : edges) es.push_back(set_to_vertices(e));
        j["edges"] = es;
    }
    return j.dump();
}

PatternSpec PatternSpec::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    StructureKind kind = kind_from_name(j.at("kind").get<std::string>());
    int s = j.at("s").get<int>();
    int t = j.at("t").get<int>();
    if (j.value("clique", false)) return clique(kind, t, s);
    PatternSpec p;
    p.kind = kind;
    p.s = s;
    p.t = t;
    for (const auto& e : j.at("edges")) {
        p.edges.push_back(vertices_to_set(e.get<std::vector<int>>()));
    }
    std::uint64_t full = binomial(t, s);
    p.is_clique = p.edges.size() == full;
    return p;
}

bool pattern_valid(const PatternSpec& p, int host_r) {
    if (p.s < 2 || p.t < p.s || p.s > host_r) return false;
    if (p.kind == StructureKind::Shadow && p.s != 2) return false;
    for (VertexSet e : p.edges) {
        if (set_size(e) != p.s) return false;
        if (e >= (VertexSet{1} << p.t)) return false;
    }
    return true;
}

}  // namespace ramsey
