#include "ramsey/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "json.hpp"

namespace ramsey {

namespace {

const char* status_name(DecisionStatus s) {
    switch (s) {
        case DecisionStatus::Arrows: return "arrows";
        case DecisionStatus::CounterexampleFound: return "counterexample";
        case DecisionStatus::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

DecisionStatus status_from_name(const std::string& s) {
    if (s == "arrows") return DecisionStatus::Arrows;
    if (s == "counterexample") return DecisionStatus::CounterexampleFound;
    return DecisionStatus::Indeterminate;
}

// Calls f(parsed line) for each well-formed line; malformed lines warn once.
template <typename F>
void scan(const std::string& path, F&& f) {
    std::ifstream in(path);
    if (!in) return;
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            std::cerr << "warning: skipping corrupt cache line " << lineno
                      << " in " << path << "\n";
            continue;
        }
        try {
            f(j);
        } catch (const std::exception&) {
            std::cerr << "warning: skipping malformed cache record at line " << lineno
                      << " in " << path << "\n";
        }
    }
}

void append_line(const std::string& path, const std::string& line) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache file for append: " + path);
    out << line << "\n";
}

}  // namespace

std::string default_cache_path() {
    if (const char* env = std::getenv("RAMSEY_CACHE")) return env;
    return "ramsey_cache.jsonl";
}

std::string target_key(const TargetList& targets) {
    std::string key;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (i) key += ",";
        key += targets[i] ? targets[i]->render() : "-";
    }
    return key;
}

void append_certificate(const std::string& path, const Certificate& cert) {
    nlohmann::json j;
    j["type"] = "certificate";
    j["r"] = cert.r;
    j["k"] = cert.k;
    j["targets"] = cert.targets;
    j["certificate"] = nlohmann::json::parse(cert.to_json());
    append_line(path, j.dump());
}

void append_decision(const std::string& path, int n, int r, const TargetList& targets,
                     const Decision& decision) {
    nlohmann::json j;
    j["type"] = "decision";
    j["n"] = n;
    j["r"] = r;
    j["k"] = static_cast<int>(targets.size());
    j["targets"] = target_key(targets);
    j["status"] = status_name(decision.status);
    if (decision.counterexample) {
        j["counterexample"] = nlohmann::json::parse(decision.counterexample->to_json());
    } else {
        j["counterexample"] = nullptr;
    }
    append_line(path, j.dump());
}

std::optional<Certificate> find_certificate(const std::string& path, int r,
                                            const TargetList& targets) {
    std::optional<Certificate> found;
    std::vector<std::string> rendered;
    for (const auto& t : targets) rendered.push_back(t ? t->render() : "-");
    scan(path, [&](const nlohmann::json& j) {
        if (j.at("type") != "certificate") return;
        if (j.at("r").get<int>() != r) return;
        if (j.at("targets").get<std::vector<std::string>>() != rendered) return;
        found = Certificate::from_json_text(j.at("certificate").dump());
    });
    return found;
}

std::optional<Decision> find_decision(const std::string& path, int n, int r,
                                      const TargetList& targets) {
    std::optional<Decision> found;
    const std::string key = target_key(targets);
    scan(path, [&](const nlohmann::json& j) {
        if (j.at("type") != "decision") return;
        if (j.at("n").get<int>() != n || j.at("r").get<int>() != r) return;
        if (j.at("targets").get<std::string>() != key) return;
        Decision d;
        d.status = status_from_name(j.at("status").get<std::string>());
        if (!j.at("counterexample").is_null()) {
            d.counterexample = Coloring::from_json(j.at("counterexample").dump());
        }
        found = std::move(d);
    });
    return found;
}

}  // namespace ramsey
