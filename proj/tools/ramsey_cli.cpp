// Command-line front end: detections, arrowing decisions, Ramsey number
// computations, construction generation, witness verification, and the
// reproduction matrix. Exit status: 0 found/true, 1 not-found/false,
// 2 error, 3 indeterminate (budget).
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ramsey/cache.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/detect.hpp"
#include "ramsey/search.hpp"
#include "ramsey/witness.hpp"

namespace {

using namespace ramsey;

constexpr int EXIT_FOUND = 0;
constexpr int EXIT_NOT_FOUND = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_INDETERMINATE = 3;

int color_prefix(const std::string& name) {
    if (name == "blue") return 0;
    if (name == "red") return 1;
    if (name == "green") return 2;
    try {
        std::size_t pos = 0;
        int v = std::stoi(name, &pos);
        if (pos == name.size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("unknown color prefix '" + name + "'");
}

// Each item is "<pattern>", "<color>=<pattern>", or "-" (no target for that
// color). Named prefixes blue/red/green map to 0/1/2; prefixes must agree
// with the item's position.
TargetList parse_targets(const std::vector<std::string>& raw) {
    TargetList targets;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        std::string item = raw[i];
        auto eq = item.find('=');
        if (eq != std::string::npos) {
            int c = color_prefix(item.substr(0, eq));
            if (c != static_cast<int>(i)) {
                throw std::invalid_argument("target prefix '" + item.substr(0, eq) +
                                            "' does not match position " + std::to_string(i));
            }
            item = item.substr(eq + 1);
        }
        if (item == "-") {
            targets.push_back(std::nullopt);
        } else {
            targets.push_back(PatternSpec::parse(item));
        }
    }
    if (targets.empty()) throw std::invalid_argument("at least one --target is required");
    return targets;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Shared {
    int r = 3;
    int n = 0;
    int colors = 0;
    std::vector<std::string> raw_targets;
    std::string pruning = "none";
    int threads = 1;
    std::uint64_t max_nodes = 0;
    double max_seconds = 0.0;
    std::string cache_path;
    bool no_cache = false;
    std::string format = "json";
    std::int64_t seed = -1;
    bool seed_given = false;

    SearchOptions search_options() const {
        SearchOptions o;
        o.pruning = pruning_from_name(pruning);
        o.threads = threads;
        o.max_nodes = max_nodes;
        o.max_seconds = max_seconds;
        return o;
    }
    std::string cache() const { return cache_path.empty() ? default_cache_path() : cache_path; }
};

void add_shared(CLI::App* cmd, Shared& s, bool with_targets = true) {
    cmd->add_option("--r", s.r, "host uniformity");
    cmd->add_option("--n", s.n, "host vertex count");
    cmd->add_option("--colors", s.colors, "number of colors (default: target count)");
    if (with_targets) {
        cmd->add_option("--target", s.raw_targets,
                        "target pattern, color-ordered, e.g. blue=berge:K4 (repeatable)");
    }
    cmd->add_option("--pruning", s.pruning, "none | first-edge | lex-leader")
        ->check(CLI::IsMember({"none", "first-edge", "lex-leader"}));
    cmd->add_option("--threads", s.threads, "worker count")->check(CLI::PositiveNumber);
    cmd->add_option("--max-nodes", s.max_nodes, "search node budget (0 = unlimited)");
    cmd->add_option("--max-seconds", s.max_seconds, "wall-clock budget (0 = unlimited)");
    cmd->add_option("--cache", s.cache_path, "result cache path");
    cmd->add_flag("--no-cache", s.no_cache, "neither read nor write the cache");
    cmd->add_option("--format", s.format, "json | table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--seed", s.seed, "RNG seed (required for randomized steps)")
        ->each([&s](const std::string&) { s.seed_given = true; });
}

void emit(const nlohmann::json& j, const std::string& format,
          const std::string& table_text) {
    if (format == "json") {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << table_text;
    }
}

std::string render_targets(const TargetList& targets) {
    std::string out;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (i) out += ",";
        out += targets[i] ? targets[i]->render() : "-";
    }
    return out;
}

int run_detect(const Shared& s, const std::string& coloring_path) {
    Coloring c = Coloring::from_json(read_file(coloring_path));
    TargetList targets = parse_targets(s.raw_targets);
    for (const auto& t : targets) {
        if (t && !pattern_valid(*t, c.r)) {
            throw std::invalid_argument("target incompatible with coloring uniformity");
        }
    }
    auto hit = detect_any(c, targets);
    nlohmann::json j;
    j["found"] = hit.has_value();
    std::ostringstream table;
    if (hit) {
        j["color"] = hit->first;
        j["witness"] = nlohmann::json::parse(hit->second.to_json());
        table << "witness found in color " << hit->first << " ("
              << kind_name(hit->second.kind) << ", core size "
              << hit->second.core.size() << ")\n";
    } else {
        table << "no monochromatic target\n";
    }
    emit(j, s.format, table.str());
    return hit ? EXIT_FOUND : EXIT_NOT_FOUND;
}

int run_decide(const Shared& s) {
    TargetList targets = parse_targets(s.raw_targets);
    if (s.n <= 0) throw std::invalid_argument("--n is required");
    if (s.colors > 0 && s.colors != static_cast<int>(targets.size())) {
        throw std::invalid_argument("--colors disagrees with the target count");
    }
    Decision d;
    bool from_cache = false;
    if (!s.no_cache) {
        if (auto cached = find_decision(s.cache(), s.n, s.r, targets);
            cached && cached->status != DecisionStatus::Indeterminate) {
            d = *cached;
            from_cache = true;
        }
    }
    if (!from_cache) {
        d = decide(s.n, s.r, targets, s.search_options());
        if (!s.no_cache) append_decision(s.cache(), s.n, s.r, targets, d);
    }

    nlohmann::json j;
    j["n"] = s.n;
    j["r"] = s.r;
    j["targets"] = render_targets(targets);
    std::ostringstream table;
    switch (d.status) {
        case DecisionStatus::Arrows:
            j["status"] = "arrows";
            table << "arrows\n";
            break;
        case DecisionStatus::CounterexampleFound:
            j["status"] = "counterexample";
            j["counterexample"] = nlohmann::json::parse(d.counterexample->to_json());
            table << "counterexample on " << s.n << " vertices\n";
            break;
        case DecisionStatus::Indeterminate:
            j["status"] = "indeterminate";
            table << "indeterminate (budget)\n";
            break;
    }
    if (!from_cache) {
        table << "nodes " << d.stats.nodes << "\n";
    }
    emit(j, s.format, table.str());
    if (d.status == DecisionStatus::Arrows) return EXIT_FOUND;
    if (d.status == DecisionStatus::CounterexampleFound) return EXIT_NOT_FOUND;
    return EXIT_INDETERMINATE;
}

int run_number(const Shared& s, int lo, int hi) {
    TargetList targets = parse_targets(s.raw_targets);
    std::optional<Certificate> cert;
    SearchStats stats;
    RamseyStatus status = RamseyStatus::Indeterminate;
    if (!s.no_cache) {
        if (auto cached = find_certificate(s.cache(), s.r, targets)) {
            cert = *cached;
            status = RamseyStatus::Found;
        }
    }
    if (!cert) {
        RamseyResult res = ramsey_number(s.r, targets, lo, hi, s.search_options());
        status = res.status;
        cert = res.certificate;
        stats = res.stats;
        if (cert && !s.no_cache) append_certificate(s.cache(), *cert);
    }

    nlohmann::json j;
    j["r"] = s.r;
    j["targets"] = render_targets(targets);
    std::ostringstream table;
    if (status == RamseyStatus::Found) {
        j["status"] = "found";
        j["value"] = cert->value;
        j["certificate"] = nlohmann::json::parse(cert->to_json());
        table << "R^" << s.r << "(" << render_targets(targets) << ") = "
              << cert->value << "\n";
        emit(j, s.format, table.str());
        return EXIT_FOUND;
    }
    if (status == RamseyStatus::NotFound) {
        j["status"] = "not-found";
        table << "no value in [" << lo << ", " << hi << "]\n";
        emit(j, s.format, table.str());
        return EXIT_NOT_FOUND;
    }
    j["status"] = "indeterminate";
    table << "indeterminate (budget)\n";
    emit(j, s.format, table.str());
    return EXIT_INDETERMINATE;
}

int run_construct(const Shared& s, const std::string& name, int t, int cs, int a,
                  int color, std::int64_t eps_num, std::int64_t eps_den,
                  const std::string& base_path) {
    Construction con;
    if (name == "two_block" || name == "two_block_shadow") {
        TwoBlockMode mode = name == "two_block" ? TwoBlockMode::Berge : TwoBlockMode::Shadow;
        con = two_block(t, cs, mode);
    } else if (name == "special_pair") {
        con = special_pair(s.n, s.r);
    } else if (name == "class_partition_suspension") {
        con = class_partition_suspension(t, cs, a);
    } else if (name == "monochromatic_clique") {
        con = monochromatic_clique(s.n, s.r, color, parse_targets(s.raw_targets));
    } else if (name == "superlinear_multicolor") {
        std::map<int, Coloring> bases;
        if (!base_path.empty()) {
            nlohmann::json j = nlohmann::json::parse(read_file(base_path));
            for (auto& [key, value] : j.items()) {
                bases[std::stoi(key)] = Coloring::from_json(value.dump());
            }
        } else {
            if (!s.seed_given) {
                throw std::invalid_argument(
                    "superlinear_multicolor without --bases needs --seed for the base search");
            }
            int q = static_cast<int>(pow_ceil(t, eps_den - eps_num, eps_den));
            std::uint64_t seed = static_cast<std::uint64_t>(s.seed);
            for (int su = 2; su <= s.r - 1; ++su) {
                bases[su] = find_clique_free_base(t - 1, su, std::max(2, su), q, seed + su);
            }
        }
        con = superlinear_multicolor(s.r, t, eps_num, eps_den, bases);
        if (s.seed_given) con.recipe.seed = static_cast<std::uint64_t>(s.seed);
    } else {
        throw std::invalid_argument("unknown construction '" + name + "'");
    }

    nlohmann::json j;
    j["coloring"] = nlohmann::json::parse(con.coloring.to_json());
    j["recipe"] = nlohmann::json::parse(con.recipe.to_json());
    std::ostringstream table;
    table << con.recipe.name << " on " << con.coloring.n << " vertices, uniformity "
          << con.coloring.r << ", " << con.coloring.k << " colors, "
          << (con.recipe.verified ? "verified" : "unverified") << "\n";
    emit(j, s.format, table.str());
    return EXIT_FOUND;
}

int run_verify(const Shared& s, const std::string& coloring_path,
               const std::string& witness_path, const std::string& recipe_path) {
    Coloring c = Coloring::from_json(read_file(coloring_path));
    if (!recipe_path.empty()) {
        ConstructionRecipe recipe = ConstructionRecipe::from_json_text(read_file(recipe_path));
        auto offender = verify_recipe(c, recipe);
        nlohmann::json j;
        j["valid"] = !offender.has_value();
        std::ostringstream table;
        if (offender) {
            j["violating_color"] = offender->first;
            j["witness"] = nlohmann::json::parse(offender->second.to_json());
            table << "guarantee violated in color " << offender->first << "\n";
        } else {
            table << "recipe guarantee holds\n";
        }
        emit(j, s.format, table.str());
        return offender ? EXIT_NOT_FOUND : EXIT_FOUND;
    }

    Witness w = Witness::from_json_text(read_file(witness_path));
    PatternSpec p;
    if (!s.raw_targets.empty()) {
        if (s.raw_targets.size() != 1) {
            throw std::invalid_argument("verify takes exactly one --target");
        }
        p = PatternSpec::parse(s.raw_targets[0]);
    } else {
        // Infer a clique pattern from the witness shape.
        int t = static_cast<int>(w.core.size());
        int su = 2;
        if (w.kind == StructureKind::Expansion && !w.extras.empty()) {
            su = c.r - set_size(w.extras[0]);
        } else if (w.kind == StructureKind::Suspension) {
            su = c.r - set_size(w.suspension_set);
        }
        p = PatternSpec::clique(w.kind, t, su);
    }
    auto violation = verify_witness(c, w, p);
    nlohmann::json j;
    j["valid"] = !violation.has_value();
    std::ostringstream table;
    if (violation) {
        j["violation"] = violation->what;
        table << "witness invalid: " << violation->what << "\n";
    } else {
        table << "witness valid\n";
    }
    emit(j, s.format, table.str());
    return violation ? EXIT_NOT_FOUND : EXIT_FOUND;
}

struct ReproRow {
    std::string label;
    int r;
    TargetList targets;
    int expected;
    bool extended;
};

std::vector<ReproRow> reproduction_matrix() {
    auto bk = [](int t) { return PatternSpec::clique(StructureKind::Berge, t); };
    std::vector<ReproRow> rows;
    auto add = [&](int r, int t1, int t2, int expected, bool ext = false) {
        std::string label = "R^" + std::to_string(r) + "(BK" + std::to_string(t1) +
                            ",BK" + std::to_string(t2) + ")";
        rows.push_back({label, r, {bk(t1), bk(t2)}, expected, ext});
    };
    add(3, 2, 2, 3);
    add(3, 2, 3, 4);
    add(3, 3, 3, 5);
    add(3, 2, 4, 5);
    add(3, 4, 4, 6);
    for (int t = 5; t <= 7; ++t) add(3, 2, t, t);
    for (int t = 4; t <= 6; ++t) add(3, 3, t, t + 1);
    add(3, 3, 4, 5);
    add(3, 4, 5, 6);
    for (int t = 2; t <= 4; ++t) add(4, t, t, t + 2);
    add(4, 5, 5, 7, true);
    add(4, 6, 6, 7, true);
    return rows;
}

int run_reproduce(const Shared& s, std::uint64_t budget, bool extended) {
    std::vector<ReproRow> rows = reproduction_matrix();
    bool any_skipped = false;
    bool any_mismatch = false;
    nlohmann::json out = nlohmann::json::array();
    for (const ReproRow& row : rows) {
        nlohmann::json rec;
        rec["label"] = row.label;
        rec["expected"] = row.expected;
        std::string verdict;
        if (budget == 0 || (row.extended && !extended)) {
            verdict = "skipped (budget)";
            any_skipped = true;
        } else {
            SearchOptions opts = s.search_options();
            opts.max_nodes = budget;
            // extended rows need symmetry reduction to be tractable
            if (row.extended || opts.pruning == PruningMode::None) {
                opts.pruning = row.expected <= 9 ? PruningMode::LexLeader : PruningMode::None;
            }
            RamseyResult res = ramsey_number(row.r, row.targets, 2, row.expected + 1, opts);
            if (res.status == RamseyStatus::Found) {
                rec["computed"] = res.certificate->value;
                verdict = res.certificate->value == row.expected ? "match" : "MISMATCH";
                if (verdict == "MISMATCH") any_mismatch = true;
            } else {
                verdict = "skipped (budget)";
                any_skipped = true;
            }
        }
        rec["verdict"] = verdict;
        out.push_back(rec);
        if (s.format == "table") {
            std::cout << row.label << " expected " << row.expected << ": " << verdict << "\n";
        }
    }
    if (s.format == "json") std::cout << out.dump() << "\n";
    if (any_mismatch) return EXIT_NOT_FOUND;
    if (any_skipped) return EXIT_INDETERMINATE;
    return EXIT_FOUND;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ramsey numbers of clique-derived hypergraph structures"};
    app.require_subcommand(1);

    Shared s;
    std::string coloring_path, witness_path, recipe_path, construct_name, base_path;
    int lo = 2, hi = 16, t = 0, cs = 0, a = 2, color = 0;
    std::int64_t eps_num = 1, eps_den = 2;
    std::uint64_t budget = 200000000ULL;
    bool extended = std::getenv("RAMSEY_EXTENDED") != nullptr;

    CLI::App* detect_cmd = app.add_subcommand("detect", "search one coloring for targets");
    add_shared(detect_cmd, s);
    detect_cmd->add_option("--coloring", coloring_path, "coloring JSON file")->required();

    CLI::App* decide_cmd = app.add_subcommand("decide", "does K_n^(r) arrow the targets?");
    add_shared(decide_cmd, s);

    CLI::App* number_cmd = app.add_subcommand("number", "smallest arrowing N in [lo, hi]");
    add_shared(number_cmd, s);
    number_cmd->add_option("--lo", lo, "lower end of the search range");
    number_cmd->add_option("--hi", hi, "upper end of the search range");

    CLI::App* construct_cmd = app.add_subcommand("construct", "generate a verified coloring");
    add_shared(construct_cmd, s);
    construct_cmd->add_option("--name", construct_name, "construction name")->required();
    construct_cmd->add_option("--t", t, "primary clique size");
    construct_cmd->add_option("--s", cs, "secondary clique size");
    construct_cmd->add_option("--a", a, "pattern uniformity for suspensions");
    construct_cmd->add_option("--color", color, "color for monochromatic_clique");
    construct_cmd->add_option("--eps-num", eps_num, "epsilon numerator");
    construct_cmd->add_option("--eps-den", eps_den, "epsilon denominator");
    construct_cmd->add_option("--bases", base_path, "JSON map of base colorings by uniformity");

    CLI::App* verify_cmd = app.add_subcommand("verify", "re-check a witness or recipe");
    add_shared(verify_cmd, s);
    verify_cmd->add_option("--coloring", coloring_path, "coloring JSON file")->required();
    verify_cmd->add_option("--witness", witness_path, "witness JSON file");
    verify_cmd->add_option("--recipe", recipe_path, "recipe JSON file");

    CLI::App* reproduce_cmd = app.add_subcommand("reproduce", "run the verification matrix");
    add_shared(reproduce_cmd, s);
    reproduce_cmd->add_option("--budget", budget, "node budget per row (0 = skip all)");
    reproduce_cmd->add_flag("--extended", extended, "include the budget-gated rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : EXIT_USAGE;
    }

    try {
        if (detect_cmd->parsed()) return run_detect(s, coloring_path);
        if (decide_cmd->parsed()) return run_decide(s);
        if (number_cmd->parsed()) return run_number(s, lo, hi);
        if (construct_cmd->parsed()) {
            return run_construct(s, construct_name, t, cs, a, color, eps_num, eps_den,
                                 base_path);
        }
        if (verify_cmd->parsed()) {
            if (witness_path.empty() && recipe_path.empty()) {
                throw std::invalid_argument("verify needs --witness or --recipe");
            }
            return run_verify(s, coloring_path, witness_path, recipe_path);
        }
        if (reproduce_cmd->parsed()) return run_reproduce(s, budget, extended);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    return EXIT_USAGE;
}
