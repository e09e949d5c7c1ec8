#include "ramsey/constructions.hpp"

#include <random>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace ramsey {

using boost::multiprecision::cpp_int;

namespace {

// e in [2.718281828459045, 2.718281828459046]; certification compares
// against the upper end so rounding can never over-claim a bound.
const std::int64_t E_HI_NUM = 2718281828459046LL;
const std::int64_t E_DEN_POW10 = 15;

cpp_int big_binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    cpp_int result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

void finish(Construction& con, bool check) {
    if (auto v = validate_coloring(con.coloring)) {
        throw std::logic_error("construction produced an invalid coloring: " + v->what);
    }
    if (check) {
        if (auto offender = verify_recipe(con.coloring, con.recipe)) {
            throw std::runtime_error("construction '" + con.recipe.name +
                                     "' violates its guarantee in color " +
                                     std::to_string(offender->first));
        }
        con.recipe.verified = true;
    }
}

}  // namespace

std::optional<std::pair<int, Witness>> verify_recipe(const Coloring& c,
                                                     const ConstructionRecipe& recipe) {
    return detect_any(c, recipe.guarantee);
}

std::string ConstructionRecipe::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["params"] = params;
    nlohmann::json g = nlohmann::json::array();
    for (const auto& t : guarantee) {
        if (t) g.push_back(t->render()); else g.push_back(nullptr);
    }
    j["guarantee"] = g;
    if (seed) j["seed"] = *seed; else j["seed"] = nullptr;
    j["verified"] = verified;
    return j.dump();
}

ConstructionRecipe ConstructionRecipe::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ConstructionRecipe r;
    r.name = j.at("name").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, std::int64_t>>();
    for (const auto& g : j.at("guarantee")) {
        if (g.is_null()) r.guarantee.push_back(std::nullopt);
        else r.guarantee.push_back(PatternSpec::parse(g.get<std::string>()));
    }
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    r.verified = j.at("verified").get<bool>();
    return r;
}

Construction two_block(int t, int s, TwoBlockMode mode, bool check) {
    if (t < 3 || s < 3) throw std::invalid_argument("two_block: need t, s >= 3");
    const int n = t + s - 4;
    VertexSet block_a = 0;
    for (int v = 0; v < t - 2; ++v) block_a = with_vertex(block_a, v);

    Construction con;
    con.coloring = Coloring(n, 3, 2);
    std::uint64_t rank = 0;
    for_each_subset(n, 3, [&](VertexSet e) {
        con.coloring.colors[rank++] = std::popcount(e & block_a) >= 2 ? 0 : 1;
    });
    con.recipe.name = mode == TwoBlockMode::Berge ? "two_block" : "two_block_shadow";
    con.recipe.params = {{"t", t}, {"s", s}};
    StructureKind kind = mode == TwoBlockMode::Berge ? StructureKind::Berge : StructureKind::Shadow;
    con.recipe.guarantee = {PatternSpec::clique(kind, t), PatternSpec::clique(kind, s)};
    finish(con, check);
    return con;
}

Construction special_pair(int n, int r, bool check) {
    if (r < 3 || n < r) throw std::invalid_argument("special_pair: need n >= r >= 3");
    const VertexSet pair = 0b11;  // v1 = 0, v2 = 1
    Construction con;
    con.coloring = Coloring(n, r, 2);
    std::uint64_t rank = 0;
    for_each_subset(n, r, [&](VertexSet e) {
        con.coloring.colors[rank++] = (e & pair) == pair ? 0 : 1;
    });
    con.recipe.name = "special_pair";
    con.recipe.params = {{"n", n}, {"r", r}};
    if (r == 3) {
        con.recipe.guarantee = {PatternSpec::clique(StructureKind::Berge, 3),
                                PatternSpec::clique(StructureKind::Berge, n)};
    } else {
        con.recipe.guarantee = {PatternSpec::clique(StructureKind::Berge, n),
                                PatternSpec::clique(StructureKind::Berge, n)};
    }
    finish(con, check);
    return con;
}

Construction class_partition_suspension(int t, int s, int a, bool check) {
    if (a < 2 || t < a + 1 || s < 2) {
        throw std::invalid_argument("class_partition_suspension: need a >= 2, t >= a+1, s >= 2");
    }
    const int r = a + 1;
    const int class_size = t / a;
    const int n = (s - 1) * class_size;
    if (n < r) throw std::invalid_argument("class_partition_suspension: host too small for r");

    Construction con;
    con.coloring = Coloring(n, r, 2);
    std::uint64_t rank = 0;
    for_each_subset(n, r, [&](VertexSet e) {
        // rainbow across classes (<= 1 vertex per class) is red
        bool rainbow = true;
        for (int cls = 0; cls < s - 1 && rainbow; ++cls) {
            VertexSet mask = 0;
            for (int v = cls * class_size; v < (cls + 1) * class_size; ++v) {
                mask = with_vertex(mask, v);
            }
            if (std::popcount(e & mask) > 1) rainbow = false;
        }
        con.coloring.colors[rank++] = rainbow ? 1 : 0;
    });
    con.recipe.name = "class_partition_suspension";
    con.recipe.params = {{"t", t}, {"s", s}, {"a", a}};
    con.recipe.guarantee = {PatternSpec::clique(StructureKind::Suspension, t, a),
                            PatternSpec::clique(StructureKind::Shadow, s)};
    finish(con, check);
    return con;
}

Construction monochromatic_clique(int n, int r, int color, TargetList guarantee, bool check) {
    if (n < r || r < 2) throw std::invalid_argument("monochromatic_clique: need n >= r >= 2");
    Construction con;
    int k = std::max<int>(2, static_cast<int>(guarantee.size()));
    con.coloring = Coloring(n, r, k);
    if (color < 0 || color >= k) throw std::invalid_argument("monochromatic_clique: bad color");
    std::fill(con.coloring.colors.begin(), con.coloring.colors.end(), static_cast<Color>(color));
    con.recipe.name = "monochromatic_clique";
    con.recipe.params = {{"n", n}, {"r", r}, {"color", color}};
    con.recipe.guarantee = std::move(guarantee);
    finish(con, check);
    return con;
}

std::int64_t pow_ceil(std::int64_t t, std::int64_t num, std::int64_t den) {
    if (t < 1 || num < 0 || den < 1) throw std::invalid_argument("pow_ceil: bad arguments");
    cpp_int target = 1;
    for (std::int64_t i = 0; i < num; ++i) target *= t;
    std::int64_t m = 1;
    for (;;) {
        cpp_int lhs = 1;
        for (std::int64_t i = 0; i < den; ++i) lhs *= m;
        if (lhs >= target) return m;
        ++m;
    }
}

Construction superlinear_multicolor(int r, int t, std::int64_t eps_num, std::int64_t eps_den,
                                    const std::map<int, Coloring>& base_colorings,
                                    bool check) {
    if (r < 3) throw std::invalid_argument("superlinear_multicolor: need r >= 3");
    if (eps_num <= 0 || eps_num >= eps_den) {
        throw std::invalid_argument("superlinear_multicolor: need 0 < epsilon < 1");
    }
    for (int s = 2; s <= r - 1; ++s) {
        auto it = base_colorings.find(s);
        if (it == base_colorings.end()) {
            throw std::invalid_argument("superlinear_multicolor: missing base coloring for s=" +
                                        std::to_string(s));
        }
        if (it->second.r != s || validate_coloring(it->second)) {
            throw std::invalid_argument("superlinear_multicolor: invalid base coloring for s=" +
                                        std::to_string(s));
        }
    }
    const int classes = base_colorings.at(2).n;
    for (int s = 3; s <= r - 1; ++s) {
        if (base_colorings.at(s).n != classes) {
            throw std::invalid_argument("superlinear_multicolor: base vertex counts disagree");
        }
    }
    if (classes < 2) throw std::invalid_argument("superlinear_multicolor: degenerate class count");
    const int class_size = static_cast<int>(pow_ceil(t, eps_num, eps_den));
    const int n = classes * class_size;
    if (n > MAX_VERTICES) throw std::invalid_argument("superlinear_multicolor: host exceeds 64 vertices");

    // color layout: base blocks by uniformity, then the dedicated color for
    // edges spanning r classes; within-class edges reuse the lowest index
    // (red for r = 3, following the three-color case).
    std::vector<int> offset(r, 0);
    int total = 0;
    for (int s = 2; s <= r - 1; ++s) {
        offset[s] = total;
        total += base_colorings.at(s).k;
    }
    const int span_color = total;
    const int k = (r == 3) ? 3 : total + 2;
    const int within_color = (r == 3) ? 1 : 0;

    Construction con;
    con.coloring = Coloring(n, r, k);
    std::uint64_t rank = 0;
    for_each_subset(n, r, [&](VertexSet e) {
        VertexSet class_set = 0;
        VertexSet bits = e;
        while (bits) {
            class_set = with_vertex(class_set, std::countr_zero(bits) / class_size);
            bits &= bits - 1;
        }
        int span = set_size(class_set);
        Color c;
        if (span == 1) {
            c = static_cast<Color>(within_color);
        } else if (span == r) {
            c = static_cast<Color>(span_color);
        } else {
            const Coloring& base = base_colorings.at(span);
            c = static_cast<Color>(offset[span] + base.color_of(class_set));
        }
        con.coloring.colors[rank++] = c;
    });
    con.recipe.name = "superlinear_multicolor";
    con.recipe.params = {{"r", r}, {"t", t}, {"eps_num", eps_num}, {"eps_den", eps_den},
                         {"classes", classes}, {"class_size", class_size}};
    for (int c = 0; c < k; ++c) {
        con.recipe.guarantee.push_back(PatternSpec::clique(StructureKind::Berge, t));
    }
    finish(con, check);
    return con;
}

Coloring find_clique_free_base(int n, int s, int k, int q, std::uint64_t seed, int max_tries) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, k - 1);
    PatternSpec forbidden = PatternSpec::clique(StructureKind::Berge, q, s);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        Coloring c(n, s, k);
        for (auto& col : c.colors) col = static_cast<Color>(dist(rng));
        bool clean = true;
        for (int color = 0; color < k && clean; ++color) {
            if (detect_berge(c, color, forbidden)) clean = false;
        }
        if (clean) return c;
    }
    throw std::runtime_error("find_clique_free_base: no clique-free coloring found");
}

bool lll_condition_holds(int t, int r, std::int64_t n) {
    if (t < r || r < 3 || n < t) return false;
    cpp_int b = big_binomial(t, 2);
    if (b > 100000) throw std::invalid_argument("lll_condition_holds: t too large");
    cpp_int d = big_binomial(t, 2) * big_binomial(r, 2) * big_binomial(n, t - 2);
    // e * (1 + d) * 2^(1 - C(t,2)) < 1, certified against the upper bound on e:
    //   2 * E_HI_NUM * (1 + d) < 2^C(t,2) * 10^15
    cpp_int lhs = 2 * cpp_int(E_HI_NUM) * (1 + d);
    cpp_int rhs = cpp_int(1) << static_cast<unsigned>(b);
    for (int i = 0; i < E_DEN_POW10; ++i) rhs *= 10;
    return lhs < rhs;
}

std::optional<std::int64_t> lll_suspension_bound(int t, int r) {
    if (t < r || r < 3) throw std::invalid_argument("lll_suspension_bound: need t >= r >= 3");
    if (!lll_condition_holds(t, r, t)) return std::nullopt;
    std::int64_t lo = t, hi = t + 1;
    while (lll_condition_holds(t, r, hi)) {
        lo = hi;
        hi *= 2;
    }
    while (lo + 1 < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (lll_condition_holds(t, r, mid)) lo = mid; else hi = mid;
    }
    return lo;
}

}  // namespace ramsey
