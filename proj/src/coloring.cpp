#include "ramsey/coloring.hpp"

#include <stdexcept>

#include "json.hpp"

namespace ramsey {

std::optional<ColoringViolation> validate_coloring(const Coloring& c) {
    if (c.r < 2 || c.k < 2 || c.n < 0 || c.n > MAX_VERTICES) {
        return ColoringViolation{"parameters", -1};
    }
    if (c.colors.size() != binomial(c.n, c.r)) {
        return ColoringViolation{"length", static_cast<std::int64_t>(c.colors.size())};
    }
    for (std::size_t i = 0; i < c.colors.size(); ++i) {
        if (c.colors[i] >= c.k) {
            return ColoringViolation{"color-range", static_cast<std::int64_t>(i)};
        }
    }
    return std::nullopt;
}

std::string Coloring::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["r"] = r;
    j["k"] = k;
    j["colors"] = std::vector<int>(colors.begin(), colors.end());
    return j.dump();
}

Coloring Coloring::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Coloring c;
    c.n = j.at("n").get<int>();
    c.r = j.at("r").get<int>();
    c.k = j.at("k").get<int>();
    for (const auto& x : j.at("colors")) c.colors.push_back(static_cast<Color>(x.get<int>()));
    if (auto v = validate_coloring(c)) {
        throw std::invalid_argument("coloring document invalid: field '" + v->what + "'");
    }
    return c;
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.image.resize(n);
    for (int i = 0; i < n; ++i) p.image[i] = i;
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.image.resize(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) p.image[image[i]] = static_cast<int>(i);
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    Permutation p;
    p.image.resize(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) p.image[i] = image[other.image[i]];
    return p;
}

bool Permutation::is_valid() const {
    std::vector<bool> seen(image.size(), false);
    for (int v : image) {
        if (v < 0 || v >= static_cast<int>(image.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

VertexSet Permutation::apply(VertexSet s) const {
    VertexSet out = 0;
    while (s) {
        int v = std::countr_zero(s);
        out = with_vertex(out, image[v]);
        s &= s - 1;
    }
    return out;
}

Coloring apply_permutation(const Coloring& c, const Permutation& p) {
    if (static_cast<int>(p.image.size()) != c.n || !p.is_valid()) {
        throw std::invalid_argument("apply_permutation: permutation does not match coloring");
    }
    Coloring out(c.n, c.r, c.k);
    for_each_subset(c.n, c.r, [&](VertexSet e) {
        out.colors[colex_rank(p.apply(e))] = c.colors[colex_rank(e)];
    });
    return out;
}

}  // namespace ramsey
