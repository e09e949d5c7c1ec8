#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ramsey/constructions.hpp"
#include "ramsey/detect.hpp"

using namespace ramsey;

TEST_CASE("two_block verifies across the grid, berge and shadow modes") {
    for (int t = 3; t <= 7; ++t) {
        for (int s = 3; s <= 7; ++s) {
            for (TwoBlockMode mode : {TwoBlockMode::Berge, TwoBlockMode::Shadow}) {
                Construction con = two_block(t, s, mode);  // throws on violation
                CHECK(con.recipe.verified);
                CHECK(con.coloring.n == t + s - 4);
                CHECK(!verify_recipe(con.coloring, con.recipe).has_value());
            }
        }
    }
}

TEST_CASE("two_block berge mode gives the lower witness for known equalities") {
    // value t+s-3 means no monochromatic Berge clique on t+s-4 vertices
    for (auto [t, s] : {std::pair{4, 5}, std::pair{5, 5}}) {
        Construction con = two_block(t, s, TwoBlockMode::Berge);
        CHECK(con.coloring.n == t + s - 4);
        CHECK(!detect_any(con.coloring, con.recipe.guarantee).has_value());
    }
}

TEST_CASE("special_pair verifies and has exactly C(n-2, r-2) blue edges") {
    for (int n = 3; n <= 7; ++n) {
        Construction con = special_pair(n, 3);
        CHECK(con.recipe.verified);
        std::uint64_t blue = 0;
        for (Color c : con.coloring.colors) blue += c == 0;
        CHECK(blue == binomial(n - 2, 1));
    }
    for (int n = 6; n <= 7; ++n) {
        Construction con = special_pair(n, 4);
        CHECK(con.recipe.verified);
        std::uint64_t blue = 0;
        for (Color c : con.coloring.colors) blue += c == 0;
        CHECK(blue == binomial(n - 2, 2));
    }
}

TEST_CASE("class_partition_suspension verifies on the listed cases") {
    for (auto [t, s, a] : {std::tuple{4, 3, 2}, std::tuple{6, 4, 2}}) {
        Construction con = class_partition_suspension(t, s, a);
        CHECK(con.recipe.verified);
        CHECK(con.coloring.n == (s - 1) * (t / a));
        CHECK(con.coloring.r == a + 1);
    }
}

TEST_CASE("monochromatic_clique cases") {
    // unused color: any guarantee on it holds
    TargetList g = {std::nullopt, PatternSpec::clique(StructureKind::Berge, 2)};
    Construction con = monochromatic_clique(5, 3, 0, g);
    CHECK(con.recipe.verified);
    // used color: only targets too large to fit can be guaranteed
    TargetList big = {PatternSpec::clique(StructureKind::Berge, 6), std::nullopt};
    CHECK(monochromatic_clique(5, 3, 0, big).recipe.verified);
    TargetList small = {PatternSpec::clique(StructureKind::Berge, 3), std::nullopt};
    CHECK_THROWS_AS(monochromatic_clique(5, 3, 0, small), std::runtime_error);
}

TEST_CASE("verify_recipe pinpoints the violated color") {
    Construction con = monochromatic_clique(
        5, 3, 0, {std::nullopt, PatternSpec::clique(StructureKind::Berge, 3)});
    con.recipe.guarantee[0] = PatternSpec::clique(StructureKind::Berge, 3);
    auto offender = verify_recipe(con.coloring, con.recipe);
    REQUIRE(offender.has_value());
    CHECK(offender->first == 0);
    CHECK(!verify_witness(con.coloring, offender->second, *con.recipe.guarantee[0]));
}

TEST_CASE("recipe JSON round trip") {
    Construction con = two_block(4, 5, TwoBlockMode::Berge);
    con.recipe.seed = 42;
    ConstructionRecipe back = ConstructionRecipe::from_json_text(con.recipe.to_json());
    CHECK(back.name == con.recipe.name);
    CHECK(back.params == con.recipe.params);
    CHECK(back.seed == con.recipe.seed);
    CHECK(back.verified == con.recipe.verified);
    REQUIRE(back.guarantee.size() == con.recipe.guarantee.size());
    for (std::size_t i = 0; i < back.guarantee.size(); ++i) {
        CHECK(back.guarantee[i] == con.recipe.guarantee[i]);
    }
}

TEST_CASE("pow_ceil is the exact ceiling of t^(num/den)") {
    CHECK(pow_ceil(5, 1, 2) == 3);    // ceil(sqrt 5)
    CHECK(pow_ceil(9, 1, 2) == 3);
    CHECK(pow_ceil(10, 1, 2) == 4);
    CHECK(pow_ceil(8, 2, 3) == 4);    // 8^(2/3) = 4 exactly
    CHECK(pow_ceil(9, 2, 3) == 5);
    CHECK(pow_ceil(7, 1, 1) == 7);
    CHECK(pow_ceil(1, 3, 4) == 1);
}

TEST_CASE("find_clique_free_base is deterministic and actually clique-free") {
    Coloring a = find_clique_free_base(5, 2, 2, 3, 17);
    Coloring b = find_clique_free_base(5, 2, 2, 3, 17);
    CHECK(a == b);
    PatternSpec k3 = PatternSpec::clique(StructureKind::Berge, 3);
    for (int color = 0; color < 2; ++color) CHECK(!detect_berge(a, color, k3).has_value());
    // R(3,3) = 6: no 2-coloring of K_6 avoids a monochromatic triangle
    CHECK_THROWS_AS(find_clique_free_base(6, 2, 2, 3, 17, 200), std::runtime_error);
}

TEST_CASE("superlinear_multicolor structural properties, r = 3") {
    const int t = 5;
    std::map<int, Coloring> bases;
    bases[2] = find_clique_free_base(t - 1, 2, 2, 3, 7);  // q = ceil(5^(1/2)) = 3
    Construction con = superlinear_multicolor(3, t, 1, 2, bases);
    CHECK(!con.recipe.verified);  // asymptotic guarantee, not checked here
    const int class_size = static_cast<int>(con.recipe.params.at("class_size"));
    CHECK(class_size == 3);
    CHECK(con.coloring.n == (t - 1) * class_size);
    CHECK(con.coloring.k == 3);

    // color layout: within-class -> 1, three classes -> 2, two classes -> base
    for_each_subset(con.coloring.n, 3, [&](VertexSet e) {
        VertexSet classes = 0;
        for (int v : set_to_vertices(e)) classes = with_vertex(classes, v / class_size);
        int span = set_size(classes);
        Color c = con.coloring.color_of(e);
        if (span == 1) CHECK(c == 1);
        if (span == 3) CHECK(c == 2);
        if (span == 2) CHECK(c == bases[2].color_of(classes));
    });

    // the r-class color covers no within-class pair, so its Berge cliques
    // span at most one vertex per class: BK_t is impossible with t-1 classes
    CHECK(!detect_berge(con.coloring, 2,
                        PatternSpec::clique(StructureKind::Berge, t)).has_value());
}

TEST_CASE("superlinear_multicolor recursive layout, r = 4") {
    const int t = 5;
    std::map<int, Coloring> bases;
    bases[2] = find_clique_free_base(t - 1, 2, 2, 3, 7);
    bases[3] = Coloring(t - 1, 3, 2);  // all color 0 at uniformity 3
    Construction con = superlinear_multicolor(4, t, 1, 2, bases);
    CHECK(con.coloring.r == 4);
    CHECK(con.coloring.k == 2 + 2 + 2);  // base blocks for s = 2, 3 plus two
    const int class_size = static_cast<int>(con.recipe.params.at("class_size"));
    int span_color = 4;
    for_each_subset(con.coloring.n, 4, [&](VertexSet e) {
        VertexSet classes = 0;
        for (int v : set_to_vertices(e)) classes = with_vertex(classes, v / class_size);
        int span = set_size(classes);
        Color c = con.coloring.color_of(e);
        if (span == 1) CHECK(c == 0);
        if (span == 4) CHECK(c == span_color);
        if (span == 2) CHECK(c == bases[2].color_of(classes));
        if (span == 3) CHECK(c == 2 + bases[3].color_of(classes));
    });
}

TEST_CASE("superlinear_multicolor rejects bad inputs") {
    std::map<int, Coloring> bases;
    CHECK_THROWS_AS(superlinear_multicolor(3, 5, 1, 2, bases), std::invalid_argument);
    bases[2] = Coloring(4, 2, 2);
    CHECK_THROWS_AS(superlinear_multicolor(3, 5, 3, 2, bases), std::invalid_argument);
    CHECK_THROWS_AS(superlinear_multicolor(2, 5, 1, 2, bases), std::invalid_argument);
}

TEST_CASE("lll bound: returned n satisfies the inequality, n + 1 fails it") {
    for (int r : {3, 4}) {
        std::optional<std::int64_t> prev;
        for (int t = r; t <= 20; ++t) {
            auto b = lll_suspension_bound(t, r);
            if (!b) continue;
            CHECK(lll_condition_holds(t, r, *b));
            CHECK(!lll_condition_holds(t, r, *b + 1));
            if (prev) CHECK(*b >= *prev);  // nondecreasing in t on the grid
            prev = *b;
        }
    }
}

TEST_CASE("lll bound against independently computed values") {
    CHECK(!lll_suspension_bound(5, 3).has_value());
    CHECK(lll_suspension_bound(6, 3) == 9);
    CHECK(lll_suspension_bound(10, 3) == 84);
    CHECK(lll_suspension_bound(20, 3) == 7281);
    CHECK(!lll_suspension_bound(5, 4).has_value());
    CHECK(lll_suspension_bound(6, 4) == 7);
    CHECK(lll_suspension_bound(10, 4) == 78);
    CHECK(lll_suspension_bound(20, 4) == 7006);
}
