#include "dessinforge/enumerate.hpp"
#include "dessinforge/lemma_trees.hpp"
#include "dessinforge/monodromy.hpp"

#include <doctest.h>

using namespace dforge;
using namespace dforge::monodromy;
using algebra::Int;
using algebra::factorial;

TEST_CASE("expected orders from the lemma structures") {
    auto e = expected_order(FamilyParams::make(FamilyId::F1, 1, 2, 3), 1);
    REQUIRE(e.order.has_value());
    CHECK(*e.order == 720);

    e = expected_order(FamilyParams::make(FamilyId::F4, 4, 5), 1);
    REQUIRE(e.order.has_value());
    Int f8 = factorial(8) / 2;
    CHECK(*e.order == f8 * f8 * f8 * 24);

    e = expected_order(FamilyParams::make(FamilyId::F2, 2, 4), 2);
    REQUIRE(e.order.has_value());
    CHECK(*e.order == 28800);

    // the internally inconsistent T2,1 case carries no order
    e = expected_order(FamilyParams::make(FamilyId::F2, 1, 3), 1);
    CHECK(!e.order.has_value());
    CHECK(!e.structure_label.empty());

    e = expected_order(FamilyParams::make(FamilyId::F12), 1);
    REQUIRE(e.order.has_value());
    Int a13 = factorial(13) / 2;
    CHECK(*e.order == 2 * a13 * a13);
}

TEST_CASE("cartographic groups of enumerated trees") {
    auto prm = FamilyParams::make(FamilyId::F7);
    auto trees = dessins::enumerate_trees(prm.passport());
    REQUIRE(trees.size() == 2);
    // order is invariant across the representatives of a passport
    for (const auto& t : trees)
        CHECK(cartographic_group(t).order() == 168);

    auto rep = structure_check(trees[0], prm, 1);
    CHECK(rep.order == 168);
    CHECK(rep.transitive);
    CHECK(rep.primitive);
    CHECK(rep.structure_label == "PSL(3,2)");
    CHECK(rep.order_matches_expected);

    auto prm8 = FamilyParams::make(FamilyId::F8);
    for (const auto& t : dessins::enumerate_trees(prm8.passport()))
        CHECK(cartographic_group(t).order() == 2520);
}

TEST_CASE("the F9 label is resolved by computation") {
    auto prm = FamilyParams::make(FamilyId::F9);
    auto rep = structure_check(family_tree_dessin(prm, 1), prm, 1);
    CHECK(rep.order == 1512); // PGammaL(2,8), not the table's 4032
    CHECK(!rep.order_matches_expected);
    CHECK(rep.expectation_questionable);
    auto rep2 = structure_check(family_tree_dessin(prm, 2), prm, 2);
    CHECK(rep2.order == 1512);
}

TEST_CASE("series monodromy matches the lemma formulas at small parameters") {
    std::vector<std::pair<FamilyParams, int>> cases = {
        {FamilyParams::make(FamilyId::F1, 1, 2, 3), 1},
        {FamilyParams::make(FamilyId::F1, 2, 4, 6), 1},
        {FamilyParams::make(FamilyId::F3, 1, 2), 1},
        {FamilyParams::make(FamilyId::F3, 1, 2), 2},
        {FamilyParams::make(FamilyId::F3, 2, 4), 1},
        {FamilyParams::make(FamilyId::F4, 2, 3), 1},
        {FamilyParams::make(FamilyId::F4, 2, 3), 2},
        {FamilyParams::make(FamilyId::F5, 2), 1},
        {FamilyParams::make(FamilyId::F5, 2), 2},
        {FamilyParams::make(FamilyId::F6, 2), 1},
        {FamilyParams::make(FamilyId::F2, 1, 2), 1},
        {FamilyParams::make(FamilyId::F2, 1, 2), 2},
        {FamilyParams::make(FamilyId::F2, 2, 4), 2},
    };
    for (const auto& [prm, tree] : cases) {
        auto rep = structure_check(family_tree_dessin(prm, tree), prm, tree);
        REQUIRE(rep.expected_order.has_value());
        CHECK(rep.order_matches_expected);
    }
}

TEST_CASE("F1 at prime degree: alternating or symmetric") {
    for (auto [r, s, t] : std::vector<std::array<int, 3>>{{1, 2, 4}, {2, 4, 5}, {1, 4, 6}}) {
        auto prm = FamilyParams::make(FamilyId::F1, r, s, t);
        int n = prm.degree(); // 7, 11, 11
        auto d = dessins::lemma_generators(prm, 1);
        PermGroup g = cartographic_group(d);
        Int order = g.order();
        CHECK((order == factorial(n) || order == factorial(n) / 2));
        CHECK(g.contains(d.sigma_infinity()));
        CHECK(g.contains(d.sigma1()));
        // Lagrange sanity
        CHECK(factorial(n) % order == 0);
    }
}

TEST_CASE("composed families are imprimitive with inner-degree blocks") {
    auto prm = FamilyParams::make(FamilyId::F4, 2, 3);
    auto g = cartographic_group(family_tree_dessin(prm, 1));
    auto rep = report_for(g);
    CHECK(!rep.primitive);
    CHECK(has_block_of_size(g, prm.p_param()));

    // Lemma 4.2's R(Q(x)) with inner degree 2
    auto prm2 = FamilyParams::make(FamilyId::F2, 1, 2);
    auto g2 = cartographic_group(family_tree_dessin(prm2, 1));
    CHECK(has_block_of_size(g2, 2));
}

TEST_CASE("F10/F11/F12 tree dessins from component subdivisions") {
    auto prm10 = FamilyParams::make(FamilyId::F10);
    for (int tree = 1; tree <= 2; ++tree) {
        auto d = family_tree_dessin(prm10, tree);
        CHECK(d.passport().matches_up_to_swap(prm10.passport()));
    }
    CHECK(structure_check(family_tree_dessin(prm10, 1), prm10, 1).order == 14400);
    CHECK(structure_check(family_tree_dessin(prm10, 2), prm10, 2).order == 7200);

    auto [composition, primitive] = f11_component_dessins();
    CHECK(!report_for(cartographic_group(composition)).primitive);
    CHECK(report_for(cartographic_group(primitive)).primitive);
    auto prm11 = FamilyParams::make(FamilyId::F11);
    CHECK(composition.subdivided().passport().matches_up_to_swap(prm11.passport()));

    auto prm12 = FamilyParams::make(FamilyId::F12);
    auto d12 = family_tree_dessin(prm12, 1);
    CHECK(d12.n() == 26);
    CHECK(d12.passport().matches_up_to_swap(prm12.passport()));
}
