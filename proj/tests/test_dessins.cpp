#include "dessinforge/enumerate.hpp"
#include "dessinforge/lemma_trees.hpp"
#include "dessinforge/perm.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

using namespace dforge;
using namespace dforge::dessins;

TEST_CASE("left-to-right composition") {
    Perm id = Perm::identity(4);
    Perm q = Perm::from_cycles(4, {{1, 2, 3}});
    CHECK(compose(id, q) == q);
    CHECK(compose(Perm::from_cycles(4, {{1, 2}}), Perm::from_cycles(4, {{1, 2}})) == id);
    CHECK_THROWS(compose(Perm::identity(3), Perm::identity(4)));

    // the F1 generators multiply to the canonical 6-cycle
    Perm s0 = Perm::from_cycles(6, {{2, 3}, {4, 5, 6}});
    Perm s1 = Perm::from_cycles(6, {{1, 2, 4}});
    CHECK(compose(s0, s1) == Perm::from_cycles(6, {{1, 2, 3, 4, 5, 6}}));
}

TEST_CASE("cycle types") {
    CHECK(Perm::identity(5).cycle_type() == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(Perm::from_cycles(6, {{1, 2, 3}, {4, 5}}).cycle_type() == std::vector<int>{3, 2, 1});
    // F1 sigma0 for (r,s,t)=(3,5,6)
    auto prm = FamilyParams::make(FamilyId::F1, 3, 5, 6);
    CHECK(lemma_generators(prm, 1).sigma0().cycle_type() == std::vector<int>{6, 5, 3});
}

TEST_CASE("passports: parse, print, swap matching") {
    Passport p = Passport::parse("3,5,6;3,1^11;14");
    CHECK(p.n == 14);
    CHECK(p.alpha == std::vector<int>{6, 5, 3});
    CHECK(Passport::parse(p.str()) == p);
    CHECK_THROWS(Passport::parse("3,2;2,2;5"));
    CHECK_THROWS(Passport::parse("2,1;1,1,1;4"));
    Passport q({3, 1, 1, 1}, {3, 2, 1});
    CHECK(q.matches_up_to_swap(Passport({3, 2, 1}, {3, 1, 1, 1})));
    CHECK(!q.matches_up_to_swap(Passport({4, 1, 1}, {3, 2, 1})));
}

TEST_CASE("dessin validation and passports") {
    Perm s0 = Perm::from_cycles(6, {{2, 3}, {4, 5, 6}});
    Perm s1 = Perm::from_cycles(6, {{1, 2, 4}});
    Dessin d(s0, s1);
    CHECK(d.passport() == Passport({3, 2, 1}, {3, 1, 1, 1}));
    CHECK(cycle_count(d.sigma_infinity()) == 1);
    CHECK(cycle_count(d.sigma0()) + cycle_count(d.sigma1()) == d.n() + 1);

    // single edge
    Dessin edge(Perm::identity(1), Perm::identity(1));
    CHECK(edge.passport() == Passport({1}, {1}));

    // sigma0*sigma1 not an n-cycle
    CHECK_THROWS(Dessin(Perm::from_cycles(4, {{1, 2}, {3, 4}}),
                        Perm::from_cycles(4, {{1, 2}, {3, 4}})));

    // JSON round trip
    auto j = d.to_json();
    CHECK(Dessin::from_json(j) == d);
}

TEST_CASE("lemma generators satisfy the dessin contract") {
    // the spec'd instance: F2 tree 2 at (r,s)=(1,2) has sigma1 = (1,2,3,5)
    auto d22 = lemma_generators(FamilyParams::make(FamilyId::F2, 1, 2), 2);
    CHECK(d22.sigma1() == Perm::from_cycles(6, {{1, 2, 3, 5}}));
    CHECK(d22.passport() == Passport({2, 2, 1, 1}, {4, 1, 1}));

    std::vector<FamilyParams> sweep = {
        FamilyParams::make(FamilyId::F1, 1, 2, 3), FamilyParams::make(FamilyId::F1, 3, 5, 6),
        FamilyParams::make(FamilyId::F2, 1, 2),    FamilyParams::make(FamilyId::F2, 2, 5),
        FamilyParams::make(FamilyId::F3, 1, 2),    FamilyParams::make(FamilyId::F3, 3, 2),
        FamilyParams::make(FamilyId::F4, 1, 2),    FamilyParams::make(FamilyId::F4, 3, 4),
        FamilyParams::make(FamilyId::F5, 2),       FamilyParams::make(FamilyId::F5, 4),
        FamilyParams::make(FamilyId::F6, 2),       FamilyParams::make(FamilyId::F6, 3)};
    for (const auto& prm : sweep) {
        for (int tree = 1; tree <= 2; ++tree) {
            Dessin d = lemma_generators(prm, tree);
            CHECK(d.n() == prm.degree());
            // canonical product
            Perm inf = d.sigma_infinity();
            for (int x = 0; x < d.n(); ++x)
                CHECK(inf.of(x) == (x + 1) % d.n());
            CHECK(d.passport().matches_up_to_swap(prm.passport()));
        }
    }
    CHECK_THROWS(lemma_generators(FamilyParams::make(FamilyId::F7), 1));
    CHECK_THROWS(lemma_generators(FamilyParams::make(FamilyId::F1, 1, 2, 3), 3));
}

TEST_CASE("subdivision doubles a dessin") {
    auto prm = FamilyParams::make(FamilyId::F1, 1, 2, 3);
    Dessin d = lemma_generators(prm, 1);
    Dessin s = d.subdivided();
    CHECK(s.n() == 2 * d.n());
    // whites become all degree 2; blacks collect every old vertex degree
    std::vector<int> expected_alpha = d.sigma0().cycle_type();
    for (int v : d.sigma1().cycle_type())
        expected_alpha.push_back(v);
    std::sort(expected_alpha.rbegin(), expected_alpha.rend());
    CHECK(s.passport() == Passport(expected_alpha, std::vector<int>(d.n(), 2)));

    Dessin edge(Perm::identity(1), Perm::identity(1));
    CHECK(edge.subdivided().passport() == Passport({1, 1}, {2}));
}

namespace {

// Exhaustive oracle: every sigma1 in S_n, sigma0 forced by the fixed
// n-cycle, classes counted through the rotation quotient.
std::size_t brute_force_count(const Passport& p) {
    const int n = p.n;
    std::vector<int> imgs(n);
    std::iota(imgs.begin(), imgs.end(), 0);
    std::set<std::vector<int>> classes;
    do {
        Perm s1(imgs);
        if (s1.cycle_type() != p.beta)
            continue;
        Perm s1inv = s1.inverse();
        std::vector<int> s0(n);
        for (int x = 0; x < n; ++x)
            s0[x] = s1inv.of((x + 1) % n);
        if (Perm(s0).cycle_type() != p.alpha)
            continue;
        std::vector<int> best;
        for (int k = 0; k < n; ++k) {
            std::vector<int> cand(n);
            for (int x = 0; x < n; ++x)
                cand[(x + k) % n] = (imgs[x] + k) % n;
            if (best.empty() || cand < best)
                best = std::move(cand);
        }
        classes.insert(best);
    } while (std::next_permutation(imgs.begin(), imgs.end()));
    return classes.size();
}

} // namespace

TEST_CASE("tree enumeration: counts, representatives, oracle") {
    CHECK(count_trees(Passport::parse("3,2,1;3,1^3;6")) == 2);
    CHECK(count_trees(Passport::parse("1;1;1")) == 1);
    CHECK(count_trees(Passport::parse("2;1,1;2")) == 1);
    CHECK(count_trees(Passport::parse("2,2,1;3,1,1;5")) == 1);
    CHECK(count_trees(Passport::parse("3,3,1;2,2,1^3;7")) == 2);
    CHECK(count_trees(Passport::parse("3,2,2;2,2,1^3;7")) == 2);
    CHECK(count_trees(Passport::parse("3,3,1^3;2^4,1;9")) == 2);
    CHECK(count_trees(Passport::parse("3,5,6;3,1^11;14")) == 2);

    // representatives are valid, realize the passport, and are canonical
    Passport p = Passport::parse("2,2,1,1;4,1,1;6");
    auto trees = enumerate_trees(p);
    CHECK(trees.size() == 2);
    std::set<std::vector<int>> seen;
    for (const auto& t : trees) {
        CHECK(t.passport() == p);
        CHECK(seen.insert(t.sigma1().images()).second);
        CHECK(t.canonical().sigma1() == t.sigma1());
    }
    // deterministic output
    auto again = enumerate_trees(p);
    REQUIRE(again.size() == trees.size());
    for (size_t i = 0; i < trees.size(); ++i)
        CHECK(again[i] == trees[i]);

    // brute-force comparison at small degree
    for (const char* s : {"3,2,1;3,1,1,1;6", "2,2,1;3,1,1;5", "2,2;2,1,1;4", "2,1;2,1;3",
                          "3,1,1;2,2,1;5", "3,2;2,1,1,1;5", "2,2,2;2,2,1,1;6",
                          "4,1,1;2,2,2;6", "3,3;2,2,1,1;6", "5,1;3,1,1,1;6"}) {
        Passport q = Passport::parse(s);
        CHECK(count_trees(q) == brute_force_count(q));
    }
    // a passport violating the tree vertex count has no trees
    CHECK(count_trees(Passport::parse("2;2;2")) == 0);
}

TEST_CASE("enumeration scale guard") {
    Passport big = Passport::parse("4^3,1^8;2^10;20");
    CHECK_THROWS_AS((void)enumerate_trees(big), std::length_error);
    CHECK(enumeration_scale_limit() == 16);
    setenv("DESSIN_FORGE_MAX_N", "21", 1);
    CHECK(enumeration_scale_limit() == 21);
    unsetenv("DESSIN_FORGE_MAX_N");
    CHECK(enumeration_scale_limit() == 16);
}

#include "dessinforge/render.hpp"

TEST_CASE("SVG rendering is structural and deterministic") {
    auto prm = FamilyParams::make(FamilyId::F1, 1, 2, 3);
    Dessin d = lemma_generators(prm, 1);
    std::string svg = render::dessin_to_svg(d);
    // one line per edge, one circle per vertex
    size_t lines = 0, circles = 0, pos = 0;
    while ((pos = svg.find("<line", pos)) != std::string::npos) {
        ++lines;
        ++pos;
    }
    pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++circles;
        ++pos;
    }
    CHECK(lines == static_cast<size_t>(d.n()));
    CHECK(circles == static_cast<size_t>(cycle_count(d.sigma0()) + cycle_count(d.sigma1())));
    CHECK(svg == render::dessin_to_svg(d));
    CHECK(render::dessin_to_svg(d, false).find("<text") == std::string::npos);
}
