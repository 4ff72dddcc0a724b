#include "dessinforge/families.hpp"
#include "dessinforge/verify.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace dforge;
using namespace dforge::algebra;
using namespace dforge::verify;
using testsupport::Rng;

namespace {

Poly from_ints(std::vector<long> coeffs, long d = 1) {
    std::vector<Rational> r(coeffs.begin(), coeffs.end());
    return Poly::from_rationals(r, d);
}

FieldElement fe(long v) { return FieldElement::rational(v); }

} // namespace

TEST_CASE("critical values") {
    for (int n = 2; n <= 6; ++n) {
        Poly xn = Poly::monomial(fe(1), n);
        auto cv = critical_values(xn);
        REQUIRE(cv.values_known);
        CHECK(cv.values == std::vector<FieldElement>{fe(0)});
    }
    auto cv = critical_values(from_ints({0, -3, 0, 1}));
    REQUIRE(cv.values_known);
    CHECK(cv.values == std::vector<FieldElement>{fe(-2), fe(2)});

    // linear polynomial: no critical values at all
    CHECK(critical_values(Poly::x(1)).distinct_count == 0);
    CHECK_THROWS(critical_values(Poly::one(1)));

    // T2,1 at (1,2): exactly two values
    CHECK(critical_values(families::build_F2(1, 2).p1).distinct_count == 2);

    // rational polynomial whose values live in a reported quadratic extension
    // p = x^3 - 3x^2: critical points 0, 2, values {0, -4}... use one with
    // irrational values instead: p = x^3 - 3x + 1 has values {3, -1}
    auto cv2 = critical_values(from_ints({1, -3, 0, 1}));
    REQUIRE(cv2.values_known);
    CHECK(cv2.values == std::vector<FieldElement>{fe(-1), fe(3)});

    // (x-1)^4 + 2: one critical point, one value
    Poly quartic = (Poly::x(1) - Poly::one(1)).pow(4) + Poly::constant(fe(2));
    auto cv3 = critical_values(quartic);
    REQUIRE(cv3.values_known);
    CHECK(cv3.values == std::vector<FieldElement>{fe(2)});
}

TEST_CASE("critical values resolved in a reported quadratic extension") {
    // p = x^3 - 3x^2 - 3x: p' = 3(x^2 - 2x - 1), roots 1 +- sqrt2,
    // values irrational but quadratic over Q
    Poly p = from_ints({0, -3, -3, 1});
    auto cv = critical_values(p);
    CHECK(cv.distinct_count == 2);
    REQUIRE(cv.values_known);
    CHECK(cv.values[0].disc() == 2);
    for (const auto& v : cv.values)
        CHECK(cv.squarefree_part.retagged(2).eval(v).is_zero());
}

TEST_CASE("shabat reports") {
    auto rep = shabat_report(Poly::monomial(fe(1), 5));
    CHECK(rep.is_shabat);
    CHECK(rep.degenerate_single_value);
    REQUIRE(rep.profiles_known);
    CHECK(rep.black_profile == std::vector<int>{5});
    CHECK(rep.white_profile == std::vector<int>(5, 1));

    auto rep2 = shabat_report(from_ints({1, -3, 0, 1}));
    CHECK(rep2.is_shabat);
    CHECK(!rep2.degenerate_single_value);

    // a generic quartic has three distinct critical values
    auto rep3 = shabat_report(from_ints({0, 1, -2, 0, 1}));
    CHECK(rep3.cv.distinct_count == 3);
    CHECK(!rep3.is_shabat);
    CHECK(!rep3.cv.values_known); // only the count is available beyond degree 2
    CHECK(rep3.cv.values.empty());

    // stability under conjugation
    Rng rng(31);
    for (int i = 0; i < 10; ++i) {
        Poly p = testsupport::random_poly(rng, -3, 4, true);
        if (p.degree() < 2)
            continue;
        CHECK(shabat_report(p).is_shabat == shabat_report(p.galois_conjugate()).is_shabat);
    }
    for (const Poly& p : {families::build_F4(2, 3).p1, families::build_F6(2).p1})
        CHECK(shabat_report(p.galois_conjugate()).is_shabat == shabat_report(p).is_shabat);
}

TEST_CASE("passports from polynomials") {
    auto f9 = families::build_sporadic(FamilyId::F9);
    CHECK(passport_from_poly(f9.p1)
              .matches_up_to_swap(dessins::Passport::parse("3,3,1^3;2^4,1;9")));
    CHECK(passport_from_poly(families::build_F1(3, 5, 6).p1)
              .matches_up_to_swap(dessins::Passport::parse("6,5,3;3,1^11;14")));
    // degenerate single-value polynomials are rejected
    CHECK_THROWS(passport_from_poly(Poly::monomial(fe(1), 4)));
    // n multiplies under composition (outer degree 2, inner degree 5)
    auto f10 = families::build_sporadic(FamilyId::F10);
    CHECK(passport_from_poly(f10.p1).n == 10);
}

TEST_CASE("equivalence of Shabat polynomials") {
    Rng rng(32);
    Poly p = from_ints({1, 0, -3, 0, 1});
    auto w = equivalent(p, p);
    CHECK(w.equivalent);
    CHECK(w.witness_in_field);
    CHECK(w.a == fe(1));
    CHECK(w.A == fe(1));

    // q = 2 p(3x - 1) + 5
    Poly inner = Poly::x(1).scaled(fe(3)) - Poly::one(1);
    Poly q = p.compose(inner).scaled(fe(2)) + Poly::constant(fe(5));
    auto w2 = equivalent(p, q);
    CHECK(w2.equivalent);
    REQUIRE(w2.witness_in_field);
    // reconstruct: q == A p(a x + b) + B
    Poly probe = p.compose(Poly::x(1).scaled(w2.a) + Poly::constant(w2.b)).scaled(w2.A) +
                 Poly::constant(w2.B);
    CHECK(probe == q);

    // symmetry and reflexivity on random pairs
    for (int i = 0; i < 12; ++i) {
        Poly r = testsupport::random_poly(rng, 1, 4, true);
        if (r.degree() < 2)
            continue;
        CHECK(equivalent(r, r).equivalent);
        Poly shifted = r.compose(Poly::x(1).scaled(fe(2)) + Poly::constant(fe(1)))
                           .scaled(fe(-3));
        CHECK(equivalent(r, shifted).equivalent);
        CHECK(equivalent(shifted, r).equivalent);
        // conjugation applied to both arguments preserves the relation
        Poly rc = r.retagged(-3);
        CHECK(equivalent(rc.galois_conjugate(), shifted.retagged(-3).galois_conjugate())
                  .equivalent == equivalent(rc, shifted.retagged(-3)).equivalent);
    }

    // polynomials that are not equivalent
    CHECK(!equivalent(from_ints({0, 0, 0, 0, 1}), from_ints({0, 1, 0, 0, 1})).equivalent);
    CHECK_THROWS(equivalent(from_ints({0, 0, 1}), from_ints({0, 0, 0, 1})));
}

TEST_CASE("fields of definition") {
    auto f1 = families::build_F1(1, 2, 3);
    CHECK(field_report(f1.p1, f1.p2).disc == -1);
    auto f5 = families::build_F5(2);
    CHECK(field_report(f5.p1, f5.p2).disc == 1);
    CHECK(field_report(f5.p1, f5.p2).name == "Q");
    auto f12 = families::build_sporadic(FamilyId::F12);
    CHECK(field_report(f12.p1, f12.p2).disc == 273);
}
