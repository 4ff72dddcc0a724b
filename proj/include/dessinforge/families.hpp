#pragma once

#include "dessinforge/family_params.hpp"
#include "dessinforge/poly.hpp"
#include "dessinforge/verify.hpp"

#include <string>
#include <vector>

namespace dforge::families {

using algebra::FieldElement;
using algebra::Poly;
using algebra::Rational;

/// Exact Jacobi polynomial in the convention calibrated so that the brush
/// construction below has critical values exactly {0,1}; the calibration is
/// run once over the finitely many argument-order/sign variants and then
/// fixed globally. Reports parameter combinations that collapse the degree.
Poly jacobi(int n, long a, long b);

enum class BrushNorm {
    unit_01,       // critical values {0, 1}
    f5_0_minus1,   // integral form, critical values {0, -1} (requires p == q)
    f6_fifth_roots // rescaled form over Q(sqrt 5), critical values primitive
                   // fifth roots of unity (requires p == q)
};

/// Shabat polynomial of the (p,q)-brush: one black vertex of degree p+1, one
/// white of degree q+1, leaves elsewhere.
Poly brush(int p, int q, BrushNorm norm);

enum class PairRelation { galois_conjugate, both_rational };

struct ShabatPair {
    FamilyParams params;
    Poly p1, p2;
    long field_disc = 1;
    PairRelation relation = PairRelation::both_rational;
    std::vector<std::string> repairs; // displayed-formula corrections applied
};

ShabatPair build_F1(int r, int s, int t);
ShabatPair build_F2(int r, int s);
ShabatPair build_F3(int r, int s);
ShabatPair build_F4(int r, int s);
ShabatPair build_F5(int r);
ShabatPair build_F6(int r);
ShabatPair build_sporadic(FamilyId id); // F9..F12

/// The alternative representation of F2's first tree as a composition R(Q(x))
/// with Q = x^2; equivalent to build_F2's tree 1 under verify::equivalent.
Poly build_F2_composed(int r, int s);

/// Dispatch by validated parameters. F7/F8 have no polynomial construction
/// (their Shabat polynomials are catalogued elsewhere; enumeration and
/// monodromy cover them here) and are rejected.
ShabatPair build_family(const FamilyParams& params);

/// Composition with the exact alignment precondition: every resolved
/// critical value v of the inner must satisfy outer(v) in W, where W is the
/// outer's critical-value set padded to two elements by the {0,1} convention.
/// Skipped exactly when the inner's values need a field extension; the
/// composite can still be verified Shabat afterwards.
Poly compose_shabat(const Poly& outer, const Poly& inner);

struct FamilyReport {
    ShabatPair pair;
    verify::ShabatReport rep1, rep2;
    dessins::Passport expected_passport;
    bool passport_ok = false;
    bool conjugacy_ok = false;
    verify::FieldDescription field;
    std::string field_note; // nonempty when the computed field disagrees with
                            // the summary-table row (reported, not suppressed)
    bool ok = false;

    nlohmann::json to_json() const;
    std::string text() const;
};

FamilyReport family_report(const FamilyParams& params);

/// Summary-table expectation for the field of definition; 0 when the row is
/// parameter-dependent (F1, F3) and the computed value stands alone.
long table_field_disc(FamilyId id);

} // namespace dforge::families
