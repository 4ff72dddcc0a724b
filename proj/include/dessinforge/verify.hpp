#pragma once

#include "dessinforge/perm.hpp"
#include "dessinforge/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dforge::verify {

using algebra::FieldElement;
using algebra::Poly;

/// Distinct critical values of a polynomial: the roots of the squarefree
/// part S(y) of Res_x(p - y, p'). Values are solved exactly when deg S <= 2,
/// either in the working field or in a reported quadratic extension of Q;
/// otherwise only the count is available.
struct CriticalValues {
    int distinct_count = 0;
    bool values_known = false;
    std::vector<FieldElement> values;  // sorted; tags may name a reported extension
    bool extension_required = false;   // roots escape the flat quadratic lattice
    Poly squarefree_part;              // monic S(y)
};

CriticalValues critical_values(const Poly& p);

struct ShabatReport {
    bool is_shabat = false;
    bool degenerate_single_value = false;  // fewer than two finite critical values
    CriticalValues cv;
    bool profiles_known = false;
    std::vector<int> black_profile, white_profile;
    long field_disc = 1;

    nlohmann::json to_json() const;
};

/// A polynomial is Shabat when it has at most two distinct finite critical
/// values. Profiles are the root-multiplicity partitions of p - c over the
/// two values, computed via squarefree decomposition (no root isolation).
ShabatReport shabat_report(const Poly& p);

/// Passport of a Shabat polynomial with exactly two resolved critical
/// values; the color assignment follows the value order, callers compare up
/// to swap. Throws when the polynomial is not Shabat or values are not
/// resolvable.
dessins::Passport passport_from_poly(const Poly& p);

/// Witness for Q(x) = A*P(ax+b) + B. When the scaling a lies outside the
/// working field, the relation a^root_degree = a_power_target certifies it
/// (the equivalence itself is decided exactly either way).
struct EquivalenceWitness {
    bool equivalent = false;
    bool witness_in_field = false;
    FieldElement A, a, b, B;
    int a_root_degree = 1;
    FieldElement a_power_target;
};

EquivalenceWitness equivalent(const Poly& p, const Poly& q);

struct FieldDescription {
    long disc = 1;  // 1 means Q
    std::string name;
};

/// Field of definition actually visible in the coefficients of the pair.
FieldDescription field_report(const Poly& p1, const Poly& p2);

/// Root-multiplicity partition of p - c.
std::vector<int> multiplicity_profile(const Poly& p, const FieldElement& c);

} // namespace dforge::verify
