#pragma once

#include "dessinforge/perm.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace dforge {

/// The twelve passport families with exactly two plane trees: six infinite
/// series F1-F6 (parametrized by r, s, t as applicable) and six sporadic
/// passports F7-F12.
enum class FamilyId { F1, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11, F12 };

FamilyId family_from_string(const std::string& s);
std::string family_name(FamilyId id);

struct FamilyParams {
    FamilyId id;
    int r = 0, s = 0, t = 0;

    static FamilyParams make(FamilyId id, int r = 0, int s = 0, int t = 0);

    /// Degree of the trees in the family.
    int degree() const;
    /// gcd(r,s[,t]) for the series with a lemma order formula.
    int gcd_param() const;
    /// p as bound by the passport constraints (F4: r+s-1, F5/F6: 2r-1).
    int p_param() const;

    dessins::Passport passport() const;

    std::string str() const;
};

bool family_is_sporadic(FamilyId id);

} // namespace dforge
