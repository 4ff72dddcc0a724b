#pragma once

#include "dessinforge/family_params.hpp"
#include "dessinforge/perm.hpp"

namespace dforge::dessins {

/// The explicitly labeled tree dessins of the families F1-F6. tree_index
/// (1 or 2) selects the combinatorial tree where the family distinguishes
/// two (F2-F6 and the two labelings of F3); F1 has a single template.
/// The returned dessin always has sigma0*sigma1 = (1,...,n); labelings whose
/// raw product is a different n-cycle are canonically relabeled.
Dessin lemma_generators(const FamilyParams& params, int tree_index);

} // namespace dforge::dessins
