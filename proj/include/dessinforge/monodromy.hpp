#pragma once

#include "dessinforge/family_params.hpp"
#include "dessinforge/group.hpp"

#include <optional>
#include <utility>

namespace dforge::monodromy {

/// Order implied by the structure a monodromy lemma claims, with the claim
/// text. Advisory: several of the claims are internally inconsistent, so the
/// computed order is always the source of truth and disagreements are
/// reported, never reconciled. nullopt where no coherent formula exists.
struct ExpectedOrder {
    std::optional<Int> order;
    std::string provenance;
    std::string structure_label;
    bool questionable = false;
};

ExpectedOrder expected_order(const FamilyParams& params, int tree_index);

/// The tree dessin a family's monodromy is computed from. F1-F6 use the
/// explicit lemma labelings; F7-F9 enumerate their passports directly;
/// F10-F12 subdivide their enumerated degree-5/10/13 component dessins
/// (their own passports sit behind the enumeration scale guard). For F11 the
/// two components are told apart by primitivity: tree 1 subdivides the
/// composition component, tree 2 the primitive one.
dessins::Dessin family_tree_dessin(const FamilyParams& params, int tree_index);

/// The two degree-10 component dessins of F11: first the composition
/// (imprimitive) one, then the primitive one.
std::pair<dessins::Dessin, dessins::Dessin> f11_component_dessins();

PermGroup cartographic_group(const dessins::Dessin& d);

/// Full report: computed order/transitivity/primitivity plus the lemma's
/// advisory expectation; an order mismatch is data, not an error.
GroupReport structure_check(const dessins::Dessin& d, const FamilyParams& params,
                            int tree_index);

} // namespace dforge::monodromy
