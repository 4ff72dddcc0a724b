#pragma once

#include "dessinforge/perm.hpp"

#include <string>

namespace dforge::render {

/// Radial plane-tree drawing of a dessin: black vertices as filled disks,
/// white as open circles, straight edges, children fanned in the cyclic
/// order the permutation pair prescribes. Purely combinatorial layout.
std::string dessin_to_svg(const dessins::Dessin& d, bool edge_labels = true);

} // namespace dforge::render
