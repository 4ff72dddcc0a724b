#pragma once

#include "dessinforge/perm.hpp"

#include <vector>

namespace dforge::dessins {

/// Passports larger than the scale guard are refused unless force is set.
/// The guard defaults to 16 and can be moved with DESSIN_FORGE_MAX_N.
int enumeration_scale_limit();

/// One canonical representative per isomorphism class of plane-tree dessins
/// realizing the passport, sorted by sigma1 image list. Fixes
/// sigma0*sigma1 = (1,...,n) and backtracks over sigma1 of cycle type beta,
/// pruning on the cycle structure the partial sigma0 commits to; the
/// isomorphism quotient is conjugation by the centralizer <(1,...,n)>.
std::vector<Dessin> enumerate_trees(const Passport& p, bool force = false);

std::size_t count_trees(const Passport& p, bool force = false);

} // namespace dforge::dessins
