#pragma once

#include "dpbps/invariants.hpp"
#include "dpbps/walls.hpp"

namespace dpbps {

/// Closed-form report plus every cross-check that involves other modules:
/// the wall-crossing pipeline, the uncontracted genus-one route, blowdown
/// invariance, orthogonal-line disjointness, the wall census and Weyl
/// invariance under simple reflections. Check names are the keys of
/// InvariantReport::checks.
InvariantReport run_checks(const Surface& s, const DivClass& beta);

}  // namespace dpbps
