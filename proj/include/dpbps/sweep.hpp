#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "dpbps/invariants.hpp"
#include "dpbps/lattice.hpp"

namespace dpbps {

struct SweepSpec {
  Surface surface = Surface::p2();
  std::set<int> genera{0, 1, 2};
  /// Anticanonical degree cutoff.
  std::int64_t max_degree = 12;
  /// Emit every class of each orbit instead of one representative
  /// (non-increasing a_i) per orbit of the permutation group.
  bool full_orbits = false;
  int threads = 1;
};

/// Sorts a_1..a_r non-increasingly on S_r; identity elsewhere.
DivClass sorted_representative(const Surface& s, const DivClass& beta);

/// Representatives (non-increasing a_i) of the W(E_r)-orbit of beta, sorted.
std::vector<DivClass> weyl_orbit_representatives(const Surface& s, const DivClass& beta);

/// In-scope classes built from the classification: Weyl orbits of pulled
/// back seeds (lines, conics, h, 2h, (d; d-1), (1,k); -K of smaller
/// surfaces; conic - K of smaller surfaces). Ordered by (genus, w, class).
std::vector<DivClass> sweep_classes(const SweepSpec& spec);

/// Every in-scope class with w <= max_degree found by scanning a box of
/// coefficients. Only exhaustive for r <= 5, where nef classes satisfy
/// d <= w. Returns sorted representatives.
std::vector<DivClass> brute_force_in_scope(const Surface& s, std::int64_t max_degree);

/// run_checks over sweep_classes on spec.threads workers. The callback
/// receives reports in class order regardless of the thread count.
void run_sweep(const SweepSpec& spec, const std::function<void(const InvariantReport&)>& emit);

}  // namespace dpbps
