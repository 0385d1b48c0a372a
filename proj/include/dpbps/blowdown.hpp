#pragma once

#include <string_view>
#include <vector>

#include "dpbps/lattice.hpp"

namespace dpbps {

enum class ContractionStatus {
  /// Nothing to contract (no orthogonal lines, or beta is not big).
  Identity,
  /// Orthogonal lines moved to exceptional coordinates and dropped.
  Complete,
  /// No Weyl normalisation was found; target equals source.
  Incomplete,
};

std::string_view to_string(ContractionStatus status);

struct Contraction {
  Surface source_surface = Surface::p2();
  DivClass source_class;
  Surface target_surface = Surface::p2();
  DivClass target_class;
  /// Number of contracted lines.
  int eta = 0;
  std::vector<DivClass> contracted_lines;
  /// Roots whose reflections, applied in order, carry the source class to
  /// the padded target class.
  std::vector<DivClass> weyl_word;
  ContractionStatus status = ContractionStatus::Identity;
};

/// Blow down every line orthogonal to a nef and big class. The orthogonal
/// lines are completed to a configuration of disjoint lines; when that is
/// impossible (r - 1 lines blowing down to a quadric) the target is P^1 x P^1.
/// Throws NotNef.
Contraction contract(const Surface& s, const DivClass& beta);

/// Apply a sequence of reflections.
DivClass apply_word(const Surface& s, DivClass x, const std::vector<DivClass>& word);

/// Pullback along the standard blowups S_r -> S_{r'} (r' <= r, P2 = S_0)
/// and S_r -> S_2 -> P1xP1 (h1 = h - e1, h2 = h - e2). Throws InvalidClass
/// when no such map exists.
DivClass pull_back(const Surface& from, const DivClass& c, const Surface& to);

}  // namespace dpbps
