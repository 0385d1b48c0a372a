#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dpbps/lattice.hpp"

namespace dpbps {

enum class ClassKind { Line, Conic, NefBig, OutOfScope };

std::string_view to_string(ClassKind kind);
ClassKind parse_class_kind(std::string_view text);

struct ClassProfile {
  DivClass beta;
  std::int64_t w = 0;
  std::int64_t pa = 0;
  std::int64_t beta_sq = 0;
  bool is_line = false;
  bool is_conic = false;
  bool nef = false;
  bool big = false;
  bool very_ample = false;
  /// Number of line classes l with beta.l = 0.
  std::int64_t eta = 0;
  ClassKind kind = ClassKind::OutOfScope;
};

/// All classes with (-K).beta = w and beta^2 = self_intersection, sorted
/// lexicographically. Exhaustive within the bound implied by those two
/// quadratic constraints (see classes.cpp).
std::vector<DivClass> enumerate_with(const Surface& s, std::int64_t w, std::int64_t self_intersection);

/// (-1)-curve classes: l^2 = -1, (-K).l = 1. Memoized per surface.
const std::vector<DivClass>& enumerate_lines(const Surface& s);
/// p_a = 0 and (-K).D = 2 (equivalently D^2 = 0, w = 2). Memoized.
const std::vector<DivClass>& enumerate_conics(const Surface& s);
/// alpha^2 = -2, K.alpha = 0 on S_r; empty on P^2 and P^1 x P^1. Memoized.
const std::vector<DivClass>& enumerate_roots(const Surface& s);

/// e_i - e_{i+1} and h - e1 - e2 - e3 (r >= 3).
std::vector<DivClass> simple_roots(const Surface& s);

bool is_root(const Surface& s, const DivClass& alpha);
/// s_alpha(x) = x + (x.alpha) alpha. Throws NotARoot.
DivClass reflect(const Surface& s, const DivClass& x, const DivClass& alpha);

/// Numerical k-very-ampleness criterion on del Pezzo surfaces. Returns false
/// on the excluded classes -kK_{S8}, -(k+1)K_{S8} and, for k = 1, -K_{S7}.
bool is_k_very_ample(const Surface& s, const DivClass& d, int k);
bool is_nef(const Surface& s, const DivClass& d);
bool is_big(const Surface& s, const DivClass& d);

bool is_minus_k_s8(const Surface& s, const DivClass& beta);
bool is_minus_2k_s8(const Surface& s, const DivClass& beta);

/// Lines orthogonal to a nef class. Throws NotNef. For big classes the lines
/// are checked to be pairwise disjoint and at most r in number.
std::vector<DivClass> orthogonal_lines(const Surface& s, const DivClass& beta);

ClassProfile classify(const Surface& s, const DivClass& beta);

}  // namespace dpbps
