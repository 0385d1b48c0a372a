#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "dpbps/blowdown.hpp"
#include "dpbps/lattice.hpp"
#include "dpbps/poly.hpp"

namespace dpbps {

enum class WallType { G1Line, G2TypeI, G2TypeII };

std::string_view to_string(WallType type);

/// A simple wall (1,(beta,1)) = (1,(beta1,n1)) + (0,(beta2,n2)) for pairs
/// with holomorphic Euler characteristic 1.
struct Decomposition {
  DivClass beta1;
  DivClass beta2;
  int n1 = 0;
  int n2 = 1;
  /// Anticanonical degree of beta1 + beta2.
  std::int64_t w = 0;
  mpq_class wall_delta0;
  WallType type = WallType::G1Line;
  /// dim Ext^1 from the pair side to the sheaf side, and back.
  int ext_plus = 0;
  int ext_minus = 0;
  /// Poincare polynomial of the parameter space of (pair, sheaf) on the wall.
  PolyZ base_poly;
};

/// Raw numerical wall candidate found by scanning lines and conics.
struct WallCandidate {
  DivClass beta1;
  int n1;
  DivClass beta2;
  int n2;
  mpq_class delta0;
};

/// Poincare polynomial of the PT moduli space P_n(S, beta): P^{n-1} for
/// lines, |beta| = P^{w+p_a-1} for n = 1 - p_a (beta nef), otherwise a
/// P^{w-n} bundle over Hilb^{n-1+p_a}(S). Zero when n < 1 - p_a. Throws
/// HypothesisViolated if beta is not base point free or not
/// (n-2+p_a)-very ample, Unsupported if the Hilbert scheme index exceeds 2.
PolyZ pair_moduli_poincare(const Surface& s, const DivClass& beta, int n);

/// Wall position for (1,(beta,n)) = (1,(beta1,n1)) + (0,(beta2,n2)):
/// (n + delta)/w = n2/w2.
mpq_class wall_position(std::int64_t w, int n, std::int64_t w2, int n2);

/// Every decomposition with beta2 a line or conic, beta1 = beta - beta2 of
/// positive degree, a positive wall, and a nonempty pair space for beta1.
std::vector<WallCandidate> scan_walls(const Surface& s, const DivClass& beta, int n);

/// Typed walls for chi = 1: genus two very ample classes give one TypeI
/// (conic) and 2e(S) - 8 TypeII (line) walls; genus one nef and big classes
/// give a G1Line wall for each orthogonal line. Genus zero has none.
/// Throws HypothesisViolated for a genus-two class that is not very ample.
std::vector<Decomposition> enumerate_decompositions(const Surface& s, const DivClass& beta);

/// Loss of Poincare polynomial across the wall:
/// (P_t(P^{ext+ - 1}) - P_t(P^{ext- - 1})) * base_poly.
PolyZ correction_poly(const Decomposition& d);

struct WallCrossingTrace {
  Contraction contraction;
  /// Surface and class on which pairs are computed.
  Surface model_surface = Surface::p2();
  DivClass model_class;
  PolyZ pairs_plus;   // P_t(P_1(S', beta'))
  PolyZ pairs_minus;  // P_t(P_{-1}(S', beta'))
  std::vector<Decomposition> walls;
  PolyZ poincare;
  std::vector<std::string> flags;
};

/// P_t(M) = P_t(P_1) - sum of wall corrections - t P_t(P_{-1}) on the given
/// surface, without contracting anything.
PolyZ assemble_pairs(const Surface& s, const DivClass& beta);

WallCrossingTrace wallcrossing_trace(const Surface& s, const DivClass& beta);
PolyZ poincare_via_wallcrossing(const Surface& s, const DivClass& beta);

}  // namespace dpbps
