#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dpbps/classes.hpp"
#include "dpbps/lattice.hpp"
#include "dpbps/poly.hpp"

namespace dpbps {

/// Finite formal combination of irreducible sl2 x sl2 representations
/// [j_L, j_R], keyed by doubled spins (2 j_L, 2 j_R). Multiplicities are
/// signed so that formal differences survive.
class Sl2x2Rep {
 public:
  struct Term {
    int jl2;
    int jr2;
    std::int64_t mult;
    friend bool operator==(const Term&, const Term&) = default;
  };

  /// Adds mult * [jl2/2, jr2/2]. A negative doubled spin is interpreted via
  /// the Weyl character: index -1 is the zero representation and index
  /// -k-2 equals minus index k.
  void add(int jl2, int jr2, std::int64_t mult);

  std::vector<Term> terms() const;
  /// sum of mult * (2 j_L + 1)(2 j_R + 1).
  std::int64_t dimension() const;

  friend bool operator==(const Sl2x2Rep& a, const Sl2x2Rep& b) { return a.terms_ == b.terms_; }

 private:
  std::map<std::pair<int, int>, std::int64_t> terms_;
};

/// sl2 multiset keyed by doubled spin.
using Sl2Rep = std::map<int, std::int64_t>;

struct InvariantReport {
  Surface surface = Surface::p2();
  ClassProfile profile;
  PolyZ poincare;
  /// poincare / P_t(P^{w-1}).
  PolyZ quotient;
  bool palindromic = false;
  mpz_class n;
  mpz_class m;
  Sl2x2Rep refined;
  std::int64_t dim = 0;
  std::map<std::string, bool> checks;
  /// Non-fatal findings.
  std::vector<std::string> flags;

  bool all_checks_pass() const;
};

bool operator==(const InvariantReport& a, const InvariantReport& b);

PolyZ surface_poincare(const Surface& s);
/// Poincare polynomial of Hilb^n(S) for n <= 2.
PolyZ hilb_poincare(const Surface& s, int n);

/// Throws OutOfScope unless classify() gives Line, Conic or NefBig.
ClassProfile require_in_scope(const Surface& s, const DivClass& beta);

PolyZ poincare_closed(const Surface& s, const DivClass& beta);
mpz_class bps_n(const Surface& s, const DivClass& beta);
/// (-1)^{w-1} n / w; throws ConjectureViolation if w does not divide n.
mpz_class log_bps_m(const Surface& s, const DivClass& beta);

Sl2x2Rep refined_rep(const Surface& s, const DivClass& beta);
/// Clebsch-Gordan: [a] (x) [b] = sum_{k=|a-b|}^{a+b} [k].
Sl2Rep diagonal_restriction(const Sl2x2Rep& rep);
/// Lefschetz dictionary: [k/2] contributes t^{(dim-k)/2}(1 + .. + t^k).
/// Throws ParityViolation when dim - k is odd or negative.
PolyZ rep_to_poincare(const Sl2Rep& rep, std::int64_t dim);

struct DivisibilityCheck {
  PolyZ quotient;
  bool palindromic;
};
/// Exact division of P_t(M_beta) by P_t(P^{w-1}); throws
/// ConjectureViolation on a nonzero remainder.
DivisibilityCheck check_divisibility(const Surface& s, const DivClass& beta);

/// Closed-form report with internal consistency checks (no wall-crossing).
InvariantReport closed_form_report(const Surface& s, const DivClass& beta);

}  // namespace dpbps
