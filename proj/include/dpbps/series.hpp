#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dpbps/lattice.hpp"

namespace dpbps {

/// n^g_beta indexed by class and genus.
struct BpsTable {
  Surface surface = Surface::p2();
  std::map<DivClass, std::map<int, mpz_class>> entries;

  void set(const DivClass& beta, int genus, const mpz_class& n);
  /// 0 when absent.
  mpz_class get(const DivClass& beta, int genus) const;
  bool contains(const DivClass& beta, int genus) const;
};

struct GwValue {
  mpq_class value;
  /// Classes beta/k required by the sum but absent from the table.
  std::vector<DivClass> missing;
};

/// Genus-0 multiple cover sum I_beta = sum_{k | beta} n^0_{beta/k} / k^3.
GwValue gw_genus0(const BpsTable& table, const DivClass& beta);

struct Truncation {
  /// Keep Q^beta with w(beta) <= max_degree.
  std::int64_t max_degree = 0;
  int q_lo = 0;
  int q_hi = 0;
  /// When false the q-window is not enforced and expansion is refused.
  bool windowed = true;
};

class TruncSeries {
 public:
  using Key = std::pair<DivClass, int>;

  TruncSeries(Surface s, Truncation t);
  static TruncSeries one(Surface s, Truncation t);

  const Surface& surface() const { return surface_; }
  const Truncation& truncation() const { return trunc_; }
  const std::map<Key, mpq_class>& coeffs() const { return coeffs_; }
  mpq_class coeff(const DivClass& beta, int q) const;

  /// Adds c Q^beta q^k if it lies inside the truncation.
  void add_term(const DivClass& beta, int q, const mpq_class& c);

  /// Truncated product.
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

  /// "1 + q Q^(1) - 2 q^2 Q^(1)", deterministic order.
  std::string to_string() const;

 private:
  Surface surface_;
  Truncation trunc_;
  std::map<Key, mpq_class> coeffs_;
};

/// Truncated expansion of the PT product formula:
///   prod_beta prod_j (1 + (-1)^{j+1} q^j Q^beta)^{j n^0_beta}
///   prod_beta prod_{g>=1} prod_{k=0}^{2g-2}
///     (1 + (-1)^{g-k} q^{g-1-k} Q^beta)^{(-1)^{k+g} n^g_beta C(2g-2,k)}.
/// Throws TruncationOverflow when the window is disabled or a table class
/// has nonpositive anticanonical degree.
TruncSeries zpt_expand(const BpsTable& table, const Truncation& trunc);

std::string rational_to_string(const mpq_class& q);

}  // namespace dpbps
