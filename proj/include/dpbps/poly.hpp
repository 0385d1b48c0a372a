#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace dpbps {

/// Dense polynomial in one variable t with arbitrary-precision integer
/// coefficients. Always stored without trailing zeros; the zero polynomial
/// has no coefficients.
class PolyZ {
 public:
  PolyZ() = default;
  explicit PolyZ(std::vector<mpz_class> coeffs);
  PolyZ(std::initializer_list<long> coeffs);

  static PolyZ monomial(const mpz_class& c, int exponent);

  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  mpz_class coeff(int i) const;
  const mpz_class& leading() const { return coeffs_.back(); }

  mpz_class eval(const mpz_class& t) const;
  mpz_class eval_at_one() const;

  bool is_palindromic() const;
  bool has_nonnegative_coeffs() const;

  PolyZ& operator+=(const PolyZ& o);
  PolyZ& operator-=(const PolyZ& o);
  PolyZ& operator*=(const PolyZ& o);
  PolyZ& operator*=(const mpz_class& c);

  friend PolyZ operator+(PolyZ a, const PolyZ& b) { return a += b; }
  friend PolyZ operator-(PolyZ a, const PolyZ& b) { return a -= b; }
  friend PolyZ operator*(PolyZ a, const PolyZ& b) { return a *= b; }
  friend PolyZ operator*(PolyZ a, const mpz_class& c) { return a *= c; }
  friend PolyZ operator*(const mpz_class& c, PolyZ a) { return a *= c; }
  friend bool operator==(const PolyZ& a, const PolyZ& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const PolyZ& a, const PolyZ& b) { return !(a == b); }

  /// Multiply by t^k (k >= 0).
  PolyZ shifted(int k) const;

  /// Human-readable form, e.g. "1 + 10t + t^2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Long division over the integers: p = q * quotient + remainder with
/// deg(remainder) < deg(q). Throws DivisionByZero for q = 0 and
/// InexactDivision when a step would leave the integers.
std::pair<PolyZ, PolyZ> divide_exact(const PolyZ& p, const PolyZ& q);

/// Poincare polynomial of projective n-space, 1 + t + ... + t^n.
/// proj_space(-1) is the empty space (zero polynomial).
PolyZ proj_space(int n);

mpz_class binomial(const mpz_class& n, unsigned long k);

}  // namespace dpbps
