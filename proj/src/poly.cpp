#include "dpbps/poly.hpp"

#include <algorithm>
#include <sstream>

#include "dpbps/error.hpp"

namespace dpbps {

PolyZ::PolyZ(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyZ::PolyZ(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

PolyZ PolyZ::monomial(const mpz_class& c, int exponent) {
  if (exponent < 0) throw Error(ErrorKind::Internal, "negative exponent in PolyZ::monomial");
  std::vector<mpz_class> v(static_cast<size_t>(exponent) + 1);
  v.back() = c;
  return PolyZ(std::move(v));
}

void PolyZ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class PolyZ::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

mpz_class PolyZ::eval(const mpz_class& t) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

mpz_class PolyZ::eval_at_one() const {
  mpz_class acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

bool PolyZ::is_palindromic() const {
  const size_t n = coeffs_.size();
  for (size_t i = 0; i < n / 2; ++i)
    if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
  return true;
}

bool PolyZ::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c >= 0; });
}

PolyZ& PolyZ::operator+=(const PolyZ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyZ& PolyZ::operator-=(const PolyZ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyZ& PolyZ::operator*=(const PolyZ& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpz_class> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

PolyZ& PolyZ::operator*=(const mpz_class& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

PolyZ PolyZ::shifted(int k) const {
  if (k < 0) throw Error(ErrorKind::Internal, "negative shift would need fractional powers of t");
  if (is_zero()) return {};
  std::vector<mpz_class> v(static_cast<size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return PolyZ(std::move(v));
}

std::string PolyZ::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<PolyZ, PolyZ> divide_exact(const PolyZ& p, const PolyZ& q) {
  if (q.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
  std::vector<mpz_class> rem = p.coeffs();
  const int dq = q.degree();
  if (p.degree() < dq) return {PolyZ{}, p};
  std::vector<mpz_class> quot(static_cast<size_t>(p.degree() - dq + 1));
  const mpz_class& lead = q.leading();
  for (int i = p.degree(); i >= dq; --i) {
    mpz_class& top = rem[static_cast<size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw Error(ErrorKind::InexactDivision, "quotient leaves the integers");
    mpz_class f = top / lead;
    quot[static_cast<size_t>(i - dq)] = f;
    for (int j = 0; j <= dq; ++j) rem[static_cast<size_t>(i - dq + j)] -= f * q.coeffs()[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(dq));
  return {PolyZ(std::move(quot)), PolyZ(std::move(rem))};
}

PolyZ proj_space(int n) {
  if (n < -1) throw Error(ErrorKind::Internal, "projective space of dimension < -1");
  return PolyZ(std::vector<mpz_class>(static_cast<size_t>(n + 1), mpz_class(1)));
}

mpz_class binomial(const mpz_class& n, unsigned long k) {
  mpz_class out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

}  // namespace dpbps
