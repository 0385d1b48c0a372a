#include "dpbps/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "dpbps/error.hpp"
#include "dpbps/poly.hpp"

namespace dpbps {

void BpsTable::set(const DivClass& beta, int genus, const mpz_class& n) {
  require_class(surface, beta);
  if (genus < 0) throw Error(ErrorKind::InvalidClass, "negative genus in BPS table");
  entries[beta][genus] = n;
}

mpz_class BpsTable::get(const DivClass& beta, int genus) const {
  auto it = entries.find(beta);
  if (it == entries.end()) return 0;
  auto jt = it->second.find(genus);
  return jt == it->second.end() ? mpz_class(0) : jt->second;
}

bool BpsTable::contains(const DivClass& beta, int genus) const {
  auto it = entries.find(beta);
  return it != entries.end() && it->second.count(genus) > 0;
}

// In F = sum_g n^g_beta k^{-1} (2 sin(k lambda/2))^{2g-2} Q^{k beta} only
// g = 0 has a lambda^{-2} term; (2 sin(k lambda/2))^{-2} = (k lambda)^{-2} + O(1),
// so the degree k cover of beta' contributes n^0_{beta'} / k^3.
GwValue gw_genus0(const BpsTable& table, const DivClass& beta) {
  GwValue out;
  out.value = 0;
  std::int64_t g = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) g = std::gcd(g, beta[i]);
  for (std::int64_t k = 1; k <= g; ++k) {
    if (g % k != 0) continue;
    DivClass base = beta;
    for (std::size_t i = 0; i < base.size(); ++i) base.coeffs[i] /= k;
    if (!table.contains(base, 0)) {
      out.missing.push_back(base);
      continue;
    }
    mpq_class term(table.get(base, 0), mpz_class(static_cast<long>(k * k * k)));
    term.canonicalize();
    out.value += term;
  }
  return out;
}

TruncSeries::TruncSeries(Surface s, Truncation t) : surface_(std::move(s)), trunc_(t) {}

TruncSeries TruncSeries::one(Surface s, Truncation t) {
  TruncSeries out(s, t);
  out.add_term(zero_class(s), 0, 1);
  return out;
}

mpq_class TruncSeries::coeff(const DivClass& beta, int q) const {
  auto it = coeffs_.find({beta, q});
  return it == coeffs_.end() ? mpq_class(0) : it->second;
}

void TruncSeries::add_term(const DivClass& beta, int q, const mpq_class& c) {
  if (c == 0) return;
  if (q < trunc_.q_lo || q > trunc_.q_hi) return;
  if (degree_w(surface_, beta) > trunc_.max_degree) return;
  auto [it, inserted] = coeffs_.try_emplace({beta, q}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries out(a.surface_, a.trunc_);
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

namespace {

std::string term_monomial(const Surface& s, const DivClass& beta, int q) {
  std::string out;
  if (q == 1) out = "q";
  else if (q != 0) out = "q^" + std::to_string(q);
  if (!beta.is_zero()) {
    if (!out.empty()) out += " ";
    out += "Q^" + format_class(s, beta);
  }
  return out;
}

struct Factor {
  DivClass beta;
  int sign;   // c in (1 + c q^a Q^beta)^e
  int a;
  mpz_class e;
};

}  // namespace

std::string TruncSeries::to_string() const {
  std::vector<std::tuple<std::int64_t, DivClass, int>> keys;
  for (const auto& [k, c] : coeffs_) keys.emplace_back(degree_w(surface_, k.first), k.first, k.second);
  std::sort(keys.begin(), keys.end());
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, beta, q] : keys) {
    mpq_class c = coeffs_.at({beta, q});
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    const std::string mono = term_monomial(surface_, beta, q);
    if (mono.empty()) os << rational_to_string(c);
    else if (c == 1) os << mono;
    else os << rational_to_string(c) << " " << mono;
  }
  return first ? "0" : os.str();
}

TruncSeries zpt_expand(const BpsTable& table, const Truncation& trunc) {
  if (!trunc.windowed) throw Error(ErrorKind::TruncationOverflow, "q-window disabled; the product has infinitely many terms");
  if (trunc.max_degree < 0 || trunc.q_lo > trunc.q_hi)
    throw Error(ErrorKind::TruncationOverflow, "empty truncation window");

  const Surface& s = table.surface;
  std::vector<Factor> factors;
  for (const auto& [beta, by_genus] : table.entries) {
    const std::int64_t w = degree_w(s, beta);
    if (w <= 0) throw Error(ErrorKind::TruncationOverflow, format_token(s, beta) + " has nonpositive degree");
    if (w > trunc.max_degree) continue;
    for (const auto& [g, n] : by_genus) {
      if (n == 0 || g == 0) continue;
      for (int k = 0; k <= 2 * g - 2; ++k) {
        const int sign = (g - k) % 2 == 0 ? 1 : -1;
        mpz_class e = n * binomial(mpz_class(2 * g - 2), static_cast<unsigned long>(k));
        if ((k + g) % 2 != 0) e = -e;
        factors.push_back({beta, sign, g - 1 - k, e});
      }
    }
  }

  // Later factors move q by at most max|a|/w per unit of degree; widen the
  // working window by that much on each side.
  mpq_class down = 0;
  for (const auto& f : factors) {
    if (f.a >= 0) continue;
    mpq_class r(-f.a, static_cast<long>(degree_w(s, f.beta)));
    r.canonicalize();
    down = std::max(down, r);
  }
  mpz_class slack_down_z;
  {
    mpq_class v = down * mpz_class(static_cast<long>(trunc.max_degree));
    mpz_cdiv_q(slack_down_z.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  }
  const int slack_down = static_cast<int>(slack_down_z.get_si());
  const int j_max = trunc.q_hi + slack_down;

  for (const auto& [beta, by_genus] : table.entries) {
    auto it = by_genus.find(0);
    if (it == by_genus.end() || it->second == 0) continue;
    if (degree_w(s, beta) > trunc.max_degree) continue;
    for (int j = 1; j <= j_max; ++j) factors.push_back({beta, j % 2 == 1 ? 1 : -1, j, it->second * j});
  }

  mpq_class up = 0;
  for (const auto& f : factors) {
    if (f.a <= 0) continue;
    mpq_class r(f.a, static_cast<long>(degree_w(s, f.beta)));
    r.canonicalize();
    up = std::max(up, r);
  }
  mpz_class slack_up_z;
  {
    mpq_class v = up * mpz_class(static_cast<long>(trunc.max_degree));
    mpz_cdiv_q(slack_up_z.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  }
  const int slack_up = static_cast<int>(slack_up_z.get_si());

  Truncation work = trunc;
  work.q_lo = trunc.q_lo - slack_up;
  work.q_hi = trunc.q_hi + slack_down;
  TruncSeries acc = TruncSeries::one(s, work);
  for (const auto& f : factors) {
    TruncSeries fs(s, work);
    const std::int64_t w = degree_w(s, f.beta);
    for (std::int64_t m = 0; m * w <= trunc.max_degree; ++m) {
      mpz_class c = binomial(f.e, static_cast<unsigned long>(m));
      if (f.sign < 0 && m % 2 == 1) c = -c;
      fs.add_term(m * f.beta, static_cast<int>(f.a * m), mpq_class(c));
    }
    acc = acc * fs;
  }

  TruncSeries out(s, trunc);
  for (const auto& [k, c] : acc.coeffs()) out.add_term(k.first, k.second, c);
  return out;
}

std::string rational_to_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace dpbps
