#include "dpbps/invariants.hpp"

#include <cstdlib>

#include "dpbps/error.hpp"

namespace dpbps {

namespace {

int normalize_spin(int twice_spin, std::int64_t& mult) {
  // Weyl character chi_k = (x^{k+1} - x^{-k-1}) / (x - x^{-1}) gives
  // chi_{-1} = 0 and chi_{-k-2} = -chi_k.
  if (twice_spin == -1) {
    mult = 0;
    return 0;
  }
  if (twice_spin <= -2) {
    mult = -mult;
    return -twice_spin - 2;
  }
  return twice_spin;
}

mpz_class sign_pow(std::int64_t e) { return (e % 2 == 0) ? mpz_class(1) : mpz_class(-1); }

// Bracketed middle factor of the genus-two closed form:
// 1 + x t + (C(x,2) + 4) t^2 + x t^3 + t^4 with x = e(S) - 2 - eta.
PolyZ genus_two_core(std::int64_t x) {
  mpz_class mid = binomial(mpz_class(static_cast<long>(x)), 2) + 4;
  return PolyZ(std::vector<mpz_class>{1, mpz_class(static_cast<long>(x)), mid, mpz_class(static_cast<long>(x)), 1});
}

}  // namespace

void Sl2x2Rep::add(int jl2, int jr2, std::int64_t mult) {
  jl2 = normalize_spin(jl2, mult);
  jr2 = normalize_spin(jr2, mult);
  if (mult == 0) return;
  auto& slot = terms_[{jl2, jr2}];
  slot += mult;
  if (slot == 0) terms_.erase({jl2, jr2});
}

std::vector<Sl2x2Rep::Term> Sl2x2Rep::terms() const {
  std::vector<Term> out;
  for (const auto& [key, mult] : terms_) out.push_back({key.first, key.second, mult});
  return out;
}

std::int64_t Sl2x2Rep::dimension() const {
  std::int64_t total = 0;
  for (const auto& [key, mult] : terms_) total += mult * (key.first + 1) * (key.second + 1);
  return total;
}

bool InvariantReport::all_checks_pass() const {
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  return true;
}

bool operator==(const InvariantReport& a, const InvariantReport& b) {
  const auto& p = a.profile;
  const auto& q = b.profile;
  return a.surface == b.surface && p.beta == q.beta && p.w == q.w && p.pa == q.pa && p.beta_sq == q.beta_sq &&
         p.is_line == q.is_line && p.is_conic == q.is_conic && p.nef == q.nef && p.big == q.big &&
         p.very_ample == q.very_ample && p.eta == q.eta && p.kind == q.kind && a.poincare == b.poincare &&
         a.quotient == b.quotient && a.palindromic == b.palindromic && a.n == b.n && a.m == b.m &&
         a.refined == b.refined && a.dim == b.dim && a.checks == b.checks;
}

PolyZ surface_poincare(const Surface& s) { return PolyZ{1, s.euler() - 2, 1}; }

PolyZ hilb_poincare(const Surface& s, int n) {
  const long e = s.euler();
  switch (n) {
    case 0: return PolyZ{1};
    case 1: return surface_poincare(s);
    case 2: return PolyZ{1, e - 1, e * (e - 1) / 2, e - 1, 1};
    default: break;
  }
  throw Error(ErrorKind::Unsupported, "Hilbert scheme of " + std::to_string(n) + " points is not supported");
}

ClassProfile require_in_scope(const Surface& s, const DivClass& beta) {
  ClassProfile p = classify(s, beta);
  if (p.kind == ClassKind::OutOfScope)
    throw Error(ErrorKind::OutOfScope, format_token(s, beta) + " is not a line, conic, or nef and big class of genus <= 2");
  return p;
}

PolyZ poincare_closed(const Surface& s, const DivClass& beta) {
  const ClassProfile p = require_in_scope(s, beta);
  const PolyZ base = proj_space(static_cast<int>(p.w) - 1);
  const std::int64_t x = s.euler() - 2 - p.eta;
  switch (p.pa) {
    case 0:
      return base;
    case 1:
      if (is_minus_k_s8(s, beta)) return PolyZ{1, 10, 1};
      return base * PolyZ{1, static_cast<long>(x), 1};
    case 2:
      return base * genus_two_core(x);
    default:
      break;
  }
  throw Error(ErrorKind::OutOfScope, "arithmetic genus " + std::to_string(p.pa));
}

mpz_class bps_n(const Surface& s, const DivClass& beta) {
  const ClassProfile p = require_in_scope(s, beta);
  const mpz_class w = static_cast<long>(p.w);
  const mpz_class sign = sign_pow(p.w - 1);
  const mpz_class e_eta = static_cast<long>(s.euler() - p.eta);
  switch (p.pa) {
    case 0: return sign * w;
    case 1:
      if (is_minus_k_s8(s, beta)) return 12;
      return sign * w * e_eta;
    case 2: return sign * w * (binomial(e_eta, 2) + 5);
    default: break;
  }
  throw Error(ErrorKind::OutOfScope, "arithmetic genus " + std::to_string(p.pa));
}

mpz_class log_bps_m(const Surface& s, const DivClass& beta) {
  const mpz_class n = bps_n(s, beta);
  const std::int64_t w = degree_w(s, beta);
  const mpz_class wz = static_cast<long>(w);
  if (!mpz_divisible_p(n.get_mpz_t(), wz.get_mpz_t()))
    throw Error(ErrorKind::ConjectureViolation, "w = " + std::to_string(w) + " does not divide n = " + n.get_str());
  return sign_pow(w - 1) * (n / wz);
}

Sl2x2Rep refined_rep(const Surface& s, const DivClass& beta) {
  const ClassProfile p = require_in_scope(s, beta);
  const int w = static_cast<int>(p.w);
  const std::int64_t reduced = (s.euler() - 3) - p.eta;  // r - eta
  Sl2x2Rep rep;
  switch (p.pa) {
    case 0:
      rep.add(0, w - 1, 1);
      break;
    case 1:
      if (is_minus_k_s8(s, beta)) {
        rep.add(1, 1, 1);
        rep.add(0, 0, 8);
        break;
      }
      rep.add(1, w, 1);
      rep.add(0, w - 1, reduced);
      rep.add(0, w - 3, 1);
      break;
    case 2:
      rep.add(2, w + 1, 1);
      rep.add(1, w, reduced);
      rep.add(1, w - 2, 1);
      rep.add(0, w - 1, reduced * (reduced - 1) / 2 + 2);
      rep.add(0, w - 3, reduced);
      rep.add(0, w - 5, 1);
      break;
    default:
      throw Error(ErrorKind::OutOfScope, "arithmetic genus " + std::to_string(p.pa));
  }
  return rep;
}

Sl2Rep diagonal_restriction(const Sl2x2Rep& rep) {
  Sl2Rep out;
  for (const auto& t : rep.terms())
    for (int k = std::abs(t.jl2 - t.jr2); k <= t.jl2 + t.jr2; k += 2) out[k] += t.mult;
  for (auto it = out.begin(); it != out.end();) it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

PolyZ rep_to_poincare(const Sl2Rep& rep, std::int64_t dim) {
  PolyZ out;
  for (const auto& [k, mult] : rep) {
    if ((dim - k) % 2 != 0 || dim < k)
      throw Error(ErrorKind::ParityViolation, "spin " + std::to_string(k) + "/2 does not fit dimension " + std::to_string(dim));
    out += proj_space(k).shifted(static_cast<int>((dim - k) / 2)) * mpz_class(static_cast<long>(mult));
  }
  return out;
}

DivisibilityCheck check_divisibility(const Surface& s, const DivClass& beta) {
  const PolyZ p = poincare_closed(s, beta);
  const auto w = static_cast<int>(degree_w(s, beta));
  auto [quot, rem] = divide_exact(p, proj_space(w - 1));
  if (!rem.is_zero())
    throw Error(ErrorKind::ConjectureViolation, "P_t(P^" + std::to_string(w - 1) + ") does not divide " + p.to_string() +
                                                    " for " + format_token(s, beta));
  return {quot, quot.is_palindromic()};
}

InvariantReport closed_form_report(const Surface& s, const DivClass& beta) {
  InvariantReport rep;
  rep.surface = s;
  rep.profile = require_in_scope(s, beta);
  rep.poincare = poincare_closed(s, beta);
  rep.n = bps_n(s, beta);
  rep.refined = refined_rep(s, beta);
  rep.dim = rep.profile.beta_sq + 1;

  const mpz_class euler = rep.poincare.eval_at_one();
  auto& c = rep.checks;
  c["poincare_shape"] = rep.poincare.degree() == rep.dim && rep.poincare.is_palindromic() &&
                        rep.poincare.has_nonnegative_coeffs() && euler > 0;
  c["euler_sign"] = rep.n == sign_pow(rep.profile.beta_sq + 1) * euler;
  c["parity_identity"] = sign_pow(rep.profile.beta_sq + 1) == sign_pow(rep.profile.w - 1);

  try {
    auto div = check_divisibility(s, beta);
    rep.quotient = div.quotient;
    rep.palindromic = div.palindromic;
    c["divisible"] = true;
    c["palindromic_quotient"] = div.palindromic;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ConjectureViolation) throw;
    c["divisible"] = false;
    c["palindromic_quotient"] = false;
    rep.flags.push_back(e.what());
  }
  try {
    rep.m = log_bps_m(s, beta);
    c["log_bps_integral"] = rep.m * rep.profile.w == sign_pow(rep.profile.w - 1) * rep.n;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ConjectureViolation) throw;
    c["log_bps_integral"] = false;
    rep.flags.push_back(e.what());
  }

  c["refined_dimension"] = mpz_class(static_cast<long>(rep.refined.dimension())) == euler;
  try {
    c["refined_diagonal"] = rep_to_poincare(diagonal_restriction(rep.refined), rep.dim) == rep.poincare;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ParityViolation) throw;
    c["refined_diagonal"] = false;
    rep.flags.push_back(e.what());
  }
  return rep;
}

}  // namespace dpbps
