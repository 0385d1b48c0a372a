#include "dpbps/walls.hpp"

#include "dpbps/classes.hpp"
#include "dpbps/error.hpp"
#include "dpbps/invariants.hpp"

namespace dpbps {

std::string_view to_string(WallType type) {
  switch (type) {
    case WallType::G1Line: return "G1Line";
    case WallType::G2TypeI: return "G2TypeI";
    case WallType::G2TypeII: return "G2TypeII";
  }
  return "?";
}

PolyZ pair_moduli_poincare(const Surface& s, const DivClass& beta, int n) {
  const std::int64_t pa = arithmetic_genus(s, beta);
  if (n < 1 - pa) return {};
  const std::int64_t w = degree_w(s, beta);
  if (intersect(s, beta, beta) == -1 && w == 1) return proj_space(n - 1);
  // n = 1 - p_a: the pairs are the sections of O(beta), i.e. |beta|.
  if (n == 1 - pa) return proj_space(static_cast<int>(w + pa - 1));
  if (!is_k_very_ample(s, beta, 0))
    throw Error(ErrorKind::HypothesisViolated, format_token(s, beta) + " is not base point free");
  const std::int64_t k = n - 2 + pa;
  if (k >= 1 && !is_k_very_ample(s, beta, static_cast<int>(k)))
    throw Error(ErrorKind::HypothesisViolated, format_token(s, beta) + " is not " + std::to_string(k) + "-very ample");
  return proj_space(static_cast<int>(w - n)) * hilb_poincare(s, static_cast<int>(n - 1 + pa));
}

mpq_class wall_position(std::int64_t w, int n, std::int64_t w2, int n2) {
  mpq_class d(mpz_class(static_cast<long>(w)) * n2, mpz_class(static_cast<long>(w2)));
  d.canonicalize();
  return d - n;
}

std::vector<WallCandidate> scan_walls(const Surface& s, const DivClass& beta, int n) {
  const std::int64_t w = degree_w(s, beta);
  std::vector<WallCandidate> out;
  auto scan = [&](const std::vector<DivClass>& pieces) {
    for (const auto& b2 : pieces) {
      const DivClass b1 = beta - b2;
      const std::int64_t w1 = degree_w(s, b1);
      if (w1 <= 0) continue;
      const std::int64_t w2 = degree_w(s, b2);
      const std::int64_t p1 = arithmetic_genus(s, b1);
      // delta > 0  <=>  n2 > n w2 / w;  P_{n1}(beta1) nonempty  <=>  n - n2 >= 1 - p1.
      mpq_class threshold(mpz_class(static_cast<long>(n * w2)), mpz_class(static_cast<long>(w)));
      threshold.canonicalize();
      mpz_class lo_z;
      mpz_fdiv_q(lo_z.get_mpz_t(), threshold.get_num_mpz_t(), threshold.get_den_mpz_t());
      const long lo = lo_z.get_si() + 1;
      const long hi = n - 1 + p1;
      for (long n2 = lo; n2 <= hi; ++n2)
        out.push_back({b1, static_cast<int>(n - n2), b2, static_cast<int>(n2), wall_position(w, n, w2, static_cast<int>(n2))});
    }
  };
  scan(enumerate_lines(s));
  scan(enumerate_conics(s));
  return out;
}

namespace {

Decomposition make_decomposition(const Surface& s, const DivClass& beta, const DivClass& b2, WallType type) {
  Decomposition d;
  d.beta1 = beta - b2;
  d.beta2 = b2;
  d.n1 = 0;
  d.n2 = 1;
  d.w = degree_w(s, beta);
  const std::int64_t w2 = degree_w(s, b2);
  d.wall_delta0 = wall_position(d.w, 1, w2, 1);
  d.type = type;
  d.ext_plus = type == WallType::G1Line ? 2 : 3;
  d.ext_minus = type == WallType::G1Line ? 1 : 2;
  // (s, O_beta1) ranges over |beta1| = P^{w1} (h^0 = w1 + 1 in genus one)
  // and O_beta2 over M_{beta2,1} = P^{w2 - 1}.
  d.base_poly = proj_space(static_cast<int>(degree_w(s, d.beta1))) * proj_space(static_cast<int>(w2 - 1));
  return d;
}

}  // namespace

std::vector<Decomposition> enumerate_decompositions(const Surface& s, const DivClass& beta) {
  const ClassProfile p = require_in_scope(s, beta);
  std::vector<Decomposition> out;
  if (p.pa == 2) {
    if (!p.very_ample)
      throw Error(ErrorKind::HypothesisViolated, format_token(s, beta) + " is not very ample; contract it first");
    for (const auto& c : enumerate_conics(s)) {
      const DivClass b1 = beta - c;
      if (arithmetic_genus(s, b1) == 1 && degree_w(s, b1) == p.w - 2 && intersect(s, b1, c) == 2)
        out.push_back(make_decomposition(s, beta, c, WallType::G2TypeI));
    }
    for (const auto& l : enumerate_lines(s)) {
      const DivClass b1 = beta - l;
      if (arithmetic_genus(s, b1) == 1 && intersect(s, b1, l) == 2)
        out.push_back(make_decomposition(s, beta, l, WallType::G2TypeII));
    }
  } else if (p.pa == 1 && !is_minus_k_s8(s, beta)) {
    for (const auto& l : enumerate_lines(s)) {
      if (intersect(s, beta, l) != 0) continue;
      Decomposition d = make_decomposition(s, beta, l, WallType::G1Line);
      if (arithmetic_genus(s, d.beta1) != 1 || intersect(s, d.beta1, l) != 1)
        throw Error(ErrorKind::Internal, "unexpected genus-one wall shape at " + format_class(s, l));
      out.push_back(std::move(d));
    }
  }
  return out;
}

PolyZ correction_poly(const Decomposition& d) {
  const int w = static_cast<int>(d.w);
  PolyZ out;
  switch (d.type) {
    case WallType::G1Line:
      out = proj_space(w - 1).shifted(1);
      break;
    case WallType::G2TypeI:
      out = (proj_space(w - 2) * proj_space(1)).shifted(2);
      break;
    case WallType::G2TypeII:
      out = proj_space(w - 1).shifted(2);
      break;
  }
  const PolyZ factored = (proj_space(d.ext_plus - 1) - proj_space(d.ext_minus - 1)) * d.base_poly;
  if (factored != out)
    throw Error(ErrorKind::Internal, "correction " + out.to_string() + " disagrees with Ext factorisation " + factored.to_string());
  return out;
}

PolyZ assemble_pairs(const Surface& s, const DivClass& beta) {
  PolyZ out = pair_moduli_poincare(s, beta, 1);
  for (const auto& d : enumerate_decompositions(s, beta)) out -= correction_poly(d);
  out -= pair_moduli_poincare(s, beta, -1).shifted(1);
  return out;
}

WallCrossingTrace wallcrossing_trace(const Surface& s, const DivClass& beta) {
  const ClassProfile p = require_in_scope(s, beta);
  WallCrossingTrace tr;
  tr.contraction = Contraction{s, beta, s, beta, 0, {}, {}, ContractionStatus::Identity};
  tr.model_surface = s;
  tr.model_class = beta;

  if (is_minus_k_s8(s, beta)) {
    // w = 1: no walls and P_{-1} is empty. P_1(S8, -K) is the total space of
    // the cubic pencil, i.e. P^2 blown up in its nine base points.
    tr.pairs_plus = PolyZ{1, 1 + 9, 1};
    tr.poincare = tr.pairs_plus;
    return tr;
  }

  if (p.kind == ClassKind::NefBig) {
    tr.contraction = contract(s, beta);
    if (tr.contraction.status == ContractionStatus::Incomplete) {
      tr.flags.push_back("contraction incomplete; computing on the original surface");
    } else {
      tr.model_surface = tr.contraction.target_surface;
      tr.model_class = tr.contraction.target_class;
    }
  }

  const Surface& ms = tr.model_surface;
  const DivClass& mb = tr.model_class;
  tr.pairs_plus = pair_moduli_poincare(ms, mb, 1);
  tr.pairs_minus = pair_moduli_poincare(ms, mb, -1);
  tr.walls = enumerate_decompositions(ms, mb);
  tr.poincare = tr.pairs_plus;
  for (const auto& d : tr.walls) tr.poincare -= correction_poly(d);
  tr.poincare -= tr.pairs_minus.shifted(1);

  // Numerical scan: every raw candidate must be one of the typed walls.
  const auto raw = scan_walls(ms, mb, 1);
  if (raw.size() != tr.walls.size())
    tr.flags.push_back("numerical wall scan found " + std::to_string(raw.size()) + " candidates, typed walls " +
                       std::to_string(tr.walls.size()));
  if (p.pa == 2 && !scan_walls(ms, mb, -1).empty()) tr.flags.push_back("unexpected wall for chi = -1 pairs");
  return tr;
}

PolyZ poincare_via_wallcrossing(const Surface& s, const DivClass& beta) { return wallcrossing_trace(s, beta).poincare; }

}  // namespace dpbps
