#include "dpbps/checks.hpp"

#include "dpbps/blowdown.hpp"
#include "dpbps/classes.hpp"
#include "dpbps/error.hpp"

namespace dpbps {

namespace {

bool same_invariants(const InvariantReport& a, const InvariantReport& b) {
  return a.poincare == b.poincare && a.n == b.n && a.m == b.m && a.refined == b.refined;
}

bool lines_disjoint(const Surface& s, const std::vector<DivClass>& lines) {
  if (static_cast<int>(lines.size()) > s.r()) return false;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (intersect(s, lines[i], lines[j]) != 0) return false;
  return true;
}

}  // namespace

InvariantReport run_checks(const Surface& s, const DivClass& beta) {
  InvariantReport rep = closed_form_report(s, beta);
  const ClassProfile& p = rep.profile;

  const WallCrossingTrace tr = wallcrossing_trace(s, beta);
  rep.checks["pipeline_equals_closed"] = tr.poincare == rep.poincare;
  for (const auto& f : tr.flags) rep.flags.push_back(f);

  if (p.pa == 1 && p.kind == ClassKind::NefBig && !is_minus_k_s8(s, beta))
    rep.checks["genus1_dual_route"] = assemble_pairs(s, beta) == rep.poincare;

  if (p.pa == 2) {
    int type1 = 0;
    int type2 = 0;
    for (const auto& d : tr.walls) (d.type == WallType::G2TypeI ? type1 : type2) += 1;
    rep.checks["wall_census"] = type1 == 1 && type2 == 2 * tr.model_surface.euler() - 8;
    rep.checks["wall_scan_agrees"] = scan_walls(tr.model_surface, tr.model_class, 1).size() == tr.walls.size() &&
                                     scan_walls(tr.model_surface, tr.model_class, -1).empty();
  }

  if (p.kind == ClassKind::NefBig && p.beta_sq > 0) {
    rep.checks["hodge_disjoint"] = lines_disjoint(s, orthogonal_lines(s, beta));
    if (tr.contraction.status == ContractionStatus::Complete) {
      const Contraction& c = tr.contraction;
      const InvariantReport down = closed_form_report(c.target_surface, c.target_class);
      rep.checks["blowdown_invariance"] = same_invariants(rep, down) && down.profile.eta == 0 &&
                                          c.target_surface.euler() == s.euler() - p.eta &&
                                          apply_word(s, beta, c.weyl_word) == pull_back(c.target_surface, c.target_class, s);
    }
  }

  if (s.kind() == SurfaceKind::Blowup) {
    bool ok = true;
    for (const auto& alpha : simple_roots(s)) {
      const DivClass image = reflect(s, beta, alpha);
      const ClassProfile q = classify(s, image);
      if (q.kind != p.kind || q.eta != p.eta || q.w != p.w || q.pa != p.pa) {
        ok = false;
        break;
      }
      if (!same_invariants(rep, closed_form_report(s, image))) {
        ok = false;
        break;
      }
    }
    rep.checks["weyl_invariance"] = ok;
  }
  return rep;
}

}  // namespace dpbps
