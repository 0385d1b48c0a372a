// Acceptance criteria 1-8. Prints one line per criterion; exit status 1 if any fail.
#include <algorithm>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "dpbps/blowdown.hpp"
#include "dpbps/checks.hpp"
#include "dpbps/classes.hpp"
#include "dpbps/invariants.hpp"
#include "dpbps/series.hpp"
#include "dpbps/sweep.hpp"
#include "dpbps/walls.hpp"

using namespace dpbps;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << " first failure: " << what;
    ok = ok && cond;
  }
};

std::vector<Surface> all_surfaces() {
  std::vector<Surface> out{Surface::p2(), Surface::p1xp1()};
  for (int r = 1; r <= 8; ++r) out.push_back(Surface::blowup(r));
  return out;
}

struct SweepEntry {
  Surface s;
  DivClass beta;
  ClassProfile p;
};

const std::vector<SweepEntry>& full_sweep() {
  static const std::vector<SweepEntry> entries = [] {
    std::vector<SweepEntry> out;
    for (const auto& s : all_surfaces()) {
      SweepSpec spec;
      spec.surface = s;
      spec.max_degree = 12;
      for (const auto& c : sweep_classes(spec)) out.push_back({s, c, classify(s, c)});
    }
    return out;
  }();
  return entries;
}

Token tok(const char* t) { return parse_token(t); }

void report(int n, const char* title, Outcome& o) {
  std::cout << "criterion " << n << " " << (o.ok ? "PASS" : "FAIL") << " " << title << ":" << o.detail.str() << "\n";
}

Outcome criterion1() {
  Outcome o;
  const std::size_t expected[] = {1, 3, 6, 10, 16, 27, 56, 240};
  for (int r = 1; r <= 8; ++r)
    o.require(enumerate_lines(Surface::blowup(r)).size() == expected[r - 1], "line count on S" + std::to_string(r));
  std::set<std::vector<std::int64_t>> shapes;
  for (const auto& c : enumerate_conics(Surface::blowup(8))) {
    auto v = c.coeffs;
    std::sort(v.begin() + 1, v.end(), std::greater<>());
    shapes.insert(v);
  }
  const std::set<std::vector<std::int64_t>> paper = {
      {1, 1, 0, 0, 0, 0, 0, 0, 0}, {2, 1, 1, 1, 1, 0, 0, 0, 0}, {3, 2, 1, 1, 1, 1, 1, 0, 0},
      {4, 2, 2, 2, 1, 1, 1, 1, 0}, {4, 3, 1, 1, 1, 1, 1, 1, 1}, {5, 2, 2, 2, 2, 2, 2, 1, 0},
      {5, 3, 2, 2, 2, 1, 1, 1, 1}, {6, 3, 3, 2, 2, 2, 2, 1, 1}, {7, 3, 3, 3, 3, 2, 2, 2, 1},
      {7, 4, 3, 2, 2, 2, 2, 2, 2}, {8, 3, 3, 3, 3, 3, 3, 3, 1}, {8, 4, 3, 3, 3, 3, 2, 2, 2},
      {9, 4, 4, 3, 3, 3, 3, 3, 2}, {10, 4, 4, 4, 4, 3, 3, 3, 3}, {11, 4, 4, 4, 4, 4, 4, 4, 3}};
  o.require(shapes == paper, "S8 conic shapes");
  o.detail << " lines 1,3,6,10,16,27,56,240; " << shapes.size() << " conic shapes on S8 ("
           << enumerate_conics(Surface::blowup(8)).size() << " classes)";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Token k8 = tok("S8:(3;1,1,1,1,1,1,1,1)");
  o.require(poincare_closed(k8.surface, k8.beta) == PolyZ{1, 10, 1}, "-K_S8 closed");
  o.require(poincare_via_wallcrossing(k8.surface, k8.beta) == PolyZ{1, 10, 1}, "-K_S8 wall-crossing");
  o.require(bps_n(k8.surface, k8.beta) == 12, "-K_S8 n");
  const Token q = tok("P1xP1:(2,3)");
  o.require(poincare_closed(q.surface, q.beta) == proj_space(9) * PolyZ{1, 2, 5, 2, 1}, "P1xP1 (2,3) closed");
  o.require(poincare_via_wallcrossing(q.surface, q.beta) == proj_space(9) * PolyZ{1, 2, 5, 2, 1}, "P1xP1 (2,3) wall-crossing");
  const Surface p2 = Surface::p2();
  const long n[] = {3, -6, 27};
  for (std::int64_t d = 1; d <= 3; ++d) o.require(bps_n(p2, make_class(p2, {d})) == n[d - 1], "P2 degree " + std::to_string(d));
  o.detail << " -K_S8 -> 1 + 10t + t^2, n = 12; P1xP1 (2,3) -> P^9 (1 + 2t + 5t^2 + 2t^3 + t^4); P2 n = 3, -6, 27";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t classes = 0;
  for (const auto& e : full_sweep()) {
    if (e.p.pa != 2) continue;
    ++classes;
    const WallCrossingTrace tr = wallcrossing_trace(e.s, e.beta);
    int t1 = 0, t2 = 0;
    for (const auto& d : tr.walls) (d.type == WallType::G2TypeI ? t1 : t2) += 1;
    o.require(t1 == 1 && t2 == 2 * tr.model_surface.euler() - 8, "census at " + format_token(e.s, e.beta));
  }
  const Token t = tok("S5:(4;2,1,1,1,1)");
  int conic = 0, exc = 0, other = 0;
  for (const auto& d : enumerate_decompositions(t.surface, t.beta)) {
    if (d.type == WallType::G2TypeI) conic += d.wall_delta0 == 2;
    else if (d.beta2[0] == 0) exc += d.wall_delta0 == 5;
    else other += d.wall_delta0 == 5;
  }
  o.require(conic == 1 && exc == 4 && other == 4, "S5 1+4+4 pattern");
  o.detail << " " << classes << " genus-2 classes, each 1 TypeI + (2e-8) TypeII; S5:(4;2,1,1,1,1) = 1 + 4 + 4";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t total = 0, g1_pullbacks = 0, g2_pullbacks = 0;
  for (const auto& e : full_sweep()) {
    ++total;
    o.require(poincare_via_wallcrossing(e.s, e.beta) == poincare_closed(e.s, e.beta), format_token(e.s, e.beta));
    if (e.p.pa == 1 && e.p.eta > 0) ++g1_pullbacks;
    if (e.p.pa == 2 && e.p.eta > 0) ++g2_pullbacks;
  }
  o.require(g1_pullbacks > 0 && g2_pullbacks > 0, "pullbacks present");
  o.detail << " " << total << " classes (" << g1_pullbacks << " genus-1 and " << g2_pullbacks
           << " genus-2 with eta >= 1), wall-crossing == closed form";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t total = 0;
  for (const auto& e : full_sweep()) {
    ++total;
    const PolyZ p = poincare_closed(e.s, e.beta);
    const auto [q, r] = divide_exact(p, proj_space(static_cast<int>(e.p.w - 1)));
    const mpz_class n = bps_n(e.s, e.beta);
    o.require(r.is_zero() && q.is_palindromic() && n % e.p.w == 0, format_token(e.s, e.beta));
    mpz_class m = log_bps_m(e.s, e.beta);
    o.require(m * e.p.w == ((e.p.w - 1) % 2 == 0 ? n : mpz_class(-n)), "m at " + format_token(e.s, e.beta));
  }
  o.detail << " " << total << " classes: zero remainder, palindromic quotient, w | n";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t total = 0;
  for (const auto& e : full_sweep()) {
    ++total;
    const PolyZ p = poincare_closed(e.s, e.beta);
    const Sl2x2Rep rep = refined_rep(e.s, e.beta);
    o.require(mpz_class(static_cast<long>(rep.dimension())) == p.eval_at_one(), "dimension at " + format_token(e.s, e.beta));
    o.require(rep_to_poincare(diagonal_restriction(rep), e.p.beta_sq + 1) == p, "diagonal at " + format_token(e.s, e.beta));
  }
  const Token s7 = tok("S7:(4;2,1,1,1,1,1,1)");
  o.require(refined_rep(s7.surface, s7.beta).dimension() == 200, "S7 dimension 200");
  const Token s8 = tok("S8:(4;2,1,1,1,1,1,1,1)");
  o.require(rep_to_poincare(diagonal_restriction(refined_rep(s8.surface, s8.beta)), 6) ==
                poincare_closed(s8.surface, s8.beta),
            "S8 w=3 genus 2");
  o.detail << " " << total << " classes; S7:(4;2,1^6) dimension 200; S8 genus-2 w=3 reconstructs P_t";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::size_t reflections = 0;
  for (int r = 2; r <= 8; ++r) {
    const Surface s = Surface::blowup(r);
    std::vector<const SweepEntry*> pool;
    for (const auto& e : full_sweep())
      if (e.s == s) pool.push_back(&e);
    const auto& roots = enumerate_roots(s);
    std::uniform_int_distribution<std::size_t> pick_class(0, pool.size() - 1), pick_root(0, roots.size() - 1);
    for (int i = 0; i < 200; ++i) {
      const SweepEntry& e = *pool[pick_class(rng)];
      const DivClass img = reflect(s, e.beta, roots[pick_root(rng)]);
      const ClassProfile q = classify(s, img);
      o.require(q.kind == e.p.kind && q.eta == e.p.eta && q.w == e.p.w && q.pa == e.p.pa &&
                    poincare_closed(s, img) == poincare_closed(s, e.beta) && bps_n(s, img) == bps_n(s, e.beta) &&
                    refined_rep(s, img) == refined_rep(s, e.beta),
                "Weyl image of " + format_token(s, e.beta));
      ++reflections;
    }
  }

  std::size_t blowdowns = 0, disjoint = 0;
  for (const auto& e : full_sweep()) {
    if (e.p.kind != ClassKind::NefBig || e.p.beta_sq <= 0) continue;
    const auto lines = orthogonal_lines(e.s, e.beta);
    bool ok = static_cast<int>(lines.size()) <= std::max(e.s.r(), 0);
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (std::size_t j = i + 1; j < lines.size(); ++j) ok = ok && intersect(e.s, lines[i], lines[j]) == 0;
    o.require(ok, "disjointness at " + format_token(e.s, e.beta));
    ++disjoint;
    if (e.p.eta == 0) continue;
    const Contraction c = contract(e.s, e.beta);
    o.require(c.status == ContractionStatus::Complete &&
                  poincare_closed(c.target_surface, c.target_class) == poincare_closed(e.s, e.beta) &&
                  bps_n(c.target_surface, c.target_class) == bps_n(e.s, e.beta) &&
                  refined_rep(c.target_surface, c.target_class) == refined_rep(e.s, e.beta),
              "blowdown at " + format_token(e.s, e.beta));
    ++blowdowns;
  }

  const auto surfaces = all_surfaces();
  std::uniform_int_distribution<std::size_t> pick_surface(0, surfaces.size() - 1);
  std::uniform_int_distribution<std::int64_t> coef(-30, 30);
  for (int i = 0; i < 1000; ++i) {
    const Surface& s = surfaces[pick_surface(rng)];
    std::vector<std::int64_t> v(static_cast<std::size_t>(s.rank()));
    for (auto& x : v) x = coef(rng);
    const DivClass b = make_class(s, v);
    const std::int64_t sq = intersect(s, b, b), w = degree_w(s, b);
    o.require(((sq + 1) % 2 == 0) == ((w - 1) % 2 == 0), "parity at " + format_token(s, b));
  }
  o.detail << " " << reflections << " random reflections; " << blowdowns << " blowdowns; 1000 parity samples; "
           << disjoint << " disjointness checks";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const Surface p2 = Surface::p2();
  BpsTable t;
  t.surface = p2;
  for (std::int64_t d = 1; d <= 3; ++d) t.set(make_class(p2, {d}), 0, bps_n(p2, make_class(p2, {d})));
  const mpq_class expect[] = {mpq_class(3), mpq_class(-45, 8), mpq_class(244, 9)};
  for (std::int64_t d = 1; d <= 3; ++d) {
    // direct multiple-cover sum
    mpq_class direct = 0;
    for (std::int64_t k = 1; k <= d; ++k)
      if (d % k == 0) {
        mpq_class term(bps_n(p2, make_class(p2, {d / k})), mpz_class(static_cast<long>(k * k * k)));
        term.canonicalize();
        direct += term;
      }
    o.require(gw_genus0(t, make_class(p2, {d})).value == expect[d - 1] && direct == expect[d - 1],
              "gw degree " + std::to_string(d));
  }

  o.require(zpt_expand(BpsTable{}, Truncation{6, -3, 3, true}).to_string() == "1", "empty product");

  const DivClass line = make_class(p2, {1});
  BpsTable g0;
  g0.surface = p2;
  g0.set(line, 0, 1);
  const TruncSeries z0 = zpt_expand(g0, Truncation{3, 0, 3, true});
  o.require(z0.coeff(line, 1) == 1 && z0.coeff(line, 2) == -2 && z0.coeff(line, 3) == 3 && z0.coeffs().size() == 4,
            "single n0");

  BpsTable g1;
  g1.surface = p2;
  g1.set(line, 1, 1);
  const TruncSeries z1 = zpt_expand(g1, Truncation{6, -3, 3, true});
  o.require(z1.coeff(zero_class(p2), 0) == 1 && z1.coeff(line, 0) == 1 && z1.coeff(2 * line, 0) == 1 &&
                z1.coeffs().size() == 3,
            "single n1");

  const Surface s3 = Surface::blowup(3);
  BpsTable a, b, ab;
  a.surface = b.surface = ab.surface = s3;
  a.set(make_class(s3, {1, 0, 0, 0}), 0, 3);
  a.set(make_class(s3, {1, 1, 0, 0}), 1, -2);
  b.set(make_class(s3, {0, -1, 0, 0}), 0, 1);
  b.set(make_class(s3, {3, 1, 1, 1}), 1, 4);
  for (const auto* tb : {&a, &b})
    for (const auto& [c, m] : tb->entries)
      for (const auto& [g, v] : m) ab.set(c, g, v);
  const Truncation tr{8, 0, 4, true};
  o.require(zpt_expand(ab, tr) == zpt_expand(a, tr) * zpt_expand(b, tr), "multiplicativity");
  o.detail << " I0 = 3, -45/8, 244/9; empty, single-n0, single-n1 expansions and multiplicativity";
  return o;
}

}  // namespace

int main() {
  bool all = true;
  auto run = [&](int n, const char* title, Outcome (*f)()) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " exception: " << e.what();
    }
    report(n, title, o);
    all = all && o.ok;
  };
  run(1, "line and conic census", criterion1);
  run(2, "paper golden values", criterion2);
  run(3, "wall census", criterion3);
  run(4, "pipeline equivalence", criterion4);
  run(5, "divisibility sweep", criterion5);
  run(6, "refined index audits", criterion6);
  run(7, "structural properties", criterion7);
  run(8, "series", criterion8);
  return all ? 0 : 1;
}
