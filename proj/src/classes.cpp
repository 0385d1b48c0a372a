#include "dpbps/classes.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "dpbps/error.hpp"

namespace dpbps {

std::string_view to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::Line: return "Line";
    case ClassKind::Conic: return "Conic";
    case ClassKind::NefBig: return "NefBig";
    case ClassKind::OutOfScope: return "OutOfScope";
  }
  return "?";
}

ClassKind parse_class_kind(std::string_view text) {
  for (ClassKind k : {ClassKind::Line, ClassKind::Conic, ClassKind::NefBig, ClassKind::OutOfScope})
    if (to_string(k) == text) return k;
  throw Error(ErrorKind::Parse, "unknown class kind '" + std::string(text) + "'");
}

namespace {

std::int64_t isqrt_floor(std::int64_t n) {
  if (n <= 0) return 0;
  auto x = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

// Fills a[pos..] so that the remaining entries sum to `sum` and their squares
// to `sumsq`. Prunes with Cauchy-Schwarz: sum^2 <= remaining * sumsq.
void fill_tail(std::vector<std::int64_t>& a, std::size_t pos, std::int64_t sum, std::int64_t sumsq,
               std::vector<DivClass>& out) {
  const auto remaining = static_cast<std::int64_t>(a.size() - pos);
  if (remaining == 0) {
    if (sum == 0 && sumsq == 0) out.emplace_back(a);
    return;
  }
  if (sumsq < 0 || sum * sum > remaining * sumsq) return;
  const std::int64_t bound = isqrt_floor(sumsq);
  for (std::int64_t v = -bound; v <= bound; ++v) {
    a[pos] = v;
    fill_tail(a, pos + 1, sum - v, sumsq - v * v, out);
  }
}

struct Tables {
  // Index: 0 = P2, 1..8 = S_r, 9 = P1xP1.
  std::array<std::vector<DivClass>, 10> lines, conics, roots;
};

std::size_t table_index(const Surface& s) { return s.kind() == SurfaceKind::P1xP1 ? 9 : static_cast<std::size_t>(s.r()); }

Surface surface_at(std::size_t i) { return i == 9 ? Surface::p1xp1() : Surface::blowup(static_cast<int>(i)); }

const Tables& tables() {
  // Built eagerly on first use; static initialisation is thread-safe, so
  // concurrent readers always see complete tables.
  static const Tables t = [] {
    Tables out;
    for (std::size_t i = 0; i < 10; ++i) {
      Surface s = surface_at(i);
      out.lines[i] = enumerate_with(s, 1, -1);
      out.conics[i] = enumerate_with(s, 2, 0);
      if (s.kind() == SurfaceKind::Blowup) out.roots[i] = enumerate_with(s, 0, -2);
    }
    return out;
  }();
  return t;
}

}  // namespace

std::vector<DivClass> enumerate_with(const Surface& s, std::int64_t w, std::int64_t self_intersection) {
  std::vector<DivClass> out;
  if (s.kind() == SurfaceKind::P1xP1) {
    // 2a + 2b = w and 2ab = beta^2.
    if (w % 2 != 0 || self_intersection % 2 != 0) return out;
    const std::int64_t u = w / 2, v = self_intersection / 2;
    const std::int64_t m = std::abs(u) + std::abs(v) + 2;
    for (std::int64_t a = -m; a <= m; ++a)
      if (a * (u - a) == v) out.push_back(DivClass({a, u - a}));
    return out;
  }
  const std::int64_t r = s.r();
  // With T = sum a_i = 3d - w and Q = sum a_i^2 = d^2 - beta^2, Cauchy-Schwarz
  // T^2 <= r Q gives (9-r) d^2 - 6 w d + (w^2 + r beta^2) <= 0, so d lies
  // between (3w -+ sqrt(r (w^2 - (9-r) beta^2))) / (9-r).
  const std::int64_t disc = r * (w * w - (9 - r) * self_intersection);
  if (disc < 0) return out;
  const std::int64_t root = isqrt_floor(disc) + 1;
  const std::int64_t d_lo = (3 * w - root) / (9 - r) - 1;
  const std::int64_t d_hi = (3 * w + root) / (9 - r) + 1;
  std::vector<std::int64_t> a(static_cast<std::size_t>(r + 1));
  for (std::int64_t d = d_lo; d <= d_hi; ++d) {
    a[0] = d;
    fill_tail(a, 1, 3 * d - w, d * d - self_intersection, out);
  }
  return out;
}

const std::vector<DivClass>& enumerate_lines(const Surface& s) { return tables().lines[table_index(s)]; }
const std::vector<DivClass>& enumerate_conics(const Surface& s) { return tables().conics[table_index(s)]; }
const std::vector<DivClass>& enumerate_roots(const Surface& s) { return tables().roots[table_index(s)]; }

std::vector<DivClass> simple_roots(const Surface& s) {
  std::vector<DivClass> out;
  if (s.kind() != SurfaceKind::Blowup) return out;
  for (int i = 1; i < s.r(); ++i) out.push_back(exceptional(s, i) - exceptional(s, i + 1));
  if (s.r() >= 3)
    out.push_back(hyperplane(s) - exceptional(s, 1) - exceptional(s, 2) - exceptional(s, 3));
  return out;
}

bool is_root(const Surface& s, const DivClass& alpha) {
  require_class(s, alpha);
  return s.kind() == SurfaceKind::Blowup && intersect(s, alpha, alpha) == -2 && degree_w(s, alpha) == 0;
}

DivClass reflect(const Surface& s, const DivClass& x, const DivClass& alpha) {
  require_class(s, x);
  if (!is_root(s, alpha)) throw Error(ErrorKind::NotARoot, format_class(s, alpha) + " is not a root on " + s.name());
  return x + intersect(s, x, alpha) * alpha;
}

bool is_minus_k_s8(const Surface& s, const DivClass& beta) {
  return s.kind() == SurfaceKind::Blowup && s.r() == 8 && beta == anticanonical_class(s);
}

bool is_minus_2k_s8(const Surface& s, const DivClass& beta) {
  return s.kind() == SurfaceKind::Blowup && s.r() == 8 && beta == 2 * anticanonical_class(s);
}

bool is_k_very_ample(const Surface& s, const DivClass& d, int k) {
  require_class(s, d);
  if (k < 0) throw Error(ErrorKind::Internal, "k-very ampleness needs k >= 0");
  const DivClass minus_k = anticanonical_class(s);
  if (s.kind() == SurfaceKind::Blowup && s.r() == 8 && (d == k * minus_k || d == (k + 1) * minus_k)) return false;
  if (s.kind() == SurfaceKind::Blowup && s.r() == 7 && k == 1 && d == minus_k) return false;

  switch (s.kind()) {
    case SurfaceKind::P2:
      return d[0] >= k;
    case SurfaceKind::P1xP1:
      return intersect(s, d, DivClass({1, 0})) >= k && intersect(s, d, DivClass({0, 1})) >= k;
    case SurfaceKind::Blowup:
      break;
  }
  if (s.r() == 1 && intersect(s, d, hyperplane(s) - exceptional(s, 1)) < k) return false;
  for (const auto& l : enumerate_lines(s))
    if (intersect(s, d, l) < k) return false;
  return true;
}

bool is_nef(const Surface& s, const DivClass& d) { return is_k_very_ample(s, d, 0) || is_minus_k_s8(s, d); }

bool is_big(const Surface& s, const DivClass& d) { return is_nef(s, d) && intersect(s, d, d) > 0; }

std::vector<DivClass> orthogonal_lines(const Surface& s, const DivClass& beta) {
  if (!is_nef(s, beta)) throw Error(ErrorKind::NotNef, format_token(s, beta) + " is not nef");
  std::vector<DivClass> out;
  for (const auto& l : enumerate_lines(s))
    if (intersect(s, beta, l) == 0) out.push_back(l);
  if (intersect(s, beta, beta) > 0) {
    // Hodge index: orthogonal lines of a big class are pairwise disjoint.
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (intersect(s, out[i], out[j]) != 0)
          throw Error(ErrorKind::Internal, "orthogonal lines " + format_class(s, out[i]) + " and " +
                                               format_class(s, out[j]) + " meet");
    if (static_cast<int>(out.size()) > s.r()) throw Error(ErrorKind::Internal, "more than r orthogonal lines");
  }
  return out;
}

ClassProfile classify(const Surface& s, const DivClass& beta) {
  require_class(s, beta);
  ClassProfile p;
  p.beta = beta;
  p.w = degree_w(s, beta);
  p.pa = arithmetic_genus(s, beta);
  p.beta_sq = intersect(s, beta, beta);
  p.is_line = p.beta_sq == -1 && p.w == 1;
  p.is_conic = p.pa == 0 && p.w == 2;
  p.nef = is_nef(s, beta);
  p.big = p.nef && p.beta_sq > 0;
  p.very_ample = is_k_very_ample(s, beta, 1);
  for (const auto& l : enumerate_lines(s))
    if (intersect(s, beta, l) == 0) ++p.eta;

  if (p.is_line) p.kind = ClassKind::Line;
  else if (p.is_conic) p.kind = ClassKind::Conic;
  else if (p.big && p.pa <= 2 && !is_minus_2k_s8(s, beta)) p.kind = ClassKind::NefBig;
  else p.kind = ClassKind::OutOfScope;
  return p;
}

}  // namespace dpbps
