#include <doctest.h>

#include <algorithm>
#include <set>

#include "dpbps/classes.hpp"
#include "dpbps/error.hpp"
#include "oracles.hpp"

using namespace dpbps;

namespace {

std::set<DivClass> as_set(const std::vector<DivClass>& v) { return {v.begin(), v.end()}; }

std::set<DivClass> brute(const Surface& s, std::int64_t w, std::int64_t sq, std::int64_t d_lo, std::int64_t d_hi,
                         std::int64_t a_lo, std::int64_t a_hi) {
  return as_set(oracle::box(s, d_lo, d_hi, a_lo, a_hi, [&](const DivClass& c) {
    return oracle::dot(s, c, c) == sq && oracle::dot(s, oracle::minus_k(s), c) == w;
  }));
}

std::vector<std::int64_t> shape(const DivClass& c) {
  std::vector<std::int64_t> v = c.coeffs;
  std::sort(v.begin() + 1, v.end(), std::greater<>());
  return v;
}

}  // namespace

TEST_CASE("line counts match brute-force enumeration") {
  const std::int64_t expected[] = {0, 1, 3, 6, 10, 16, 27, 56, 240};
  for (int r = 0; r <= 8; ++r) {
    const Surface s = Surface::blowup(r);
    const auto& lines = enumerate_lines(s);
    CHECK(static_cast<std::int64_t>(lines.size()) == expected[r]);
    CHECK(as_set(lines) == brute(s, 1, -1, 0, 6, -1, 3));
    CHECK(std::is_sorted(lines.begin(), lines.end()));
  }
  CHECK(enumerate_lines(Surface::p1xp1()).empty());
}

TEST_CASE("conic enumeration matches brute force and the S8 shape list") {
  for (int r = 0; r <= 7; ++r) {
    const Surface s = Surface::blowup(r);
    CHECK(as_set(enumerate_conics(s)) == brute(s, 2, 0, 0, 8, -1, 3));
  }
  CHECK(as_set(enumerate_conics(Surface::p1xp1())) == brute(Surface::p1xp1(), 2, 0, 0, 0, -2, 3));
  CHECK(enumerate_conics(Surface::p2()).empty());

  const Surface s8 = Surface::blowup(8);
  std::set<std::vector<std::int64_t>> shapes;
  for (const auto& c : enumerate_conics(s8)) shapes.insert(shape(c));
  const std::set<std::vector<std::int64_t>> paper = {
      {1, 1, 0, 0, 0, 0, 0, 0, 0}, {2, 1, 1, 1, 1, 0, 0, 0, 0}, {3, 2, 1, 1, 1, 1, 1, 0, 0},
      {4, 2, 2, 2, 1, 1, 1, 1, 0}, {4, 3, 1, 1, 1, 1, 1, 1, 1}, {5, 2, 2, 2, 2, 2, 2, 1, 0},
      {5, 3, 2, 2, 2, 1, 1, 1, 1}, {6, 3, 3, 2, 2, 2, 2, 1, 1}, {7, 3, 3, 3, 3, 2, 2, 2, 1},
      {7, 4, 3, 2, 2, 2, 2, 2, 2}, {8, 3, 3, 3, 3, 3, 3, 3, 1}, {8, 4, 3, 3, 3, 3, 2, 2, 2},
      {9, 4, 4, 3, 3, 3, 3, 3, 2}, {10, 4, 4, 4, 4, 3, 3, 3, 3}, {11, 4, 4, 4, 4, 4, 4, 4, 3}};
  CHECK(shapes == paper);
  CHECK(enumerate_conics(s8).size() == 2160);
}

TEST_CASE("roots") {
  const std::size_t expected[] = {0, 0, 2, 8, 20, 40, 72, 126, 240};
  for (int r = 0; r <= 8; ++r) {
    const Surface s = Surface::blowup(r);
    const auto& roots = enumerate_roots(s);
    CHECK(roots.size() == expected[r]);
    if (r >= 1) CHECK(as_set(roots) == brute(s, 0, -2, -3, 3, -2, 2));
    for (const auto& a : simple_roots(s)) CHECK(is_root(s, a));
  }
  CHECK(enumerate_roots(Surface::p1xp1()).empty());
}

TEST_CASE("reflections are isometries fixing K and permuting lines") {
  for (int r = 2; r <= 8; ++r) {
    const Surface s = Surface::blowup(r);
    const auto& roots = enumerate_roots(s);
    const std::set<DivClass> lines = as_set(enumerate_lines(s));
    std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const DivClass& a = roots[pick(oracle::rng())];
      CHECK(reflect(s, canonical_class(s), a) == canonical_class(s));
      CHECK(reflect(s, a, a) == -a);
      const DivClass& l = enumerate_lines(s)[trial % lines.size()];
      const DivClass img = reflect(s, l, a);
      CHECK(lines.count(img) == 1);
      CHECK(reflect(s, img, a) == l);
      CHECK(intersect(s, img, img) == intersect(s, l, l));
    }
  }
  const Surface s3 = Surface::blowup(3);
  CHECK_THROWS_AS(reflect(s3, hyperplane(s3), hyperplane(s3)), Error);
}

TEST_CASE("classification examples") {
  auto prof = [](const char* tok) {
    const Token t = parse_token(tok);
    return classify(t.surface, t.beta);
  };
  CHECK(prof("S1:(0;-1)").kind == ClassKind::Line);
  CHECK(prof("S5:(2;1,1,1,1,1)").kind == ClassKind::Line);
  CHECK(prof("S3:(1;1,0,0)").kind == ClassKind::Conic);
  CHECK(prof("P2:(4)").kind == ClassKind::OutOfScope);
  CHECK(prof("S8:(6;2,2,2,2,2,2,2,2)").kind == ClassKind::OutOfScope);
  CHECK(prof("S2:(1;1,1)").kind == ClassKind::Line);

  const ClassProfile a = prof("S2:(2;1,1)");
  CHECK(a.kind == ClassKind::NefBig);
  CHECK(a.pa == 0);
  CHECK(a.w == 4);
  CHECK(a.eta == 1);

  const ClassProfile b = prof("S3:(3;1,1,0)");
  CHECK(b.pa == 1);
  CHECK(b.w == 7);
  CHECK(b.eta == 1);

  const ClassProfile c = prof("S5:(4;2,1,1,1,1)");
  CHECK(c.pa == 2);
  CHECK(c.very_ample);
  CHECK(c.eta == 0);

  const ClassProfile k8 = prof("S8:(3;1,1,1,1,1,1,1,1)");
  CHECK(k8.kind == ClassKind::NefBig);
  CHECK(k8.w == 1);
  CHECK(!k8.very_ample);
}

TEST_CASE("eta of pulled back anticanonical classes") {
  for (int r = 1; r <= 8; ++r) {
    const Surface s = Surface::blowup(r);
    for (int rp = 0; rp <= std::min(r, 7); ++rp) {
      std::vector<std::int64_t> c(static_cast<std::size_t>(r + 1), 0);
      c[0] = 3;
      for (int i = 1; i <= rp; ++i) c[static_cast<std::size_t>(i)] = 1;
      const ClassProfile p = classify(s, make_class(s, c));
      CHECK(p.pa == 1);
      CHECK(p.eta == r - rp);
      CHECK(static_cast<std::int64_t>(orthogonal_lines(s, p.beta).size()) == p.eta);
    }
  }
}

TEST_CASE("k-very ampleness") {
  const Surface p2 = Surface::p2();
  CHECK(is_k_very_ample(p2, make_class(p2, {1}), 1));
  CHECK(!is_k_very_ample(p2, make_class(p2, {1}), 2));
  CHECK(is_k_very_ample(p2, make_class(p2, {3}), 3));
  const Surface s6 = Surface::blowup(6);
  CHECK(is_k_very_ample(s6, anticanonical_class(s6), 1));
  const Surface s7 = Surface::blowup(7);
  CHECK(!is_k_very_ample(s7, anticanonical_class(s7), 1));
  CHECK(is_k_very_ample(s7, anticanonical_class(s7), 0));
  const Surface s8 = Surface::blowup(8);
  CHECK(!is_k_very_ample(s8, anticanonical_class(s8), 0));
  CHECK(is_nef(s8, anticanonical_class(s8)));
  CHECK(!is_nef(s8, exceptional(s8, 1)));
  CHECK(is_big(s8, anticanonical_class(s8)));
  const Surface s3 = Surface::blowup(3);
  CHECK(!is_big(s3, make_class(s3, {1, 1, 0, 0})));
}

TEST_CASE("orthogonal lines of nef and big classes are disjoint") {
  for (int r = 2; r <= 7; ++r) {
    const Surface s = Surface::blowup(r);
    const DivClass beta = make_class(s, [&] {
      std::vector<std::int64_t> c(static_cast<std::size_t>(r + 1), 0);
      c[0] = 2;
      c[1] = 1;
      return c;
    }());
    const auto lines = orthogonal_lines(s, beta);
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (std::size_t j = i + 1; j < lines.size(); ++j) CHECK(intersect(s, lines[i], lines[j]) == 0);
  }
  const Surface s2 = Surface::blowup(2);
  CHECK_THROWS_AS(orthogonal_lines(s2, exceptional(s2, 1)), Error);
}
