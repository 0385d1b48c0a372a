#include <doctest.h>

#include "dpbps/error.hpp"
#include "dpbps/lattice.hpp"
#include "dpbps/poly.hpp"
#include "oracles.hpp"

using namespace dpbps;

TEST_CASE("intersection form and canonical class") {
  const Surface p2 = Surface::p2();
  CHECK(intersect(p2, make_class(p2, {1}), make_class(p2, {1})) == 1);
  CHECK(canonical_class(p2) == make_class(p2, {-3}));

  const Surface q = Surface::p1xp1();
  CHECK(intersect(q, make_class(q, {1, 0}), make_class(q, {0, 1})) == 1);
  CHECK(intersect(q, make_class(q, {1, 0}), make_class(q, {1, 0})) == 0);
  CHECK(degree_w(q, make_class(q, {2, 3})) == 10);

  for (int r = 1; r <= 8; ++r) {
    const Surface s = Surface::blowup(r);
    const DivClass k = canonical_class(s);
    CHECK(intersect(s, k, k) == 9 - r);
    CHECK(intersect(s, exceptional(s, 1), exceptional(s, 1)) == -1);
    CHECK(degree_w(s, exceptional(s, r)) == 1);
    CHECK(arithmetic_genus(s, anticanonical_class(s)) == 1);
  }
}

TEST_CASE("intersection agrees with the oracle on random classes") {
  std::uniform_int_distribution<std::int64_t> coef(-6, 6);
  for (int r = 0; r <= 8; ++r) {
    const Surface s = Surface::blowup(r);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::int64_t> a(static_cast<std::size_t>(r + 1)), b(a.size());
      for (auto& x : a) x = coef(oracle::rng());
      for (auto& x : b) x = coef(oracle::rng());
      const DivClass x = make_class(s, a), y = make_class(s, b);
      CHECK(intersect(s, x, y) == oracle::dot(s, x, y));
      CHECK(intersect(s, x, y) == intersect(s, y, x));
      CHECK(degree_w(s, x) == oracle::dot(s, oracle::minus_k(s), x));
    }
  }
}

TEST_CASE("arithmetic genus and parity") {
  const Surface p2 = Surface::p2();
  CHECK(arithmetic_genus(p2, make_class(p2, {1})) == 0);
  CHECK(arithmetic_genus(p2, make_class(p2, {3})) == 1);
  CHECK(arithmetic_genus(p2, make_class(p2, {4})) == 3);
  const Surface q = Surface::p1xp1();
  CHECK(arithmetic_genus(q, make_class(q, {2, 3})) == 2);

  // (-1)^{beta^2 + 1} = (-1)^{w - 1} on 1000 random classes.
  std::uniform_int_distribution<int> surf(0, 9);
  std::uniform_int_distribution<std::int64_t> coef(-20, 20);
  for (int trial = 0; trial < 1000; ++trial) {
    const int idx = surf(oracle::rng());
    const Surface s = idx == 9 ? Surface::p1xp1() : Surface::blowup(idx);
    std::vector<std::int64_t> c(static_cast<std::size_t>(s.rank()));
    for (auto& x : c) x = coef(oracle::rng());
    const DivClass b = make_class(s, c);
    const std::int64_t sq = oracle::dot(s, b, b);
    const std::int64_t w = oracle::dot(s, oracle::minus_k(s), b);
    CHECK(((sq + 1) % 2 == 0) == ((w - 1) % 2 == 0));
    CHECK(2 * (arithmetic_genus(s, b) - 1) == sq - w);
  }
}

TEST_CASE("token parsing and formatting round trip") {
  const Token t = parse_token("S5:(4;2,1,1,1,1)");
  CHECK(t.surface == Surface::blowup(5));
  CHECK(t.beta == make_class(t.surface, {4, 2, 1, 1, 1, 1}));
  CHECK(format_token(t.surface, t.beta) == "S5:(4;2,1,1,1,1)");
  CHECK(format_token(Surface::p2(), make_class(Surface::p2(), {3})) == "P2:(3)");
  CHECK(format_token(Surface::p1xp1(), make_class(Surface::p1xp1(), {2, 3})) == "P1xP1:(2,3)");
  CHECK(parse_token("S1:(0;-1)").beta == exceptional(Surface::blowup(1), 1));

  CHECK_THROWS_AS(parse_token("S9:(1)"), Error);
  CHECK_THROWS_AS(parse_token("S2:(1;1)"), Error);
  CHECK_THROWS_AS(parse_token("P2:(1"), Error);
  CHECK_THROWS_AS(parse_token("P2:(x)"), Error);
  CHECK_THROWS_AS(parse_token("P1xP1:(1;2)"), Error);
  try {
    parse_token("S2:(1;1)");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidClass);
  }
}

TEST_CASE("polynomial arithmetic") {
  const PolyZ a{1, 2, 1};
  const PolyZ b{1, 1};
  CHECK(a * b == PolyZ{1, 3, 3, 1});
  CHECK(a - a == PolyZ{});
  CHECK(PolyZ{}.degree() == -1);
  CHECK(a.eval_at_one() == 4);
  CHECK(a.is_palindromic());
  CHECK(!PolyZ{1, 2}.is_palindromic());
  CHECK(proj_space(3) == PolyZ{1, 1, 1, 1});
  CHECK(proj_space(-1) == PolyZ{});
  CHECK(PolyZ{1, 10, 1}.to_string() == "1 + 10t + t^2");
  CHECK(PolyZ{0, -2}.to_string() == "-2t");

  const auto [q, r] = divide_exact(a, b);
  CHECK(q == b);
  CHECK(r.is_zero());
  CHECK_THROWS_AS(divide_exact(a, PolyZ{}), Error);
}

TEST_CASE("exact division agrees with multiplication on random inputs") {
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<int> deg(0, 8);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<mpz_class> qc(static_cast<std::size_t>(deg(oracle::rng()) + 1));
    for (auto& x : qc) x = coef(oracle::rng());
    const PolyZ quotient(qc);
    // Monic divisor keeps the division integral.
    std::vector<mpz_class> dc(static_cast<std::size_t>(deg(oracle::rng()) + 1));
    for (auto& x : dc) x = coef(oracle::rng());
    dc.back() = 1;
    const PolyZ divisor(dc);
    const PolyZ prod = quotient * divisor;
    const auto [q, r] = divide_exact(prod, divisor);
    CHECK(q == quotient);
    CHECK(r.is_zero());
    const PolyZ bumped = prod + PolyZ{1};
    const auto [q2, r2] = divide_exact(bumped, divisor);
    CHECK(q2 * divisor + r2 == bumped);
    CHECK(r2.degree() < divisor.degree());
  }
}

TEST_CASE("big coefficients do not overflow") {
  PolyZ p{1, 1};
  for (int i = 0; i < 100; ++i) p *= PolyZ{1, 1};
  CHECK(p.coeff(50) == binomial(101, 50));
  CHECK(binomial(-1, 5) == -1);
  CHECK(binomial(-3, 2) == 6);
}
