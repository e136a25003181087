#include <doctest.h>

#include "helpers.hpp"
#include "zeroloc/oracle.hpp"
#include "zeroloc/poly.hpp"

using namespace zeroloc;
using zltest::approx_rel;

TEST_CASE("normalize_monic divides through by the leading coefficient") {
  const Polynomial p = normalize_monic({cx(2.0), cx(0.0), cx(-8.0)});
  CHECK(p.degree() == 2);
  CHECK(p.coeffs[0] == cx(1.0));
  CHECK(p.coeffs[1] == cx(0.0));
  CHECK(p.coeffs[2] == cx(-4.0));

  const Polynomial q = normalize_monic({cx(1.0), cx(3.0, 1.0), cx(2.0)});
  CHECK(q.coeffs[1] == cx(3.0, 1.0));
  CHECK(q.coeffs[2] == cx(2.0));
}

TEST_CASE("normalize_monic rejects bad input") {
  CHECK_THROWS_AS(normalize_monic({cx(0.0), cx(1.0), cx(1.0)}), Error);
  try {
    normalize_monic({cx(0.0), cx(1.0), cx(1.0)});
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid_polynomial);
  }
  CHECK_THROWS_AS(normalize_monic({cx(5.0)}), Error);
}

TEST_CASE("evaluate uses Horner") {
  CHECK(std::abs(evaluate(normalize_monic({1.0, 0.0, -4.0}), cx(2.0))) == 0.0);
  CHECK(std::abs(evaluate(normalize_monic({1.0, 0.0, 1.0}), cx(0.0, 1.0))) == 0.0);
  CHECK(evaluate(normalize_monic({1.0, 0.0, 0.0, 0.0}), cx(1.0, 1.0)) == cx(-2.0, 2.0));
}

TEST_CASE("reverse reciprocates the zeros") {
  const Polynomial p = normalize_monic({1.0, 3.0, 2.0});
  const Polynomial r = reverse(p);
  CHECK(r.coeffs[1] == cx(1.5));
  CHECK(r.coeffs[2] == cx(0.5));

  const Polynomial cyclo = normalize_monic({1.0, 0.0, 0.0, -1.0});
  const Polynomial rc = reverse(cyclo);
  for (int j = 0; j <= 3; ++j) CHECK(rc.coeffs[j] == cyclo.coeffs[j]);

  CHECK_THROWS_AS(reverse(normalize_monic({1.0, 1.0, 0.0})), Error);
}

TEST_CASE("prepare_even pads odd degrees with a zero constant") {
  const PreparedPolynomial odd = prepare_even(normalize_monic({1.0, 0.0, 2.0, 1.0}));
  CHECK(odd.n == 4);
  CHECK(odd.m == 2);
  CHECK(odd.was_padded);
  CHECK(odd.a[0] == cx(0.0));
  CHECK(odd.a[1] == cx(1.0));
  CHECK(odd.a[2] == cx(2.0));
  CHECK(odd.a[3] == cx(0.0));

  const PreparedPolynomial even = prepare_even(normalize_monic({1.0, 0.0, 0.0, 0.0, -1.0}));
  CHECK(even.n == 4);
  CHECK_FALSE(even.was_padded);
  CHECK(even.a[0] == cx(-1.0));
  CHECK(even.a[1] == cx(0.0));
  CHECK(even.a[2] == cx(0.0));
  CHECK(even.a[3] == cx(0.0));

  CHECK_THROWS_AS(prepare_even(normalize_monic({1.0, 0.0, 1.0})), Error);
}

TEST_CASE("prepare_even then unprepare reproduces the coefficients exactly") {
  SplitMix64 g(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int deg = 3 + static_cast<int>(g.next_u64() % 12);
    const Polynomial p = zltest::random_polynomial(g, deg, 3.0);
    const Polynomial back = unprepare(prepare_even(p));
    REQUIRE(back.degree() == p.degree());
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) CHECK(back.coeffs[i] == p.coeffs[i]);
  }
}

TEST_CASE("reverse is an involution away from zero end coefficients") {
  SplitMix64 g(77);
  for (int trial = 0; trial < 500; ++trial) {
    const int deg = 1 + static_cast<int>(g.next_u64() % 14);
    Polynomial p = zltest::random_polynomial(g, deg, 2.0);
    if (std::abs(p.coeffs.back()) < 1e-3) p.coeffs.back() += cx(1.0);
    const Polynomial rr = reverse(reverse(p));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) CHECK(approx_rel(rr.coeffs[i], p.coeffs[i], 1e-14));
  }
}

TEST_CASE("oracle roots evaluate to nearly zero") {
  SplitMix64 g(3111);
  for (int trial = 0; trial < 100; ++trial) {
    const int deg = 3 + static_cast<int>(g.next_u64() % 18);
    const Polynomial p = zltest::random_polynomial(g, deg, 2.0);
    for (cx r : all_roots(p).roots) {
      double scale = 0.0;  // eval scale: sum |a_j| |r|^j
      const double m = std::abs(r);
      for (cx c : p.coeffs) scale = scale * m + std::abs(c);
      CHECK(std::abs(evaluate(p, r)) <= 1e-8 * scale);
    }
  }
}
