#include <doctest.h>

#include "helpers.hpp"
#include "zeroloc/mat2.hpp"

using namespace zeroloc;
using zltest::approx_rel;

namespace {

Mat2 random_mat2(SplitMix64& g, double range = 3.0) {
  return {zltest::random_cx(g, range), zltest::random_cx(g, range), zltest::random_cx(g, range),
          zltest::random_cx(g, range)};
}

double offdiag_of_similarity(const Mat2& S, const Mat2& Sinv, const Mat2& M) {
  const Mat2 D = Sinv * M * S;
  return std::max(std::abs(D.b), std::abs(D.c));
}

}  // namespace

TEST_CASE("eigenvalues_2x2 on simple matrices") {
  const EigenPair2 tri = eigenvalues_2x2({cx(1.0), cx(2.0), cx(0.0), cx(3.0)});
  CHECK(approx_rel(tri.alpha, cx(1.0), 1e-14));
  CHECK(approx_rel(tri.beta, cx(3.0), 1e-14));

  // Tie in modulus: phase in [0, 2pi) orders +1 before -1.
  const EigenPair2 inv = eigenvalues_2x2({cx(0.0), cx(1.0), cx(1.0), cx(0.0)});
  CHECK(inv.alpha == cx(1.0));
  CHECK(inv.beta == cx(-1.0));

  const EigenPair2 zero = eigenvalues_2x2(Mat2::zero());
  CHECK(zero.alpha == cx(0.0));
  CHECK(zero.beta == cx(0.0));
}

TEST_CASE("eigenvalues_2x2 matches trace and determinant") {
  SplitMix64 g(100);
  for (int trial = 0; trial < 10000; ++trial) {
    const Mat2 M = random_mat2(g);
    const EigenPair2 e = eigenvalues_2x2(M);
    CHECK(approx_rel(e.alpha + e.beta, M.trace(), 1e-12));
    CHECK(approx_rel(e.alpha * e.beta, M.det(), 1e-12));
    CHECK(std::abs(e.alpha) <= std::abs(e.beta));
  }
}

TEST_CASE("schur_2x2 on the named cases") {
  const Schur2 sorted = schur_2x2({cx(1.0), cx(0.0), cx(0.0), cx(2.0)});
  CHECK(approx_rel(sorted.T.a, cx(1.0), 1e-14));
  CHECK(approx_rel(sorted.T.d, cx(2.0), 1e-14));
  CHECK(std::abs(sorted.T.b) == 0.0);

  const Mat2 nil{cx(0.0), cx(0.0), cx(1.0), cx(0.0)};
  const Schur2 sn = schur_2x2(nil);
  CHECK(std::abs(sn.T.a) <= 1e-14);
  CHECK(std::abs(sn.T.d) <= 1e-14);
  CHECK(approx_rel(std::abs(sn.T.b), 1.0, 1e-13));

  const Mat2 rot{cx(0.0), cx(-1.0), cx(1.0), cx(0.0)};
  const Schur2 sr = schur_2x2(rot);
  CHECK(std::abs(sr.T.c) == 0.0);
  CHECK(approx_rel(std::abs(sr.T.a), 1.0, 1e-13));
  CHECK(approx_rel(std::abs(sr.T.d), 1.0, 1e-13));
  CHECK(approx_rel(sr.T.a * sr.T.d, cx(1.0), 1e-13));  // {i, -i} in some order
}

TEST_CASE("schur_2x2 reconstructs M = U T U*") {
  SplitMix64 g(200);
  for (int trial = 0; trial < 10000; ++trial) {
    const Mat2 M = random_mat2(g);
    const Schur2 s = schur_2x2(M);
    // Unitarity.
    const Mat2 I = s.U.adjoint() * s.U;
    CHECK(std::abs(I.a - cx(1.0)) <= 1e-13);
    CHECK(std::abs(I.d - cx(1.0)) <= 1e-13);
    CHECK(std::abs(I.b) <= 1e-13);
    CHECK(std::abs(I.c) <= 1e-13);
    // Ordering and reconstruction.
    CHECK(std::abs(s.T.a) <= std::abs(s.T.d) * (1.0 + 1e-12) + 1e-13 * M.frobenius());
    const Mat2 R = s.U * s.T * s.U.adjoint();
    const double scale = std::max(1.0, M.frobenius());
    CHECK(std::abs(R.a - M.a) <= 1e-12 * scale);
    CHECK(std::abs(R.b - M.b) <= 1e-12 * scale);
    CHECK(std::abs(R.c - M.c) <= 1e-12 * scale);
    CHECK(std::abs(R.d - M.d) <= 1e-12 * scale);
  }
}

TEST_CASE("diagonalize_2x2 named cases") {
  const auto diag = diagonalize_2x2({cx(2.0), cx(0.0), cx(0.0), cx(5.0)});
  REQUIRE(diag.has_value());
  CHECK(diag->S.a == cx(1.0));
  CHECK(diag->S.d == cx(1.0));
  CHECK(diag->d.alpha == cx(2.0));
  CHECK(diag->d.beta == cx(5.0));

  const auto sym = diagonalize_2x2({cx(0.0), cx(1.0), cx(1.0), cx(0.0)});
  REQUIRE(sym.has_value());
  CHECK(sym->d.alpha == cx(1.0));
  CHECK(sym->d.beta == cx(-1.0));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(approx_rel(sym->S.a, cx(inv_sqrt2), 1e-14));
  CHECK(approx_rel(std::abs(sym->S.c), inv_sqrt2, 1e-14));

  CHECK_FALSE(diagonalize_2x2({cx(1.0), cx(1.0), cx(0.0), cx(1.0)}).has_value());

  // Scalar matrices are diagonal already; the near-defective guard must not
  // reject them (the trailing block -10 I of z^4 + 10 z^2 + 0.5 needs this).
  const auto scalar = diagonalize_2x2({cx(-10.0), cx(0.0), cx(0.0), cx(-10.0)});
  REQUIRE(scalar.has_value());
  CHECK(scalar->d.alpha == cx(-10.0));
}

TEST_CASE("diagonalize_2x2 produces unit columns and a diagonal similarity") {
  SplitMix64 g(300);
  int accepted = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const Mat2 M = random_mat2(g);
    const auto d = diagonalize_2x2(M);
    if (!d) continue;
    ++accepted;
    const double c1 = std::sqrt(std::norm(d->S.a) + std::norm(d->S.c));
    const double c2 = std::sqrt(std::norm(d->S.b) + std::norm(d->S.d));
    CHECK(std::abs(c1 - 1.0) <= 1e-13);
    CHECK(std::abs(c2 - 1.0) <= 1e-13);
    CHECK(offdiag_of_similarity(d->S, d->S.inverse(), M) <= 1e-10 * std::max(1.0, M.frobenius()));
  }
  CHECK(accepted > 4900);  // random matrices are almost never near-defective
}

TEST_CASE("singular values: closed forms and product identity") {
  CHECK(spectral_norm_2x2({cx(3.0), cx(0.0), cx(0.0), cx(4.0)}) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(spectral_norm_2x2({cx(0.0), cx(2.0), cx(0.0), cx(0.0)}) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(spectral_norm_2x2(Mat2::identity()) == doctest::Approx(1.0).epsilon(1e-14));

  CHECK(smallest_singular_value_2x2({cx(3.0), cx(0.0), cx(0.0), cx(4.0)}) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(smallest_singular_value_2x2({cx(1.0), cx(1.0), cx(1.0), cx(1.0)}) == 0.0);
  CHECK(smallest_singular_value_2x2({cx(0.0), cx(2.0), cx(0.5), cx(0.0)}) == doctest::Approx(0.5).epsilon(1e-14));

  SplitMix64 g(400);
  for (int trial = 0; trial < 10000; ++trial) {
    const Mat2 M = random_mat2(g);
    CHECK(approx_rel(spectral_norm_2x2(M) * smallest_singular_value_2x2(M), std::abs(M.det()), 1e-11));
  }
}

TEST_CASE("defective_criterion named values") {
  CHECK_FALSE(defective_criterion(cx(0.0), cx(5.0), cx(0.0)));  // diagonal block exclusion
  CHECK(defective_criterion(cx(1.0), cx(0.0), cx(-0.25)));      // double eigenvalue 1/2
  CHECK_FALSE(defective_criterion(cx(1.0), cx(0.0), cx(1.0)));
}

TEST_CASE("defective_criterion agrees with discriminant plus structure") {
  SplitMix64 g(500);
  for (int trial = 0; trial < 10000; ++trial) {
    const cx a1 = zltest::random_cx(g, 2.0), a2 = zltest::random_cx(g, 2.0), a3 = zltest::random_cx(g, 2.0);
    const Mat2 block{-a2, a1 * a2 - a3, -a1, a1 * a1 - a2};
    const cx tr = block.trace();
    const cx disc = tr * tr - 4.0 * block.det();
    const double scale = std::max({std::abs(tr * tr), 4.0 * std::abs(block.det()), 1e-300});
    const bool double_eig = std::abs(disc) <= 1e-12 * scale;
    const bool scalar = (a1 == cx(0.0)) && (a3 == cx(0.0));
    CHECK(defective_criterion(a1, a2, a3) == (double_eig && !scalar));
  }
  // a1 = 2, a2 = 1 solves a1^3 - 4 a1 a2 + 4 a3 = 0 at a3 = 0: defective.
  CHECK(defective_criterion(cx(2.0), cx(1.0), cx(0.0)));
}
