#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "zeroloc/poly.hpp"

namespace zeroloc {

/// 2x2 complex matrix [[a, b], [c, d]], row-major.
struct Mat2 {
  cx a{0.0}, b{0.0}, c{0.0}, d{0.0};

  static Mat2 identity() { return {cx(1.0), cx(0.0), cx(0.0), cx(1.0)}; }
  static Mat2 zero() { return {}; }

  cx trace() const { return a + d; }
  cx det() const { return a * d - b * c; }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }

  /// Conjugate transpose.
  Mat2 adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }

  double frobenius() const {
    return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
  }
  double max_abs() const {
    return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
  }

  Mat2 inverse() const {
    const cx dt = det();
    return {d / dt, -b / dt, -c / dt, a / dt};
  }
};

/// Eigenvalues ordered |alpha| <= |beta|; exact ties are broken by phase
/// angle in [0, 2pi), smaller first, so results are deterministic.
struct EigenPair2 {
  cx alpha{0.0};
  cx beta{0.0};
};

namespace detail {

inline double phase_in_2pi(cx z) {
  double a = std::arg(z);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  return a;
}

inline bool eigen_less(cx x, cx y) {
  const double ax = std::abs(x), ay = std::abs(y);
  if (ax != ay) return ax < ay;
  return phase_in_2pi(x) < phase_in_2pi(y);
}

}  // namespace detail

/// Roots of lambda^2 - tr(M) lambda + det(M). The larger-modulus root comes
/// from the non-cancelling branch of the quadratic formula, the smaller as
/// det / larger.
inline EigenPair2 eigenvalues_2x2(const Mat2& M) {
  const cx h = 0.5 * M.trace();
  const cx dt = M.det();
  cx s = std::sqrt(h * h - dt);
  if ((std::conj(h) * s).real() < 0.0) s = -s;
  const cx big = h + s;
  const cx small = (big == cx(0.0)) ? cx(0.0) : dt / big;
  EigenPair2 e{small, big};
  if (!detail::eigen_less(e.alpha, e.beta) && (e.alpha != e.beta)) std::swap(e.alpha, e.beta);
  return e;
}

namespace detail {

/// Unit null vector of (M - lambda I); falls back to e1 for scalar matrices.
inline std::pair<cx, cx> unit_eigenvector(const Mat2& M, cx lambda) {
  const cx p = M.a - lambda, q = M.b;
  const cx r = M.c, s = M.d - lambda;
  const double n1 = std::norm(q) + std::norm(p);
  const double n2 = std::norm(s) + std::norm(r);
  cx v0, v1;
  if (n1 >= n2) {
    v0 = q;
    v1 = -p;
  } else {
    v0 = s;
    v1 = -r;
  }
  const double nrm = std::sqrt(std::norm(v0) + std::norm(v1));
  if (nrm == 0.0) return {cx(1.0), cx(0.0)};
  return {v0 / nrm, v1 / nrm};
}

}  // namespace detail

struct Schur2 {
  Mat2 U;  // unitary
  Mat2 T;  // upper triangular, U* M U, |T11| <= |T22|
};

/// Unitary triangularization with the smaller-modulus eigenvalue first.
inline Schur2 schur_2x2(const Mat2& M) {
  const EigenPair2 e = eigenvalues_2x2(M);
  const auto [u0, u1] = detail::unit_eigenvector(M, e.alpha);
  Mat2 U{u0, -std::conj(u1), u1, std::conj(u0)};
  Mat2 T = U.adjoint() * M * U;
  T.c = cx(0.0);  // below rounding by construction
  return {U, T};
}

struct Diag2 {
  Mat2 S;        // unit-norm columns
  EigenPair2 d;  // S^-1 M S = diag(d.alpha, d.beta)
};

/// Eigenvector diagonalization when the basis is trustworthy. Already-diagonal
/// matrices (including scalar ones) always succeed; otherwise the eigenvalues
/// must be separated by more than 1e-8 * max(||M||_F, 1), since a nearly
/// defective basis blows up every quantity computed from S^-1.
inline std::optional<Diag2> diagonalize_2x2(const Mat2& M) {
  const EigenPair2 e = eigenvalues_2x2(M);
  if (M.b == cx(0.0) && M.c == cx(0.0)) {
    if (detail::eigen_less(M.d, M.a)) {
      return Diag2{Mat2{cx(0.0), cx(1.0), cx(1.0), cx(0.0)}, e};
    }
    return Diag2{Mat2::identity(), e};
  }
  if (std::abs(e.alpha - e.beta) <= 1e-8 * std::max(M.frobenius(), 1.0)) return std::nullopt;
  const auto [a0, a1] = detail::unit_eigenvector(M, e.alpha);
  const auto [b0, b1] = detail::unit_eigenvector(M, e.beta);
  return Diag2{Mat2{a0, b0, a1, b1}, e};
}

/// Largest singular value, from the eigenvalues of M* M in closed form.
inline double spectral_norm_2x2(const Mat2& M) {
  const double g11 = std::norm(M.a) + std::norm(M.c);
  const double g22 = std::norm(M.b) + std::norm(M.d);
  const cx g12 = std::conj(M.a) * M.b + std::conj(M.c) * M.d;
  const double mid = 0.5 * (g11 + g22);
  const double off = std::hypot(0.5 * (g11 - g22), std::abs(g12));
  return std::sqrt(mid + off);
}

/// Smallest singular value: |det| / sigma_max avoids the cancellation in the
/// direct closed form; 0 for singular matrices.
inline double smallest_singular_value_2x2(const Mat2& M) {
  const double smax = spectral_norm_2x2(M);
  if (smax == 0.0) return 0.0;
  return std::abs(M.det()) / smax;
}

/// True iff the trailing 2x2 block built from these three coefficients has a
/// double eigenvalue without being scalar, i.e. cannot be diagonalized:
/// a_{n-1} (a_{n-1}^3 - 4 a_{n-1} a_{n-2} + 4 a_{n-3}) = 0, excluding
/// a_{n-1} = a_{n-3} = 0 which gives a diagonal block.
inline bool defective_criterion(cx a_nm1, cx a_nm2, cx a_nm3) {
  const cx t1 = a_nm1 * a_nm1 * a_nm1 * a_nm1;
  const cx t2 = -4.0 * a_nm1 * a_nm1 * a_nm2;
  const cx t3 = 4.0 * a_nm1 * a_nm3;
  const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
  const bool discriminant_zero = std::abs(t1 + t2 + t3) <= 1e-12 * scale || scale == 0.0;
  const bool scalar_block = (a_nm1 == cx(0.0)) && (a_nm3 == cx(0.0));
  return discriminant_zero && !scalar_block;
}

}  // namespace zeroloc
