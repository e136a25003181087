#pragma once

#include <cstddef>
#include <vector>

#include "zeroloc/mat2.hpp"
#include "zeroloc/poly.hpp"

namespace zeroloc {

/// Dense complex matrix, row-major. Only used as a quadratic-cost fixture for
/// structural tests; nothing on the bound-computation path touches it.
struct DenseMatrix {
  int n = 0;
  std::vector<cx> e;

  explicit DenseMatrix(int size) : n(size), e(static_cast<std::size_t>(size) * size, cx(0.0)) {}

  cx& at(int r, int c) { return e[static_cast<std::size_t>(r) * n + c]; }
  cx at(int r, int c) const { return e[static_cast<std::size_t>(r) * n + c]; }

  DenseMatrix operator*(const DenseMatrix& o) const {
    DenseMatrix out(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const cx v = at(i, k);
        if (v == cx(0.0)) continue;
        for (int j = 0; j < n; ++j) out.at(i, j) += v * o.at(k, j);
      }
    return out;
  }
};

/// Companion matrix of a monic polynomial: subdiagonal ones, last column
/// -a_0 .. -a_{n-1}. Its eigenvalues are the zeros of p.
inline DenseMatrix companion_matrix(const Polynomial& p) {
  const int n = p.degree();
  if (n < 2) fail(errc::degree_too_small, "companion matrix needs degree >= 2");
  DenseMatrix C(n);
  for (int i = 1; i < n; ++i) C.at(i, i - 1) = cx(1.0);
  for (int j = 0; j < n; ++j) C.at(j, n - 1) = -p.coeff(j);
  return C;
}

/// The m 2x2 blocks K_0 .. K_{m-1} stacked in the last block column of the
/// squared companion matrix C(p)^2. The entries are the actual entries of
/// C(p)^2 (centers of Gershgorin discs must be true diagonal entries), which
/// the structural tests pin against an explicit C(p)*C(p) product.
struct BlockColumn {
  std::vector<Mat2> K;
};

inline BlockColumn squared_companion_blocks(const PreparedPolynomial& pp) {
  const auto& a = pp.a;
  const cx lead = a[static_cast<std::size_t>(pp.n - 1)];  // a_{n-1}
  BlockColumn col;
  col.K.reserve(static_cast<std::size_t>(pp.m));
  col.K.push_back(Mat2{-a[0], lead * a[0], -a[1], lead * a[1] - a[0]});
  for (int j = 1; j < pp.m; ++j) {
    const cx a2j = a[static_cast<std::size_t>(2 * j)];
    const cx a2jp1 = a[static_cast<std::size_t>(2 * j + 1)];
    const cx a2jm1 = a[static_cast<std::size_t>(2 * j - 1)];
    col.K.push_back(Mat2{-a2j, lead * a2j - a2jm1, -a2jp1, lead * a2jp1 - a2j});
  }
  return col;
}

/// Everything the localization theorems consume: S triangularizes (or when
/// possible diagonalizes) K_{m-1} with eigenvalues |alpha| <= |beta|, the
/// transformed blocks T_j = S^-1 K_j S, and their interleaved columns v, w.
struct BlockTransform {
  Mat2 S = Mat2::identity();
  Mat2 S_inv = Mat2::identity();
  cx alpha{0.0}, beta{0.0}, gamma{0.0};
  std::vector<cx> v, w;    // length n - 2
  std::vector<Mat2> T;     // T_0 .. T_{m-2}
  bool diagonalized = true;

  Mat2 trailing_block() const { return Mat2{alpha, gamma, cx(0.0), beta}; }
};

inline BlockTransform block_transform(const PreparedPolynomial& pp) {
  const BlockColumn col = squared_companion_blocks(pp);
  const Mat2& Km1 = col.K.back();

  BlockTransform bt;
  if (Km1.max_abs() == 0.0) {
    // Zero block: any basis works, fix S = I for determinism.
  } else if (auto diag = diagonalize_2x2(Km1)) {
    bt.S = diag->S;
    bt.S_inv = diag->S.inverse();
    bt.alpha = diag->d.alpha;
    bt.beta = diag->d.beta;
  } else {
    const Schur2 sc = schur_2x2(Km1);
    bt.S = sc.U;
    bt.S_inv = sc.U.adjoint();
    bt.alpha = sc.T.a;
    bt.beta = sc.T.d;
    bt.gamma = sc.T.b;
    bt.diagonalized = false;
  }

  bt.T.reserve(static_cast<std::size_t>(pp.m - 1));
  bt.v.resize(static_cast<std::size_t>(pp.n - 2));
  bt.w.resize(static_cast<std::size_t>(pp.n - 2));
  for (int j = 0; j + 1 < pp.m; ++j) {
    const Mat2 Tj = bt.S_inv * col.K[static_cast<std::size_t>(j)] * bt.S;
    bt.T.push_back(Tj);
    bt.v[static_cast<std::size_t>(2 * j)] = Tj.a;
    bt.v[static_cast<std::size_t>(2 * j + 1)] = Tj.c;
    bt.w[static_cast<std::size_t>(2 * j)] = Tj.b;
    bt.w[static_cast<std::size_t>(2 * j + 1)] = Tj.d;
  }
  return bt;
}

namespace detail {

/// Similarity-transformed squared companion matrix C_S^2(p): the identity
/// blocks shift down by one block row and the last block column carries the
/// T_j with the triangularized K_{m-1} at the bottom.
inline DenseMatrix squared_companion_transformed(const PreparedPolynomial& pp, const BlockTransform& bt) {
  const int n = pp.n;
  DenseMatrix M(n);
  for (int i = 0; i + 2 < n; ++i) M.at(i + 2, i) = cx(1.0);
  for (int i = 0; i + 2 < n; ++i) {
    M.at(i, n - 2) = bt.v[static_cast<std::size_t>(i)];
    M.at(i, n - 1) = bt.w[static_cast<std::size_t>(i)];
  }
  M.at(n - 2, n - 2) = bt.alpha;
  M.at(n - 2, n - 1) = bt.gamma;
  M.at(n - 1, n - 1) = bt.beta;
  return M;
}

}  // namespace detail

/// Explicit D_x^-1 C_S^2(p) D_x with D_x = diag(x^n, ..., x). Test support
/// for the Gershgorin column-sum identities; O(n^2), never used for bounds.
inline DenseMatrix build_F_matrix(const PreparedPolynomial& pp, const BlockTransform& bt, double x) {
  if (!(x > 0.0)) fail(errc::invalid_scale, "scale parameter must be positive");
  DenseMatrix M = detail::squared_companion_transformed(pp, bt);
  for (int r = 0; r < pp.n; ++r)
    for (int c = 0; c < pp.n; ++c)
      if (M.at(r, c) != cx(0.0)) M.at(r, c) *= std::pow(x, static_cast<double>(r - c));
  return M;
}

/// Explicit Delta_x^-1 C_S^2(p) Delta_x with Delta_x = diag(x^m I, ..., x I).
inline DenseMatrix build_Phi_matrix(const PreparedPolynomial& pp, const BlockTransform& bt, double x) {
  if (!(x > 0.0)) fail(errc::invalid_scale, "scale parameter must be positive");
  DenseMatrix M = detail::squared_companion_transformed(pp, bt);
  for (int r = 0; r < pp.n; ++r)
    for (int c = 0; c < pp.n; ++c)
      if (M.at(r, c) != cx(0.0)) M.at(r, c) *= std::pow(x, static_cast<double>(r / 2 - c / 2));
  return M;
}

}  // namespace zeroloc
