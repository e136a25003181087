#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "zeroloc/companion.hpp"
#include "zeroloc/poly.hpp"
#include "zeroloc/rng.hpp"

namespace zltest {

using zeroloc::cx;
using zeroloc::DenseMatrix;
using zeroloc::Polynomial;
using zeroloc::SplitMix64;

inline bool approx_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool approx_rel(cx a, cx b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline cx random_cx(SplitMix64& g, double range) {
  return {g.next_in(-range, range), g.next_in(-range, range)};
}

/// Monic random polynomial with coefficients uniform on [-range, range]^2.
inline Polynomial random_polynomial(SplitMix64& g, int degree, double range) {
  std::vector<cx> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs[0] = cx(1.0);
  for (std::size_t i = 1; i < coeffs.size(); ++i) coeffs[i] = random_cx(g, range);
  return Polynomial{std::move(coeffs)};
}

/// Test-only convolution of coefficient lists (leading-first).
inline std::vector<cx> poly_mul(const std::vector<cx>& a, const std::vector<cx>& b) {
  std::vector<cx> out(a.size() + b.size() - 1, cx(0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline std::vector<cx> poly_sub(std::vector<cx> a, const std::vector<cx>& b) {
  // Align tails (leading-first storage).
  const std::size_t off = a.size() - b.size();
  for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= b[i];
  return a;
}

/// Deleted column sum: sum of |entries| of column c excluding the diagonal.
inline double deleted_column_sum(const DenseMatrix& M, int c) {
  double acc = 0.0;
  for (int r = 0; r < M.n; ++r)
    if (r != c) acc += std::abs(M.at(r, c));
  return acc;
}

/// Characteristic polynomial of a dense matrix by the Faddeev-LeVerrier
/// recurrence; adequate at the n <= 10 scale the structural tests use.
inline std::vector<cx> char_poly(const DenseMatrix& A) {
  const int n = A.n;
  std::vector<cx> coeffs(static_cast<std::size_t>(n) + 1, cx(0.0));
  coeffs[0] = cx(1.0);
  DenseMatrix M(n);
  for (int i = 0; i < n; ++i) M.at(i, i) = cx(1.0);
  for (int k = 1; k <= n; ++k) {
    const DenseMatrix AM = A * M;
    cx tr(0.0);
    for (int i = 0; i < n; ++i) tr += AM.at(i, i);
    const cx ck = -tr / static_cast<double>(k);
    coeffs[static_cast<std::size_t>(k)] = ck;
    M = AM;
    for (int i = 0; i < n; ++i) M.at(i, i) += ck;
  }
  return coeffs;
}

/// Greedy nearest-neighbour multiset match; returns the largest pairing
/// distance (infinite when sizes differ).
inline double multiset_distance(std::vector<cx> a, std::vector<cx> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  std::vector<bool> used(b.size(), false);
  for (cx x : a) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    used[best_j] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace zltest
