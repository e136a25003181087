#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "zeroloc/error.hpp"

namespace zeroloc {

using cx = std::complex<double>;

/// Monic complex polynomial. Coefficients are stored leading-first, so
/// coeffs[0] == 1 and coeffs.back() is the constant term.
struct Polynomial {
  std::vector<cx> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  /// Coefficient of z^power (power = degree() returns the leading 1).
  cx coeff(int power) const { return coeffs[coeffs.size() - 1 - static_cast<std::size_t>(power)]; }
};

/// Divides through by the leading coefficient. The zeros are unchanged, and
/// every localization result below assumes this monic form.
inline Polynomial normalize_monic(std::vector<cx> coeffs) {
  if (coeffs.size() < 2) fail(errc::degree_too_small, "polynomial needs degree >= 1");
  const cx lead = coeffs.front();
  if (lead == cx(0.0)) fail(errc::invalid_polynomial, "zero leading coefficient");
  if (lead != cx(1.0)) {
    for (cx& c : coeffs) c /= lead;
    coeffs.front() = cx(1.0);
  }
  return Polynomial{std::move(coeffs)};
}

inline Polynomial normalize_monic(std::initializer_list<cx> coeffs) {
  return normalize_monic(std::vector<cx>(coeffs));
}

/// Horner evaluation of p at z.
inline cx evaluate(const Polynomial& p, cx z) {
  cx acc = p.coeffs.front();
  for (std::size_t i = 1; i < p.coeffs.size(); ++i) acc = acc * z + p.coeffs[i];
  return acc;
}

/// Reverse polynomial z^n p(1/z) / a_0, monic; its zeros are the reciprocals
/// of the zeros of p.
inline Polynomial reverse(const Polynomial& p) {
  if (p.coeffs.back() == cx(0.0)) fail(errc::zero_constant_term, "reverse needs a nonzero constant term");
  std::vector<cx> rev(p.coeffs.rbegin(), p.coeffs.rend());
  return normalize_monic(std::move(rev));
}

/// Even-degree working form. a[j] is the z^j coefficient of p itself when
/// deg(p) is even, and of z*p(z) when deg(p) is odd (a[0] = 0 in that case).
struct PreparedPolynomial {
  std::vector<cx> a;  // subscript-indexed: a[0] .. a[n-1]
  int n = 0;          // even working degree, n = 2m
  int m = 0;
  bool was_padded = false;
};

inline PreparedPolynomial prepare_even(const Polynomial& p) {
  const int ell = p.degree();
  if (ell < 3) fail(errc::degree_too_small, "localization requires degree >= 3");
  PreparedPolynomial pp;
  pp.was_padded = (ell % 2 != 0);
  pp.n = pp.was_padded ? ell + 1 : ell;
  pp.m = pp.n / 2;
  pp.a.assign(static_cast<std::size_t>(pp.n), cx(0.0));
  // b_j below the leading 1, shifted up by one slot when padding with z*p.
  const int shift = pp.was_padded ? 1 : 0;
  for (int j = 0; j < ell; ++j) pp.a[static_cast<std::size_t>(j + shift)] = p.coeff(j);
  return pp;
}

/// Undo prepare_even; mostly useful for round-trip checks.
inline Polynomial unprepare(const PreparedPolynomial& pp) {
  std::vector<cx> coeffs;
  coeffs.reserve(static_cast<std::size_t>(pp.n) + 1);
  coeffs.push_back(cx(1.0));
  const int lo = pp.was_padded ? 1 : 0;
  for (int j = pp.n - 1; j >= lo; --j) coeffs.push_back(pp.a[static_cast<std::size_t>(j)]);
  return Polynomial{std::move(coeffs)};
}

}  // namespace zeroloc
