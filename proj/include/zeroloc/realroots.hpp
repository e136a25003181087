#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "zeroloc/error.hpp"

namespace zeroloc {

/// Real polynomial, coefficients leading-first with leading coefficient 1.
struct RealPoly {
  std::vector<double> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }

  double eval(double x) const {
    double acc = c.front();
    for (std::size_t i = 1; i < c.size(); ++i) acc = acc * x + c[i];
    return acc;
  }

  /// Value and derivative in one Horner pass.
  std::pair<double, double> eval_d(double x) const {
    double acc = c.front(), dacc = 0.0;
    for (std::size_t i = 1; i < c.size(); ++i) {
      dacc = dacc * x + acc;
      acc = acc * x + c[i];
    }
    return {acc, dacc};
  }
};

/// Two distinct positive roots x1 < x2 bracketing a negative region of a
/// Pellet-type polynomial.
struct RootPair {
  double x1 = 0.0;
  double x2 = 0.0;
};

namespace detail {

inline int sign_changes(const std::vector<double>& c) {
  int changes = 0, prev = 0;
  for (double v : c) {
    const int s = (v > 0.0) - (v < 0.0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

inline double max_abs_coeff(const std::vector<double>& c) {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

/// Drop trailing zero coefficients (factors of x); positive roots unchanged.
inline RealPoly strip_zero_roots(RealPoly f) {
  while (f.c.size() > 1 && f.c.back() == 0.0) f.c.pop_back();
  return f;
}

/// Root of f inside a sign-change bracket: Newton guarded by the bracket,
/// falling back to plain bisection if the iteration budget runs out.
inline double bracketed_root(const RealPoly& f, double lo, double hi, double tol) {
  const bool rising = f.eval(hi) > 0.0;  // f(lo) and f(hi) have opposite signs
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const auto [fx, dfx] = f.eval_d(x);
    if (fx == 0.0) return x;
    if ((fx < 0.0) == rising)
      lo = x;
    else
      hi = x;
    double xn = x - fx / dfx;
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (std::abs(xn - x) <= tol * std::max(1.0, std::abs(xn))) return xn;
    x = xn;
  }
  for (int it = 0; it < 200 && (hi - lo) > tol * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((f.eval(mid) < 0.0) == rising)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

/// Unique positive root of a polynomial with exactly one coefficient sign
/// change and negative constant term (after stripping zero roots).
inline double solve_single_crossing(const RealPoly& f, double tol) {
  double hi = 1.0 + max_abs_coeff(f.c);
  for (int guard = 0; guard < 200 && f.eval(hi) <= 0.0; ++guard) hi *= 2.0;
  return bracketed_root(f, 0.0, hi, tol);
}

/// Sign region {x > 0 : f(x) < 0} for a polynomial whose coefficients show at
/// most two sign changes with a single negative coefficient. Returns the
/// closed interval [lo, hi] of its boundary roots; lo == 0 marks the
/// degenerate form where the negative region reaches down to the origin.
/// Empty when f has no negative values on (0, inf) or the two boundary roots
/// coincide within the separation tolerance.
inline std::optional<std::pair<double, double>> negative_region(const RealPoly& f, double tol) {
  int neg_power = -1;
  const int deg = f.degree();
  for (int i = 0; i <= deg; ++i) {
    if (f.c[static_cast<std::size_t>(i)] < 0.0) {
      neg_power = deg - i;
      break;
    }
  }
  if (neg_power < 0) return std::nullopt;

  const RealPoly g = strip_zero_roots(f);
  if (g.c.back() < 0.0) {
    // Negative block reaches the constant term: f < 0 on (0, r].
    return std::make_pair(0.0, solve_single_crossing(g, tol));
  }

  // Proper Pellet shape. g(x)/x^k with k the negative coefficient's power is
  // a sum of convex terms minus a constant, hence convex on (0, inf): its
  // sign decides everything and golden-section cannot be fooled.
  const int gdeg = g.degree();
  const int k = neg_power - (deg - gdeg);
  const auto h = [&](double x) {
    double acc = 0.0;
    for (int i = 0; i <= gdeg; ++i)
      acc += g.c[static_cast<std::size_t>(i)] * std::pow(x, static_cast<double>(gdeg - i - k));
    return acc;
  };

  const double hi0 = 1.0 + max_abs_coeff(g.c);
  // Walk down geometrically until h turns upward again; convexity makes the
  // first increase a valid bracket.
  double b = hi0, mid = 0.5 * hi0;
  double hmid = h(mid);
  double lo = 0.0;
  for (int it = 0; it < 2400; ++it) {
    const double next = 0.5 * mid;
    const double hnext = h(next);
    if (hnext > hmid || next < 1e-290) {
      lo = next;
      break;
    }
    b = mid;
    mid = next;
    hmid = hnext;
  }

  const double invphi = 0.6180339887498949;
  double x1 = b - invphi * (b - lo), x2 = lo + invphi * (b - lo);
  double h1 = h(x1), h2 = h(x2);
  for (int it = 0; it < 240 && (b - lo) > 1e-15 * std::max(1.0, b); ++it) {
    if (h1 < h2) {
      b = x2;
      x2 = x1;
      h2 = h1;
      x1 = b - invphi * (b - lo);
      h1 = h(x1);
    } else {
      lo = x1;
      x1 = x2;
      h1 = h2;
      x2 = lo + invphi * (b - lo);
      h2 = h(x2);
    }
  }
  const double xmin = 0.5 * (lo + b);
  if (!(h(xmin) < 0.0)) return std::nullopt;

  double left = xmin;
  for (int guard = 0; guard < 2400 && g.eval(left) < 0.0; ++guard) left *= 0.5;
  double right = hi0;
  for (int guard = 0; guard < 200 && g.eval(right) <= 0.0; ++guard) right *= 2.0;
  const double r1 = bracketed_root(g, left, xmin, tol);
  const double r2 = bracketed_root(g, xmin, right, tol);
  if (r2 - r1 <= 1e-9 * std::max(1.0, r2)) return std::nullopt;  // tangency: not distinct
  return std::make_pair(r1, r2);
}

}  // namespace detail

/// Unique positive root of a Cauchy-type polynomial: leading coefficient
/// positive, every other coefficient <= 0, at least one < 0.
inline double unique_positive_root(const RealPoly& f, double tol = 1e-13) {
  if (f.c.empty() || f.c.front() <= 0.0) fail(errc::not_cauchy_type, "leading coefficient must be positive");
  bool any_negative = false;
  for (std::size_t i = 1; i < f.c.size(); ++i) {
    if (f.c[i] > 0.0) fail(errc::not_cauchy_type, "trailing coefficients must be <= 0");
    if (f.c[i] < 0.0) any_negative = true;
  }
  if (!any_negative) fail(errc::not_cauchy_type, "all trailing coefficients are zero");
  return detail::solve_single_crossing(detail::strip_zero_roots(f), tol);
}

/// The two distinct positive roots of a Pellet-type polynomial (exactly two
/// coefficient sign changes), or empty when its minimum on (0, inf) is
/// nonnegative or the roots coincide (tangency).
inline std::optional<RootPair> positive_root_pair(const RealPoly& f, double tol = 1e-13) {
  if (f.c.empty() || f.c.front() <= 0.0) fail(errc::not_pellet_type, "leading coefficient must be positive");
  if (detail::sign_changes(f.c) != 2) fail(errc::not_pellet_type, "coefficients must show exactly two sign changes");
  const auto region = detail::negative_region(f, tol);
  if (!region || region->first == 0.0) return std::nullopt;
  return RootPair{region->first, region->second};
}

}  // namespace zeroloc
