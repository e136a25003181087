#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "zeroloc/poly.hpp"
#include "zeroloc/realroots.hpp"
#include "zeroloc/regions.hpp"

namespace zeroloc {

/// Independent ground truth for tests and benchmarks: all zeros with
/// multiplicity plus per-root residuals |p(r)| that expose quality.
struct RootSet {
  std::vector<cx> roots;
  std::vector<double> residuals;

  double max_modulus() const {
    double m = 0.0;
    for (cx r : roots) m = std::max(m, std::abs(r));
    return m;
  }
  double min_modulus() const {
    double m = std::numeric_limits<double>::infinity();
    for (cx r : roots) m = std::min(m, std::abs(r));
    return roots.empty() ? 0.0 : m;
  }
};

namespace detail {

inline std::pair<cx, cx> horner_d(const std::vector<cx>& coeffs, cx z) {
  cx acc = coeffs.front(), dacc(0.0);
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    dacc = dacc * z + acc;
    acc = acc * z + coeffs[i];
  }
  return {acc, dacc};
}

/// Aberth-Ehrlich simultaneous iteration on a monic polynomial with nonzero
/// constant term. Initial guesses sit on a circle of radius 0.9 * (Cauchy
/// bound) at golden-angle spacing, which breaks the symmetries that trap
/// simultaneous iterations.
inline std::vector<cx> aberth(const std::vector<cx>& coeffs, double tol, int max_sweeps) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  RealPoly cauchy{std::vector<double>(coeffs.size(), 0.0)};
  cauchy.c[0] = 1.0;
  for (std::size_t i = 1; i < coeffs.size(); ++i) cauchy.c[i] = -std::abs(coeffs[i]);
  const double radius = 0.9 * unique_positive_root(cauchy);

  constexpr double golden_angle = 2.39996322972865332;  // 2*pi*(1 - 1/phi)
  std::vector<cx> z(static_cast<std::size_t>(deg));
  for (int i = 0; i < deg; ++i)
    z[static_cast<std::size_t>(i)] = std::polar(radius, golden_angle * (i + 0.25));

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double worst = 0.0;
    for (int i = 0; i < deg; ++i) {
      cx& zi = z[static_cast<std::size_t>(i)];
      const auto [p, dp] = horner_d(coeffs, zi);
      if (p == cx(0.0)) continue;
      cx newton = (dp == cx(0.0)) ? cx(0.0) : p / dp;
      if (newton == cx(0.0)) {
        // Stuck on a critical point: nudge off and retry next sweep.
        zi += std::polar(1e-6 * (1.0 + std::abs(zi)), golden_angle * i);
        worst = std::numeric_limits<double>::infinity();
        continue;
      }
      cx repulsion(0.0);
      for (int j = 0; j < deg; ++j) {
        if (j == i) continue;
        cx diff = zi - z[static_cast<std::size_t>(j)];
        if (diff == cx(0.0)) diff = cx(1e-14 * (1.0 + std::abs(zi)), 0.0);
        repulsion += cx(1.0) / diff;
      }
      const cx denom = cx(1.0) - newton * repulsion;
      const cx step = (denom == cx(0.0)) ? newton : newton / denom;
      zi -= step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(zi)));
    }
    if (worst < tol) break;
  }
  return z;
}

}  // namespace detail

/// All deg(p) roots with multiplicity. Degrees 1 and 2 use closed forms;
/// zero roots are deflated exactly before the Aberth-Ehrlich iteration.
inline RootSet all_roots(const Polynomial& p, double tol = 1e-13, int max_sweeps = 500) {
  std::vector<cx> coeffs = p.coeffs;
  RootSet out;
  while (coeffs.size() > 1 && coeffs.back() == cx(0.0)) {
    coeffs.pop_back();
    out.roots.push_back(cx(0.0));
  }

  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg == 1) {
    out.roots.push_back(-coeffs[1]);
  } else if (deg == 2) {
    const cx h = -0.5 * coeffs[1];
    cx s = std::sqrt(h * h - coeffs[2]);
    if ((std::conj(h) * s).real() < 0.0) s = -s;
    const cx big = h + s;
    out.roots.push_back(big);
    out.roots.push_back(big == cx(0.0) ? cx(0.0) : coeffs[2] / big);
  } else if (deg >= 3) {
    for (cx r : detail::aberth(coeffs, tol, max_sweeps)) out.roots.push_back(r);
  }

  out.residuals.reserve(out.roots.size());
  for (cx r : out.roots) out.residuals.push_back(std::abs(evaluate(p, r)));
  return out;
}

/// Roots collapsed into (representative, multiplicity) clusters at 1e-7
/// relative distance. A multiple root computed as a tight cloud then counts
/// as one location with its full multiplicity instead of straddling region
/// boundaries point by point.
inline std::vector<std::pair<cx, int>> clustered_roots(const RootSet& rs) {
  std::vector<std::pair<cx, int>> clusters;
  for (cx r : rs.roots) {
    bool merged = false;
    for (auto& [rep, mult] : clusters) {
      if (std::abs(r - rep) <= 1e-7 * (1.0 + std::abs(rep))) {
        rep = (rep * static_cast<double>(mult) + r) / static_cast<double>(mult + 1);
        ++mult;
        merged = true;
        break;
      }
    }
    if (!merged) clusters.emplace_back(r, 1);
  }
  return clusters;
}

/// Number of roots (with multiplicity) inside a region. Squared-plane regions
/// test the squares of the roots.
template <class Region>
int count_in_region(const RootSet& rs, const Region& region, bool squared_plane = false) {
  int count = 0;
  for (const auto& [rep, mult] : clustered_roots(rs))
    if (contains(region, squared_plane ? rep * rep : rep)) count += mult;
  return count;
}

}  // namespace zeroloc
