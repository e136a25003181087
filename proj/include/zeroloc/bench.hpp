#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zeroloc/localize.hpp"
#include "zeroloc/oracle.hpp"
#include "zeroloc/rng.hpp"

namespace zeroloc {

/// Random polynomial family. fixed_leading holds the monic 1 plus any pinned
/// high-order coefficients; every remaining coefficient gets independent
/// uniform real and imaginary parts on [-range, range].
struct SetSpec {
  int set_id = 1;
  int degree = 20;
  double range = 2.0;
  std::vector<double> fixed_leading{1.0};
};

inline SetSpec make_set_spec(int id, int degree = 20) {
  switch (id) {
    case 1:
      return {1, degree, 2.0, {1.0}};
    case 2:
      return {2, degree, 4.0, {1.0}};
    case 3:
      return {3, degree, 4.0, {1.0, 2.0, 6.0, 2.0}};
    case 4:
      return {4, degree, 4.0, {1.0, 2.0, 8.0, 2.0}};
    default:
      fail(errc::invalid_index, "set id must be 1..4");
  }
}

/// Polynomial `index` of the run: drawn from a per-index substream, so the
/// result does not depend on evaluation order or parallel scheduling.
/// Coefficients are drawn leading-first, real part before imaginary part.
inline Polynomial generate_polynomial(const SetSpec& spec, std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g = SplitMix64::substream(seed ^ (0x5271u * static_cast<std::uint64_t>(spec.set_id)), index);
  std::vector<cx> coeffs(static_cast<std::size_t>(spec.degree) + 1);
  std::size_t pos = 0;
  for (double v : spec.fixed_leading) coeffs[pos++] = cx(v, 0.0);
  for (; pos < coeffs.size(); ++pos) {
    const double re = g.next_in(-spec.range, spec.range);
    const double im = g.next_in(-spec.range, spec.range);
    coeffs[pos] = cx(re, im);
  }
  return Polynomial{std::move(coeffs)};
}

inline std::vector<Polynomial> generate_set(const SetSpec& spec, std::uint64_t seed, int count) {
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(generate_polynomial(spec, seed, static_cast<std::uint64_t>(i)));
  return out;
}

/// Declared region counts and gaps of a report, replayed against an
/// independently computed root set. Throws on any mismatch: a benchmark that
/// tallies an unsound success must abort, not fudge. Radii are inflated by
/// one part in 1e12 before counting because the theorems place zeros "in or
/// on" their discs and boundary-tight configurations (z^n - c and friends)
/// would otherwise flip on representation error.
inline void verify_report(const IsolationReport& rep, const std::vector<cx>& roots, const std::string& where) {
  const auto complain = [&](const std::string& what) {
    std::ostringstream os;
    os << "soundness check failed (" << where << "): " << what;
    throw std::runtime_error(os.str());
  };
  if (static_cast<int>(roots.size()) != rep.total) complain("root count does not match report total");

  for (std::size_t gi = 0; gi < rep.groups.size(); ++gi) {
    const RegionGroup& g = rep.groups[gi];
    int cnt = 0;
    for (cx r : roots) {
      const cx z = rep.squared_plane ? r * r : r;
      for (const Disc& d : g.discs) {
        const double slack = 1e-12 * std::max({1.0, d.radius, std::abs(d.center)});
        if (std::abs(z - d.center) <= d.radius + slack) {
          ++cnt;
          break;
        }
      }
    }
    if (cnt != g.count) {
      std::ostringstream os;
      os << "group " << gi << " declares " << g.count << " zeros but contains " << cnt;
      complain(os.str());
    }
  }
  if (rep.gap) {
    int beyond = 0;
    for (cx r : roots) {
      const double m = std::abs(r);
      if (m > rep.gap->lo * (1.0 + 1e-9) && m < rep.gap->hi * (1.0 - 1e-9)) complain("zero modulus inside gap");
      if (m >= rep.gap->hi * (1.0 - 1e-9)) ++beyond;
    }
    if (rep.beyond_gap && beyond != *rep.beyond_gap) complain("count beyond gap does not match");
  }
}

namespace detail {

/// Root list of the polynomial a report describes: z*p gains a zero at the
/// origin when the even-degree preparation padded.
inline std::vector<cx> report_roots(const RootSet& oracle, const IsolationReport& rep) {
  std::vector<cx> roots = oracle.roots;
  if (rep.was_padded) roots.push_back(cx(0.0));
  return roots;
}

}  // namespace detail

/// Per-method average of bound / max-modulus plus the number of times each
/// method produced the best bound (ties credit every tied method). Method
/// order: cauchy, matrix cauchy, tgc (a), tgc (b).
struct Table1Stats {
  int count = 0;
  std::array<double, 4> avg_ratio{};
  std::array<int, 4> wins{};
};

inline Table1Stats run_table1(const SetSpec& spec, std::uint64_t seed, int count, double tol = 1e-13) {
  Table1Stats stats;
  stats.count = count;
  std::array<double, 4> sum{};
  for (int i = 0; i < count; ++i) {
    const Polynomial p = generate_polynomial(spec, seed, static_cast<std::uint64_t>(i));
    const RootSet oracle = all_roots(p);
    const double maxmod = oracle.max_modulus();
    const PreparedPolynomial pp = prepare_even(p);
    const std::array<double, 4> bounds{
        cauchy_bound(p, tol).bound,
        matrix_cauchy_bound(pp, tol).bound,
        tgc_bound_a(pp, tol).bound,
        tgc_bound_b(pp, tol).bound,
    };
    std::array<double, 4> ratio{};
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t m = 0; m < 4; ++m) {
      ratio[m] = bounds[m] / maxmod;
      if (ratio[m] < 1.0 - 1e-9) {
        std::ostringstream os;
        os << "soundness check failed: bound below max modulus (set " << spec.set_id << ", index " << i
           << ", method " << m << ", ratio " << ratio[m] << ")";
        throw std::runtime_error(os.str());
      }
      best = std::min(best, ratio[m]);
      sum[m] += ratio[m];
    }
    for (std::size_t m = 0; m < 4; ++m)
      if (ratio[m] <= best * (1.0 + 1e-12)) ++stats.wins[m];
  }
  for (std::size_t m = 0; m < 4; ++m) stats.avg_ratio[m] = sum[m] / count;
  return stats;
}

struct IsoTriple {
  int two_separate = 0;  // two zeros isolated from the rest and each other
  int two_joint = 0;     // two isolated from the rest but not each other
  int one = 0;           // a single zero isolated
};

/// Success tallies per method. Classical Pellet counts per-k successes
/// independently (k = 1 and k = 2); the matrix version is applied at
/// k = m - 1, where its Pellet polynomial coincides with the first
/// block-Gershgorin detachment polynomial.
struct Table2Stats {
  int count = 0;
  int pellet_one = 0;
  int pellet_two = 0;
  int matrix_pellet_successes = 0;
  IsoTriple tgp_a, tgp_b, tmgp_counts;
};

inline Table2Stats run_table2(const SetSpec& spec, std::uint64_t seed, int count, double tol = 1e-13) {
  Table2Stats stats;
  stats.count = count;
  for (int i = 0; i < count; ++i) {
    const Polynomial p = generate_polynomial(spec, seed, static_cast<std::uint64_t>(i));
    const RootSet oracle = all_roots(p);
    const PreparedPolynomial pp = prepare_even(p);
    const std::string tag = "set " + std::to_string(spec.set_id) + " index " + std::to_string(i);

    // "One/two zeros isolated" counts the zeros beyond the annulus, so the
    // classical test runs at the two indices next to the leading coefficient.
    for (int away : {1, 2}) {
      const int k = p.degree() - away;
      if (p.coeff(k) == cx(0.0)) continue;
      if (const auto rep = pellet_classic(p, k, tol)) {
        verify_report(*rep, oracle.roots, tag + " pellet k=" + std::to_string(k));
        (away == 1 ? stats.pellet_one : stats.pellet_two)++;
      }
    }

    try {
      if (const auto rep = matrix_pellet(pp, pp.m - 1, tol)) {
        verify_report(*rep, detail::report_roots(oracle, *rep), tag + " matrix pellet");
        ++stats.matrix_pellet_successes;
      }
    } catch (const Error& e) {
      if (e.code() != errc::coefficient_zero) throw;  // singular T_k: no success
    }

    const auto tally = [&](const IsolationReport& rep, IsoTriple& t, const std::string& name) {
      if (!rep.fired()) return;
      verify_report(rep, detail::report_roots(oracle, rep), tag + " " + name);
      if (rep.two_separated())
        ++t.two_separate;
      else if (rep.two_joint())
        ++t.two_joint;
      else if (rep.one_isolated())
        ++t.one;
    };
    tally(tgp(pp, TgpPath::a_only, tol), stats.tgp_a, "tgp(a)");
    tally(tgp(pp, TgpPath::b_only, tol), stats.tgp_b, "tgp(b)");
    try {
      tally(tmgp(pp, tol), stats.tmgp_counts, "tmgp");
    } catch (const Error& e) {
      if (e.code() != errc::not_diagonalizable) throw;
    }
  }
  return stats;
}

}  // namespace zeroloc
