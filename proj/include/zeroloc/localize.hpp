#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "zeroloc/companion.hpp"
#include "zeroloc/realroots.hpp"
#include "zeroloc/regions.hpp"

namespace zeroloc {

enum class BoundMethod { cauchy, matrix_cauchy, tgc_a, tgc_b };

/// Upper bound on the moduli of all zeros, with the positive roots that
/// produced it (r1 alone when the early exit skipped the second equation).
struct BoundResult {
  double bound = 0.0;
  BoundMethod method = BoundMethod::cauchy;
  std::vector<double> roots;
};

enum class IsoMethod { pellet, matrix_pellet, tgp, tmgp };
enum class IsoCase { none, a1, a2_first, a2_second, b1, b2_first, b2_second, tmgp_a, tmgp_b };

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Open annulus of z-plane moduli guaranteed to contain no zeros.
struct ModulusGap {
  double lo = 0.0;
  double hi = 0.0;
};

/// Discs sharing one joint zero count; a singleton group pins the count to
/// that disc alone.
struct RegionGroup {
  std::vector<Disc> discs;
  int count = 0;
};

struct IntervalData {
  std::optional<Interval> I1, I2, J1, J2, K1, K2;
  std::optional<double> mu1, mu2;
  std::vector<IsoCase> fired;  // every case whose hypotheses held
};

/// Outcome of one isolation theorem. Discs live in the squared plane except
/// for the classical Pellet method; counts always sum to `total`, the number
/// of zeros of the polynomial the report describes (z*p when padding was
/// applied). `beyond_gap` counts zeros at or beyond the outer gap modulus for
/// the Pellet-style annulus methods.
struct IsolationReport {
  IsoMethod method = IsoMethod::tgp;
  IsoCase kase = IsoCase::none;
  bool squared_plane = true;
  bool was_padded = false;
  int total = 0;
  std::vector<RegionGroup> groups;
  std::optional<ModulusGap> gap;
  std::optional<int> beyond_gap;
  IntervalData intervals;
  bool enhanced = false;
  std::optional<double> u_star;

  bool fired() const { return kase != IsoCase::none; }
  /// Two zeros isolated from the rest and from each other (outer discs carry
  /// their own counts).
  bool two_separated() const {
    return (kase == IsoCase::a1 || kase == IsoCase::b1 || kase == IsoCase::tmgp_a) && groups.size() == 3;
  }
  bool two_joint() const {
    return (kase == IsoCase::a1 || kase == IsoCase::b1 || kase == IsoCase::tmgp_a) && groups.size() == 2;
  }
  bool one_isolated() const {
    return kase == IsoCase::a2_first || kase == IsoCase::a2_second || kase == IsoCase::b2_first ||
           kase == IsoCase::b2_second || kase == IsoCase::tmgp_b;
  }
};

namespace detail {

struct TheoremContext {
  int n = 0, m = 0;
  bool was_padded = false;
  BlockTransform bt;
  std::vector<double> av, aw;  // |v_j|, |w_j|
  std::vector<double> tn;      // ||T_j||, j = 0..m-2
  double aa = 0.0, ab = 0.0, ag = 0.0;

  double rho1(double x) const {
    double acc = 0.0;
    for (int j = n - 3; j >= 0; --j) acc += av[static_cast<std::size_t>(j)] * std::pow(x, static_cast<double>(j - (n - 2)));
    return acc;
  }
  double rho2(double x) const {
    double acc = ag / x;
    for (int j = n - 3; j >= 0; --j) acc += aw[static_cast<std::size_t>(j)] * std::pow(x, static_cast<double>(j - (n - 1)));
    return acc;
  }
  double sigma1(double x) const {
    double acc = 0.0;
    for (int j = m - 2; j >= 0; --j)
      acc += (av[static_cast<std::size_t>(2 * j)] + av[static_cast<std::size_t>(2 * j + 1)]) *
             std::pow(x, static_cast<double>(j - (m - 1)));
    return acc;
  }
  double sigma2(double x) const {
    double acc = ag;
    for (int j = m - 2; j >= 0; --j)
      acc += (aw[static_cast<std::size_t>(2 * j)] + aw[static_cast<std::size_t>(2 * j + 1)]) *
             std::pow(x, static_cast<double>(j - (m - 1)));
    return acc;
  }
  double tau(double x) const {
    double acc = 0.0;
    for (int j = m - 2; j >= 0; --j) acc += tn[static_cast<std::size_t>(j)] * std::pow(x, static_cast<double>(j - (m - 1)));
    return acc;
  }
};

inline TheoremContext make_context(const PreparedPolynomial& pp) {
  TheoremContext ctx;
  ctx.n = pp.n;
  ctx.m = pp.m;
  ctx.was_padded = pp.was_padded;
  ctx.bt = block_transform(pp);
  ctx.av.reserve(ctx.bt.v.size());
  ctx.aw.reserve(ctx.bt.w.size());
  for (cx z : ctx.bt.v) ctx.av.push_back(std::abs(z));
  for (cx z : ctx.bt.w) ctx.aw.push_back(std::abs(z));
  for (const Mat2& T : ctx.bt.T) ctx.tn.push_back(spectral_norm_2x2(T));
  ctx.aa = std::abs(ctx.bt.alpha);
  ctx.ab = std::abs(ctx.bt.beta);
  ctx.ag = std::abs(ctx.bt.gamma);
  return ctx;
}

inline bool all_zero(const std::vector<double>& tail) {
  for (double t : tail)
    if (t != 0.0) return false;
  return true;
}

// Tangency equations of the F_x similarity: x^2 = |alpha| + rho1(x) and
// x^2 = |beta| + rho2(x), cleared of denominators.
inline RealPoly psi1(const TheoremContext& c) {
  RealPoly f{std::vector<double>(static_cast<std::size_t>(c.n) + 1, 0.0)};
  f.c[0] = 1.0;
  f.c[2] = -c.aa;
  for (int j = 0; j <= c.n - 3; ++j) f.c[static_cast<std::size_t>(c.n - j)] = -c.av[static_cast<std::size_t>(j)];
  return f;
}
inline RealPoly psi2(const TheoremContext& c) {
  RealPoly f{std::vector<double>(static_cast<std::size_t>(c.n) + 2, 0.0)};
  f.c[0] = 1.0;
  f.c[2] = -c.ab;
  f.c[3] = -c.ag;
  for (int j = 0; j <= c.n - 3; ++j) f.c[static_cast<std::size_t>(c.n + 1 - j)] = -c.aw[static_cast<std::size_t>(j)];
  return f;
}

// Same for the block-diagonal Phi_x similarity, with paired column entries.
inline RealPoly phi1(const TheoremContext& c) {
  RealPoly f{std::vector<double>(static_cast<std::size_t>(c.m) + 1, 0.0)};
  f.c[0] = 1.0;
  f.c[1] = -c.aa;
  for (int j = 0; j <= c.m - 2; ++j)
    f.c[static_cast<std::size_t>(c.m - j)] =
        -(c.av[static_cast<std::size_t>(2 * j)] + c.av[static_cast<std::size_t>(2 * j + 1)]);
  return f;
}
inline RealPoly phi2(const TheoremContext& c) {
  RealPoly f{std::vector<double>(static_cast<std::size_t>(c.m) + 1, 0.0)};
  f.c[0] = 1.0;
  f.c[1] = -(c.ab + c.ag);
  for (int j = 0; j <= c.m - 2; ++j)
    f.c[static_cast<std::size_t>(c.m - j)] =
        -(c.aw[static_cast<std::size_t>(2 * j)] + c.aw[static_cast<std::size_t>(2 * j + 1)]);
  return f;
}

// Detachment polynomials: negative values mark the x range where the origin
// disc is disjoint from the alpha (resp. beta) disc.
inline RealPoly chi1(const TheoremContext& c) {
  RealPoly f = psi1(c);
  for (std::size_t i = 3; i < f.c.size(); ++i) f.c[i] = -f.c[i];
  return f;
}
inline RealPoly chi2(const TheoremContext& c) {
  RealPoly f = psi2(c);
  for (std::size_t i = 3; i < f.c.size(); ++i) f.c[i] = -f.c[i];
  return f;
}
inline RealPoly omega1(const TheoremContext& c) {
  RealPoly f = phi1(c);
  for (std::size_t i = 2; i < f.c.size(); ++i) f.c[i] = -f.c[i];
  return f;
}
inline RealPoly omega2(const TheoremContext& c) {
  RealPoly f = phi2(c);
  f.c[1] = -(c.ab - c.ag);
  for (std::size_t i = 2; i < f.c.size(); ++i) f.c[i] = -f.c[i];
  return f;
}
inline RealPoly big_omega(const TheoremContext& c, double center) {
  RealPoly f{std::vector<double>(static_cast<std::size_t>(c.m) + 1, 0.0)};
  f.c[0] = 1.0;
  f.c[1] = -center;
  for (int j = 0; j <= c.m - 2; ++j) f.c[static_cast<std::size_t>(c.m - j)] = c.tn[static_cast<std::size_t>(j)];
  return f;
}

inline std::optional<Interval> neg_interval(const RealPoly& f, double tol) {
  const auto r = negative_region(f, tol);
  if (!r) return std::nullopt;
  return Interval{r->first, r->second};
}

}  // namespace detail

/// Classical Cauchy bound: unique positive root of
/// x^n - |a_{n-1}| x^{n-1} - ... - |a_0|. Zero when p = z^n.
inline BoundResult cauchy_bound(const Polynomial& p, double tol = 1e-13) {
  const int n = p.degree();
  if (n < 2) fail(errc::degree_too_small, "cauchy bound needs degree >= 2");
  RealPoly f{std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0)};
  f.c[0] = 1.0;
  bool any = false;
  for (int j = 0; j < n; ++j) {
    const double m = std::abs(p.coeff(j));
    f.c[static_cast<std::size_t>(n - j)] = -m;
    any = any || m != 0.0;
  }
  if (!any) return {0.0, BoundMethod::cauchy, {0.0}};
  const double r = unique_positive_root(f, tol);
  return {r, BoundMethod::cauchy, {r}};
}

/// Lower bound on every zero modulus via the reverse polynomial.
inline double cauchy_lower_bound(const Polynomial& p, double tol = 1e-13) {
  return 1.0 / cauchy_bound(reverse(p), tol).bound;
}

/// Matrix-version Cauchy bound applied to the 2x2 matrix polynomial carried
/// by the squared companion matrix; the root bounds squares, so the bound on
/// the zeros themselves is its square root.
inline BoundResult matrix_cauchy_bound(const PreparedPolynomial& pp, double tol = 1e-13) {
  const detail::TheoremContext ctx = detail::make_context(pp);
  RealPoly f{std::vector<double>(static_cast<std::size_t>(ctx.m) + 1, 0.0)};
  f.c[0] = 1.0;
  f.c[1] = -spectral_norm_2x2(ctx.bt.trailing_block());
  for (int j = 0; j <= ctx.m - 2; ++j) f.c[static_cast<std::size_t>(ctx.m - j)] = -ctx.tn[static_cast<std::size_t>(j)];
  if (detail::all_zero({f.c.begin() + 1, f.c.end()})) return {0.0, BoundMethod::matrix_cauchy, {0.0}};
  const double s = unique_positive_root(f, tol);
  return {std::sqrt(s), BoundMethod::matrix_cauchy, {s}};
}

namespace detail {

inline double solve_or_zero(const RealPoly& f, double tol) {
  return all_zero({f.c.begin() + 1, f.c.end()}) ? 0.0 : unique_positive_root(f, tol);
}

inline BoundResult tangency_bound(const RealPoly& f1, const RealPoly& f2, BoundMethod method, bool sqrt_result,
                                  double tol) {
  BoundResult out;
  out.method = method;
  const double r1 = solve_or_zero(f1, tol);
  out.roots.push_back(r1);
  double r = r1;
  // Once r1 is known the sign of f2 there settles which root is larger; only
  // solve the second equation when it wins.
  const bool f2_trivial = all_zero({f2.c.begin() + 1, f2.c.end()});
  if (!f2_trivial && (r1 == 0.0 || f2.eval(r1) < 0.0)) {
    const double r2 = unique_positive_root(f2, tol);
    out.roots.push_back(r2);
    r = std::max(r1, r2);
  }
  out.bound = sqrt_result ? std::sqrt(r) : r;
  return out;
}

}  // namespace detail

/// Gershgorin tangency bound on the scalar-scaled similarity: the origin disc
/// radius x^2 at which it swallows both off-origin discs. Bounds the zeros
/// directly in the z-plane.
inline BoundResult tgc_bound_a(const PreparedPolynomial& pp, double tol = 1e-13) {
  const detail::TheoremContext ctx = detail::make_context(pp);
  return detail::tangency_bound(detail::psi1(ctx), detail::psi2(ctx), BoundMethod::tgc_a, false, tol);
}

/// Same tangency construction on the block-scaled similarity; its origin disc
/// has radius x, so the root bounds squares of zeros.
inline BoundResult tgc_bound_b(const PreparedPolynomial& pp, double tol = 1e-13) {
  const detail::TheoremContext ctx = detail::make_context(pp);
  return detail::tangency_bound(detail::phi1(ctx), detail::phi2(ctx), BoundMethod::tgc_b, true, tol);
}

/// Classical Pellet test at index k: when the sign-modified modulus
/// polynomial has two distinct positive roots x1 < x2, exactly k zeros lie in
/// |z| <= x1 and none in the open annulus (x1, x2).
inline std::optional<IsolationReport> pellet_classic(const Polynomial& p, int k, double tol = 1e-13) {
  const int n = p.degree();
  if (k < 1 || k > n - 1) fail(errc::invalid_index, "pellet index must satisfy 1 <= k <= n-1");
  if (p.coeff(k) == cx(0.0)) fail(errc::coefficient_zero, "pellet needs a nonzero coefficient at index k");
  RealPoly f{std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0)};
  f.c[0] = 1.0;
  for (int j = 0; j < n; ++j) {
    const double m = std::abs(p.coeff(j));
    f.c[static_cast<std::size_t>(n - j)] = (j == k) ? -m : m;
  }
  if (detail::sign_changes(f.c) != 2) return std::nullopt;
  const auto pair = positive_root_pair(f, tol);
  if (!pair) return std::nullopt;

  IsolationReport rep;
  rep.method = IsoMethod::pellet;
  rep.kase = IsoCase::none;
  rep.squared_plane = false;
  rep.total = n;
  rep.groups.push_back({{Disc{cx(0.0), pair->x1}}, k});
  rep.gap = ModulusGap{pair->x1, pair->x2};
  rep.beyond_gap = n - k;
  return rep;
}

/// Matrix-version Pellet applied to the transformed block column: a success
/// pins 2k squares of zeros inside |z| <= x1 of the squared plane and opens
/// the modulus gap (sqrt(x1), sqrt(x2)) in the z-plane.
inline std::optional<IsolationReport> matrix_pellet(const PreparedPolynomial& pp, int k, double tol = 1e-13) {
  const detail::TheoremContext ctx = detail::make_context(pp);
  if (k < 1 || k > ctx.m - 1) fail(errc::invalid_index, "matrix pellet index must satisfy 1 <= k <= m-1");
  const Mat2 Tk = (k == ctx.m - 1) ? ctx.bt.trailing_block() : ctx.bt.T[static_cast<std::size_t>(k)];
  const double smin = smallest_singular_value_2x2(Tk);
  if (smin == 0.0) fail(errc::coefficient_zero, "matrix pellet needs an invertible T_k");

  RealPoly f{std::vector<double>(static_cast<std::size_t>(ctx.m) + 1, 0.0)};
  f.c[0] = 1.0;
  f.c[1] = (k == ctx.m - 1) ? -smin : spectral_norm_2x2(ctx.bt.trailing_block());
  for (int j = 0; j <= ctx.m - 2; ++j)
    f.c[static_cast<std::size_t>(ctx.m - j)] = (j == k) ? -smin : ctx.tn[static_cast<std::size_t>(j)];
  if (detail::sign_changes(f.c) != 2) return std::nullopt;
  const auto pair = positive_root_pair(f, tol);
  if (!pair) return std::nullopt;

  IsolationReport rep;
  rep.method = IsoMethod::matrix_pellet;
  rep.kase = IsoCase::none;
  rep.was_padded = ctx.was_padded;
  rep.total = ctx.n;
  rep.groups.push_back({{Disc{cx(0.0), pair->x1}}, 2 * k});
  rep.gap = ModulusGap{std::sqrt(pair->x1), std::sqrt(pair->x2)};
  rep.beyond_gap = ctx.n - 2 * k;
  return rep;
}

/// Which of the two interval families Theorem-style isolation may use.
enum class TgpPath { a_only, b_only, combined };

namespace detail {

inline void push_outer_pair(IsolationReport& rep, const TheoremContext& c, double ra, double rb, bool split) {
  if (split) {
    rep.groups.push_back({{Disc{c.bt.alpha, ra}}, 1});
    rep.groups.push_back({{Disc{c.bt.beta, rb}}, 1});
  } else {
    rep.groups.push_back({{Disc{c.bt.alpha, ra}, Disc{c.bt.beta, rb}}, 2});
  }
}

inline IsolationReport tgp_impl(const PreparedPolynomial& pp, TgpPath path, double tol) {
  const TheoremContext ctx = make_context(pp);
  const bool use_a = path != TgpPath::b_only;
  const bool use_b = path != TgpPath::a_only;

  IsolationReport rep;
  rep.method = IsoMethod::tgp;
  rep.was_padded = ctx.was_padded;
  rep.total = ctx.n;
  auto& iv = rep.intervals;

  if (use_a) {
    iv.I1 = neg_interval(chi1(ctx), tol);
    iv.I2 = neg_interval(chi2(ctx), tol);
  }
  if (use_b) {
    iv.J1 = neg_interval(omega1(ctx), tol);
    // |beta| > |gamma| is necessary for the second equation to have positive
    // solutions at all; skip building it otherwise.
    if (ctx.ab > ctx.ag) iv.J2 = neg_interval(omega2(ctx), tol);
  }

  const bool a_overlap = iv.I1 && iv.I2 && std::max(iv.I1->lo, iv.I2->lo) < std::min(iv.I1->hi, iv.I2->hi);
  const bool b_overlap = iv.J1 && iv.J2 && std::max(iv.J1->lo, iv.J2->lo) < std::min(iv.J1->hi, iv.J2->hi);
  const auto split_a = [&](double x) { return std::abs(ctx.bt.alpha - ctx.bt.beta) > ctx.rho1(x) + ctx.rho2(x); };
  const auto split_b = [&](double x) { return std::abs(ctx.bt.alpha - ctx.bt.beta) > ctx.sigma1(x) + ctx.sigma2(x); };

  if (a_overlap) iv.fired.push_back(IsoCase::a1);
  if (b_overlap) iv.fired.push_back(IsoCase::b1);
  if (use_a && !a_overlap && iv.I1 && split_a(iv.I1->hi)) iv.fired.push_back(IsoCase::a2_first);
  if (use_a && !a_overlap && iv.I2 && split_a(iv.I2->hi)) iv.fired.push_back(IsoCase::a2_second);
  if (use_b && !b_overlap && iv.J1 && split_b(iv.J1->hi)) iv.fired.push_back(IsoCase::b2_first);
  if (use_b && !b_overlap && iv.J2 && split_b(iv.J2->hi)) iv.fired.push_back(IsoCase::b2_second);

  // Two-zero cases win over one-zero cases; among equals the rho-based (a)
  // path runs first because its radii shrink faster in x.
  const IsoCase order[] = {IsoCase::a1,       IsoCase::b1,        IsoCase::a2_first,
                           IsoCase::a2_second, IsoCase::b2_first, IsoCase::b2_second};
  IsoCase chosen = IsoCase::none;
  for (IsoCase c : order) {
    if (std::find(iv.fired.begin(), iv.fired.end(), c) != iv.fired.end()) {
      chosen = c;
      break;
    }
  }
  rep.kase = chosen;

  switch (chosen) {
    case IsoCase::a1: {
      const double mu1 = std::max(iv.I1->lo, iv.I2->lo);
      const double mu2 = std::min(iv.I1->hi, iv.I2->hi);
      iv.mu1 = mu1;
      iv.mu2 = mu2;
      const double ra = ctx.rho1(mu2), rb = ctx.rho2(mu2);
      rep.groups.push_back({{Disc{cx(0.0), mu1 * mu1}}, ctx.n - 2});
      push_outer_pair(rep, ctx, ra, rb, split_a(mu2));
      const double hi2 = std::min(ctx.aa - ra, ctx.ab - rb);
      if (hi2 > 0.0 && std::sqrt(hi2) > mu1) rep.gap = ModulusGap{mu1, std::sqrt(hi2)};
      break;
    }
    case IsoCase::b1: {
      const double mu1 = std::max(iv.J1->lo, iv.J2->lo);
      const double mu2 = std::min(iv.J1->hi, iv.J2->hi);
      iv.mu1 = mu1;
      iv.mu2 = mu2;
      const double sa = ctx.sigma1(mu2), sb = ctx.sigma2(mu2);
      rep.groups.push_back({{Disc{cx(0.0), mu1}}, ctx.n - 2});
      push_outer_pair(rep, ctx, sa, sb, split_b(mu2));
      const double hi2 = std::min(ctx.aa - sa, ctx.ab - sb);
      if (hi2 > 0.0 && std::sqrt(hi2) > std::sqrt(mu1)) rep.gap = ModulusGap{std::sqrt(mu1), std::sqrt(hi2)};
      break;
    }
    case IsoCase::a2_first: {
      const double x = iv.I1->hi;
      rep.groups.push_back({{Disc{ctx.bt.alpha, ctx.rho1(x)}}, 1});
      rep.groups.push_back({{Disc{cx(0.0), x * x}, Disc{ctx.bt.beta, ctx.rho2(x)}}, ctx.n - 1});
      break;
    }
    case IsoCase::a2_second: {
      const double x = iv.I2->hi;
      rep.groups.push_back({{Disc{ctx.bt.beta, ctx.rho2(x)}}, 1});
      rep.groups.push_back({{Disc{cx(0.0), x * x}, Disc{ctx.bt.alpha, ctx.rho1(x)}}, ctx.n - 1});
      break;
    }
    case IsoCase::b2_first: {
      const double x = iv.J1->hi;
      rep.groups.push_back({{Disc{ctx.bt.alpha, ctx.sigma1(x)}}, 1});
      rep.groups.push_back({{Disc{cx(0.0), x}, Disc{ctx.bt.beta, ctx.sigma2(x)}}, ctx.n - 1});
      break;
    }
    case IsoCase::b2_second: {
      const double x = iv.J2->hi;
      rep.groups.push_back({{Disc{ctx.bt.beta, ctx.sigma2(x)}}, 1});
      rep.groups.push_back({{Disc{cx(0.0), x}, Disc{ctx.bt.alpha, ctx.sigma1(x)}}, ctx.n - 1});
      break;
    }
    default:
      break;
  }
  return rep;
}

}  // namespace detail

/// Gershgorin-based Pellet-like isolation on the scalar and block
/// similarities of the squared companion matrix.
inline IsolationReport tgp(const PreparedPolynomial& pp, TgpPath path = TgpPath::combined, double tol = 1e-13) {
  return detail::tgp_impl(pp, path, tol);
}

/// Tangency enhancement of case (a2) on the I2 branch: past the internal
/// tangency point u* the alpha disc is swallowed by the origin disc, so the
/// kept region shrinks to the single disc of radius max(u1, u*)^2.
inline IsolationReport tgp_enhance_a2(const PreparedPolynomial& pp, const IsolationReport& rep, double tol = 1e-13) {
  if (rep.kase != IsoCase::a2_second) fail(errc::wrong_case, "enhancement applies to case a2 on the I2 branch");
  const detail::TheoremContext ctx = detail::make_context(pp);
  const double u_star = detail::solve_or_zero(detail::psi1(ctx), tol);
  IsolationReport out = rep;
  out.u_star = u_star;
  const double u1 = rep.intervals.I2->lo, u2 = rep.intervals.I2->hi;
  const double x0 = std::max(u1, u_star);
  if (x0 < u2) {
    out.enhanced = true;
    out.groups[1] = RegionGroup{{Disc{cx(0.0), x0 * x0}}, ctx.n - 1};
  }
  return out;
}

/// Block-Gershgorin Pellet-like isolation; requires the trailing block to be
/// diagonalizable (callers fall back to tgp otherwise).
inline IsolationReport tmgp(const PreparedPolynomial& pp, double tol = 1e-13) {
  const detail::TheoremContext ctx = detail::make_context(pp);
  if (!ctx.bt.diagonalized) fail(errc::not_diagonalizable, "trailing block is not diagonalizable");

  IsolationReport rep;
  rep.method = IsoMethod::tmgp;
  rep.was_padded = ctx.was_padded;
  rep.total = ctx.n;
  auto& iv = rep.intervals;
  iv.K1 = detail::neg_interval(detail::big_omega(ctx, ctx.aa), tol);
  iv.K2 = detail::neg_interval(detail::big_omega(ctx, ctx.ab), tol);

  if (iv.K1) {
    rep.kase = IsoCase::tmgp_a;
    iv.fired.push_back(rep.kase);
    const double x1 = iv.K1->lo, x2 = iv.K1->hi;
    const double t = ctx.tau(x2);
    rep.groups.push_back({{Disc{cx(0.0), x1}}, ctx.n - 2});
    detail::push_outer_pair(rep, ctx, t, t, std::abs(ctx.bt.alpha - ctx.bt.beta) > 2.0 * t);
    const double hi2 = ctx.aa - t;
    if (hi2 > 0.0 && std::sqrt(hi2) > std::sqrt(x1)) rep.gap = ModulusGap{std::sqrt(x1), std::sqrt(hi2)};
  } else if (iv.K2) {
    const double y2 = iv.K2->hi;
    const double t = ctx.tau(y2);
    if (std::abs(ctx.bt.alpha - ctx.bt.beta) > 2.0 * t) {
      rep.kase = IsoCase::tmgp_b;
      iv.fired.push_back(rep.kase);
      rep.groups.push_back({{Disc{ctx.bt.beta, t}}, 1});
      rep.groups.push_back({{Disc{cx(0.0), y2}, Disc{ctx.bt.alpha, t}}, ctx.n - 1});
    }
  }
  return rep;
}

/// Lower bounds come from running any upper-bound method on the reverse
/// polynomial and inverting.
inline double lower_bound_via_reverse(const Polynomial& p, BoundMethod method, double tol = 1e-13) {
  const Polynomial rev = reverse(p);
  double upper = 0.0;
  switch (method) {
    case BoundMethod::cauchy:
      upper = cauchy_bound(rev, tol).bound;
      break;
    case BoundMethod::matrix_cauchy:
      upper = matrix_cauchy_bound(prepare_even(rev), tol).bound;
      break;
    case BoundMethod::tgc_a:
      upper = tgc_bound_a(prepare_even(rev), tol).bound;
      break;
    case BoundMethod::tgc_b:
      upper = tgc_bound_b(prepare_even(rev), tol).bound;
      break;
  }
  return 1.0 / upper;
}

}  // namespace zeroloc
