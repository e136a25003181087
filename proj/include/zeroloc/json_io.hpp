#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zeroloc/bench.hpp"
#include "zeroloc/localize.hpp"
#include "zeroloc/oracle.hpp"
#include "zeroloc/regions.hpp"

namespace zeroloc {

using ojson = nlohmann::ordered_json;

/// Input schema: {"coeffs": [[re, im], ...]}, leading coefficient first.
/// Plain numbers are accepted as real coefficients. Inputs are normalized to
/// monic form on load.
inline Polynomial polynomial_from_json(const ojson& j) {
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    fail(errc::invalid_polynomial, "input must be an object with a \"coeffs\" array");
  std::vector<cx> coeffs;
  for (const auto& item : j["coeffs"]) {
    if (item.is_number()) {
      coeffs.emplace_back(item.get<double>(), 0.0);
    } else if (item.is_array() && item.size() == 2 && item[0].is_number() && item[1].is_number()) {
      coeffs.emplace_back(item[0].get<double>(), item[1].get<double>());
    } else {
      fail(errc::invalid_polynomial, "coefficients must be numbers or [re, im] pairs");
    }
  }
  return normalize_monic(std::move(coeffs));
}

inline ojson to_json(cx z) { return ojson::array({z.real(), z.imag()}); }

inline ojson to_json(const Disc& d, bool squared_plane) {
  return ojson{{"type", "disc"}, {"plane", squared_plane ? "squared" : "z"}, {"center", to_json(d.center)},
               {"radius", d.radius}};
}

inline ojson to_json(const CassiniRegion& c) {
  return ojson{{"type", "cassini"},
               {"plane", "z"},
               {"focus", to_json(c.focus)},
               {"radius", c.radius},
               {"two_loops", two_loop_predicate(c)}};
}

inline const char* method_name(BoundMethod m) {
  switch (m) {
    case BoundMethod::cauchy: return "cauchy";
    case BoundMethod::matrix_cauchy: return "matrix-cauchy";
    case BoundMethod::tgc_a: return "tgc-a";
    case BoundMethod::tgc_b: return "tgc-b";
  }
  return "?";
}

inline const char* method_name(IsoMethod m) {
  switch (m) {
    case IsoMethod::pellet: return "pellet";
    case IsoMethod::matrix_pellet: return "matrix-pellet";
    case IsoMethod::tgp: return "tgp";
    case IsoMethod::tmgp: return "tmgp";
  }
  return "?";
}

inline const char* case_name(IsoCase c) {
  switch (c) {
    case IsoCase::none: return "none";
    case IsoCase::a1: return "a1";
    case IsoCase::a2_first: return "a2-first";
    case IsoCase::a2_second: return "a2-second";
    case IsoCase::b1: return "b1";
    case IsoCase::b2_first: return "b2-first";
    case IsoCase::b2_second: return "b2-second";
    case IsoCase::tmgp_a: return "tmgp-a";
    case IsoCase::tmgp_b: return "tmgp-b";
  }
  return "?";
}

inline ojson to_json(const BoundResult& b, bool lower) {
  ojson j;
  j["method"] = method_name(b.method);
  j[lower ? "lower_bound" : "bound"] = lower ? 1.0 / b.bound : b.bound;
  j["roots_solved"] = b.roots;
  return j;
}

inline ojson to_json(const IsolationReport& rep) {
  ojson j;
  j["method"] = method_name(rep.method);
  j["case"] = case_name(rep.kase);
  j["fired"] = rep.fired();
  j["total_zeros"] = rep.total;
  j["was_padded"] = rep.was_padded;
  if (rep.enhanced) j["enhanced"] = true;
  if (rep.u_star) j["u_star"] = *rep.u_star;
  ojson groups = ojson::array();
  for (const RegionGroup& g : rep.groups) {
    ojson jg;
    jg["count"] = g.count;
    ojson discs = ojson::array();
    ojson cassini = ojson::array();
    for (const Disc& d : g.discs) {
      discs.push_back(to_json(d, rep.squared_plane));
      if (rep.squared_plane) cassini.push_back(to_json(sqrt_map_disc(d)));
    }
    jg["discs"] = discs;
    if (rep.squared_plane) jg["z_plane_regions"] = cassini;
    groups.push_back(jg);
  }
  j["groups"] = groups;
  if (rep.gap) {
    j["modulus_gap"] = ojson{{"lo", rep.gap->lo}, {"hi", rep.gap->hi}};
    if (rep.beyond_gap) j["zeros_beyond_gap"] = *rep.beyond_gap;
  }
  ojson iv;
  const auto put = [&](const char* name, const std::optional<Interval>& i) {
    if (i) iv[name] = ojson::array({i->lo, i->hi});
  };
  put("I1", rep.intervals.I1);
  put("I2", rep.intervals.I2);
  put("J1", rep.intervals.J1);
  put("J2", rep.intervals.J2);
  put("K1", rep.intervals.K1);
  put("K2", rep.intervals.K2);
  if (rep.intervals.mu1) iv["mu1"] = *rep.intervals.mu1;
  if (rep.intervals.mu2) iv["mu2"] = *rep.intervals.mu2;
  ojson fired = ojson::array();
  for (IsoCase c : rep.intervals.fired) fired.push_back(case_name(c));
  iv["cases_fired"] = fired;
  j["intervals"] = iv;
  return j;
}

inline ojson to_json(const RootSet& rs) {
  ojson roots = ojson::array(), moduli = ojson::array();
  for (cx r : rs.roots) roots.push_back(to_json(r));
  for (cx r : rs.roots) moduli.push_back(std::abs(r));
  return ojson{{"roots", roots},
               {"moduli", moduli},
               {"max_modulus", rs.max_modulus()},
               {"min_modulus", rs.min_modulus()},
               {"max_residual", rs.residuals.empty() ? 0.0 : *std::max_element(rs.residuals.begin(), rs.residuals.end())}};
}

inline ojson to_json(const Table1Stats& t) {
  static const char* names[4] = {"cauchy", "matrix-cauchy", "tgc-a", "tgc-b"};
  ojson methods = ojson::array();
  for (std::size_t m = 0; m < 4; ++m)
    methods.push_back(ojson{{"method", names[m]}, {"avg_ratio", t.avg_ratio[m]}, {"wins", t.wins[m]}});
  return ojson{{"table", 1}, {"count", t.count}, {"methods", methods}};
}

inline ojson to_json(const IsoTriple& t) {
  return ojson{{"two_separate", t.two_separate}, {"two_joint", t.two_joint}, {"one", t.one}};
}

inline ojson to_json(const Table2Stats& t) {
  return ojson{{"table", 2},
               {"count", t.count},
               {"pellet", ojson{{"one_zero", t.pellet_one}, {"two_zeros", t.pellet_two}}},
               {"matrix_pellet", t.matrix_pellet_successes},
               {"tgp_a", to_json(t.tgp_a)},
               {"tgp_b", to_json(t.tgp_b)},
               {"tmgp", to_json(t.tmgp_counts)}};
}

}  // namespace zeroloc
