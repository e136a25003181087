// Command-line front end: bounds, isolation reports, the Table 1/2 benchmark
// harness, and SVG plots of inclusion regions.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zeroloc/zeroloc.hpp"

namespace {

using namespace zeroloc;

Polynomial load_polynomial(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_polynomial, "cannot open input file: " + path);
  ojson j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(errc::invalid_polynomial, std::string("input is not valid JSON: ") + e.what());
  }
  return polynomial_from_json(j);
}

int run_bounds(const std::string& input, const std::string& method, bool lower, double tol) {
  const Polynomial p = load_polynomial(input);
  const Polynomial work = lower ? reverse(p) : p;
  const PreparedPolynomial pp = prepare_even(work);
  const RootSet oracle = all_roots(p);

  ojson out;
  out["degree"] = p.degree();
  out["lower"] = lower;
  ojson list = ojson::array();
  const auto add = [&](const BoundResult& b) { list.push_back(to_json(b, lower)); };
  if (method == "cauchy" || method == "all") add(cauchy_bound(work, tol));
  if (method == "matrix-cauchy" || method == "all") add(matrix_cauchy_bound(pp, tol));
  if (method == "tgc-a" || method == "all") add(tgc_bound_a(pp, tol));
  if (method == "tgc-b" || method == "all") add(tgc_bound_b(pp, tol));
  out["bounds"] = list;
  out["oracle"] = ojson{{"max_modulus", oracle.max_modulus()}, {"min_modulus", oracle.min_modulus()}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_isolate(const std::string& input, const std::string& method, bool enhance, int k, double tol) {
  const Polynomial p = load_polynomial(input);
  const PreparedPolynomial pp = prepare_even(p);
  const RootSet oracle = all_roots(p);
  const bool all = method == "all";

  ojson list = ojson::array();
  // Under --method all a single method's precondition failure becomes a note
  // instead of aborting the remaining reports.
  const auto guarded = [&](IsoMethod m, auto&& compute) {
    try {
      if (const std::optional<IsolationReport> rep = compute()) {
        list.push_back(to_json(*rep));
      } else {
        list.push_back(ojson{{"method", method_name(m)}, {"case", "none"}, {"fired", false}});
      }
    } catch (const Error& e) {
      if (!all) throw;
      list.push_back(ojson{{"method", method_name(m)}, {"case", "none"}, {"fired", false}, {"note", e.what()}});
    }
  };
  if (method == "pellet" || all)
    guarded(IsoMethod::pellet, [&] { return pellet_classic(p, k, tol); });
  if (method == "matrix-pellet" || all)
    guarded(IsoMethod::matrix_pellet, [&] { return matrix_pellet(pp, pp.m - 1, tol); });
  if (method == "tgp" || all)
    guarded(IsoMethod::tgp, [&]() -> std::optional<IsolationReport> {
      IsolationReport rep = tgp(pp, TgpPath::combined, tol);
      if (enhance && rep.kase == IsoCase::a2_second) rep = tgp_enhance_a2(pp, rep, tol);
      return rep;
    });
  if (method == "tmgp" || all)
    guarded(IsoMethod::tmgp, [&]() -> std::optional<IsolationReport> { return tmgp(pp, tol); });

  ojson out;
  out["degree"] = p.degree();
  out["reports"] = list;
  out["oracle"] = to_json(oracle);
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_bench(int set_id, int count, std::uint64_t seed, int table, double tol) {
  const SetSpec spec = make_set_spec(set_id);
  ojson out;
  out["set"] = set_id;
  out["count"] = count;
  out["seed"] = seed;
  if (table == 0 || table == 1) out["table1"] = to_json(run_table1(spec, seed, count, tol));
  if (table == 0 || table == 2) out["table2"] = to_json(run_table2(spec, seed, count, tol));
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_plot(const std::string& input, const std::string& out_path, const std::string& method, bool enhance,
             double tol) {
  const Polynomial p = load_polynomial(input);
  const PreparedPolynomial pp = prepare_even(p);
  const RootSet oracle = all_roots(p);

  IsolationReport rep;
  if (method == "tgp") {
    rep = tgp(pp, TgpPath::combined, tol);
    if (enhance && rep.kase == IsoCase::a2_second) rep = tgp_enhance_a2(pp, rep, tol);
  } else if (method == "tmgp") {
    rep = tmgp(pp, tol);
  } else if (method == "matrix-pellet") {
    const auto r = matrix_pellet(pp, pp.m - 1, tol);
    if (!r) fail(errc::invalid_polynomial, "matrix pellet did not fire on this polynomial; nothing to plot");
    rep = *r;
  } else {
    const auto r = pellet_classic(p, 1, tol);
    if (!r) fail(errc::invalid_polynomial, "pellet did not fire on this polynomial; nothing to plot");
    rep = *r;
  }

  std::ofstream out(out_path);
  if (!out) fail(errc::invalid_polynomial, "cannot open output file: " + out_path);
  out << render_svg(rep, oracle);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero localization for complex polynomials via the squared companion matrix"};
  app.require_subcommand(1);
  app.fallthrough();  // --tol may appear before or after the subcommand

  double tol = 1e-13;
  app.add_option("--tol", tol, "root solver tolerance")->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "upper (or lower) bounds on zero moduli");
  std::string bounds_method = "all", bounds_input;
  bool lower = false;
  bounds->add_option("--method", bounds_method, "cauchy|matrix-cauchy|tgc-a|tgc-b|all")
      ->capture_default_str()
      ->check(CLI::IsMember({"cauchy", "matrix-cauchy", "tgc-a", "tgc-b", "all"}));
  bounds->add_option("--input", bounds_input, "polynomial JSON file")->required();
  bounds->add_flag("--lower", lower, "bound the smallest modulus via the reverse polynomial");

  auto* isolate = app.add_subcommand("isolate", "zero isolation reports");
  std::string iso_method = "all", iso_input;
  bool enhance = false;
  int pellet_k = 1;
  isolate->add_option("--method", iso_method, "pellet|matrix-pellet|tgp|tmgp|all")
      ->capture_default_str()
      ->check(CLI::IsMember({"pellet", "matrix-pellet", "tgp", "tmgp", "all"}));
  isolate->add_option("--input", iso_input, "polynomial JSON file")->required();
  isolate->add_flag("--enhance", enhance, "apply the a2 tangency enhancement when it applies");
  isolate->add_option("--k", pellet_k, "index for the classical Pellet test")->capture_default_str();

  auto* bench = app.add_subcommand("bench", "seeded random benchmark tables");
  int set_id = 1, count = 1000, table = 0;
  std::uint64_t seed = 0;
  bench->add_option("--set", set_id, "polynomial set 1..4")->required()->check(CLI::Range(1, 4));
  bench->add_option("--count", count, "sample count")->capture_default_str();
  bench->add_option("--seed", seed, "rng seed")->capture_default_str();
  bench->add_option("--table", table, "1 or 2 (default: both)")->check(CLI::Range(1, 2));

  auto* plot = app.add_subcommand("plot", "SVG picture of inclusion regions and roots");
  std::string plot_input, plot_out, plot_method = "tgp";
  bool plot_enhance = false;
  plot->add_option("--input", plot_input, "polynomial JSON file")->required();
  plot->add_option("--out", plot_out, "output SVG path")->required();
  plot->add_option("--method", plot_method, "pellet|matrix-pellet|tgp|tmgp")
      ->capture_default_str()
      ->check(CLI::IsMember({"pellet", "matrix-pellet", "tgp", "tmgp"}));
  plot->add_flag("--enhance", plot_enhance, "apply the a2 tangency enhancement when it applies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (bounds->parsed()) return run_bounds(bounds_input, bounds_method, lower, tol);
    if (isolate->parsed()) return run_isolate(iso_input, iso_method, enhance, pellet_k, tol);
    if (bench->parsed()) return run_bench(set_id, count, seed, table, tol);
    if (plot->parsed()) return run_plot(plot_input, plot_out, plot_method, plot_enhance, tol);
  } catch (const zeroloc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
