// symdyn command-line laboratory.
//
//   check           one system x property x level
//   verify          run the theorem suite over a catalog
//   enumerate       exhaustive small-endomap oracle
//   metric-selftest module invariants on built-in spaces
//
// Exit codes: 0 ok / no counterexamples, 1 counterexample or selftest
// failure, 2 usage error.

#include <iostream>

#include <CLI11.hpp>

#include <symdyn/files.hpp>
#include <symdyn/report.hpp>

using namespace symdyn;

namespace {

struct BudgetFlags {
  void attach(CLI::App* app, RunConfig& cfg) {
    app->add_option("--horizon", cfg.budget.horizon, "max iterate for truncated searches");
    app->add_option("--sens-horizon", cfg.budget.sens_horizon, "scan depth for separation witnesses");
    app->add_option("--witness-points", cfg.budget.witness_points, "per-set point subsample");
    app->add_option("--m-max", cfg.budget.m_max, "max arity for multi-quantified properties");
    app->add_option("--enum-cap", cfg.budget.enum_cap, "max enumerated hyperspace elements");
    app->add_option_function<std::string>(
        "--delta-grid", [&cfg](const std::string& v) { cfg.budget.delta_factors = parse_rational_list(v); },
        "comma list of diameter fractions for delta");
    app->add_option_function<std::string>(
        "--delta-abs", [&cfg](const std::string& v) { cfg.budget.delta_extra = parse_rational_list(v); },
        "comma list of absolute delta values");
    app->add_option_function<std::string>(
        "--eps-grid", [&cfg](const std::string& v) { cfg.budget.eps_factors = parse_rational_list(v); },
        "comma list of diameter fractions for epsilon");
    app->add_option_function<std::string>(
        "--eps-abs", [&cfg](const std::string& v) { cfg.budget.eps_extra = parse_rational_list(v); },
        "comma list of absolute epsilon values");
  }
};

SystemVariant resolve_system(const std::string& spec) {
  for (auto& e : default_catalog())
    if (e.id == spec) return e.sys;
  if (spec.find('.') != std::string::npos || spec.find('/') != std::string::npos)
    return load_system_file(spec, spec);
  throw std::invalid_argument("unknown system '" + spec + "' (not a catalog id or file path)");
}

int run_check(const std::string& system, const std::string& property, const std::string& level_s,
              int n, const std::string& point, const RunConfig& cfg) {
  SystemVariant sys = resolve_system(system);
  Level level = Level::Base;
  if (level_s == "product") level = Level::Product;
  else if (level_s == "suspension") level = Level::Suspension;
  else if (level_s != "base") throw std::invalid_argument("level must be base|product|suspension");

  SystemLevels lv(sys, cfg.budget.enum_cap);

  if (auto pc = point_class_from_name(property)) {
    if (point.empty()) throw std::invalid_argument("point classification needs --point");
    Verdict v;
    if (std::holds_alternative<ShiftSystem>(sys)) {
      const ShiftSystem& sh = std::get<ShiftSystem>(sys);
      ShiftPoint x = point == "stream" ? ShiftPoint::stream(sh.symbols)
                                       : [&] {
                                           auto dot = point.find('.');
                                           if (dot == std::string::npos) return ShiftPoint::periodic(point);
                                           return ShiftPoint::ev_periodic(point.substr(0, dot),
                                                                          point.substr(dot + 1));
                                         }();
      v = classify_point_shift(sh, x, *pc);
    } else {
      LevelRef ref = lv.level(level, n);
      if (!ref.ok()) throw std::invalid_argument(ref.error);
      v = classify_point_finite(*ref.fin, std::stoi(point), *pc);
    }
    std::cout << property << "(" << point << ") on " << system << " [" << level_s
              << "]: " << v.state_str() << (v.definitive ? " (definitive)" : " (bounded)") << "\n  "
              << v.detail << "\n";
    return 0;
  }

  auto prop = property_from_name(property);
  if (!prop) throw std::invalid_argument("unknown property '" + property + "'");
  Verdict v = detect(lv.level(level, n), *prop, cfg.budget);
  std::cout << property << " on " << system << " [" << level_s << ", n=" << n
            << "]: " << v.state_str() << (v.definitive ? " (definitive)" : " (bounded)") << "\n  "
            << v.detail << "\n";
  return 0;
}

int run_verify(const RunConfig& cfg) {
  Report report = run_theorem_suite(resolve_catalog(cfg), cfg.theorems, cfg.n_values, cfg.budget);
  if (!cfg.out.empty()) emit_report_file(report, cfg.format, cfg.out);
  else emit_report(report, cfg.format, std::cout);
  std::cerr << "rows: " << report.summary.at("rows") << ", counterexamples: " << report.counterexamples()
            << ", probe violations: " << report.probe_violations() << "\n";
  return report.counterexamples() > 0 ? 1 : 0;
}

int run_enumerate(int points, const RunConfig& cfg) {
  Report report;
  for (int n : cfg.n_values) {
    Report r = brute_force_enumeration(points, n, cfg.theorems, cfg.budget);
    for (auto& row : r.rows) report.rows.push_back(std::move(row));
    for (const auto& [k, v] : r.summary) report.summary[k] += v;
  }
  report.budget = cfg.budget;
  if (!cfg.out.empty()) emit_report_file(report, cfg.format, cfg.out);
  else emit_report(report, cfg.format, std::cout);
  long long bad = report.counterexamples() + report.probe_violations();
  std::cerr << "maps: " << report.summary["maps-enumerated"] << ", rows: " << report.summary["rows"]
            << ", violations: " << bad << "\n";
  return bad > 0 ? 1 : 0;
}

int run_selftest() {
  int failures = 0;
  auto check = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
    if (!ok) ++failures;
  };
  // metric axioms across the catalog
  for (const auto& e : default_catalog()) {
    if (!std::holds_alternative<FiniteDynSystem>(e.sys)) continue;
    const FiniteDynSystem& fs = std::get<FiniteDynSystem>(e.sys);
    check(check_metric_axioms(fs.space).ok, "metric axioms: " + e.id);
  }
  // hausdorff metric axioms, exhaustive on a 5-point cycle
  {
    MetricSpace s = MetricSpace::cycle_steps(5);
    std::vector<PointSet> subs;
    for (int mask = 1; mask < 32; ++mask) {
      std::vector<PointId> v;
      for (int i = 0; i < 5; ++i)
        if (mask & (1 << i)) v.push_back(i);
      subs.push_back(PointSet(std::move(v)));
    }
    bool ok = true;
    for (const auto& a : subs)
      for (const auto& b : subs) {
        if (hausdorff(s, a, b) != hausdorff(s, b, a)) ok = false;
        if ((a == b) != hausdorff(s, a, b).is_zero()) ok = false;
        for (const auto& c : subs)
          if (!Rational::le_sum(hausdorff(s, a, c), hausdorff(s, a, b), hausdorff(s, b, c))) ok = false;
      }
    check(ok, "hausdorff is a metric on nonempty subsets (|X|=5)");
  }
  // rho against its oracle, and the rho <= H inequality
  {
    bool ok = true, le = true;
    for (int m = 3; m <= 5 && ok; ++m) {
      FiniteDynSystem sys = finite_rotation(m, 1);
      for (int n = 2; n <= 3; ++n) {
        SymmetricProduct hp(sys, n);
        SuspensionSpace sp(hp);
        for (int a = 0; a < sp.count(); ++a)
          for (int b = 0; b < sp.count(); ++b)
            if (sp.rho(a, b) != sp.rho_direct_oracle(a, b)) ok = false;
        for (int i = 0; i < hp.count(); ++i)
          for (int j = 0; j < hp.count(); ++j)
            if (!hp.is_singleton(i) && !hp.is_singleton(j) &&
                !(sp.rho(sp.q(i), sp.q(j)) <= hp.dist(i, j)))
              le = false;
      }
    }
    check(ok, "rho equals the second-level Hausdorff oracle (rotations, n=2,3)");
    check(le, "rho(q(A),q(B)) <= H(A,B)");
  }
  // semiconjugacy
  {
    bool ok = true;
    for (const auto& e : default_catalog()) {
      if (!std::holds_alternative<FiniteDynSystem>(e.sys)) continue;
      const FiniteDynSystem& fs = std::get<FiniteDynSystem>(e.sys);
      if (fs.backend != Backend::Finite) continue;
      SymmetricProduct hp(fs, 2);
      SuspensionSpace sp(hp);
      for (int i = 0; i < hp.count(); ++i) {
        int p = i;
        SuspIdx c = sp.q(i);
        for (int k = 0; k < 20; ++k) {
          p = hp.apply(p);
          c = sp.apply(c);
          if (sp.q(p) != c) ok = false;
        }
      }
    }
    check(ok, "q o F_n(f)^k = SF_n(f)^k o q on the finite catalog");
  }
  // shift strong triangle inequality
  {
    std::vector<ShiftPoint> pts = {ShiftPoint::constant('0'), ShiftPoint::constant('1'),
                                   ShiftPoint::periodic("01"), ShiftPoint::ev_periodic("0", "1"),
                                   ShiftPoint::ev_periodic("110", "10")};
    bool ok = true;
    for (const auto& x : pts)
      for (const auto& y : pts)
        for (const auto& z : pts)
          if (!(shift_dist(x, z) <= Rational::max(shift_dist(x, y), shift_dist(y, z)))) ok = false;
    check(ok, "shift metric satisfies the strong triangle inequality");
  }
  std::cout << (failures ? "SELFTEST FAILED\n" : "selftest passed\n");
  return failures ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"symdyn: dynamics on symmetric products and their suspensions"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;
  BudgetFlags budget_flags;

  // check
  auto* check = app.add_subcommand("check", "run one detector on one system");
  std::string c_system, c_property, c_level = "base", c_point;
  int c_n = 2;
  check->add_option("--system", c_system, "catalog id or system file")->required();
  check->add_option("--property", c_property, "property or point-class name")->required();
  check->add_option("--level", c_level, "base|product|suspension");
  check->add_option("--n", c_n, "product arity");
  check->add_option("--point", c_point, "point id (or shift word / 'stream') for point classes");
  check->add_option("--config", config_path, "config file");
  budget_flags.attach(check, cfg);

  // verify
  auto* verify = app.add_subcommand("verify", "run the theorem suite");
  std::string v_theorems = "all", v_catalog = "default", v_n = "2";
  verify->add_option("--theorems", v_theorems, "all or comma list of T1..T24");
  verify->add_option("--catalog", v_catalog, "default, none, or comma list of ids");
  verify->add_option("--n", v_n, "comma list of product arities (>= 2)");
  verify->add_option("--out", cfg.out, "output path");
  verify->add_option("--format", cfg.format, "json|csv|markdown");
  verify->add_option("--config", config_path, "config file");
  budget_flags.attach(verify, cfg);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "exhaustive small-endomap oracle");
  int e_points = 3;
  std::string e_theorems = "all", e_n = "2";
  enumerate->add_option("--points", e_points, "1..4 points")->required();
  enumerate->add_option("--theorems", e_theorems, "all or comma list");
  enumerate->add_option("--n", e_n, "comma list of product arities");
  enumerate->add_option("--out", cfg.out, "output path");
  enumerate->add_option("--format", cfg.format, "json|csv|markdown");
  enumerate->add_option("--config", config_path, "config file");
  budget_flags.attach(enumerate, cfg);

  // metric-selftest
  app.add_subcommand("metric-selftest", "module invariants on built-in spaces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!config_path.empty()) load_config_file(cfg, config_path);
    if (check->parsed()) return run_check(c_system, c_property, c_level, c_n, c_point, cfg);
    if (verify->parsed()) {
      apply_config_pair(cfg, "theorems", v_theorems);
      apply_config_pair(cfg, "n", v_n);
      cfg.catalog = v_catalog;
      return run_verify(cfg);
    }
    if (enumerate->parsed()) {
      apply_config_pair(cfg, "theorems", e_theorems);
      apply_config_pair(cfg, "n", e_n);
      return run_enumerate(e_points, cfg);
    }
    return run_selftest();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
