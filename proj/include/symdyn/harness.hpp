// Catalog, theorem-suite runner, brute-force enumeration over all small
// endomaps, and deterministic report assembly.
//
// Evidence semantics: a row is `counterexample` only when the premise holds
// definitively, the conclusion fails definitively, and the system satisfies
// the theorem's hypotheses. The same definitive violation on a
// hypothesis-violating backend is reported as a flagged probe finding under
// `hypothesis-not-met` — it cannot refute the theorem, but the enumeration
// oracle still treats it as a build-breaking implementation signal because no
// such violation exists on the enumerated map families.

#pragma once

#include <sstream>

#include "theorems.hpp"

namespace symdyn {

struct CatalogEntry {
  std::string id;
  SystemVariant sys;
};

inline std::vector<CatalogEntry> default_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({"rot4", finite_rotation(4, 1)});
  out.push_back({"rot5", finite_rotation(5, 1)});
  out.push_back({"rot62", finite_rotation(6, 2)});
  out.push_back({"id2", identity_system(2)});
  out.push_back({"collapse2", constant_system(2)});
  out.push_back({"chain3", make_finite_system("chain3", MetricSpace::cycle(3), Endomap({1, 2, 1}))});
  out.push_back({"doubling729", grid_doubling(729)});
  out.push_back({"tent256", grid_tent(256)});
  out.push_back({"shift2", full_shift(2, 4)});
  out.push_back({"shift3", full_shift(3, 3)});
  return out;
}

enum class RowStatus { Consistent, Counterexample, Inconclusive, HypothesisNotMet };

inline const char* row_status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Consistent: return "consistent";
    case RowStatus::Counterexample: return "counterexample";
    case RowStatus::Inconclusive: return "inconclusive";
    default: return "hypothesis-not-met";
  }
}

struct CheckRow {
  std::string theorem;
  std::string system;
  int n = 2;
  int premise = 1, conclusion = 1; // statement numbers within the theorem
  std::string premise_level, conclusion_level;
  std::string premise_property, conclusion_property;
  RowStatus status = RowStatus::Inconclusive;
  bool violated = false; // definitive premise-holds with definitive conclusion-fails
  std::string witness;
  std::map<std::string, std::string> verdicts; // base/product/suspension
};

struct Report {
  std::string version = "1";
  Budget budget;
  std::vector<CheckRow> rows;
  std::map<std::string, long long> summary; // status and violation counters

  void add(CheckRow row) {
    summary["rows"]++;
    summary[row_status_name(row.status)]++;
    if (row.violated && row.status != RowStatus::Counterexample) summary["probe-violations"]++;
    rows.push_back(std::move(row));
  }
  long long counterexamples() const {
    auto it = summary.find("counterexample");
    return it == summary.end() ? 0 : it->second;
  }
  long long probe_violations() const {
    auto it = summary.find("probe-violations");
    return it == summary.end() ? 0 : it->second;
  }
};

inline std::string verdict_str(const Verdict& v) {
  if (v.is_unknown()) return "Unknown";
  return v.state_str() + (v.definitive ? "(definitive)" : "(bounded)");
}

namespace harness_detail {

// Statement evaluation for Detector and PairTransitive kinds; Pointwise is
// quantified per element and handled by the arrow checker below.
class StatementEvaluator {
public:
  StatementEvaluator(SystemLevels& lv, int n, const Budget& b) : lv_(&lv), n_(n), b_(&b) {}

  const Verdict& eval(const Statement& st) {
    long long key = (long long)st.level * 1000 + (long long)st.prop * 4 + (long long)st.kind;
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Verdict v;
    if (st.kind == StatementKind::Detector) {
      v = detect(lv_->level(st.level, n_), st.prop, *b_);
    } else if (st.kind == StatementKind::PairTransitive) {
      v = eval_pair_transitive(st.level);
    } else {
      v = Verdict::unknown("pointwise statements are quantified per element");
    }
    return cache_.emplace(key, std::move(v)).first->second;
  }

private:
  // f x g with the fixed partner g = rotation by 1 on 3 points: transitive
  // iff the composite map is one full cycle (exact levels), constructive on
  // the shift (hitting tails meet every residue class of the partner).
  Verdict eval_pair_transitive(Level level) {
    if (std::holds_alternative<ShiftSystem>(lv_->system()))
      return Verdict::holds(
          "hitting sets at this level contain full tails {n >= N}, which meet every residue class of the 3-cycle partner");
    LevelRef ref = lv_->level(level, n_);
    if (!ref.error.empty()) return Verdict::unknown(ref.error);
    const FiniteUniverse& u = *ref.fin;
    if (!u.exact) return Verdict::unknown("pair transitivity not evaluated on grid backends");
    const int P = 3;
    std::vector<int> comp(u.count * P);
    for (int x = 0; x < u.count; ++x)
      for (int y = 0; y < P; ++y) comp[x * P + y] = u.map[x] * P + (y + 1) % P;
    OrbitData od(comp);
    if (od.single_cycle)
      return Verdict::holds("the composite with the 3-cycle partner is one full cycle");
    return Verdict::fails("composite with the 3-cycle partner: " + od.cycle_summary());
  }

  SystemLevels* lv_;
  int n_;
  const Budget* b_;
  std::map<long long, Verdict> cache_;
};

struct ArrowOutcome {
  RowStatus status;
  bool violated = false;
  std::string witness;
};

inline ArrowOutcome judge_arrow(const Verdict& premise, const Verdict& conclusion, bool hypothesis_met) {
  ArrowOutcome out{RowStatus::Inconclusive, false, ""};
  bool premise_holds_def = premise.is_holds() && premise.definitive;
  bool conclusion_fails_def = conclusion.is_fails() && conclusion.definitive;
  if (premise_holds_def && conclusion_fails_def) {
    out.violated = true;
    out.status = hypothesis_met ? RowStatus::Counterexample : RowStatus::HypothesisNotMet;
    out.witness = "premise holds: " + premise.detail + " | conclusion fails: " + conclusion.detail;
    if (!hypothesis_met) out.witness = "probe violation (hypotheses not met) | " + out.witness;
    return out;
  }
  bool settled = (premise.is_fails() && premise.definitive) ||
                 (conclusion.is_holds() && conclusion.definitive);
  if (!hypothesis_met) {
    out.status = RowStatus::HypothesisNotMet;
    out.witness = settled ? "implication settled on a probe backend" : "probe, not settled within budget";
    return out;
  }
  if (settled) {
    out.status = RowStatus::Consistent;
    return out;
  }
  out.status = RowStatus::Inconclusive;
  out.witness = "premise " + verdict_str(premise) + ", conclusion " + verdict_str(conclusion);
  return out;
}

// ---- pointwise theorems (quantified over elements of F_n(X)) -----------------

struct PointwiseResult {
  bool exhaustive = false;
  bool violated = false;
  std::string witness;
  long long elements = 0;
};

inline Verdict pointwise_statement_finite(const FiniteUniverse& base_u, const OrbitData& base_od,
                                          const FiniteUniverse& prod_u, const OrbitData& prod_od,
                                          const FiniteUniverse& susp_u, const OrbitData& susp_od,
                                          const SymmetricProduct& hp, const SuspensionSpace& sp,
                                          int element, Level level, PointClass cls) {
  switch (level) {
    case Level::Base: {
      for (PointId x : hp.element(element)) {
        Verdict v = classify_point_finite(base_u, base_od, x, cls);
        if (!v.is_holds()) return v;
      }
      return Verdict::holds("every member point qualifies");
    }
    case Level::Product:
      return classify_point_finite(prod_u, prod_od, element, cls);
    default:
      return classify_point_finite(susp_u, susp_od, sp.q(element), cls);
  }
}

inline PointwiseResult check_pointwise_finite(SystemLevels& lv, const TheoremSpec& spec, int arrow,
                                              int n) {
  PointwiseResult out;
  LevelRef base_ref = lv.level(Level::Base, n);
  LevelRef prod_ref = lv.level(Level::Product, n);
  LevelRef susp_ref = lv.level(Level::Suspension, n);
  if (!prod_ref.ok() || !susp_ref.ok()) {
    out.witness = prod_ref.error.empty() ? susp_ref.error : prod_ref.error;
    return out;
  }
  const SymmetricProduct* hp = lv.product(n);
  const SuspensionSpace* sp = lv.suspension(n);
  if (!base_ref.fin->exact) {
    out.witness = "pointwise claims are checked exactly on the finite backend only";
    return out;
  }
  OrbitData base_od(base_ref.fin->map), prod_od(prod_ref.fin->map), susp_od(susp_ref.fin->map);
  const Statement& sp_prem = spec.statements[spec.arrows[arrow].first - 1];
  const Statement& sp_conc = spec.statements[spec.arrows[arrow].second - 1];
  out.exhaustive = true;
  out.elements = hp->count();
  for (int e = 0; e < hp->count(); ++e) {
    Verdict prem = pointwise_statement_finite(*base_ref.fin, base_od, *prod_ref.fin, prod_od,
                                              *susp_ref.fin, susp_od, *hp, *sp, e, sp_prem.level,
                                              sp_prem.point_class);
    if (!(prem.is_holds() && prem.definitive)) continue;
    Verdict conc = pointwise_statement_finite(*base_ref.fin, base_od, *prod_ref.fin, prod_od,
                                              *susp_ref.fin, susp_od, *hp, *sp, e, sp_conc.level,
                                              sp_conc.point_class);
    if (conc.is_fails() && conc.definitive) {
      out.violated = true;
      out.witness = "A=" + hp->element(e).str() + ": premise holds (" + prem.detail +
                    ") but conclusion fails (" + conc.detail + ")";
      return out;
    }
  }
  out.witness = "all " + std::to_string(out.elements) + " elements consistent";
  return out;
}

// Sampled pointwise probes on the shift: a fixed family of eventually
// periodic member sets, classified exactly.
inline PointwiseResult check_pointwise_shift(const ShiftSystem& sys, const TheoremSpec& spec,
                                             int arrow, int n) {
  PointwiseResult out;
  std::vector<ShiftNSubset> samples;
  ShiftPoint z = ShiftPoint::constant('0'), o = ShiftPoint::constant('1');
  ShiftPoint alt = ShiftPoint::periodic("01");
  samples.push_back(ShiftNSubset({z}));
  samples.push_back(ShiftNSubset({alt}));
  samples.push_back(ShiftNSubset({ShiftPoint::ev_periodic("1", "0")}));
  samples.push_back(ShiftNSubset({z, o}));
  samples.push_back(ShiftNSubset({alt, ShiftPoint::periodic("10")}));
  samples.push_back(ShiftNSubset({z, ShiftPoint::ev_periodic("10", "0")}));
  samples.push_back(ShiftNSubset({ShiftPoint::ev_periodic("0", "1"), o})); // merges in one step
  if (n >= 3) samples.push_back(ShiftNSubset({z, o, alt}));

  // set-orbit structure: members are eventually periodic, so the subset walk
  // closes; set-periodicity decides the product/suspension point classes
  auto set_transient = [](const ShiftNSubset& a) {
    std::map<ShiftNSubset, int> seen;
    ShiftNSubset cur = a;
    int k = 0;
    while (!seen.count(cur)) {
      seen.emplace(cur, k++);
      cur = cur.shifted();
    }
    return seen[cur];
  };
  auto stmt = [&](const ShiftNSubset& a, const Statement& st) -> Verdict {
    bool periodic_set = set_transient(a) == 0;
    switch (st.level) {
      case Level::Base: {
        for (const auto& p : a.members()) {
          Verdict v = classify_point_shift(sys, p, st.point_class);
          if (!v.is_holds()) return v;
        }
        return Verdict::holds("every member qualifies");
      }
      case Level::Product: {
        if (st.point_class == PointClass::TransitivePoint)
          return Verdict::fails("the orbit of a finite eventually periodic set is finite, never dense");
        return periodic_set ? Verdict::holds("the set returns to itself")
                            : Verdict::fails("the set walk has a transient and cylinder products separate it");
      }
      default: {
        if (st.point_class == PointClass::TransitivePoint)
          return Verdict::fails("a finite orbit cannot be dense in the suspension");
        if (a.size() == 1) return Verdict::holds("q(A) is the fixed basepoint");
        return periodic_set ? Verdict::holds("the class returns to itself")
                            : Verdict::fails("the class walk has a transient (or collapses)");
      }
    }
  };
  const Statement& sp_prem = spec.statements[spec.arrows[arrow].first - 1];
  const Statement& sp_conc = spec.statements[spec.arrows[arrow].second - 1];
  out.elements = (long long)samples.size();
  for (const auto& a : samples) {
    if ((int)a.size() > n) continue;
    Verdict prem = stmt(a, sp_prem);
    if (!(prem.is_holds() && prem.definitive)) continue;
    Verdict conc = stmt(a, sp_conc);
    if (conc.is_fails() && conc.definitive) {
      out.violated = true;
      out.witness = "A=" + a.str() + ": premise holds (" + prem.detail + ") but conclusion fails (" +
                    conc.detail + ")";
      return out;
    }
  }
  out.exhaustive = false; // sampled, never exhaustive on the shift
  out.witness = "sampled " + std::to_string(samples.size()) + " member sets, no violation";
  return out;
}

} // namespace harness_detail

// One CheckRow per (theorem, system, n, arrow).
inline void run_theorem_on_system(Report& report, const CatalogEntry& entry, const TheoremSpec& spec,
                                  int n, const Budget& budget) {
  using namespace harness_detail;
  bool faithful = system_faithful_compactum(entry.sys);
  bool hypothesis_met = (!spec.requires_compactum || faithful) &&
                        (!spec.requires_no_isolated_points || faithful);
  if (spec.requires_bijection) {
    if (std::holds_alternative<FiniteDynSystem>(entry.sys))
      hypothesis_met = hypothesis_met && std::get<FiniteDynSystem>(entry.sys).map.is_bijection;
    else
      hypothesis_met = false;
  }

  SystemLevels lv(entry.sys, budget.enum_cap);
  StatementEvaluator eval(lv, n, budget);

  bool pointwise = !spec.statements.empty() && spec.statements[0].kind == StatementKind::PointwiseClass;

  // per-level verdict summary for the report (first detector statement per level)
  std::map<std::string, std::string> verdicts = {
      {"base", "n/a"}, {"product", "n/a"}, {"suspension", "n/a"}};
  if (!pointwise) {
    for (const auto& st : spec.statements) {
      std::string key = level_name(st.level);
      if (verdicts[key] == "n/a") verdicts[key] = verdict_str(eval.eval(st));
    }
  } else {
    for (auto& [k, v] : verdicts) v = "pointwise";
  }

  for (std::size_t a = 0; a < spec.arrows.size(); ++a) {
    CheckRow row;
    row.theorem = spec.id;
    row.system = entry.id;
    row.n = n;
    row.premise = spec.arrows[a].first;
    row.conclusion = spec.arrows[a].second;
    const Statement& ps = spec.statements[row.premise - 1];
    const Statement& cs = spec.statements[row.conclusion - 1];
    row.premise_level = level_name(ps.level);
    row.conclusion_level = level_name(cs.level);
    auto stmt_prop = [](const Statement& s) {
      if (s.kind == StatementKind::PairTransitive) return std::string("pair-transitive");
      if (s.kind == StatementKind::PointwiseClass) {
        for (const auto& [k, nm] : point_class_names())
          if (k == s.point_class) return std::string(nm) + "-point";
        return std::string("point-class");
      }
      return property_name(s.prop);
    };
    row.premise_property = stmt_prop(ps);
    row.conclusion_property = stmt_prop(cs);
    row.verdicts = verdicts;

    if (pointwise) {
      PointwiseResult pr;
      if (std::holds_alternative<FiniteDynSystem>(entry.sys))
        pr = check_pointwise_finite(lv, spec, (int)a, n);
      else
        pr = check_pointwise_shift(std::get<ShiftSystem>(entry.sys), spec, (int)a, n);
      row.violated = pr.violated;
      row.witness = pr.witness;
      if (pr.violated)
        row.status = hypothesis_met ? RowStatus::Counterexample : RowStatus::HypothesisNotMet;
      else if (!hypothesis_met)
        row.status = RowStatus::HypothesisNotMet;
      else
        row.status = pr.exhaustive ? RowStatus::Consistent : RowStatus::Inconclusive;
      if (row.violated && !hypothesis_met)
        row.witness = "probe violation (hypotheses not met) | " + row.witness;
    } else {
      ArrowOutcome out = judge_arrow(eval.eval(ps), eval.eval(cs), hypothesis_met);
      row.status = out.status;
      row.violated = out.violated;
      row.witness = out.witness;
    }
    if (!spec.note.empty()) row.witness += (row.witness.empty() ? "" : " ") + ("[" + spec.note + "]");
    report.add(std::move(row));
  }
}

inline Report run_theorem_suite(const std::vector<CatalogEntry>& catalog,
                                const std::vector<std::string>& theorem_ids,
                                const std::vector<int>& n_values, const Budget& budget) {
  Report report;
  report.budget = budget;
  for (const auto& entry : catalog)
    for (const auto& id : theorem_ids) {
      const TheoremSpec* spec = find_theorem(id);
      if (!spec) throw std::invalid_argument("unknown theorem id: " + id);
      for (int n : n_values) {
        if (n < 2) throw std::invalid_argument("suspension-level arrows need n >= 2");
        run_theorem_on_system(report, entry, *spec, n, budget);
      }
    }
  return report;
}

inline std::vector<std::string> all_theorem_ids() {
  std::vector<std::string> out;
  for (const auto& t : theorem_table()) out.push_back(t.id);
  return out;
}

// Exhaustive oracle: every endomap on {0..m-1} with the cycle metric. The
// report keeps only violated rows plus the aggregate counters; any violation
// here is a build-breaking defect.
inline Report brute_force_enumeration(int point_count, int n, const std::vector<std::string>& theorem_ids,
                                      const Budget& budget) {
  if (point_count < 1 || point_count > 4)
    throw std::invalid_argument("brute_force_enumeration: 1 <= point_count <= 4");
  Report report;
  report.budget = budget;
  long long total = 1;
  for (int i = 0; i < point_count; ++i) total *= point_count;
  std::vector<const TheoremSpec*> specs;
  for (const auto& id : theorem_ids) {
    const TheoremSpec* s = find_theorem(id);
    if (!s) throw std::invalid_argument("unknown theorem id: " + id);
    specs.push_back(s);
  }
  for (long long code = 0; code < total; ++code) {
    std::vector<int> table(point_count);
    long long rest = code;
    for (int i = 0; i < point_count; ++i) {
      table[i] = (int)(rest % point_count);
      rest /= point_count;
    }
    std::ostringstream id;
    id << "map" << point_count << "#" << code;
    CatalogEntry entry{id.str(),
                       make_finite_system(id.str(), MetricSpace::cycle(point_count), Endomap(table),
                                          Backend::Finite, 4, /*check_axioms=*/false)};
    Report local;
    local.budget = budget;
    for (const TheoremSpec* spec : specs) run_theorem_on_system(local, entry, *spec, n, budget);
    for (auto& row : local.rows) {
      report.summary["rows"]++;
      report.summary[row_status_name(row.status)]++;
      if (row.violated) {
        if (row.status != RowStatus::Counterexample) report.summary["probe-violations"]++;
        report.rows.push_back(std::move(row));
      }
    }
  }
  report.summary["maps-enumerated"] = total;
  return report;
}

} // namespace symdyn
