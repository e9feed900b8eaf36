// Decision procedures for the property classes on finite-backed universes.
//
// On exact levels every quantifier "for any nonempty open set" reduces to
// singleton basis elements (the hardest instances, and they are open in the
// discrete topology), which collapses the transitivity family to functional
// graph structure: a finite system is transitive iff its map is one cyclic
// permutation of the whole space. Grid levels run the definitional
// basis-quantified searches instead and never return definitive verdicts.

#pragma once

#include <set>
#include <unordered_map>

#include "hitting.hpp"
#include "level.hpp"

namespace symdyn {

enum class Property {
  Sensitive,
  CofinitelySensitive,
  MultiSensitive,
  Transitive,
  ZTransitive,
  WeaklyMixing,
  Mixing,
  TotallyTransitive,
  StronglyTransitive,
  MultiTransitive,
  TTPlusPlus,
  Touhey,
  TwoSided,
  FullyExact,
  DeltaTransitive,
  DeltaMixing,
  Accessible,
  Indecomposable,
  Minimal,
  FSystem,
  Martelli,
  TransDense,
  FullOmega,
};

namespace fin {

// ---- shared machinery ------------------------------------------------------

struct UniverseTrajectory {
  std::vector<DenseSet> states;
  int transient = 0;
  int period = 1;
  bool closed = true;
};

inline UniverseTrajectory universe_trajectory(const FiniteUniverse& u, const PointSet& start,
                                              int cap) {
  UniverseTrajectory tr;
  std::unordered_map<DenseSet, int, DenseSetHash> first;
  DenseSet cur = DenseSet::from_points(u.count, start);
  while ((int)tr.states.size() <= cap) {
    auto it = first.find(cur);
    if (it != first.end()) {
      tr.transient = it->second;
      tr.period = (int)tr.states.size() - it->second;
      return tr;
    }
    first.emplace(cur, (int)tr.states.size());
    tr.states.push_back(cur);
    cur = cur.image(u.map);
  }
  tr.closed = false;
  return tr;
}

inline HittingTimeSet universe_hitting(const FiniteUniverse& u, const PointSet& from,
                                       const PointSet& to, int cap) {
  UniverseTrajectory tr = universe_trajectory(u, from, cap);
  DenseSet tgt = DenseSet::from_points(u.count, to);
  HittingTimeSet out;
  if (tr.closed) {
    out.tail_offset = std::max(1, tr.transient);
    out.period = tr.period;
    out.residues.assign(tr.period, 0);
    for (int n = 1; n < tr.transient; ++n)
      if (intersects(tr.states[n], tgt)) out.head.push_back(n);
    for (int j = 0; j < tr.period; ++j)
      if (intersects(tr.states[tr.transient + j], tgt)) out.residues[(tr.transient + j) % tr.period] = 1;
  } else {
    out.exact = false;
    out.checked_to = (long long)tr.states.size() - 1;
    for (int n = 1; n < (int)tr.states.size(); ++n)
      if (intersects(tr.states[n], tgt)) out.head.push_back(n);
  }
  return out;
}

// {f^n(x) : n >= 1} for every x.
inline std::vector<DenseSet> forward_orbit_sets(const FiniteUniverse& u) {
  std::vector<DenseSet> out;
  out.reserve(u.count);
  for (int x = 0; x < u.count; ++x) {
    DenseSet s(u.count);
    int p = x;
    for (int n = 0; n < u.count; ++n) {
      p = u.map[p];
      s.insert(p);
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<int> power_map(const std::vector<int>& f, int k) {
  std::vector<int> out((int)f.size());
  for (int i = 0; i < (int)f.size(); ++i) out[i] = i;
  for (int s = 0; s < k; ++s)
    for (int i = 0; i < (int)f.size(); ++i) out[i] = f[out[i]];
  return out;
}

inline int smallest_prime_factor(int n) {
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

// A pair (x,y) with y unreachable from x in n >= 1 steps; exists whenever the
// map is not one full cycle.
inline std::pair<int, int> unreachable_pair(const FiniteUniverse& u, const OrbitData& od) {
  if (od.cycles.size() >= 2) return {od.cycles[0][0], od.cycles[1][0]};
  for (int y = 0; y < u.count; ++y)
    if (od.cycle_id[y] < 0) return {od.cycles[0][0], y}; // transient points are never re-entered
  return {-1, -1};
}

inline std::string pair_text(const FiniteUniverse& u, int x, int y) {
  return "U={" + u.label(x) + "}, V={" + u.label(y) + "}";
}

// Interior proxy: exact discrete levels use nonemptiness; grids have no exact
// interior, so nonemptiness stands in and the verdict stays budget-bounded.
inline bool grid_interior_nonempty(const DenseSet& s) { return !s.empty(); }

// ---- transitivity family ---------------------------------------------------

inline Verdict transitive_like(const FiniteUniverse& u, const OrbitData& od, const Budget& b,
                               Property kind) {
  if (u.exact) {
    bool t = od.single_cycle;
    std::string summary = od.cycle_summary();
    switch (kind) {
      case Property::Transitive:
      case Property::Minimal:
      case Property::StronglyTransitive:
      case Property::TransDense:
      case Property::FullOmega:
      case Property::TTPlusPlus: {
        if (t) {
          std::string w;
          if (kind == Property::Transitive) w = "single cycle of length " + std::to_string(u.count) + " covers the space";
          else if (kind == Property::Minimal) w = "every orbit is the full cycle, so every point is transitive";
          else if (kind == Property::StronglyTransitive)
            w = "for every U, the union of f^i(U), 1<=i<=" + std::to_string(u.count) + ", is the whole space";
          else if (kind == Property::TransDense) w = "every point is a transitive point";
          else if (kind == Property::FullOmega)
            w = "omega(" + u.label(0) + ") is the full cycle = X";
          else w = "every hitting set contains a full residue class mod " + std::to_string(u.count);
          return Verdict::holds(w);
        }
        auto [x, y] = unreachable_pair(u, od);
        std::string w = pair_text(u, x, y) + ": no n>=1 with f^n(U) meeting V; " + summary;
        if (kind == Property::Minimal) w = "orb(" + u.label(x) + ") omits " + u.label(y) + "; " + summary;
        if (kind == Property::TransDense)
          w = u.label(x) + " is not a transitive point (orbit omits " + u.label(y) + "); on a discrete space trans(f) dense means every point is transitive";
        if (kind == Property::FullOmega)
          w = "omega-limit sets are eventual cycles; " + summary + ", none covers the space";
        if (kind == Property::StronglyTransitive)
          w = "U={" + u.label(x) + "}: the union of all forward images omits " + u.label(y);
        if (kind == Property::TTPlusPlus)
          w = pair_text(u, x, y) + ": hitting set is empty, hence finite";
        return Verdict::fails(w);
      }
      case Property::TotallyTransitive: {
        if (!t) {
          auto [x, y] = unreachable_pair(u, od);
          return Verdict::fails("already f^1 is not transitive: " + pair_text(u, x, y) + "; " + summary);
        }
        if (u.count == 1) return Verdict::holds("one-point space: every power is transitive");
        int q = smallest_prime_factor(u.count);
        return Verdict::fails("f^" + std::to_string(q) + " splits the " + std::to_string(u.count) +
                              "-cycle into " + std::to_string(q) + " cycles");
      }
      case Property::WeaklyMixing: {
        if (!t) {
          auto [x, y] = unreachable_pair(u, od);
          return Verdict::fails("quadruple U1={" + u.label(x) + "},V1={" + u.label(y) + "},U2=U1,V2=V1: no common n (the pair never hits)");
        }
        if (u.count == 1) return Verdict::holds("one-point space");
        int x = od.cycles[0][0];
        return Verdict::fails("U1=V1={" + u.label(x) + "} needs n=0 mod " + std::to_string(u.count) +
                              ", U2={" + u.label(x) + "},V2={" + u.label(u.map[x]) +
                              "} needs n=1 mod " + std::to_string(u.count) + "; no common n");
      }
      case Property::Mixing: {
        if (!t) {
          auto [x, y] = unreachable_pair(u, od);
          return Verdict::fails(pair_text(u, x, y) + ": empty hitting set cannot be cofinite");
        }
        if (u.count == 1) return Verdict::holds("one-point space");
        int x = od.cycles[0][0];
        return Verdict::fails(pair_text(u, x, u.map[x]) + ": hits exactly n=1 mod " +
                              std::to_string(u.count) + ", never cofinite");
      }
      default: break;
    }
  }
  // grid: definitional search over the basis. Transitivity scans the fine
  // basis (hits come fast); the tail- and tuple-quantified variants run on
  // the coarse net.
  const bool use_fine = kind == Property::Transitive;
  const auto& basis = use_fine ? u.basis : u.coarse;
  const auto& names = use_fine ? u.basis_names : u.coarse_names;
  switch (kind) {
    case Property::Transitive:
    case Property::TTPlusPlus:
    case Property::Mixing: {
      std::vector<UniverseTrajectory> trajs;
      trajs.reserve(basis.size());
      for (const auto& s : basis) trajs.push_back(universe_trajectory(u, s, b.horizon));
      std::vector<DenseSet> targets;
      targets.reserve(basis.size());
      for (const auto& s : basis) targets.push_back(DenseSet::from_points(u.count, s));
      bool truncated = false;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const UniverseTrajectory& tr = trajs[i];
        if (!tr.closed) {
          truncated = true;
          if (kind != Property::Transitive) continue;
        }
        for (std::size_t j = 0; j < basis.size(); ++j) {
          bool ok = false;
          if (kind == Property::Transitive) {
            for (std::size_t n = 1; n < tr.states.size() && !ok; ++n)
              if (intersects(tr.states[n], targets[j])) ok = true;
            if (!ok && !tr.closed) {
              truncated = true;
              continue;
            }
          } else if (kind == Property::TTPlusPlus) {
            for (int n = tr.transient; n < tr.transient + tr.period && !ok; ++n)
              if (intersects(tr.states[n], targets[j])) ok = true; // a cycle hit recurs forever
          } else {
            ok = true; // cofinite: every cycle state must hit
            for (int n = tr.transient; n < tr.transient + tr.period && ok; ++n)
              if (!intersects(tr.states[n], targets[j])) ok = false;
          }
          if (!ok)
            return Verdict::fails("U=" + names[i] + ", V=" + names[j] +
                                      (kind == Property::Transitive ? ": never hit"
                                       : kind == Property::TTPlusPlus ? ": only finitely many hits"
                                                                      : ": tail not cofinite"),
                                  false);
        }
      }
      if (truncated) return Verdict::unknown("subset trajectories did not close within horizon");
      return Verdict::holds("all basis pairs hit (grid evidence)", false);
    }
    case Property::WeaklyMixing: {
      std::vector<HittingTimeSet> hits;
      bool truncated = false;
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
          hits.push_back(universe_hitting(u, basis[i], basis[j], b.horizon));
          if (!hits.back().exact) truncated = true;
        }
      std::size_t nb = basis.size();
      for (std::size_t p = 0; p < hits.size(); ++p)
        for (std::size_t q = p; q < hits.size(); ++q) {
          if (hitting_intersect(hits[p], hits[q])) continue;
          if (!hits[p].exact || !hits[q].exact) return Verdict::unknown("truncated hitting sets");
          return Verdict::fails("pairs (" + names[p / nb] + "->" + names[p % nb] + ") and (" +
                                    names[q / nb] + "->" + names[q % nb] + ") have disjoint hitting sets",
                                false);
        }
      if (truncated) return Verdict::unknown("truncated hitting sets");
      return Verdict::holds("all basis quadruples share a hitting time (grid evidence)", false);
    }
    case Property::TotallyTransitive: {
      for (int k = 1; k <= b.m_max; ++k) {
        FiniteUniverse uk = u;
        uk.map = power_map(u.map, k);
        Verdict v = transitive_like(uk, od, b, Property::Transitive);
        if (v.is_fails()) return Verdict::fails("f^" + std::to_string(k) + ": " + v.detail, false);
        if (v.is_unknown()) return v;
      }
      return Verdict::holds("f^k transitive for k <= " + std::to_string(b.m_max) + " (grid evidence)",
                            false);
    }
    case Property::StronglyTransitive: {
      for (std::size_t i = 0; i < u.basis.size(); ++i) {
        UniverseTrajectory tr = universe_trajectory(u, u.basis[i], b.horizon);
        if (!tr.closed) return Verdict::unknown("trajectory did not close within horizon");
        DenseSet un(u.count);
        for (std::size_t n = 1; n < tr.states.size(); ++n)
          tr.states[n].for_each([&](int p) { un.insert(p); });
        if (un.count() != u.count)
          return Verdict::fails("U=" + u.basis_names[i] + ": union of forward images is not everything",
                                false);
      }
      return Verdict::holds("union of forward images covers the space for every basis set", false);
    }
    default: break;
  }
  return Verdict::unknown("unhandled");
}

inline Verdict detect_z_transitive(const FiniteUniverse& u, const OrbitData& od, const Budget& b) {
  if (u.exact) {
    std::vector<DenseSet> reach = forward_orbit_sets(u);
    for (int x = 0; x < u.count; ++x)
      for (int y = x + 1; y < u.count; ++y)
        if (!reach[x].test(y) && !reach[y].test(x))
          return Verdict::fails(pair_text(u, x, y) + ": no n in Z with f^n(U) meeting V (neither reaches the other); " + od.cycle_summary());
    return Verdict::holds("every pair of points is connected by a forward orbit in one direction");
  }
  std::vector<UniverseTrajectory> trajs;
  std::vector<DenseSet> targets;
  for (const auto& s : u.basis) {
    trajs.push_back(universe_trajectory(u, s, b.horizon));
    targets.push_back(DenseSet::from_points(u.count, s));
  }
  auto hits = [&](std::size_t i, std::size_t j) {
    for (std::size_t n = 1; n < trajs[i].states.size(); ++n)
      if (intersects(trajs[i].states[n], targets[j])) return true;
    return false;
  };
  for (std::size_t i = 0; i < u.basis.size(); ++i)
    for (std::size_t j = i; j < u.basis.size(); ++j) {
      if (intersects(u.basis[i], u.basis[j])) continue; // n = 0
      if (hits(i, j) || hits(j, i)) continue;
      if (!trajs[i].closed || !trajs[j].closed) return Verdict::unknown("truncated hitting sets");
      return Verdict::fails("U=" + u.basis_names[i] + ", V=" + u.basis_names[j] +
                                ": empty hitting sets in both directions",
                            false);
    }
  return Verdict::holds("all basis pairs are Z-connected (grid evidence)", false);
}

inline Verdict detect_multi_transitive(const FiniteUniverse& u, const OrbitData& od, const Budget& b) {
  Verdict t = transitive_like(u, od, b, Property::Transitive);
  if (t.is_fails()) return Verdict::fails("m=1: " + t.detail, t.definitive);
  if (t.is_unknown()) return t;
  if (!u.exact) return Verdict::unknown("higher arities not checked on grid backends");
  for (int m = 2; m <= b.m_max; ++m) {
    double size = 1;
    for (int i = 0; i < m; ++i) size *= u.count;
    if (size > 2e6) return Verdict::unknown("tuple space too large for m=" + std::to_string(m));
    // g = f x f^2 x ... x f^m on X^m, transitive iff one full cycle
    std::vector<std::vector<int>> pows;
    for (int i = 1; i <= m; ++i) pows.push_back(power_map(u.map, i));
    long long total = (long long)(size + 0.5);
    std::vector<int> g(total);
    for (long long idx = 0; idx < total; ++idx) {
      long long rest = idx, out = 0, mul = 1;
      for (int i = 0; i < m; ++i) {
        int coord = (int)(rest % u.count);
        rest /= u.count;
        out += (long long)pows[i][coord] * mul;
        mul *= u.count;
      }
      g[idx] = (int)out;
    }
    OrbitData og(g);
    if (!og.single_cycle)
      return Verdict::fails("f x f^2 x ... x f^" + std::to_string(m) + " is not transitive: " +
                            og.cycle_summary());
  }
  return Verdict::holds("f x ... x f^m transitive for m <= " + std::to_string(b.m_max) +
                            " (arity budget; the quantifier over all m stays open)",
                        false);
}

// ---- sensitivity family ----------------------------------------------------

struct SeparationScan {
  bool found = false;
  int x = -1, y = -1, n = -1;
  Rational value;
};

// Largest pairwise separation reached by iterates of (a subsample of) U.
inline SeparationScan separation_scan(const FiniteUniverse& u, const PointSet& set,
                                      const Rational& threshold, const Budget& b) {
  std::vector<int> pts(set.members().begin(), set.members().end());
  if ((int)pts.size() > b.witness_points) {
    std::vector<int> sub;
    double step = (double)pts.size() / b.witness_points;
    for (int i = 0; i < b.witness_points; ++i) sub.push_back(pts[(std::size_t)(i * step)]);
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    pts = std::move(sub);
  }
  std::vector<int> cur = pts;
  SeparationScan best;
  for (int n = 1; n <= b.sens_horizon; ++n) {
    for (auto& p : cur) p = u.map[p];
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        Rational d = u.dist(cur[i], cur[j]);
        if (!best.found || d > best.value) {
          best.found = true;
          best.value = d;
          best.x = pts[i];
          best.y = pts[j];
          best.n = n;
        }
        if (best.found && best.value > threshold) return best;
      }
  }
  return best;
}

inline Verdict detect_sensitive(const FiniteUniverse& u, const Budget& b, Property kind) {
  if (u.exact) {
    // Some basis element is a singleton {x}; its only pair is (x,x) at
    // distance 0 for every iterate, so no delta > 0 works.
    for (std::size_t i = 0; i < u.basis.size(); ++i)
      if (u.basis[i].size() == 1)
        return Verdict::fails("basis set " + u.basis_names[i] +
                              " is a singleton: the only pair it admits never separates, for any delta > 0");
    return Verdict::unknown("exact level without singleton basis sets");
  }
  std::vector<Rational> deltas = b.delta_grid(u.diameter, u.resolution, false);
  for (const Rational& delta : deltas) {
    bool all = true;
    std::string witness;
    int bigN = 0;
    for (std::size_t i = 0; i < u.basis.size() && all; ++i) {
      SeparationScan s = separation_scan(u, u.basis[i], delta, b);
      if (!(s.found && s.value > delta)) {
        all = false;
        break;
      }
      bigN = std::max(bigN, s.n);
      if (i == 0)
        witness = "U=" + u.basis_names[i] + ": d(f^" + std::to_string(s.n) + "(" + u.label(s.x) +
                  "),f^" + std::to_string(s.n) + "(" + u.label(s.y) + ")) = " + s.value.str();
    }
    if (!all) continue;
    if (kind == Property::Sensitive)
      return Verdict::holds("delta=" + delta.str() + "; " + witness, false);
    if (kind == Property::CofinitelySensitive) {
      // check the tail: every basis set keeps separating for all n in (N, horizon]
      bool tail = true;
      for (std::size_t i = 0; i < u.basis.size() && tail; ++i) {
        std::vector<int> pts(u.basis[i].members().begin(), u.basis[i].members().end());
        if ((int)pts.size() > b.witness_points) pts.resize(b.witness_points);
        std::vector<int> cur = pts;
        for (int n = 1; n <= b.sens_horizon && tail; ++n) {
          for (auto& p : cur) p = u.map[p];
          if (n <= bigN) continue;
          Rational worst(0);
          for (std::size_t a = 0; a < cur.size(); ++a)
            for (std::size_t c = a + 1; c < cur.size(); ++c)
              if (u.dist(cur[a], cur[c]) > worst) worst = u.dist(cur[a], cur[c]);
          if (!(worst > delta)) tail = false;
        }
      }
      if (tail)
        return Verdict::holds("delta=" + delta.str() + ", N=" + std::to_string(bigN) +
                                  ": separation persists to the horizon",
                              false);
      continue;
    }
    if (kind == Property::MultiSensitive) {
      // N(U_i, delta) all contain the hit times found above; intersect over
      // coarse tuples by rescanning at a common n
      bool ok = true;
      for (std::size_t i = 0; i < u.coarse.size() && ok; ++i) {
        SeparationScan s = separation_scan(u, u.coarse[i], delta, b);
        ok = s.found && s.value > delta;
      }
      if (ok)
        return Verdict::holds("delta=" + delta.str() + ": every coarse basis set separates within the horizon",
                              false);
      continue;
    }
  }
  return Verdict::unknown("no separation witness within budget");
}

// ---- collision-based properties (accessible, fully exact) ------------------

inline Verdict detect_collision_property(const FiniteUniverse& u, const OrbitData& od,
                                         const Budget& b, Property kind) {
  if (u.exact) {
    for (int x = 0; x < u.count; ++x)
      for (int y = x + 1; y < u.count; ++y)
        if (od.merge_class[x] != od.merge_class[y]) {
          std::string w = pair_text(u, x, y) + ": the orbits never meet (distinct eventual cycles or phases)";
          if (kind == Property::Accessible)
            w += "; at epsilon below the resolution, accessibility needs f^n(x) = f^n(y)";
          else
            w += "; f^k(U) and f^k(V) stay disjoint for every k";
          return Verdict::fails(w);
        }
    std::string w = "all orbits merge by step " + std::to_string(u.count);
    return Verdict::holds(w);
  }
  std::vector<Rational> eps = b.eps_grid(u.diameter, u.resolution, false);
  for (std::size_t i = 0; i < u.coarse.size(); ++i)
    for (std::size_t j = 0; j < u.coarse.size(); ++j) {
      if (kind == Property::FullyExact) {
        // int[f^k(U) meet f^k(V)] with the grid interior proxy
        UniverseTrajectory ti = universe_trajectory(u, u.coarse[i], b.horizon);
        UniverseTrajectory tj = universe_trajectory(u, u.coarse[j], b.horizon);
        bool found = false;
        for (int k = 1; k < (int)std::min(ti.states.size(), tj.states.size()) && !found; ++k) {
          DenseSet inter(u.count);
          bool any = false;
          ti.states[k].for_each([&](int p) {
            if (tj.states[k].test(p)) any = true;
          });
          if (any) found = true;
          (void)inter;
        }
        if (!found) {
          if (!ti.closed || !tj.closed) return Verdict::unknown("trajectories did not close");
          return Verdict::fails("U=" + u.coarse_names[i] + ", V=" + u.coarse_names[j] +
                                    ": images never intersect",
                                false);
        }
      } else {
        // accessible: some pair comes epsilon-close at a common time
        const Rational& tight = eps.back();
        std::vector<int> a(u.coarse[i].members().begin(), u.coarse[i].members().end());
        std::vector<int> c(u.coarse[j].members().begin(), u.coarse[j].members().end());
        if ((int)a.size() > b.witness_points) a.resize(b.witness_points);
        if ((int)c.size() > b.witness_points) c.resize(b.witness_points);
        bool found = false;
        for (int n = 1; n <= b.sens_horizon && !found; ++n) {
          for (auto& p : a) p = u.map[p];
          for (auto& p : c) p = u.map[p];
          for (int pa : a) {
            for (int pc : c)
              if (u.dist(pa, pc) < tight) {
                found = true;
                break;
              }
            if (found) break;
          }
        }
        if (!found) return Verdict::unknown("no epsilon-approach within budget");
      }
    }
  if (kind == Property::FullyExact)
    return Verdict::holds("images of every coarse pair intersect (grid interior proxy)", false);
  return Verdict::holds("every coarse pair comes within the smallest epsilon (grid evidence)", false);
}

// ---- remaining global properties -------------------------------------------

inline Verdict detect_indecomposable(const FiniteUniverse& u, const OrbitData&) {
  if (!u.exact) return Verdict::unknown("exact only on the finite backend");
  // Orbit closures O(x) are the minimal +invariant sets with nonempty
  // interior on a discrete space; indecomposability is their pairwise
  // intersection.
  std::vector<DenseSet> cl = forward_orbit_sets(u);
  for (int x = 0; x < u.count; ++x) cl[x].insert(x);
  for (int x = 0; x < u.count; ++x)
    for (int y = x + 1; y < u.count; ++y)
      if (!intersects(cl[x], cl[y]))
        return Verdict::fails("invariant sets A=orb(" + u.label(x) + "), B=orb(" + u.label(y) +
                              ") are disjoint with nonempty interior");
  return Verdict::holds("all orbit closures pairwise intersect");
}

inline Verdict detect_two_sided(const FiniteUniverse& u, const OrbitData& od, const Budget& b) {
  if (!u.is_bijection) {
    std::string w = "not a homeomorphism (the map is not injective)";
    for (int x = 0; x < u.count && u.exact; ++x)
      for (int y = x + 1; y < u.count; ++y)
        if (u.map[x] == u.map[y]) {
          w += ": f(" + u.label(x) + ") = f(" + u.label(y) + ")";
          y = x = u.count;
          break;
        }
    return Verdict::fails(w);
  }
  if (u.exact) {
    if (od.single_cycle)
      return Verdict::holds("the two-sided orbit of " + u.label(0) + " is the full cycle");
    return Verdict::fails("every two-sided orbit stays inside its own cycle; " + od.cycle_summary());
  }
  (void)b;
  for (const auto& cyc : od.cycles) {
    DenseSet s(u.count);
    for (int p : cyc) s.insert(p);
    bool dense = true;
    for (const auto& bs : u.basis)
      if (!intersects(s, DenseSet::from_points(u.count, bs))) {
        dense = false;
        break;
      }
    if (dense)
      return Verdict::holds("orbit of " + u.label(cyc[0]) + " meets every basis set (grid evidence)",
                            false);
  }
  return Verdict::fails("no cycle meets every basis set", false);
}

inline Verdict detect_f_system(const FiniteUniverse& u, const OrbitData& od, const Budget& b) {
  Verdict tot = transitive_like(u, od, b, Property::TotallyTransitive);
  if (tot.is_fails()) return Verdict::fails("not totally transitive: " + tot.detail, tot.definitive);
  if (tot.is_unknown()) return tot;
  if (u.exact) {
    for (int x = 0; x < u.count; ++x)
      if (od.cycle_id[x] < 0)
        return Verdict::fails("Per(f) is not dense: " + u.label(x) + " is not periodic and is open");
    return Verdict::holds("totally transitive and every point is periodic");
  }
  DenseSet per(u.count);
  for (const auto& cyc : od.cycles)
    for (int p : cyc) per.insert(p);
  for (std::size_t i = 0; i < u.basis.size(); ++i)
    if (!intersects(per, DenseSet::from_points(u.count, u.basis[i])))
      return Verdict::fails("periodic points miss basis set " + u.basis_names[i], false);
  return Verdict::holds("totally transitive (budget) and periodic points meet every basis set", false);
}

inline Verdict detect_touhey(const FiniteUniverse& u, const OrbitData& od, const Budget&) {
  if (u.exact) {
    for (int x = 0; x < u.count; ++x) {
      if (od.cycle_id[x] < 0)
        return Verdict::fails("U={" + u.label(x) + "} contains no periodic point");
      if ((int)od.cycles[od.cycle_id[x]].size() != u.count) {
        for (int y = 0; y < u.count; ++y)
          if (od.cycle_id[y] != od.cycle_id[x])
            return Verdict::fails("the periodic orbit of " + u.label(x) + " never visits {" +
                                  u.label(y) + "}");
      }
    }
    return Verdict::holds("every point is periodic on the full cycle, so every pair (U,V) is served");
  }
  for (std::size_t i = 0; i < u.coarse.size(); ++i)
    for (std::size_t j = 0; j < u.coarse.size(); ++j) {
      bool served = false;
      for (int x : u.coarse[i]) {
        if (od.cycle_id[x] < 0) continue;
        for (int y : od.cycles[od.cycle_id[x]])
          if (u.coarse[j].contains(y)) {
            served = true;
            break;
          }
        if (served) break;
      }
      if (!served)
        return Verdict::fails("no periodic point of U=" + u.coarse_names[i] + " ever enters V=" +
                                  u.coarse_names[j],
                              false);
    }
  return Verdict::holds("every coarse pair is served by a periodic point (grid evidence)", false);
}

inline Verdict detect_martelli(const FiniteUniverse& u, const OrbitData& od, const Budget& b) {
  if (u.exact)
    return Verdict::fails(
        "no orbit is unstable: each x has the neighborhood {x}, which admits only y=x with d(f^n(x),f^n(y))=0");
  // transitive point with an unstable orbit, at grid resolution
  std::vector<Rational> deltas = b.delta_grid(u.diameter, u.resolution, false);
  for (int x = 0; x < u.count; ++x) {
    DenseSet orbit(u.count);
    int p = x;
    for (int n = 0; n <= u.count; ++n) {
      orbit.insert(p);
      p = u.map[p];
    }
    bool dense = true;
    for (const auto& bs : u.basis)
      if (!intersects(orbit, DenseSet::from_points(u.count, bs))) {
        dense = false;
        break;
      }
    if (!dense) continue;
    for (const Rational& delta : deltas) {
      Rational threshold = arctan_lower_bound(delta);
      bool unstable = true;
      for (std::size_t i = 0; i < u.basis.size() && unstable; ++i) {
        if (!u.basis[i].contains(x)) continue;
        bool found = false;
        std::vector<int> pts(u.basis[i].members().begin(), u.basis[i].members().end());
        if ((int)pts.size() > b.witness_points) pts.resize(b.witness_points);
        std::vector<int> cur = pts;
        int cx = x;
        for (int n = 1; n <= b.sens_horizon && !found; ++n) {
          cx = u.map[cx];
          for (auto& q : cur) q = u.map[q];
          for (int q : cur)
            if (u.dist(cx, q) > threshold) {
              found = true;
              break;
            }
        }
        unstable = found;
      }
      if (unstable)
        return Verdict::holds("x=" + u.label(x) + " has a dense orbit (at basis resolution) and is unstable with arctan(delta) >= " +
                                  threshold.str(),
                              false);
    }
  }
  (void)od;
  return Verdict::unknown("no unstable dense orbit found within budget");
}

inline Verdict detect_minimal_like(const FiniteUniverse& u, const OrbitData& od, const Budget& b,
                                   Property kind) {
  if (u.exact) return transitive_like(u, od, b, kind);
  // every point transitive (minimal), transitive points dense (trans_dense),
  // or some omega-limit covering everything (full_omega), at basis resolution
  auto orbit_dense = [&](int x, bool cycle_only) {
    DenseSet s(u.count);
    int p = x;
    for (int n = 0; n <= u.count; ++n) {
      if (!cycle_only || od.cycle_id[p] >= 0) s.insert(p);
      p = u.map[p];
    }
    for (const auto& bs : u.basis)
      if (!intersects(s, DenseSet::from_points(u.count, bs))) return false;
    return true;
  };
  switch (kind) {
    case Property::Minimal: {
      for (int x = 0; x < u.count; ++x)
        if (!orbit_dense(x, false))
          return Verdict::fails("orbit of " + u.label(x) + " misses a basis set", false);
      return Verdict::holds("every orbit meets every basis set (grid evidence)", false);
    }
    case Property::TransDense: {
      for (std::size_t i = 0; i < u.basis.size(); ++i) {
        bool any = false;
        for (int x : u.basis[i])
          if (orbit_dense(x, false)) {
            any = true;
            break;
          }
        if (!any)
          return Verdict::fails("basis set " + u.basis_names[i] + " contains no transitive point",
                                false);
      }
      return Verdict::holds("transitive points meet every basis set (grid evidence)", false);
    }
    default: { // FullOmega
      for (int x = 0; x < u.count; ++x)
        if (orbit_dense(x, true))
          return Verdict::holds("omega(" + u.label(x) + ") meets every basis set (grid evidence)",
                                false);
      return Verdict::fails("no omega-limit set meets every basis set", false);
    }
  }
}

inline Verdict detect_delta_transitive(const FiniteUniverse& u, const OrbitData& od, const Budget& b,
                                       bool mixing_variant) {
  if (!u.exact) return Verdict::unknown("dense-subset quantifier not decided on grid backends");
  // Dense subsets of a discrete space are the whole space, so check every y.
  for (int m = 1; m <= b.m_max; ++m) {
    for (int y = 0; y < u.count; ++y) {
      // tuple set {(f^k(y), f^{2k}(y), ..., f^{mk}(y)) : k >= 0}
      std::set<std::vector<int>> tuples;
      int span = od.transient[y] + od.period[y] + 1;
      std::vector<std::vector<int>> pows;
      for (int i = 1; i <= m; ++i) pows.push_back(power_map(u.map, i));
      std::vector<int> state(m, y);
      for (int k = 0; k < span; ++k) {
        tuples.insert(state);
        for (int i = 0; i < m; ++i) state[i] = pows[i][state[i]];
      }
      double need = 1;
      for (int i = 0; i < m; ++i) need *= u.count;
      if ((double)tuples.size() < need) {
        std::string which = mixing_variant ? "(with B = Z_+)" : "";
        return Verdict::fails("m=" + std::to_string(m) + ", y=" + u.label(y) + ": the diagonal orbit has " +
                              std::to_string(tuples.size()) + " tuples, X^" + std::to_string(m) +
                              " needs " + std::to_string((long long)need) + " " + which);
      }
    }
  }
  return Verdict::holds("diagonal orbits dense for every arity m <= " + std::to_string(b.m_max) +
                            " (arity budget; the quantifier over all m stays open)",
                        false);
}

// ---- dispatcher -------------------------------------------------------------

inline Verdict detect_finite(const FiniteUniverse& u, const Budget& b, Property kind) {
  OrbitData od(u.map);
  switch (kind) {
    case Property::Sensitive:
    case Property::CofinitelySensitive:
    case Property::MultiSensitive: {
      Verdict v = detect_sensitive(u, b, kind);
      if (kind == Property::MultiSensitive && v.is_holds())
        v.definitive = false; // the arity quantifier stays open by policy
      return v;
    }
    case Property::Transitive:
    case Property::WeaklyMixing:
    case Property::Mixing:
    case Property::TotallyTransitive:
    case Property::StronglyTransitive:
    case Property::TTPlusPlus:
      return transitive_like(u, od, b, kind);
    case Property::ZTransitive:
      return detect_z_transitive(u, od, b);
    case Property::MultiTransitive: {
      Verdict v = detect_multi_transitive(u, od, b);
      if (v.is_holds()) v.definitive = false;
      return v;
    }
    case Property::Touhey:
      return detect_touhey(u, od, b);
    case Property::TwoSided:
      return detect_two_sided(u, od, b);
    case Property::FullyExact:
    case Property::Accessible:
      return detect_collision_property(u, od, b, kind);
    case Property::DeltaTransitive: {
      Verdict v = detect_delta_transitive(u, od, b, false);
      if (v.is_holds()) v.definitive = false;
      return v;
    }
    case Property::DeltaMixing: {
      Verdict v = detect_delta_transitive(u, od, b, true);
      if (v.is_holds()) v.definitive = false;
      return v;
    }
    case Property::Indecomposable:
      return detect_indecomposable(u, od);
    case Property::Minimal:
    case Property::TransDense:
    case Property::FullOmega:
      return detect_minimal_like(u, od, b, kind);
    case Property::FSystem:
      return detect_f_system(u, od, b);
    case Property::Martelli:
      return detect_martelli(u, od, b);
  }
  return Verdict::unknown("unhandled property");
}

} // namespace fin

// ---- point classes ----------------------------------------------------------

enum class PointClass { Periodic, QuasiPeriodic, Recurrent, Nonwandering, TransitivePoint };

inline Verdict classify_point_finite(const FiniteUniverse& u, const OrbitData& od, PointId x,
                                     PointClass kind) {
  bool periodic = od.cycle_id[x] >= 0;
  switch (kind) {
    case PointClass::Periodic:
    case PointClass::QuasiPeriodic:
    case PointClass::Recurrent:
    case PointClass::Nonwandering: {
      // On a discrete space the neighborhood {x} forces f^m(x) = x for all
      // four notions, so each reduces to periodicity.
      if (periodic) {
        std::string why = "f^" + std::to_string(od.period[x]) + "(" + u.label(x) + ") = " + u.label(x);
        return Verdict::holds(why, u.exact);
      }
      return Verdict::fails("orbit never returns to " + u.label(x) + " (transient " +
                                std::to_string(od.transient[x]) + ")",
                            u.exact);
    }
    case PointClass::TransitivePoint: {
      DenseSet orbit(u.count);
      int p = x;
      for (int n = 0; n <= u.count; ++n) {
        orbit.insert(p);
        p = u.map[p];
      }
      if (u.exact) {
        if (orbit.count() == u.count) return Verdict::holds("orb(" + u.label(x) + ") covers the space");
        for (int y = 0; y < u.count; ++y)
          if (!orbit.test(y))
            return Verdict::fails("orb(" + u.label(x) + ") omits " + u.label(y));
      }
      for (const auto& bs : u.basis)
        if (!intersects(orbit, DenseSet::from_points(u.count, bs)))
          return Verdict::fails("orbit misses a basis set", false);
      return Verdict::holds("orbit meets every basis set (grid evidence)", false);
    }
  }
  return Verdict::unknown("unhandled point class");
}

inline Verdict classify_point_finite(const FiniteUniverse& u, PointId x, PointClass kind) {
  OrbitData od(u.map);
  return classify_point_finite(u, od, x, kind);
}

// omega(x): the eventual cycle of x's orbit.
inline PointSet omega_limit_finite(const FiniteUniverse& u, PointId x) {
  OrbitData od(u.map);
  int p = x;
  for (int i = 0; i < od.transient[x]; ++i) p = u.map[p];
  std::vector<PointId> cyc;
  for (int i = 0; i < od.period[x]; ++i) {
    cyc.push_back(p);
    p = u.map[p];
  }
  return PointSet(std::move(cyc));
}

} // namespace symdyn
