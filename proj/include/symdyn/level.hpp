// The three detector levels of a finite-backed system presented uniformly:
// points, an endomap table, an exact rational metric, and a generated basis.
//
// Exact (finite-backend) levels keep every singleton open in the basis, which
// is what makes the quantifier "for any nonempty open set" decidable by
// reduction to singletons. Grid-backed levels carry a coarser covering net
// and are flagged non-exact; every verdict derived from them stays
// budget-bounded.

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "suspension.hpp"
#include "verdict.hpp"

namespace symdyn {

enum class Level { Base, Product, Suspension };

inline const char* level_name(Level l) {
  switch (l) {
    case Level::Base: return "base";
    case Level::Product: return "product";
    default: return "suspension";
  }
}

struct FiniteUniverse {
  std::string desc;
  int count = 0;
  std::vector<int> map;
  std::function<Rational(int, int)> dist;
  std::vector<PointSet> basis;
  std::vector<std::string> basis_names;
  // Coarse sub-basis for quantifiers over many sets at once (= basis on
  // exact levels, a small net on grids).
  std::vector<PointSet> coarse;
  std::vector<std::string> coarse_names;
  bool exact = true;
  bool is_bijection = false;
  std::vector<std::string> labels;
  Rational diameter;
  Rational resolution; // min positive distance; computed for exact levels only

  std::string label(int p) const { return labels.empty() ? std::to_string(p) : labels[p]; }
};

// Functional-graph data shared by the exact detectors.
struct OrbitData {
  std::vector<int> transient;  // per point
  std::vector<int> period;     // per point: length of its eventual cycle
  std::vector<int> cycle_id;   // -1 off-cycle
  std::vector<int> cycle_pos;  // position within its cycle (on-cycle points)
  std::vector<std::vector<int>> cycles;
  std::vector<int> merge_class; // f^count applied to each point: orbits collide iff equal
  bool single_cycle = false;    // map is one cyclic permutation of everything

  explicit OrbitData(const std::vector<int>& f) {
    const int n = (int)f.size();
    transient.assign(n, -1);
    period.assign(n, -1);
    cycle_id.assign(n, -1);
    cycle_pos.assign(n, -1);
    std::vector<int> color(n, 0); // 0 unseen, 1 in progress, 2 done
    for (int s = 0; s < n; ++s) {
      if (color[s]) continue;
      std::vector<int> path;
      int x = s;
      while (color[x] == 0) {
        color[x] = 1;
        path.push_back(x);
        x = f[x];
      }
      if (color[x] == 1) {
        // new cycle discovered along this path
        int cid = (int)cycles.size();
        cycles.emplace_back();
        std::size_t k = 0;
        while (path[k] != x) ++k;
        for (std::size_t i = k; i < path.size(); ++i) {
          cycle_id[path[i]] = cid;
          cycle_pos[path[i]] = (int)(i - k);
          cycles[cid].push_back(path[i]);
        }
      }
      for (auto it = path.rbegin(); it != path.rend(); ++it) {
        int p = *it;
        if (cycle_id[p] >= 0) {
          transient[p] = 0;
          period[p] = (int)cycles[cycle_id[p]].size();
        } else {
          transient[p] = transient[f[p]] + 1;
          period[p] = period[f[p]];
        }
        color[p] = 2;
      }
    }
    merge_class.resize(n);
    {
      std::vector<int> cur(n), next(n);
      for (int i = 0; i < n; ++i) cur[i] = i;
      for (int step = 0; step < n; ++step) {
        for (int i = 0; i < n; ++i) next[i] = f[cur[i]];
        cur.swap(next);
      }
      merge_class = cur;
    }
    single_cycle = (int)cycles.size() == 1 && (int)cycles[0].size() == n;
  }

  // N_f({x},{y}): at most one transient hit plus at most one residue class.
  HittingTimeSet pair_hits(const std::vector<int>& f, int x, int y) const {
    HittingTimeSet out;
    out.tail_offset = transient[x] == 0 ? 1 : transient[x];
    out.period = period[x];
    out.residues.assign(period[x], 0);
    int p = x;
    for (int n = 1; n < transient[x]; ++n) {
      p = f[p];
      if (p == y) out.head.push_back(n);
    }
    if (cycle_id[y] >= 0) {
      int land = iterate_to_cycle(f, x);
      if (cycle_id[y] == cycle_id[land]) {
        int len = period[x];
        int shift = ((cycle_pos[y] - cycle_pos[land]) % len + len) % len;
        out.residues[(transient[x] + shift) % len] = 1;
        // That residue class first fires at n = transient + shift, or one
        // period later when that lands on n = 0.
        if (transient[x] + shift == 0) out.tail_offset = len;
        else out.tail_offset = std::max<long long>(out.tail_offset, 1);
      }
    }
    return out;
  }

  int iterate_to_cycle(const std::vector<int>& f, int x) const {
    int p = x;
    for (int i = 0; i < transient[x]; ++i) p = f[p];
    return p;
  }

  std::string cycle_summary() const {
    std::map<int, int> by_len;
    for (const auto& c : cycles) by_len[(int)c.size()]++;
    std::string s = std::to_string(cycles.size()) + " cycle(s):";
    for (auto [len, cnt] : by_len) s += " " + std::to_string(cnt) + "x len " + std::to_string(len);
    return s;
  }
};

namespace detail {

inline std::vector<Rational> radius_lattice(const Rational& diameter, int levels) {
  std::vector<Rational> out;
  Rational r = diameter;
  for (int k = 1; k <= levels; ++k) {
    r = r * Rational(1, 2);
    if (r.is_zero()) break;
    out.push_back(r);
  }
  if (out.empty()) out.push_back(Rational(1));
  return out;
}

inline void dedupe_push(std::vector<PointSet>& sets, std::vector<std::string>& names,
                        std::map<PointSet, int>& seen, PointSet s, std::string name) {
  if (s.empty()) return;
  if (seen.count(s)) return;
  seen.emplace(s, (int)sets.size());
  sets.push_back(std::move(s));
  names.push_back(std::move(name));
}

} // namespace detail

inline FiniteUniverse base_universe(const FiniteDynSystem& sys) {
  FiniteUniverse u;
  u.desc = sys.name + " base";
  u.count = sys.space.count();
  u.map = sys.map.table;
  u.exact = sys.backend == Backend::Finite;
  u.is_bijection = sys.map.is_bijection;
  const MetricSpace* sp = &sys.space;
  u.dist = [sp](int a, int b) { return sp->dist(a, b); };
  u.basis = sys.basis;
  u.basis_names = sys.basis_names;
  for (int i = 0; i < u.count; ++i) u.labels.push_back(sys.space.label(i));
  u.diameter = sys.space.diameter();
  u.resolution = sys.space.resolution();
  if (u.exact) {
    u.coarse = u.basis;
    u.coarse_names = u.basis_names;
  } else {
    // widest two radius levels, centers one radius apart
    std::map<PointSet, int> seen;
    for (const Rational& r : detail::radius_lattice(u.diameter, 2)) {
      Rational cells = r / sys.space.resolution();
      int spacing = (int)std::max(1LL, cells.num() / cells.den());
      for (int c = 0; c < u.count; c += spacing)
        detail::dedupe_push(u.coarse, u.coarse_names, seen, ball(sys.space, c, r),
                            "B(" + std::to_string(c) + "," + r.str() + ")");
    }
  }
  return u;
}

// Vietoris basis over the product: <U_1,...,U_k> for k = 1..n with parts
// drawn from the base basis (coarse parts on grids), realized as point sets
// of product-element indices.
inline FiniteUniverse product_universe(const SymmetricProduct& hp) {
  const FiniteDynSystem& sys = hp.base();
  FiniteUniverse u;
  u.desc = sys.name + " product n=" + std::to_string(hp.n());
  u.count = hp.count();
  u.map = hp.induced_table();
  u.exact = sys.backend == Backend::Finite;
  u.is_bijection = sys.map.is_bijection;
  const SymmetricProduct* h = &hp;
  if (u.count <= 512) {
    auto cache = std::make_shared<std::vector<Rational>>();
    cache->reserve((std::size_t)u.count * u.count);
    for (int i = 0; i < u.count; ++i)
      for (int j = 0; j < u.count; ++j) cache->push_back(hp.dist(i, j));
    int n = u.count;
    u.dist = [cache, n](int a, int b) { return (*cache)[(std::size_t)a * n + b]; };
  } else {
    u.dist = [h](int a, int b) { return h->dist(a, b); };
  }
  for (int i = 0; i < u.count; ++i) u.labels.push_back(hp.element(i).str());
  u.diameter = sys.space.diameter(); // singleton pairs realize base distances
  if (u.exact) {
    Rational res(0);
    for (int i = 0; i < u.count; ++i)
      for (int j = i + 1; j < u.count; ++j) {
        Rational d = u.dist(i, j);
        if (res.is_zero() || d < res) res = d;
      }
    u.resolution = res;
  }

  const std::vector<PointSet>& parts = u.exact ? sys.basis : [&] {
    FiniteUniverse b = base_universe(sys);
    return b.coarse;
  }();
  const std::vector<std::string>* part_names = nullptr;
  std::vector<std::string> grid_part_names;
  if (u.exact) part_names = &sys.basis_names;
  else {
    FiniteUniverse b = base_universe(sys);
    grid_part_names = b.coarse_names;
    part_names = &grid_part_names;
  }

  std::map<PointSet, int> seen;
  auto add = [&](const std::vector<int>& pick) {
    VietorisBasisElement v;
    std::string nm = "<";
    for (std::size_t t = 0; t < pick.size(); ++t) {
      v.parts.push_back(parts[pick[t]]);
      nm += (t ? "," : "") + (*part_names)[pick[t]];
    }
    detail::dedupe_push(u.basis, u.basis_names, seen, vietoris_point_set(hp, v), nm + ">");
  };
  // Exact levels need every arity up to n so each element {a_1,..,a_k} stays
  // an open set via <{a_1},...,{a_k}>; grids stop at pairs.
  int kmax = u.exact ? std::min(hp.n(), 4) : std::min(hp.n(), 2);
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!pick.empty()) add(pick);
    if ((int)pick.size() == kmax) return;
    for (std::size_t i = from; i < parts.size(); ++i) {
      pick.push_back((int)i);
      self(self, i);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  if (u.exact && hp.n() > 4) u.exact = false; // basis no longer reaches every singleton
  u.coarse = u.basis;
  u.coarse_names = u.basis_names;
  return u;
}

// Suspension basis: q-images of Vietoris elements with pairwise disjoint
// parts (these avoid the basepoint and q is injective on them), plus
// rho-balls around the basepoint.
inline FiniteUniverse suspension_universe(const SuspensionSpace& sp) {
  const SymmetricProduct& hp = sp.product();
  const FiniteDynSystem& sys = hp.base();
  FiniteUniverse u;
  u.desc = sys.name + " suspension n=" + std::to_string(hp.n());
  u.count = sp.count();
  u.map = sp.induced_table();
  u.exact = sys.backend == Backend::Finite;
  const SuspensionSpace* s = &sp;
  u.is_bijection = [&] {
    std::vector<char> hit(u.count, 0);
    for (int v : u.map) {
      if (hit[v]) return false;
      hit[v] = 1;
    }
    return true;
  }();
  if (u.count <= 512) {
    auto cache = std::make_shared<std::vector<Rational>>();
    cache->reserve((std::size_t)u.count * u.count);
    for (int i = 0; i < u.count; ++i)
      for (int j = 0; j < u.count; ++j) cache->push_back(sp.rho(i, j));
    int n = u.count;
    u.dist = [cache, n](int a, int b) { return (*cache)[(std::size_t)a * n + b]; };
  } else {
    u.dist = [s](int a, int b) { return s->rho(a, b); };
  }
  for (int i = 0; i < u.count; ++i) u.labels.push_back(sp.label(i));
  u.diameter = sys.space.diameter();
  if (u.exact) {
    Rational res(0);
    for (int i = 0; i < u.count; ++i)
      for (int j = i + 1; j < u.count; ++j) {
        Rational d = u.dist(i, j);
        if (!d.is_zero() && (res.is_zero() || d < res)) res = d;
      }
    u.resolution = res;
  }

  std::vector<PointSet> parts;
  std::vector<std::string> part_names;
  if (u.exact) {
    parts = sys.basis;
    part_names = sys.basis_names;
  } else {
    FiniteUniverse b = base_universe(sys);
    parts = b.coarse;
    part_names = b.coarse_names;
  }

  std::map<PointSet, int> seen;
  auto add = [&](const std::vector<int>& pick) {
    VietorisBasisElement v;
    std::string nm = "q<";
    for (std::size_t t = 0; t < pick.size(); ++t) {
      v.parts.push_back(parts[pick[t]]);
      nm += (t ? "," : "") + part_names[pick[t]];
    }
    PointSet pm = vietoris_point_set(hp, v);
    std::vector<PointId> q_members;
    for (PointId idx : pm) q_members.push_back(sp.q(idx));
    detail::dedupe_push(u.basis, u.basis_names, seen, PointSet(std::move(q_members)), nm + ">");
  };
  int kmax = u.exact ? std::min(hp.n(), 4) : 2;
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() >= 2) add(pick);
    if ((int)pick.size() == kmax) return;
    for (std::size_t i = from; i < parts.size(); ++i) {
      bool ok = true;
      for (int t : pick)
        if (intersects(parts[t], parts[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick.push_back((int)i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  if (u.exact && hp.n() > 4) u.exact = false;
  // rho-balls around the basepoint at the radius lattice (plus one below the
  // smallest class radius on exact levels, which isolates the basepoint)
  std::vector<Rational> radii = detail::radius_lattice(u.diameter, 4);
  if (u.exact && !u.resolution.is_zero()) radii.push_back(u.resolution);
  for (const Rational& r : radii) {
    std::vector<PointId> inside;
    for (int c = 0; c < u.count; ++c)
      if (u.dist(kCollapsed, c) < r) inside.push_back(c);
    detail::dedupe_push(u.basis, u.basis_names, seen, PointSet(std::move(inside)),
                        "Brho(FX," + r.str() + ")");
  }
  u.coarse = u.basis;
  u.coarse_names = u.basis_names;
  return u;
}

} // namespace symdyn
