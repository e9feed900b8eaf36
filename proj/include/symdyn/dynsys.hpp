// Finite and grid-backed dynamical systems: endomaps, orbits, preimages,
// subset trajectories, and the generated open-set basis.
//
// The `finite` backend is exact: its basis contains every singleton ball, so
// quantifiers over nonempty open sets reduce to basis elements without loss.
// The `grid` backend models an interval or circle map on a lattice; its basis
// stops at a configured resolution and every verdict derived from it is
// budget-bounded rather than definitive.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "metric_space.hpp"
#include "point_set.hpp"

namespace symdyn {

enum class Backend { Finite, Grid, Shift };

inline const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Finite: return "finite";
    case Backend::Grid: return "grid";
    default: return "shift";
  }
}

struct Endomap {
  std::vector<int> table;
  bool is_bijection = false;

  explicit Endomap(std::vector<int> t) : table(std::move(t)) {
    std::vector<char> seen(table.size(), 0);
    bool inj = true;
    for (int v : table) {
      if (v < 0 || v >= (int)table.size()) throw std::invalid_argument("Endomap: image out of range");
      if (seen[v]) inj = false;
      seen[v] = 1;
    }
    is_bijection = inj;
  }
  int operator()(int x) const { return table[x]; }
};

struct FiniteDynSystem {
  std::string name;
  MetricSpace space;
  Endomap map;
  Backend backend = Backend::Finite;
  bool faithful_compactum = false;
  int basis_resolution = 4; // dyadic levels of ball radii below the diameter
  std::vector<PointSet> basis;
  std::vector<std::string> basis_names;
};

struct OrbitStructure {
  int transient = 0;
  int period = 1;
};

namespace detail {

// Ball basis at a radius lattice. Exact spaces get every radius down to the
// resolution (hence all singletons); grid spaces stop at diameter/2^levels and
// subsample centers so the basis stays a covering net rather than one ball per
// cell.
inline void generate_ball_basis(FiniteDynSystem& sys) {
  const MetricSpace& sp = sys.space;
  std::vector<Rational> radii;
  Rational half = sp.diameter();
  for (int k = 1; k <= sys.basis_resolution; ++k) {
    half = half * Rational(1, 2);
    if (half.is_zero()) break;
    radii.push_back(half);
  }
  if (sys.backend == Backend::Finite && !sp.resolution().is_zero()) radii.push_back(sp.resolution());
  if (radii.empty()) radii.push_back(Rational(1));

  std::map<PointSet, std::string> seen;
  std::vector<PointSet> out;
  std::vector<std::string> names;
  for (const Rational& r : radii) {
    int spacing = 1;
    if (sys.backend == Backend::Grid && !sp.resolution().is_zero()) {
      Rational cells = r / sp.resolution();
      long long c = cells.num() / cells.den();
      spacing = (int)std::max(1LL, c / 2);
    }
    for (int c = 0; c < sp.count(); c += spacing) {
      PointSet b = ball(sp, c, r);
      if (b.empty()) continue;
      if (seen.count(b)) continue;
      std::string nm = "B(" + std::to_string(c) + "," + r.str() + ")";
      seen.emplace(b, nm);
      out.push_back(std::move(b));
      names.push_back(std::move(nm));
    }
  }
  sys.basis = std::move(out);
  sys.basis_names = std::move(names);
}

} // namespace detail

inline FiniteDynSystem make_finite_system(std::string name, MetricSpace space, Endomap map,
                                          Backend backend = Backend::Finite, int basis_resolution = 4,
                                          bool check_axioms = true) {
  if ((int)map.table.size() != space.count())
    throw std::invalid_argument("system: map size does not match point count");
  if (check_axioms) {
    AxiomReport rep = check_metric_axioms(space);
    if (!rep.ok) throw std::invalid_argument("system '" + name + "': " + rep.message);
  }
  FiniteDynSystem sys{std::move(name), std::move(space), std::move(map), backend, false, basis_resolution, {}, {}};
  detail::generate_ball_basis(sys);
  return sys;
}

// i -> i+k mod m on the normalized cycle metric; a bijective isometry.
inline FiniteDynSystem finite_rotation(int m, int k, int basis_resolution = 4) {
  std::vector<int> t(m);
  for (int i = 0; i < m; ++i) t[i] = ((i + k) % m + m) % m;
  return make_finite_system("rot" + std::to_string(m) + "_" + std::to_string(k), MetricSpace::cycle(m),
                            Endomap(std::move(t)), Backend::Finite, basis_resolution,
                            /*check_axioms=*/m <= 64);
}

inline FiniteDynSystem identity_system(int m) {
  std::vector<int> t(m);
  for (int i = 0; i < m; ++i) t[i] = i;
  return make_finite_system("id" + std::to_string(m), MetricSpace::cycle(m), Endomap(std::move(t)));
}

inline FiniteDynSystem constant_system(int m, int c = 0) {
  std::vector<int> t(m, c);
  return make_finite_system("const" + std::to_string(m), MetricSpace::cycle(m), Endomap(std::move(t)));
}

// i -> 2i mod m on the circle grid. Odd m keeps the doubling a bijection;
// even m collapses onto the even cells and models nothing.
inline FiniteDynSystem grid_doubling(int m, int basis_resolution = 4) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("grid_doubling: m must be odd and >= 3");
  std::vector<int> t(m);
  for (int i = 0; i < m; ++i) t[i] = (2 * i) % m;
  FiniteDynSystem sys = make_finite_system("doubling" + std::to_string(m), MetricSpace::circle_grid(m),
                                           Endomap(std::move(t)), Backend::Grid, basis_resolution,
                                           /*check_axioms=*/m <= 64);
  return sys;
}

// Tent map sampled on an m-cell interval grid; the sample points land exactly
// on grid cells, so no rounding error enters the map table.
inline FiniteDynSystem grid_tent(int m, int basis_resolution = 4) {
  if (m < 2) throw std::invalid_argument("grid_tent: m must be >= 2");
  std::vector<int> t(m);
  for (int i = 0; i < m; ++i) t[i] = std::min(2 * i, 2 * (m - 1) - 2 * i);
  return make_finite_system("tent" + std::to_string(m), MetricSpace::path(m), Endomap(std::move(t)),
                            Backend::Grid, basis_resolution, /*check_axioms=*/m <= 64);
}

inline PointId iterate(const FiniteDynSystem& sys, PointId x, long long k) {
  if (k < 0) throw std::invalid_argument("iterate: k must be nonnegative");
  PointId p = x;
  for (long long i = 0; i < k; ++i) p = sys.map(p);
  return p;
}

// Minimal (transient, period) of x's orbit; transient+period <= |X|.
inline OrbitStructure orbit_structure(const FiniteDynSystem& sys, PointId x) {
  std::vector<int> first(sys.space.count(), -1);
  int step = 0;
  PointId p = x;
  while (first[p] < 0) {
    first[p] = step++;
    p = sys.map(p);
  }
  return OrbitStructure{first[p], step - first[p]};
}

inline PointSet preimage(const FiniteDynSystem& sys, const PointSet& s) {
  std::vector<PointId> v;
  for (int x = 0; x < sys.space.count(); ++x)
    if (s.contains(sys.map(x))) v.push_back(x);
  return PointSet(std::move(v));
}

enum class Direction { Forward, Preimage };

struct SubsetTrajectory {
  std::vector<DenseSet> states; // states[0] = S, states[k] = k-th iterate
  int transient = 0;
  int period = 1;
  bool closed = true; // false when a cap stopped the walk before it cycled
};

// The sequence f^k(S) (or f^-k(S)) ranges over finitely many subsets, so any
// "for all k >= N" / "infinitely many k" quantifier over it is decidable once
// the walk closes.
inline SubsetTrajectory subset_trajectory(const FiniteDynSystem& sys, const PointSet& start,
                                          Direction dir, int cap = 1 << 20) {
  const int m = sys.space.count();
  std::vector<std::vector<int>> pre;
  if (dir == Direction::Preimage) {
    pre.assign(m, {});
    for (int x = 0; x < m; ++x) pre[sys.map(x)].push_back(x);
  }
  auto step = [&](const DenseSet& s) {
    if (dir == Direction::Forward) return s.image(sys.map.table);
    DenseSet out(m);
    s.for_each([&](int p) {
      for (int q : pre[p]) out.insert(q);
    });
    return out;
  };
  SubsetTrajectory tr;
  std::unordered_map<DenseSet, int, DenseSetHash> first;
  DenseSet cur = DenseSet::from_points(m, start);
  while ((int)tr.states.size() <= cap) {
    auto it = first.find(cur);
    if (it != first.end()) {
      tr.transient = it->second;
      tr.period = (int)tr.states.size() - it->second;
      return tr;
    }
    first.emplace(cur, (int)tr.states.size());
    tr.states.push_back(cur);
    cur = step(cur);
  }
  tr.closed = false;
  tr.transient = (int)tr.states.size();
  tr.period = 0;
  return tr;
}

inline OrbitStructure subset_trajectory_period(const FiniteDynSystem& sys, const PointSet& start,
                                               Direction dir) {
  if (sys.backend == Backend::Shift) throw std::invalid_argument("subset_trajectory_period: finite backends only");
  SubsetTrajectory tr = subset_trajectory(sys, start, dir);
  return OrbitStructure{tr.transient, tr.period};
}

} // namespace symdyn
