// Three-valued detector results and the budget that realizes the unbounded
// quantifiers ("there is delta > 0", "for any m") at desk scale.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "rational.hpp"

namespace symdyn {

enum class VerdictState { Holds, Fails, Unknown };

struct Verdict {
  VerdictState state = VerdictState::Unknown;
  // True when the backend semantics are exact for this property, not
  // horizon-truncated or arity-truncated. Holds/Fails with definitive=true
  // are final; Unknown carries the reason the budget ran out.
  bool definitive = false;
  std::string detail;

  static Verdict holds(std::string d, bool definitive = true) {
    return {VerdictState::Holds, definitive, std::move(d)};
  }
  static Verdict fails(std::string d, bool definitive = true) {
    return {VerdictState::Fails, definitive, std::move(d)};
  }
  static Verdict unknown(std::string d) { return {VerdictState::Unknown, false, std::move(d)}; }

  bool is_holds() const { return state == VerdictState::Holds; }
  bool is_fails() const { return state == VerdictState::Fails; }
  bool is_unknown() const { return state == VerdictState::Unknown; }

  std::string state_str() const {
    switch (state) {
      case VerdictState::Holds: return "Holds";
      case VerdictState::Fails: return "Fails";
      default: return "Unknown";
    }
  }
};

struct Budget {
  // Max iterate for horizon-truncated (grid) searches; exact backends close
  // trajectories instead of truncating.
  int horizon = 600;
  // Scan depth and per-set point subsample for separation witnesses on grids.
  int sens_horizon = 64;
  int witness_points = 32;
  // Candidate delta/epsilon values as fractions of the diameter.
  std::vector<Rational> delta_factors = {Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 16)};
  std::vector<Rational> eps_factors = {Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 16)};
  // Absolute delta/eps values to test in addition to the scaled ones.
  std::vector<Rational> delta_extra;
  std::vector<Rational> eps_extra;
  // Max arity for multi-quantified properties.
  int m_max = 3;
  std::size_t enum_cap = 200000;

  // Materialized candidate grid, largest first. On exact backends the value
  // resolution/2 is appended so a failure at the bottom of the grid settles
  // "for every delta > 0" outright.
  std::vector<Rational> delta_grid(const Rational& diameter, const Rational& resolution,
                                   bool exact) const {
    return grid(delta_factors, delta_extra, diameter, resolution, exact);
  }
  std::vector<Rational> eps_grid(const Rational& diameter, const Rational& resolution,
                                 bool exact) const {
    return grid(eps_factors, eps_extra, diameter, resolution, exact);
  }

private:
  static std::vector<Rational> grid(const std::vector<Rational>& factors,
                                    const std::vector<Rational>& extra, const Rational& diameter,
                                    const Rational& resolution, bool exact) {
    std::vector<Rational> g;
    for (const Rational& f : factors) {
      Rational v = diameter * f;
      if (v > Rational(0)) g.push_back(v);
    }
    for (const Rational& v : extra)
      if (v > Rational(0)) g.push_back(v);
    if (exact && resolution > Rational(0)) g.push_back(resolution * Rational(1, 2));
    std::sort(g.begin(), g.end(), [](const Rational& a, const Rational& b) { return b < a; });
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
  }
};

// Certified rational lower bound for arctan(x) on x > 0, used by the orbit
// instability threshold. The alternating series partial sum with four terms
// underestimates arctan on (0,1]; inputs are rounded down to a dyadic value
// first so the term denominators stay inside 64 bits, and very small inputs
// fall back to the coarse bound arctan x >= 2x/3.
inline Rational arctan_lower_bound(const Rational& x) {
  if (!(x > Rational(0))) throw std::invalid_argument("arctan_lower_bound: x > 0 required");
  Rational one(1);
  Rational cap = x < one ? x : one;
  int k = 0;
  while (k < 62 && Rational::pow2_inv(k) > cap) ++k;
  Rational d = Rational::pow2_inv(k); // largest 2^-k <= min(x, 1)
  if (k > 7) return d * Rational(2, 3);
  Rational d2 = d * d;
  Rational d3 = d2 * d, d5 = d3 * d2, d7 = d5 * d2;
  return d - d3 * Rational(1, 3) + d5 * Rational(1, 5) - d7 * Rational(1, 7);
}

} // namespace symdyn
