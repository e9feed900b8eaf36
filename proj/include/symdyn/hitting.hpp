// Hitting-time sets N_f(U,V) = {n >= 1 : f^n(U) meets V} and their
// preimage-side twins, described exactly on eventually periodic backends as
// a finite head plus residues modulo a period.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynsys.hpp"
#include "shift.hpp"

namespace symdyn {

struct HittingTimeSet {
  std::vector<long long> head; // hits with 1 <= n < tail_offset, sorted
  long long tail_offset = 0;   // residue description valid for n >= tail_offset
  long long period = 0;        // 0: no periodic description (finite or truncated set)
  std::vector<char> residues;  // size == period when period > 0
  bool exact = true;           // false when a horizon stopped the walk
  long long checked_to = 0;    // when !exact, head covers n <= checked_to

  bool has_tail() const { return period > 0; }
  bool tail_nonempty() const {
    for (char c : residues)
      if (c) return true;
    return false;
  }
  bool empty() const { return head.empty() && !tail_nonempty(); }
  // Membership-infinite is decidable exactly when tails are exact.
  bool is_infinite() const { return has_tail() && tail_nonempty(); }
  // Contains every n >= some N.
  bool is_cofinite() const {
    if (!has_tail()) return false;
    for (char c : residues)
      if (!c) return false;
    return true;
  }
  bool contains(long long n) const {
    if (n < 1) return false;
    if (has_tail() && n >= tail_offset) return residues[n % period] != 0;
    return std::binary_search(head.begin(), head.end(), n);
  }
  std::optional<long long> first() const {
    if (!head.empty()) return head.front();
    if (has_tail())
      for (long long n = std::max(1LL, tail_offset); n < tail_offset + period; ++n)
        if (residues[n % period]) return n;
    return std::nullopt;
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < head.size(); ++i) s += (i ? "," : "") + std::to_string(head[i]);
    if (has_tail()) {
      bool any = false;
      for (long long r = 0; r < period; ++r)
        if (residues[r]) {
          s += std::string(any || !head.empty() ? "; " : "") + "n=" + std::to_string(r) + " mod " +
               std::to_string(period);
          any = true;
        }
      if (any) s += " for n>=" + std::to_string(tail_offset);
    }
    return s + "}";
  }
};

// Is there an n in both sets? Exact when both carry exact tails.
inline bool hitting_intersect(const HittingTimeSet& a, const HittingTimeSet& b) {
  for (long long n : a.head)
    if (b.contains(n)) return true;
  for (long long n : b.head)
    if (a.contains(n)) return true;
  if (a.has_tail() && b.has_tail()) {
    long long g = std::gcd(a.period, b.period);
    for (long long r1 = 0; r1 < a.period; ++r1) {
      if (!a.residues[r1]) continue;
      for (long long r2 = 0; r2 < b.period; ++r2)
        if (b.residues[r2] && ((r1 - r2) % g + g) % g == 0) return true;
    }
  }
  return false;
}

// Exact hitting times on finite backends via the subset trajectory; the grid
// backend truncates at `horizon` when the walk does not close in time.
inline HittingTimeSet hitting_times(const FiniteDynSystem& sys, const PointSet& u, const PointSet& v,
                                    Direction dir, int horizon = 1 << 20) {
  if (u.empty() || v.empty()) throw std::invalid_argument("hitting_times: empty input");
  // Forward variant walks f^n(U) against V; the preimage variant walks
  // f^-n(V) against U, per n_f(U,V) = {n : U meets f^-n(V)}.
  const PointSet& walker = dir == Direction::Forward ? u : v;
  const PointSet& target = dir == Direction::Forward ? v : u;
  SubsetTrajectory tr = subset_trajectory(sys, walker, dir, horizon);
  DenseSet tgt = DenseSet::from_points(sys.space.count(), target);
  HittingTimeSet out;
  if (tr.closed) {
    out.tail_offset = std::max<long long>(1, tr.transient);
    out.period = tr.period;
    out.residues.assign(tr.period, 0);
    for (long long n = 1; n < tr.transient; ++n)
      if (intersects(tr.states[n], tgt)) out.head.push_back(n);
    for (int j = 0; j < tr.period; ++j) {
      long long n = tr.transient + j;
      if (intersects(tr.states[n], tgt)) {
        // n >= 1 except when transient = 0 and j = 0; that slot still
        // describes the residue class correctly for n >= tail_offset.
        out.residues[n % tr.period] = 1;
      }
    }
  } else {
    out.exact = false;
    out.checked_to = (long long)tr.states.size() - 1;
    for (long long n = 1; n < (long long)tr.states.size(); ++n)
      if (intersects(tr.states[n], tgt)) out.head.push_back(n);
  }
  return out;
}

// Hitting times between cylinders of the full shift. sigma^n([u]) is the
// cylinder of the word tail for n < |u| and the whole space afterwards, so
// N([u],[v]) = {n < |u| : u[n:] meets v} + every n >= |u|. The preimage-side
// set n([u],[v]) asks for a point carrying u at 0 and v at n, which is the
// same condition.
inline HittingTimeSet shift_hitting_times(const ShiftSystem&, const std::string& u,
                                          const std::string& v) {
  HittingTimeSet out;
  long long lu = (long long)u.size();
  for (long long n = 1; n < lu; ++n)
    if (cylinders_meet(u.substr(n), v)) out.head.push_back(n);
  out.tail_offset = std::max<long long>(1, lu);
  out.period = 1;
  out.residues = {1};
  return out;
}

} // namespace symdyn
