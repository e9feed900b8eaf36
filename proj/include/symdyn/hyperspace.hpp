// The n-fold symmetric product of a finite-backed system: all nonempty
// subsets of at most n points, the induced map A -> f(A), the lifted
// Hausdorff metric, and the hit-and-miss (Vietoris) basis the proofs of the
// level-transfer theorems manipulate.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynsys.hpp"

namespace symdyn {

struct EnumerationCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An element of F_n(X): nonempty, at most n members, canonical order.
struct NSubset {
  PointSet members;
  NSubset(PointSet m, int n) : members(std::move(m)) {
    if (members.empty()) throw std::invalid_argument("NSubset: empty");
    if ((int)members.size() > n) throw std::invalid_argument("NSubset: more than n points");
  }
};

class SymmetricProduct {
public:
  SymmetricProduct(const FiniteDynSystem& base, int n, std::size_t cap = 200000)
      : base_(&base), n_(n) {
    if (n < 1) throw std::invalid_argument("SymmetricProduct: n >= 1 required");
    const int m = base.space.count();
    std::size_t total = 0;
    {
      // sum_{k=1..min(n,m)} C(m,k), watching the cap as we go
      long double run = 1;
      for (int k = 1; k <= std::min(n, m); ++k) {
        run = run * (m - k + 1) / k;
        total += (std::size_t)(run + 0.5);
        if (total > cap)
          throw EnumerationCapExceeded("symmetric product of " + base.name + " with n=" +
                                       std::to_string(n) + " exceeds enumeration cap");
      }
    }
    elements_.reserve(total);
    std::vector<PointId> cur;
    for (int k = 1; k <= std::min(n, m); ++k) enumerate_size(k, 0, cur);
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], (int)i);
    induced_.reserve(elements_.size());
    for (const auto& e : elements_) {
      std::vector<PointId> img;
      for (PointId p : e) img.push_back(base.map(p));
      induced_.push_back(index_.at(PointSet(std::move(img))));
    }
    for (int i = 0; i < m; ++i) singleton_stratum_.push_back(index_.at(PointSet::single(i)));
  }

  const FiniteDynSystem& base() const { return *base_; }
  int n() const { return n_; }
  int count() const { return (int)elements_.size(); }
  const PointSet& element(int i) const { return elements_[i]; }
  const std::vector<int>& induced_table() const { return induced_; }
  const std::vector<int>& singleton_stratum() const { return singleton_stratum_; }

  int index_of(const PointSet& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw std::invalid_argument("SymmetricProduct: not an element");
    return it->second;
  }
  std::optional<int> try_index_of(const PointSet& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int apply(int i) const { return induced_[i]; }
  bool is_singleton(int i) const { return elements_[i].size() == 1; }

  // F_n(f)(A) = f(A), deduplicated and canonicalized.
  PointSet induced_apply(const PointSet& a) const {
    std::vector<PointId> img;
    for (PointId p : a) img.push_back(base_->map(p));
    return PointSet(std::move(img));
  }

  // Hausdorff metric lifted from the base space.
  Rational dist(int i, int j) const { return hausdorff(base_->space, elements_[i], elements_[j]); }

private:
  void enumerate_size(int k, int from, std::vector<PointId>& cur) {
    if ((int)cur.size() == k) {
      elements_.push_back(PointSet(cur));
      return;
    }
    for (int p = from; p <= base_->space.count() - (k - (int)cur.size()); ++p) {
      cur.push_back(p);
      enumerate_size(k, p + 1, cur);
      cur.pop_back();
    }
  }

  const FiniteDynSystem* base_;
  int n_;
  std::vector<PointSet> elements_;
  std::map<PointSet, int> index_;
  std::vector<int> induced_;
  std::vector<int> singleton_stratum_;
};

inline SymmetricProduct build_symmetric_product(const FiniteDynSystem& sys, int n,
                                                std::size_t cap = 200000) {
  if (sys.backend == Backend::Shift)
    throw std::invalid_argument("build_symmetric_product: use the lazy shift variant");
  return SymmetricProduct(sys, n, cap);
}

// <U_1,...,U_k>: all A with A inside the union and A meeting every part.
struct VietorisBasisElement {
  std::vector<PointSet> parts;
};

inline bool vietoris_contains(const VietorisBasisElement& v, const PointSet& a) {
  for (PointId p : a) {
    bool inside = false;
    for (const auto& u : v.parts)
      if (u.contains(p)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  for (const auto& u : v.parts)
    if (!intersects(u, a)) return false;
  return true;
}

// The member indices of a Vietoris element inside an enumerated product.
inline PointSet vietoris_point_set(const SymmetricProduct& hp, const VietorisBasisElement& v) {
  std::vector<PointId> out;
  for (int i = 0; i < hp.count(); ++i)
    if (vietoris_contains(v, hp.element(i))) out.push_back(i);
  return PointSet(std::move(out));
}

// Shrinks each U_i to a nonempty basis set W_i <= U_i with the W_i pairwise
// disjoint, so <W_1,...,W_k> misses the singleton stratum when k >= 2.
// Greedy over the ambient basis; failure (e.g. parts too small to separate)
// is reported, not fatal.
inline std::optional<std::vector<PointSet>> disjoint_refinement(const std::vector<PointSet>& parts,
                                                                const std::vector<PointSet>& basis) {
  // Already pairwise disjoint parts come back unchanged.
  bool disjoint = true;
  for (std::size_t i = 0; i < parts.size() && disjoint; ++i)
    for (std::size_t j = i + 1; j < parts.size() && disjoint; ++j)
      if (intersects(parts[i], parts[j])) disjoint = false;
  if (disjoint) return parts;

  std::vector<PointSet> out;
  PointSet used;
  for (const auto& u : parts) {
    if (u.empty()) return std::nullopt;
    const PointSet* pick = nullptr;
    for (const auto& b : basis) {
      if (b.empty() || !subset_of(b, u)) continue;
      if (intersects(b, used)) continue;
      if (!pick || b.size() < pick->size()) pick = &b;
    }
    if (!pick) return std::nullopt;
    out.push_back(*pick);
    used = set_union(used, *pick);
  }
  return out;
}

} // namespace symdyn
