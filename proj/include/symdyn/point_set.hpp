// Canonical finite point sets (sorted, duplicate-free vectors of point ids).

#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace symdyn {

using PointId = int;

// Canonical order makes equality structural; the empty set is representable
// but rejected by the metric operations that require nonempty input.
class PointSet {
public:
  PointSet() = default;
  explicit PointSet(std::vector<PointId> members) : v_(std::move(members)) {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
  }
  PointSet(std::initializer_list<PointId> members) : PointSet(std::vector<PointId>(members)) {}

  static PointSet single(PointId p) { return PointSet({p}); }

  bool empty() const { return v_.empty(); }
  std::size_t size() const { return v_.size(); }
  bool contains(PointId p) const { return std::binary_search(v_.begin(), v_.end(), p); }
  const std::vector<PointId>& members() const { return v_; }

  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.v_ == b.v_; }
  friend bool operator!=(const PointSet& a, const PointSet& b) { return a.v_ != b.v_; }
  friend bool operator<(const PointSet& a, const PointSet& b) { return a.v_ < b.v_; }

  friend PointSet set_union(const PointSet& a, const PointSet& b) {
    std::vector<PointId> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    PointSet r;
    r.v_ = std::move(out);
    return r;
  }
  friend PointSet set_intersect(const PointSet& a, const PointSet& b) {
    std::vector<PointId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    PointSet r;
    r.v_ = std::move(out);
    return r;
  }
  friend bool intersects(const PointSet& a, const PointSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i == *j) return true;
      (*i < *j) ? ++i : ++j;
    }
    return false;
  }
  friend bool subset_of(const PointSet& a, const PointSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }

  std::string str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i) os << ',';
      os << v_[i];
    }
    os << '}';
    return os.str();
  }

private:
  std::vector<PointId> v_;
};

// Dense bitset over a fixed universe; the workhorse of subset trajectories.
class DenseSet {
public:
  DenseSet() : n_(0) {}
  explicit DenseSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  static DenseSet from_points(int universe, const PointSet& s) {
    DenseSet d(universe);
    for (PointId p : s) d.insert(p);
    return d;
  }

  int universe() const { return n_; }
  void insert(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  friend bool operator==(const DenseSet& a, const DenseSet& b) { return a.w_ == b.w_; }

  friend bool intersects(const DenseSet& a, const DenseSet& b) {
    for (std::size_t i = 0; i < a.w_.size(); ++i)
      if (a.w_[i] & b.w_[i]) return true;
    return false;
  }

  // Image under a total map given as a table.
  DenseSet image(const std::vector<int>& map) const {
    DenseSet out(n_);
    for_each([&](int p) { out.insert(map[p]); });
    return out;
  }

  template <typename F> void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        int b = __builtin_ctzll(w);
        f((int)(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

  PointSet to_points() const {
    std::vector<PointId> v;
    for_each([&](int p) { v.push_back(p); });
    return PointSet(std::move(v));
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : w_) {
      h ^= (std::size_t)w;
      h *= 1099511628211ull;
    }
    return h;
  }

private:
  int n_;
  std::vector<std::uint64_t> w_;
};

struct DenseSetHash {
  std::size_t operator()(const DenseSet& s) const { return s.hash(); }
};

} // namespace symdyn
