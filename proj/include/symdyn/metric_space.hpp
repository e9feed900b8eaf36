// Finite metric spaces with exact rational distances: balls, Hausdorff
// metric, Chebyshev radius, axiom checking, and a small text loader.

#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "point_set.hpp"
#include "rational.hpp"

namespace symdyn {

struct AxiomReport {
  bool ok = true;
  std::string message;     // empty when ok
  int x = -1, y = -1, z = -1; // first violating triple (z unused for 2-point axioms)
};

class MetricSpace {
public:
  MetricSpace(int count, std::vector<Rational> table, std::vector<std::string> labels = {})
      : count_(count), d_(std::move(table)), labels_(std::move(labels)) {
    if (count_ <= 0) throw std::invalid_argument("MetricSpace: need at least one point");
    if ((int)d_.size() != count_ * count_) throw std::invalid_argument("MetricSpace: bad table size");
    if (labels_.empty()) {
      labels_.reserve(count_);
      for (int i = 0; i < count_; ++i) labels_.push_back("p" + std::to_string(i));
    }
    if ((int)labels_.size() != count_) throw std::invalid_argument("MetricSpace: bad label count");
    cache_extremes();
  }

  int count() const { return count_; }
  const Rational& dist(PointId a, PointId b) const { return d_[a * count_ + b]; }
  const std::string& label(PointId p) const { return labels_[p]; }

  const Rational& diameter() const { return diameter_; }
  // Smallest positive distance; quantifiers over "all delta > 0" are decided
  // at half this value on exact backends.
  const Rational& resolution() const { return resolution_; }

  // Cycle metric d(i,j) = min(|i-j|, m-|i-j|), in unit steps.
  static MetricSpace cycle_steps(int m) { return cycle_scaled(m, Rational(1)); }
  // Cycle metric scaled to diameter 1.
  static MetricSpace cycle(int m) {
    return cycle_scaled(m, m >= 2 ? Rational(1, m / 2) : Rational(1));
  }
  // Circle with circumference 1 sampled at m cells: d = min(|i-j|, m-|i-j|)/m.
  static MetricSpace circle_grid(int m) { return cycle_scaled(m, Rational(1, m)); }

  // Path metric d(i,j) = |i-j|, in unit steps.
  static MetricSpace path_steps(int m) { return path_scaled(m, Rational(1)); }
  // Path metric scaled to diameter 1.
  static MetricSpace path(int m) {
    return path_scaled(m, m >= 2 ? Rational(1, m - 1) : Rational(1));
  }

  static MetricSpace from_lower_triangle(int m, const std::vector<std::vector<Rational>>& rows,
                                         std::vector<std::string> labels = {}) {
    if ((int)rows.size() != m - 1) throw std::invalid_argument("metric table: expected m-1 rows");
    std::vector<Rational> t(m * m, Rational(0));
    for (int i = 1; i < m; ++i) {
      if ((int)rows[i - 1].size() != i)
        throw std::invalid_argument("metric table: row " + std::to_string(i) + " needs " +
                                    std::to_string(i) + " entries");
      for (int j = 0; j < i; ++j) t[i * m + j] = t[j * m + i] = rows[i - 1][j];
    }
    return MetricSpace(m, std::move(t), std::move(labels));
  }

private:
  static MetricSpace cycle_scaled(int m, const Rational& scale) {
    std::vector<Rational> t(m * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        int s = i > j ? i - j : j - i;
        t[i * m + j] = Rational(std::min(s, m - s)) * scale;
      }
    return MetricSpace(m, std::move(t));
  }
  static MetricSpace path_scaled(int m, const Rational& scale) {
    std::vector<Rational> t(m * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) t[i * m + j] = Rational(i > j ? i - j : j - i) * scale;
    return MetricSpace(m, std::move(t));
  }

  void cache_extremes() {
    diameter_ = Rational(0);
    resolution_ = Rational(0);
    for (int i = 0; i < count_; ++i)
      for (int j = i + 1; j < count_; ++j) {
        const Rational& d = dist(i, j);
        if (d > diameter_) diameter_ = d;
        if (!d.is_zero() && (resolution_.is_zero() || d < resolution_)) resolution_ = d;
      }
  }

  int count_;
  std::vector<Rational> d_;
  std::vector<std::string> labels_;
  Rational diameter_;
  Rational resolution_;
};

// Full scan of the three metric axioms; pass iff all hold over all triples.
inline AxiomReport check_metric_axioms(const MetricSpace& s) {
  const int m = s.count();
  AxiomReport r;
  for (int i = 0; i < m; ++i) {
    if (!s.dist(i, i).is_zero()) {
      r.ok = false;
      r.message = "d(x,x) != 0";
      r.x = r.y = i;
      return r;
    }
    for (int j = 0; j < m; ++j) {
      const Rational& d = s.dist(i, j);
      if (d.is_negative()) {
        r.ok = false;
        r.message = "negative distance";
        r.x = i;
        r.y = j;
        return r;
      }
      if (i != j && d.is_zero()) {
        r.ok = false;
        r.message = "identity violation: d(x,y)=0 for x!=y";
        r.x = i;
        r.y = j;
        return r;
      }
      if (s.dist(i, j) != s.dist(j, i)) {
        r.ok = false;
        r.message = "symmetry violation";
        r.x = i;
        r.y = j;
        return r;
      }
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        if (!Rational::le_sum(s.dist(i, k), s.dist(i, j), s.dist(j, k))) {
          r.ok = false;
          r.message = "triangle violation: d(x,z) > d(x,y)+d(y,z)";
          r.x = i;
          r.y = j;
          r.z = k;
          return r;
        }
  return r;
}

// Open ball {y : d(center,y) < radius}; always contains its center.
inline PointSet ball(const MetricSpace& s, PointId center, const Rational& radius) {
  if (!(radius > Rational(0))) throw std::invalid_argument("ball: radius must be positive");
  std::vector<PointId> v;
  for (int y = 0; y < s.count(); ++y)
    if (s.dist(center, y) < radius) v.push_back(y);
  return PointSet(std::move(v));
}

// Directed Hausdorff distance sup_{a in A} inf_{b in B} d(a,b).
inline Rational directed_hausdorff(const MetricSpace& s, const PointSet& a, const PointSet& b) {
  Rational sup(0);
  for (PointId x : a) {
    std::optional<Rational> inf;
    for (PointId y : b) {
      const Rational& d = s.dist(x, y);
      if (!inf || d < *inf) inf = d;
    }
    if (*inf > sup) sup = *inf;
  }
  return sup;
}

inline Rational hausdorff(const MetricSpace& s, const PointSet& a, const PointSet& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff: empty input");
  return Rational::max(directed_hausdorff(s, a, b), directed_hausdorff(s, b, a));
}

// min over centers x of max over a in A of d(a,x).
inline Rational chebyshev_radius(const MetricSpace& s, const PointSet& a) {
  if (a.empty()) throw std::invalid_argument("chebyshev_radius: empty input");
  std::optional<Rational> best;
  for (int x = 0; x < s.count(); ++x) {
    Rational worst(0);
    for (PointId p : a) {
      const Rational& d = s.dist(p, x);
      if (d > worst) worst = d;
    }
    if (!best || worst < *best) best = worst;
  }
  return *best;
}

namespace detail {
inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}
inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(trim(tok));
  return out;
}
} // namespace detail

// Text format: `points=N`, optional `labels=a,b,...`, then either
// `metric=cycle|path` (optionally `scale=steps`) or `metric=table` followed
// by the lower triangle, one row per line, entries `p/q` separated by spaces.
inline MetricSpace load_metric_space(std::istream& in) {
  int points = -1;
  std::string metric;
  std::string scale = "normalized";
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> rows;
  bool in_table = false;
  std::string line;
  while (std::getline(in, line)) {
    line = detail::trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (!in_table && eq != std::string::npos) {
      std::string key = detail::trim(line.substr(0, eq));
      std::string val = detail::trim(line.substr(eq + 1));
      if (key == "points") points = std::stoi(val);
      else if (key == "labels") labels = detail::split(val, ',');
      else if (key == "scale") scale = val;
      else if (key == "metric") {
        metric = val;
        if (metric == "table") in_table = true;
      } else
        throw std::invalid_argument("metric file: unknown key '" + key + "'");
    } else if (in_table) {
      std::vector<Rational> row;
      for (const auto& tok : detail::split(line, ' '))
        if (!tok.empty()) row.push_back(Rational::parse(tok));
      rows.push_back(std::move(row));
    } else {
      throw std::invalid_argument("metric file: unexpected line '" + line + "'");
    }
  }
  if (points <= 0) throw std::invalid_argument("metric file: missing points=");
  MetricSpace space = [&] {
    if (metric == "cycle") return scale == "steps" ? MetricSpace::cycle_steps(points) : MetricSpace::cycle(points);
    if (metric == "path") return scale == "steps" ? MetricSpace::path_steps(points) : MetricSpace::path(points);
    if (metric == "circle") return MetricSpace::circle_grid(points);
    if (metric == "table") return MetricSpace::from_lower_triangle(points, rows, labels);
    throw std::invalid_argument("metric file: unknown metric '" + metric + "'");
  }();
  AxiomReport rep = check_metric_axioms(space);
  if (!rep.ok)
    throw std::invalid_argument("metric file: not a metric (" + rep.message + " at " +
                                std::to_string(rep.x) + "," + std::to_string(rep.y) + ")");
  return space;
}

inline MetricSpace load_metric_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open metric file: " + path);
  return load_metric_space(in);
}

} // namespace symdyn
