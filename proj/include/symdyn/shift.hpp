// Full-shift symbolic backend.
//
// Points are restricted to what is finitely describable with computable
// prefixes: eventually periodic sequences (pre.per^inf in canonical form) plus
// a single enumeration-stream point, the concatenation of all words in
// length-lexicographic order, which serves as the dense-orbit witness. Basic
// open sets are cylinders up to a configured word length, and the metric is
// d(x,y) = 2^-k at the first disagreement index k.

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace symdyn {

namespace detail {
struct StreamBuffer {
  std::string text;
  int next_len = 1; // length of the next word block to append
};

// Symbol at position i of the enumeration stream over `symbols` letters:
// 0,1,...,s-1,00,01,... concatenated in length-lexicographic order, grown
// lazily into a cached buffer.
inline char stream_symbol(int symbols, long long i) {
  static thread_local std::vector<StreamBuffer> buffers(11);
  StreamBuffer& sb = buffers[symbols];
  while ((long long)sb.text.size() <= i) {
    std::string word(sb.next_len, '0');
    while (true) {
      sb.text += word;
      int j = sb.next_len - 1;
      while (j >= 0 && word[j] == char('0' + symbols - 1)) {
        word[j] = '0';
        --j;
      }
      if (j < 0) break;
      ++word[j];
    }
    ++sb.next_len;
    if ((long long)sb.text.size() > (1LL << 26)) throw std::overflow_error("stream buffer exhausted");
  }
  return sb.text[i];
}
} // namespace detail

class ShiftPoint {
public:
  enum class Kind { EvPeriodic, Stream };

  // pre.per^inf; canonicalized to minimal period and maximal absorption of
  // the preperiod into the period.
  static ShiftPoint ev_periodic(std::string pre, std::string per) {
    if (per.empty()) throw std::invalid_argument("ShiftPoint: empty period");
    ShiftPoint p;
    p.kind_ = Kind::EvPeriodic;
    p.pre_ = std::move(pre);
    p.per_ = std::move(per);
    p.canonicalize();
    return p;
  }
  static ShiftPoint periodic(std::string per) { return ev_periodic("", std::move(per)); }
  static ShiftPoint constant(char c) { return periodic(std::string(1, c)); }
  // Optional prefix in front of the stream keeps "transitive point inside a
  // given cylinder" witnesses representable.
  static ShiftPoint stream(int symbols, std::string pre = "", long long offset = 0) {
    ShiftPoint p;
    p.kind_ = Kind::Stream;
    p.pre_ = std::move(pre);
    p.symbols_ = symbols;
    p.offset_ = offset;
    return p;
  }

  Kind kind() const { return kind_; }
  bool is_stream() const { return kind_ == Kind::Stream; }
  const std::string& preperiod() const { return pre_; }
  const std::string& period() const { return per_; }

  char at(long long i) const {
    if (i < (long long)pre_.size()) return pre_[i];
    if (kind_ == Kind::EvPeriodic) return per_[(i - pre_.size()) % per_.size()];
    return detail::stream_symbol(symbols_, offset_ + i - pre_.size());
  }

  ShiftPoint shifted() const {
    ShiftPoint p = *this;
    if (!p.pre_.empty()) {
      p.pre_.erase(p.pre_.begin());
    } else if (kind_ == Kind::EvPeriodic) {
      std::rotate(p.per_.begin(), p.per_.begin() + 1, p.per_.end());
    } else {
      ++p.offset_;
    }
    if (p.kind_ == Kind::EvPeriodic) p.canonicalize();
    return p;
  }

  ShiftPoint shifted(long long k) const {
    ShiftPoint p = *this;
    for (long long i = 0; i < k; ++i) p = p.shifted();
    return p;
  }

  bool starts_with(const std::string& w) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (at((long long)i) != w[i]) return false;
    return true;
  }

  friend bool operator==(const ShiftPoint& a, const ShiftPoint& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == Kind::EvPeriodic) return a.pre_ == b.pre_ && a.per_ == b.per_;
    return a.symbols_ == b.symbols_ && a.pre_ == b.pre_ && a.offset_ == b.offset_;
  }
  friend bool operator!=(const ShiftPoint& a, const ShiftPoint& b) { return !(a == b); }
  friend bool operator<(const ShiftPoint& a, const ShiftPoint& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    if (a.kind_ == Kind::EvPeriodic) return std::tie(a.pre_, a.per_) < std::tie(b.pre_, b.per_);
    return std::tie(a.pre_, a.offset_) < std::tie(b.pre_, b.offset_);
  }

  std::string str() const {
    if (kind_ == Kind::EvPeriodic) return pre_ + "(" + per_ + ")*";
    return pre_ + "<stream+" + std::to_string(offset_) + ">";
  }

private:
  void canonicalize() {
    // minimal period
    for (std::size_t d = 1; d <= per_.size() / 2; ++d) {
      if (per_.size() % d) continue;
      bool ok = true;
      for (std::size_t i = d; i < per_.size() && ok; ++i)
        if (per_[i] != per_[i - d]) ok = false;
      if (ok) {
        per_.resize(d);
        break;
      }
    }
    // absorb preperiod tail into the period
    while (!pre_.empty() && pre_.back() == per_.back()) {
      std::rotate(per_.begin(), per_.end() - 1, per_.end());
      pre_.pop_back();
    }
  }

  Kind kind_ = Kind::EvPeriodic;
  std::string pre_;
  std::string per_ = "0";
  int symbols_ = 2;
  long long offset_ = 0;
};

// First index where x and y disagree; nullopt means equal sequences.
inline std::optional<long long> first_disagreement(const ShiftPoint& x, const ShiftPoint& y) {
  long long bound;
  if (!x.is_stream() && !y.is_stream()) {
    if (x == y) return std::nullopt; // canonical forms are unique
    long long px = (long long)x.period().size(), py = (long long)y.period().size();
    bound = (long long)x.preperiod().size() + (long long)y.preperiod().size() +
            px / std::gcd(px, py) * py + 1;
  } else {
    bound = 1 << 14; // a stream disagrees with anything representable long before this
  }
  for (long long i = 0; i < bound; ++i)
    if (x.at(i) != y.at(i)) return i;
  if (x.is_stream() || y.is_stream())
    throw std::logic_error("first_disagreement: no disagreement within scan bound");
  return std::nullopt;
}

inline Rational shift_dist(const ShiftPoint& x, const ShiftPoint& y) {
  auto k = first_disagreement(x, y);
  if (!k) return Rational(0);
  return Rational::pow2_inv((int)*k);
}

struct ShiftOrbit {
  int transient = 0;
  int period = 1;
};

inline ShiftOrbit shift_orbit_structure(const ShiftPoint& x) {
  if (x.is_stream()) throw std::invalid_argument("orbit_structure: enumeration stream is not eventually periodic");
  // Canonical form already carries the minimal data.
  return ShiftOrbit{(int)x.preperiod().size(), (int)x.period().size()};
}

// The full shift on `symbols` letters; cylinders of length <= cylinder_len
// form the generated basis.
struct ShiftSystem {
  std::string name;
  int symbols = 2;
  int cylinder_len = 4;
  bool faithful_compactum = true;

  std::vector<std::string> cylinders() const {
    std::vector<std::string> out;
    std::string w;
    for (int len = 1; len <= cylinder_len; ++len) {
      w.assign(len, '0');
      while (true) {
        out.push_back(w);
        int j = len - 1;
        while (j >= 0 && w[j] == char('0' + symbols - 1)) {
          w[j] = '0';
          --j;
        }
        if (j < 0) break;
        ++w[j];
      }
    }
    return out;
  }
};

inline ShiftSystem full_shift(int symbols, int cylinder_len = 4) {
  if (symbols < 2 || symbols > 10) throw std::invalid_argument("full_shift: 2..10 symbols");
  if (cylinder_len < 1) throw std::invalid_argument("full_shift: cylinder_len >= 1");
  return ShiftSystem{"shift" + std::to_string(symbols), symbols, cylinder_len, true};
}

// sigma^-1 of a cylinder is the union of the one-symbol-longer cylinders.
inline std::vector<std::string> shift_cylinder_preimage(const ShiftSystem& sys, const std::string& w) {
  std::vector<std::string> out;
  for (int c = 0; c < sys.symbols; ++c) out.push_back(std::string(1, char('0' + c)) + w);
  return out;
}

// Do the cylinders [u] and [v] intersect? Exactly when one word prefixes the other.
inline bool cylinders_meet(const std::string& u, const std::string& v) {
  std::size_t n = std::min(u.size(), v.size());
  return u.compare(0, n, v, 0, n) == 0;
}

// Finite subsets of the shift space (the lazy n-fold-product element type).
class ShiftNSubset {
public:
  ShiftNSubset() = default;
  explicit ShiftNSubset(std::vector<ShiftPoint> pts) : v_(std::move(pts)) {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    if (v_.empty()) throw std::invalid_argument("ShiftNSubset: empty");
  }

  std::size_t size() const { return v_.size(); }
  const std::vector<ShiftPoint>& members() const { return v_; }

  ShiftNSubset shifted() const {
    std::vector<ShiftPoint> out;
    out.reserve(v_.size());
    for (const auto& p : v_) out.push_back(p.shifted());
    return ShiftNSubset(std::move(out));
  }

  friend bool operator==(const ShiftNSubset& a, const ShiftNSubset& b) { return a.v_ == b.v_; }
  friend bool operator<(const ShiftNSubset& a, const ShiftNSubset& b) { return a.v_ < b.v_; }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i) s += ", ";
      s += v_[i].str();
    }
    return s + "}";
  }

private:
  std::vector<ShiftPoint> v_;
};

inline Rational shift_hausdorff(const ShiftNSubset& a, const ShiftNSubset& b) {
  auto directed = [](const ShiftNSubset& p, const ShiftNSubset& q) {
    Rational sup(0);
    for (const auto& x : p.members()) {
      std::optional<Rational> inf;
      for (const auto& y : q.members()) {
        Rational d = shift_dist(x, y);
        if (!inf || d < *inf) inf = d;
      }
      if (*inf > sup) sup = *inf;
    }
    return sup;
  };
  return Rational::max(directed(a, b), directed(b, a));
}

// Chebyshev radius over the whole (uncountable) shift space: 2^-l where l is
// the longest common prefix of the members. A center tracking the common
// prefix attains it, and no center can agree with every member past the split.
inline Rational shift_chebyshev_radius(const ShiftNSubset& a) {
  if (a.size() == 1) return Rational(0);
  long long split = -1;
  for (long long i = 0;; ++i) {
    char c = a.members()[0].at(i);
    for (std::size_t j = 1; j < a.size(); ++j)
      if (a.members()[j].at(i) != c) {
        split = i;
        break;
      }
    if (split >= 0) break;
    if (i > (1 << 14)) throw std::logic_error("shift_chebyshev_radius: members do not split");
  }
  return Rational::pow2_inv((int)split);
}

} // namespace symdyn
