// The symmetric-product suspension: the quotient of F_n(X) that collapses the
// singleton stratum F_1(X) to a single basepoint, with the quotient metric
// rho computed two ways — a closed form used everywhere, and a literal
// second-level Hausdorff enumeration kept as its independent oracle.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperspace.hpp"

namespace symdyn {

// Suspension points are indices: 0 is the collapsed basepoint, i>0 names the
// class of the (i-1)-th multi-point product element.
using SuspIdx = int;
constexpr SuspIdx kCollapsed = 0;

class SuspensionSpace {
public:
  explicit SuspensionSpace(const SymmetricProduct& product) : product_(&product) {
    if (product.n() < 2) throw std::invalid_argument("SuspensionSpace: n >= 2 required");
    product_to_class_.assign(product.count(), -1);
    class_to_product_.push_back(-1); // slot for the basepoint
    for (int i = 0; i < product.count(); ++i) {
      if (product.is_singleton(i)) continue;
      product_to_class_[i] = (int)class_to_product_.size();
      class_to_product_.push_back(i);
    }
    induced_.resize(class_to_product_.size());
    induced_[kCollapsed] = kCollapsed;
    for (SuspIdx c = 1; c < (SuspIdx)class_to_product_.size(); ++c)
      induced_[c] = q(product.apply(class_to_product_[c]));
    cheb_.resize(class_to_product_.size(), Rational(0));
    for (SuspIdx c = 1; c < (SuspIdx)class_to_product_.size(); ++c)
      cheb_[c] = chebyshev_radius(product.base().space, element_of(c));
  }

  const SymmetricProduct& product() const { return *product_; }
  int count() const { return (int)class_to_product_.size(); }

  // q: F_n(X) -> SF_n(X) by product element index.
  SuspIdx q(int product_idx) const {
    return product_->is_singleton(product_idx) ? kCollapsed : product_to_class_[product_idx];
  }
  // q^-1 on non-basepoint classes.
  int q_inv(SuspIdx c) const {
    if (c == kCollapsed) throw std::invalid_argument("q_inv: basepoint has no single preimage");
    return class_to_product_[c];
  }
  const PointSet& element_of(SuspIdx c) const { return product_->element(class_to_product_[c]); }

  SuspIdx apply(SuspIdx c) const { return induced_[c]; }
  const std::vector<int>& induced_table() const { return induced_; }

  const Rational& radius(SuspIdx c) const { return cheb_[c]; }

  // rho via the derived closed form: only the lone multi-point member of each
  // G_n image contributes to the directed sup, everything else is shared.
  Rational rho(SuspIdx a, SuspIdx b) const {
    if (a == b) return Rational(0);
    if (a == kCollapsed) return cheb_[b];
    if (b == kCollapsed) return cheb_[a];
    Rational h = product_->dist(class_to_product_[a], class_to_product_[b]);
    return Rational::max(Rational::min(cheb_[a], h), Rational::min(cheb_[b], h));
  }

  // G_n(chi) = F_1(X) union q^-1(chi), as product-element indices.
  std::vector<int> gn_image(SuspIdx c) const {
    std::vector<int> out = product_->singleton_stratum();
    if (c != kCollapsed) out.push_back(class_to_product_[c]);
    return out;
  }

  // Literal second-level Hausdorff distance between G_n images; the
  // independent oracle for rho.
  Rational rho_direct_oracle(SuspIdx a, SuspIdx b) const {
    std::vector<int> ga = gn_image(a), gb = gn_image(b);
    auto directed = [&](const std::vector<int>& p, const std::vector<int>& q2) {
      Rational sup(0);
      for (int x : p) {
        std::optional<Rational> inf;
        for (int y : q2) {
          Rational d = product_->dist(x, y);
          if (!inf || d < *inf) inf = d;
        }
        if (*inf > sup) sup = *inf;
      }
      return sup;
    };
    return Rational::max(directed(ga, gb), directed(gb, ga));
  }

  std::string label(SuspIdx c) const {
    if (c == kCollapsed) return "FX";
    return "q" + element_of(c).str();
  }

private:
  const SymmetricProduct* product_;
  std::vector<int> product_to_class_;
  std::vector<int> class_to_product_; // [0] unused (basepoint)
  std::vector<int> induced_;
  std::vector<Rational> cheb_;
};

// SF_n(f) on a class: collapse the image if it drops to one point.
inline SuspIdx induced_apply_sfn(const SuspensionSpace& s, SuspIdx c) { return s.apply(c); }

// F_n(f)(q^-1(Gamma)) is contained in q^-1(SF_n(f)(Gamma)), with q^-1 taken
// as a set preimage. Checked directly from the definitions.
inline bool lemma_inclusion_check(const SuspensionSpace& s, const std::vector<SuspIdx>& gamma) {
  for (SuspIdx c : gamma)
    if (c == kCollapsed) throw std::invalid_argument("lemma_inclusion_check: basepoint not allowed");
  std::vector<char> image_classes(s.count(), 0);
  for (SuspIdx c : gamma) image_classes[s.apply(c)] = 1;
  for (SuspIdx c : gamma) {
    int a = s.q_inv(c);
    int fa = s.product().apply(a);
    if (!image_classes[s.q(fa)]) return false;
  }
  return true;
}

} // namespace symdyn
