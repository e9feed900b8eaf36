// The level-transfer theorem table: T1..T24, each a set of statements about
// one system at the base/product/suspension levels plus implication arrows
// between them, with the hypothesis flags that decide whether a backend
// counts as evidence or as a probe.

#pragma once

#include "detectors.hpp"

namespace symdyn {

enum class StatementKind {
  Detector,        // detect(property) at a level
  PointwiseClass,  // quantified over elements A of F_n(X): point-class claims
  PairTransitive,  // f x g transitive for the fixed partner system
};

struct Statement {
  Level level = Level::Base;
  Property prop = Property::Transitive;
  StatementKind kind = StatementKind::Detector;
  PointClass point_class = PointClass::QuasiPeriodic; // PointwiseClass only
};

struct TheoremSpec {
  std::string id;
  std::string property_label;
  std::string claim; // arrows in statement numbers, e.g. "2<=>3, 2=>1"
  std::vector<Statement> statements;                // 1-based in arrows
  std::vector<std::pair<int, int>> arrows;          // (premise, conclusion)
  bool requires_compactum = true;                   // perfect compact Hausdorff phase space
  bool requires_no_isolated_points = false;
  bool requires_bijection = false;
  std::string note; // e.g. probe substitutions
};

namespace detail {
inline Statement det(Level l, Property p) { return Statement{l, p, StatementKind::Detector, PointClass::Periodic}; }
inline Statement pw(Level l, PointClass c) {
  return Statement{l, Property::Transitive, StatementKind::PointwiseClass, c};
}
inline Statement pair_t(Level l) {
  return Statement{l, Property::Transitive, StatementKind::PairTransitive, PointClass::Periodic};
}

inline TheoremSpec uniform(std::string id, Property p, std::string claim,
                           std::vector<std::pair<int, int>> arrows) {
  TheoremSpec t;
  t.id = std::move(id);
  t.property_label = property_name(p);
  t.claim = std::move(claim);
  t.statements = {det(Level::Base, p), det(Level::Product, p), det(Level::Suspension, p)};
  t.arrows = std::move(arrows);
  return t;
}
} // namespace detail

inline const std::vector<TheoremSpec>& theorem_table() {
  using namespace detail;
  static const std::vector<TheoremSpec> table = [] {
    std::vector<TheoremSpec> t;
    t.push_back(uniform("T1", Property::Sensitive, "3=>2, 2=>1", {{3, 2}, {2, 1}}));
    t.push_back(uniform("T2", Property::CofinitelySensitive, "1<=>2, 3=>2", {{1, 2}, {2, 1}, {3, 2}}));
    t.push_back(uniform("T3", Property::MultiSensitive, "1<=>2, 3=>2", {{1, 2}, {2, 1}, {3, 2}}));
    t.push_back(uniform("T4", Property::ZTransitive, "2<=>3, 2=>1", {{2, 3}, {3, 2}, {2, 1}}));
    {
      TheoremSpec t5;
      t5.id = "T5";
      t5.property_label = "z-transitive/weakly-mixing";
      t5.claim = "1<=>2 (product Z-transitivity is base weak mixing)";
      t5.statements = {det(Level::Product, Property::ZTransitive), det(Level::Base, Property::WeaklyMixing)};
      t5.arrows = {{1, 2}, {2, 1}};
      t.push_back(std::move(t5));
    }
    {
      TheoremSpec t6;
      t6.id = "T6";
      t6.property_label = "quasi-periodic-point";
      t6.claim = "pointwise over A: 1=>2, 2=>3";
      t6.statements = {pw(Level::Base, PointClass::QuasiPeriodic), pw(Level::Product, PointClass::QuasiPeriodic),
                       pw(Level::Suspension, PointClass::QuasiPeriodic)};
      t6.arrows = {{1, 2}, {2, 3}};
      t.push_back(std::move(t6));
    }
    t.push_back(uniform("T7", Property::Accessible, "2=>1, 2=>3", {{2, 1}, {2, 3}}));
    t.push_back(uniform("T8", Property::Indecomposable, "2<=>3, 2=>1", {{2, 3}, {3, 2}, {2, 1}}));
    t.push_back(uniform("T9", Property::MultiTransitive, "2<=>3, 2=>1", {{2, 3}, {3, 2}, {2, 1}}));
    t.push_back(uniform("T10", Property::DeltaTransitive, "2=>1, 2=>3", {{2, 1}, {2, 3}}));
    t.push_back(uniform("T11", Property::DeltaMixing, "2=>1, 2=>3", {{2, 1}, {2, 3}}));
    {
      TheoremSpec t12;
      t12.id = "T12";
      t12.property_label = "weak-mixing-equivalents";
      t12.claim = "1<=>2<=>3<=>4<=>5<=>6<=>7 (cycle)";
      t12.statements = {det(Level::Base, Property::WeaklyMixing),
                        det(Level::Product, Property::WeaklyMixing),
                        det(Level::Suspension, Property::WeaklyMixing),
                        det(Level::Product, Property::TotallyTransitive),
                        det(Level::Suspension, Property::TotallyTransitive),
                        det(Level::Product, Property::Transitive),
                        det(Level::Suspension, Property::Transitive)};
      t12.arrows = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 1}};
      t.push_back(std::move(t12));
    }
    {
      TheoremSpec t13;
      t13.id = "T13";
      t13.property_label = "martelli";
      t13.claim = "1=>2 (product chaos descends to the base)";
      t13.statements = {det(Level::Product, Property::Martelli), det(Level::Base, Property::Martelli)};
      t13.arrows = {{1, 2}};
      t.push_back(std::move(t13));
    }
    {
      TheoremSpec t14;
      t14.id = "T14";
      t14.property_label = "weak-mixing-equivalents-with-martelli";
      t14.claim = "1<=>...<=>8 (cycle), on spaces without isolated points";
      t14.statements = {det(Level::Base, Property::WeaklyMixing),
                        det(Level::Product, Property::WeaklyMixing),
                        det(Level::Suspension, Property::WeaklyMixing),
                        det(Level::Product, Property::TotallyTransitive),
                        det(Level::Suspension, Property::TotallyTransitive),
                        det(Level::Product, Property::Transitive),
                        det(Level::Suspension, Property::Transitive),
                        det(Level::Product, Property::Martelli)};
      t14.arrows = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 1}};
      t14.requires_no_isolated_points = true;
      t.push_back(std::move(t14));
    }
    {
      TheoremSpec t15;
      t15.id = "T15";
      t15.property_label = "transitive-point";
      t15.claim = "pointwise over B: 2<=>3, 2=>1";
      t15.statements = {pw(Level::Base, PointClass::TransitivePoint),
                        pw(Level::Product, PointClass::TransitivePoint),
                        pw(Level::Suspension, PointClass::TransitivePoint)};
      t15.arrows = {{2, 3}, {3, 2}, {2, 1}};
      t.push_back(std::move(t15));
    }
    t.push_back(uniform("T16", Property::FullOmega, "2<=>3, 2=>1", {{2, 3}, {3, 2}, {2, 1}}));
    t.push_back(uniform("T17", Property::TransDense, "2<=>3, 2=>1", {{2, 3}, {3, 2}, {2, 1}}));
    {
      TheoremSpec t18;
      t18.id = "T18";
      t18.property_label = "pair-transitive";
      t18.claim = "2<=>3, 2=>1 (with the fixed partner rotation)";
      t18.statements = {pair_t(Level::Base), pair_t(Level::Product), pair_t(Level::Suspension)};
      t18.arrows = {{2, 3}, {3, 2}, {2, 1}};
      t18.note = "partner g = finite_rotation(3,1)";
      t.push_back(std::move(t18));
    }
    t.push_back(uniform("T19", Property::FSystem, "2<=>3, 2=>1", {{2, 3}, {3, 2}, {2, 1}}));
    t.push_back(uniform("T20", Property::TTPlusPlus, "2<=>3, 2=>1", {{2, 3}, {3, 2}, {2, 1}}));
    t.push_back(uniform("T21", Property::Touhey, "2<=>3, 2=>1", {{2, 3}, {3, 2}, {2, 1}}));
    t.push_back(uniform("T22", Property::TwoSided, "2<=>3, 2=>1", {{2, 3}, {3, 2}, {2, 1}}));
    t.push_back(uniform("T23", Property::FullyExact, "2<=>3, 2=>1", {{2, 3}, {3, 2}, {2, 1}}));
    {
      TheoremSpec t24 = uniform("T24", Property::StronglyTransitive, "2=>3, 3=>1", {{2, 3}, {3, 1}});
      t24.note =
          "the separating example needs an irrational rotation; rational rotations stand in as probes";
      t.push_back(std::move(t24));
    }
    return t;
  }();
  return table;
}

inline const TheoremSpec* find_theorem(const std::string& id) {
  for (const auto& t : theorem_table())
    if (t.id == id) return &t;
  return nullptr;
}

} // namespace symdyn
