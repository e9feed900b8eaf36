#include <catch2/catch_amalgamated.hpp>

#include <symdyn/detectors.hpp>

using namespace symdyn;

namespace {
FiniteDynSystem chain3() {
  return make_finite_system("chain3", MetricSpace::cycle(3), Endomap({1, 2, 1}));
}

Verdict run(const SystemVariant& sys, Level l, int n, Property p, Budget b = {}) {
  SystemLevels lv(sys, b.enum_cap);
  return detect(lv.level(l, n), p, b);
}
} // namespace

TEST_CASE("hitting times on rotations") {
  FiniteDynSystem rot5 = finite_rotation(5, 1);
  HittingTimeSet h = hitting_times(rot5, PointSet({0}), PointSet({2}), Direction::Forward);
  CHECK(h.exact);
  CHECK(h.is_infinite());
  CHECK(h.contains(2));
  CHECK(h.contains(7));
  CHECK_FALSE(h.contains(3));
  CHECK_FALSE(h.contains(5));
  CHECK(h.first() == 2);

  // U = V: the set contains the period of U's trajectory but not 0
  HittingTimeSet self = hitting_times(rot5, PointSet({0}), PointSet({0}), Direction::Forward);
  CHECK(self.contains(5));
  CHECK_FALSE(self.contains(0));
  CHECK_FALSE(self.contains(1));
}

TEST_CASE("forward/preimage hitting duality on catalog bijections") {
  for (const auto& sys : {finite_rotation(4, 1), finite_rotation(5, 1), finite_rotation(6, 2)}) {
    for (int x = 0; x < sys.space.count(); ++x)
      for (int y = 0; y < sys.space.count(); ++y) {
        HittingTimeSet f = hitting_times(sys, PointSet({x}), PointSet({y}), Direction::Forward);
        HittingTimeSet p = hitting_times(sys, PointSet({x}), PointSet({y}), Direction::Preimage);
        for (int n = 1; n <= 20; ++n) CHECK(f.contains(n) == p.contains(n));
      }
  }
}

TEST_CASE("shift hitting times") {
  ShiftSystem sh = full_shift(2);
  HittingTimeSet h = shift_hitting_times(sh, "0", "1");
  CHECK(h.is_infinite());
  for (int n = 1; n <= 8; ++n) CHECK(h.contains(n)); // all n >= |u| = 1
  HittingTimeSet h2 = shift_hitting_times(sh, "0110", "10");
  CHECK(h2.contains(2)); // the tail "10" matches the target word
  CHECK_FALSE(h2.contains(1));
}

TEST_CASE("shift hitting small offsets computed from word overlaps") {
  ShiftSystem sh = full_shift(2);
  HittingTimeSet h = shift_hitting_times(sh, "0110", "10");
  // offsets: n=1 tail "110" vs "10": mismatch; n=2 tail "10": match; n=3 tail "0" vs "10": mismatch
  CHECK_FALSE(h.contains(1));
  CHECK(h.contains(2));
  CHECK_FALSE(h.contains(3));
  CHECK(h.contains(4)); // n >= |u|
}

TEST_CASE("pair hit structure from the functional graph") {
  FiniteDynSystem c = chain3();
  OrbitData od(c.map.table);
  HittingTimeSet h01 = od.pair_hits(c.map.table, 0, 1);
  // 0 -> 1 -> 2 -> 1 -> ...: hits 1 exactly at odd n
  CHECK(h01.contains(1));
  CHECK_FALSE(h01.contains(2));
  CHECK(h01.contains(3));
  CHECK(h01.is_infinite());
  HittingTimeSet h00 = od.pair_hits(c.map.table, 0, 0);
  CHECK(h00.empty());
}

TEST_CASE("criterion examples: rotation(5,1) base verdicts") {
  FiniteDynSystem rot5 = finite_rotation(5, 1);
  SystemVariant v = rot5;
  CHECK(run(v, Level::Base, 2, Property::Transitive).is_holds());
  CHECK(run(v, Level::Base, 2, Property::StronglyTransitive).is_holds());
  CHECK(run(v, Level::Base, 2, Property::Minimal).is_holds());
  Verdict tot = run(v, Level::Base, 2, Property::TotallyTransitive);
  CHECK(tot.is_fails());
  CHECK(tot.definitive);
  Verdict wm = run(v, Level::Base, 2, Property::WeaklyMixing);
  CHECK(wm.is_fails());
  CHECK(wm.definitive);
  CHECK(run(v, Level::Base, 2, Property::FSystem).is_fails());
  CHECK(run(v, Level::Base, 2, Property::Touhey).is_holds());
  CHECK(run(v, Level::Base, 2, Property::Mixing).is_fails());
  CHECK(run(v, Level::Base, 2, Property::TTPlusPlus).is_holds());
  CHECK(run(v, Level::Base, 2, Property::TwoSided).is_holds());
}

TEST_CASE("rotation(5,1) product and suspension transitivity fail with cycle decomposition") {
  SystemVariant v = finite_rotation(5, 1);
  Verdict p = run(v, Level::Product, 2, Property::Transitive);
  CHECK(p.is_fails());
  CHECK(p.definitive);
  CHECK(p.detail.find("3 cycle(s)") != std::string::npos);
  CHECK(p.detail.find("3x len 5") != std::string::npos);
  Verdict s = run(v, Level::Suspension, 2, Property::Transitive);
  CHECK(s.is_fails());
  CHECK(s.definitive);
}

TEST_CASE("sensitivity fails definitively on finite isometries for every delta") {
  for (const auto& sys : {finite_rotation(4, 1), finite_rotation(5, 1), finite_rotation(6, 2)}) {
    SystemVariant v = sys;
    for (Level l : {Level::Base, Level::Product, Level::Suspension}) {
      Verdict s = run(v, l, 2, Property::Sensitive);
      CHECK(s.is_fails());
      CHECK(s.definitive);
    }
  }
}

TEST_CASE("grid doubling is sensitive with delta = 1/4 within horizon 10") {
  SystemVariant v = grid_doubling(729);
  Budget b;
  b.delta_factors.clear();
  b.delta_extra = {Rational(1, 4)};
  b.sens_horizon = 10;
  Verdict s = run(v, Level::Base, 2, Property::Sensitive, b);
  CHECK(s.is_holds());
  CHECK_FALSE(s.definitive); // grid evidence is budget-bounded
  CHECK(s.detail.find("delta=1/4") != std::string::npos);
}

TEST_CASE("z-transitivity allows both directions and the zero step") {
  // constant map on 2 points: {c} and {d} connect through the preimage side
  SystemVariant v = constant_system(2);
  CHECK(run(v, Level::Base, 2, Property::ZTransitive).is_holds());
  CHECK(run(v, Level::Base, 2, Property::Transitive).is_fails());
  // identity on 2 points: neither direction ever moves
  SystemVariant id2 = identity_system(2);
  Verdict z = run(id2, Level::Base, 2, Property::ZTransitive);
  CHECK(z.is_fails());
  CHECK(z.definitive);
}

TEST_CASE("accessibility") {
  // identity on two points at distance 1: distances frozen, never below eps
  Verdict id = run(SystemVariant(identity_system(2)), Level::Base, 2, Property::Accessible);
  CHECK(id.is_fails());
  CHECK(id.definitive);
  // rotation: isometry, distinct points never approach
  CHECK(run(SystemVariant(finite_rotation(4, 1)), Level::Base, 2, Property::Accessible).is_fails());
  // constant map: everything collides after one step
  CHECK(run(SystemVariant(constant_system(3)), Level::Base, 2, Property::Accessible).is_holds());
}

TEST_CASE("indecomposable") {
  CHECK(run(SystemVariant(finite_rotation(4, 1)), Level::Base, 2, Property::Indecomposable).is_holds());
  Verdict id = run(SystemVariant(identity_system(2)), Level::Base, 2, Property::Indecomposable);
  CHECK(id.is_fails());
  CHECK(id.detail.find("orb(") != std::string::npos);
  CHECK(run(SystemVariant(constant_system(3)), Level::Base, 2, Property::Indecomposable).is_holds());
  CHECK(run(SystemVariant(grid_tent(16)), Level::Base, 2, Property::Indecomposable).is_unknown());
}

TEST_CASE("fully exact on finite systems") {
  CHECK(run(SystemVariant(constant_system(3)), Level::Base, 2, Property::FullyExact).is_holds());
  CHECK(run(SystemVariant(finite_rotation(4, 1)), Level::Base, 2, Property::FullyExact).is_fails());
  // chain3: 1 and 2 live on the same 2-cycle with opposite phases
  CHECK(run(SystemVariant(chain3()), Level::Base, 2, Property::FullyExact).is_fails());
}

TEST_CASE("delta transitivity fails definitively beyond one point") {
  Verdict d = run(SystemVariant(finite_rotation(5, 1)), Level::Base, 2, Property::DeltaTransitive);
  CHECK(d.is_fails());
  CHECK(d.definitive);
  CHECK(d.detail.find("m=2") != std::string::npos);
  Verdict dm = run(SystemVariant(chain3()), Level::Base, 2, Property::DeltaMixing);
  CHECK(dm.is_fails());
}

TEST_CASE("multi-transitive holds are never definitive") {
  FiniteDynSystem one = make_finite_system("pt", MetricSpace::cycle(1), Endomap({0}));
  Verdict m = run(SystemVariant(one), Level::Base, 2, Property::MultiTransitive);
  CHECK(m.is_holds());
  CHECK_FALSE(m.definitive);
  Verdict m5 = run(SystemVariant(finite_rotation(5, 1)), Level::Base, 2, Property::MultiTransitive);
  CHECK(m5.is_fails());
  CHECK(m5.definitive);
  CHECK(m5.detail.find("m=1") == std::string::npos); // rot5 is transitive; fails at m=2
}

TEST_CASE("martelli fails definitively on finite backends") {
  Verdict m = run(SystemVariant(finite_rotation(5, 1)), Level::Base, 2, Property::Martelli);
  CHECK(m.is_fails());
  CHECK(m.definitive);
}

TEST_CASE("monotone consistency across catalog systems and levels") {
  std::vector<SystemVariant> systems = {finite_rotation(4, 1), finite_rotation(5, 1),
                                        finite_rotation(6, 2), identity_system(2), constant_system(2),
                                        chain3(), full_shift(2)};
  Budget b;
  for (const auto& v : systems) {
    SystemLevels lv(v, b.enum_cap);
    for (Level l : {Level::Base, Level::Product, Level::Suspension}) {
      LevelRef ref = lv.level(l, 2);
      auto imp = [&](Property strong, Property weak) {
        Verdict s = detect(ref, strong, b);
        Verdict w = detect(ref, weak, b);
        if (s.definitive && w.definitive) {
          INFO(system_name(v) << " " << level_name(l) << " " << property_name(strong) << " => "
                              << property_name(weak));
          CHECK_FALSE((s.is_holds() && w.is_fails()));
        }
      };
      imp(Property::Mixing, Property::WeaklyMixing);
      imp(Property::WeaklyMixing, Property::Transitive);
      imp(Property::CofinitelySensitive, Property::Sensitive);
      imp(Property::MultiSensitive, Property::Sensitive);
    }
  }
}

TEST_CASE("point classification") {
  FiniteDynSystem c = chain3();
  FiniteUniverse u = base_universe(c);
  // fixed point of the constant map: everything holds
  FiniteUniverse uc = base_universe(constant_system(3));
  for (PointClass k : {PointClass::Periodic, PointClass::QuasiPeriodic, PointClass::Recurrent})
    CHECK(classify_point_finite(uc, 0, k).is_holds());
  // chain3 x=0: transient, so periodic and quasi-periodic fail
  CHECK(classify_point_finite(u, 0, PointClass::Periodic).is_fails());
  CHECK(classify_point_finite(u, 0, PointClass::QuasiPeriodic).is_fails());
  CHECK(classify_point_finite(u, 0, PointClass::Nonwandering).is_fails());
  CHECK(omega_limit_finite(u, 0) == PointSet({1, 2}));
  // rotation point is transitive
  FiniteUniverse ur = base_universe(finite_rotation(5, 1));
  CHECK(classify_point_finite(ur, 3, PointClass::TransitivePoint).is_holds());
  // orb(0) = {0,1,2} covers chain3, but orb(1) = {1,2} does not
  CHECK(classify_point_finite(u, 0, PointClass::TransitivePoint).is_holds());
  CHECK(classify_point_finite(u, 1, PointClass::TransitivePoint).is_fails());
}

TEST_CASE("omega limit of a rotation point is the full cycle") {
  FiniteUniverse ur = base_universe(finite_rotation(4, 1));
  CHECK(omega_limit_finite(ur, 2) == PointSet({0, 1, 2, 3}));
}

TEST_CASE("arctan lower bound is a genuine lower bound") {
  // arctan(1/2) = 0.46364..., arctan(1/4) = 0.24497..., arctan(1) = pi/4
  CHECK(arctan_lower_bound(Rational(1, 2)) <= Rational(46364, 100000));
  CHECK(arctan_lower_bound(Rational(1, 2)) > Rational(4, 10));
  CHECK(arctan_lower_bound(Rational(1, 4)) <= Rational(2449787, 10000000));
  CHECK(arctan_lower_bound(Rational(1, 4)) > Rational(2449, 10000));
  CHECK(arctan_lower_bound(Rational(1)) <= Rational(7853982, 10000000));
  CHECK(arctan_lower_bound(Rational(1)) > Rational(7, 10));
  // decreasing inputs give positive decreasing-ish bounds
  CHECK(arctan_lower_bound(Rational(1, 1024)) > Rational(0));
}
