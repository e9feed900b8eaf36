#include <catch2/catch_amalgamated.hpp>

#include <symdyn/detectors.hpp>

using namespace symdyn;

namespace {
Verdict run(Level l, Property p, int symbols = 2, int n = 2) {
  ShiftSystem sys = full_shift(symbols);
  SystemVariant v = sys;
  SystemLevels lv(v, 200000);
  return detect(lv.level(l, n), p, Budget{});
}
} // namespace

TEST_CASE("full shift base-level positives are definitive") {
  for (Property p : {Property::Sensitive, Property::CofinitelySensitive, Property::Mixing,
                     Property::WeaklyMixing, Property::Transitive, Property::TTPlusPlus,
                     Property::Touhey, Property::FullyExact, Property::Martelli,
                     Property::TotallyTransitive, Property::StronglyTransitive,
                     Property::ZTransitive, Property::Accessible, Property::FSystem,
                     Property::TransDense, Property::FullOmega}) {
    Verdict v = run(Level::Base, p);
    INFO(property_name(p) << ": " << v.detail);
    CHECK(v.is_holds());
    CHECK(v.definitive);
  }
}

TEST_CASE("full shift base-level sensitivity carries delta = 1/2") {
  Verdict v = run(Level::Base, Property::Sensitive);
  CHECK(v.detail.find("delta=1/2") != std::string::npos);
}

TEST_CASE("full shift negatives and bounded verdicts at base level") {
  Verdict minimal = run(Level::Base, Property::Minimal);
  CHECK(minimal.is_fails());
  CHECK(minimal.definitive);
  Verdict two_sided = run(Level::Base, Property::TwoSided);
  CHECK(two_sided.is_fails());
  CHECK(two_sided.definitive);
  Verdict multi = run(Level::Base, Property::MultiSensitive);
  CHECK(multi.is_holds());
  CHECK_FALSE(multi.definitive);
  CHECK(run(Level::Base, Property::Indecomposable).is_unknown());
  CHECK(run(Level::Base, Property::DeltaTransitive).is_unknown());
}

TEST_CASE("full shift product level") {
  for (Property p : {Property::Transitive, Property::Mixing, Property::WeaklyMixing,
                     Property::TTPlusPlus, Property::TotallyTransitive, Property::StronglyTransitive,
                     Property::ZTransitive, Property::FullyExact, Property::Touhey,
                     Property::FSystem, Property::Accessible, Property::Sensitive,
                     Property::CofinitelySensitive}) {
    Verdict v = run(Level::Product, p);
    INFO(property_name(p) << ": " << v.detail);
    CHECK(v.is_holds());
    CHECK(v.definitive);
  }
  CHECK(run(Level::Product, Property::Minimal).is_fails());
  CHECK(run(Level::Product, Property::TwoSided).is_fails());
  CHECK(run(Level::Product, Property::Martelli).is_unknown());
}

TEST_CASE("full shift suspension level") {
  for (Property p : {Property::Transitive, Property::Mixing, Property::WeaklyMixing,
                     Property::TTPlusPlus, Property::TotallyTransitive, Property::StronglyTransitive,
                     Property::ZTransitive, Property::FullyExact, Property::Touhey,
                     Property::FSystem, Property::Accessible, Property::Sensitive,
                     Property::CofinitelySensitive}) {
    Verdict v = run(Level::Suspension, p);
    INFO(property_name(p) << ": " << v.detail);
    CHECK(v.is_holds());
    CHECK(v.definitive);
  }
  CHECK(run(Level::Suspension, Property::Minimal).is_fails());
  CHECK(run(Level::Suspension, Property::TwoSided).is_fails());
}

TEST_CASE("three-symbol shift behaves the same") {
  CHECK(run(Level::Base, Property::Mixing, 3).is_holds());
  CHECK(run(Level::Product, Property::Transitive, 3).is_holds());
  CHECK(run(Level::Suspension, Property::Transitive, 3).is_holds());
  CHECK(run(Level::Base, Property::Minimal, 3).is_fails());
}

TEST_CASE("shift point classification") {
  ShiftSystem sys = full_shift(2);
  ShiftPoint per = ShiftPoint::periodic("01");
  CHECK(classify_point_shift(sys, per, PointClass::Periodic).is_holds());
  CHECK(classify_point_shift(sys, per, PointClass::QuasiPeriodic).is_holds());
  ShiftPoint ev = ShiftPoint::ev_periodic("10", "0");
  CHECK(classify_point_shift(sys, ev, PointClass::Periodic).is_fails());
  CHECK(classify_point_shift(sys, ev, PointClass::Recurrent).is_fails());
  CHECK(classify_point_shift(sys, ev, PointClass::Nonwandering).is_holds());
  CHECK(classify_point_shift(sys, ev, PointClass::TransitivePoint).is_fails());
  ShiftPoint stream = ShiftPoint::stream(2);
  Verdict t = classify_point_shift(sys, stream, PointClass::TransitivePoint);
  CHECK(t.is_holds());
  CHECK(t.definitive);
  CHECK(classify_point_shift(sys, stream, PointClass::Periodic).is_fails());

  auto omega = omega_limit_shift(ShiftPoint::ev_periodic("11", "01"));
  REQUIRE(omega.size() == 2);
  CHECK((omega[0] == ShiftPoint::periodic("01") || omega[0] == ShiftPoint::periodic("10")));
  CHECK_THROWS_AS(omega_limit_shift(stream), std::invalid_argument);
}

TEST_CASE("level-consistency of definitive shift verdicts mirrors the sensitivity transfer") {
  // suspension sensitive (definitive Holds) must not coexist with product
  // Fails, nor product Holds with base Fails
  Verdict s3 = run(Level::Suspension, Property::Sensitive);
  Verdict s2 = run(Level::Product, Property::Sensitive);
  Verdict s1 = run(Level::Base, Property::Sensitive);
  REQUIRE((s3.definitive && s2.definitive && s1.definitive));
  CHECK_FALSE((s3.is_holds() && s2.is_fails()));
  CHECK_FALSE((s2.is_holds() && s1.is_fails()));
}
