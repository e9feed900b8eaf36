#include <catch2/catch_amalgamated.hpp>

#include <symdyn/dynsys.hpp>
#include <symdyn/shift.hpp>

using namespace symdyn;

static FiniteDynSystem chain3() {
  // 0 -> 1 -> 2 -> 1: eventually periodic with a one-step transient
  return make_finite_system("chain3", MetricSpace::cycle(3), Endomap({1, 2, 1}));
}

TEST_CASE("builders") {
  FiniteDynSystem rot5 = finite_rotation(5, 1);
  CHECK(rot5.map.is_bijection);
  CHECK_FALSE(rot5.faithful_compactum);
  CHECK(check_metric_axioms(rot5.space).ok);

  // gcd(2, 729) = 1 so doubling is invertible mod an odd modulus
  FiniteDynSystem dbl = grid_doubling(729);
  CHECK(dbl.map.is_bijection);
  CHECK(dbl.backend == Backend::Grid);
  CHECK_THROWS_AS(grid_doubling(8), std::invalid_argument);

  ShiftSystem sh = full_shift(2);
  CHECK(sh.faithful_compactum);
  CHECK(sh.cylinders().size() == 2 + 4 + 8 + 16);
  CHECK_THROWS_AS(full_shift(1), std::invalid_argument);
}

TEST_CASE("finite basis contains singletons and covers the space") {
  FiniteDynSystem rot5 = finite_rotation(5, 1);
  std::vector<char> covered(5, 0);
  int singletons = 0;
  for (const auto& b : rot5.basis) {
    if (b.size() == 1) ++singletons;
    for (PointId p : b) covered[p] = 1;
  }
  CHECK(singletons == 5);
  for (char c : covered) CHECK(c == 1);
}

TEST_CASE("grid basis is a covering net without singletons") {
  FiniteDynSystem dbl = grid_doubling(729);
  std::vector<char> covered(729, 0);
  for (const auto& b : dbl.basis) {
    CHECK(b.size() > 1);
    for (PointId p : b) covered[p] = 1;
  }
  for (char c : covered) CHECK(c == 1);
}

TEST_CASE("iterate") {
  CHECK(iterate(finite_rotation(5, 1), 0, 7) == 2);
  CHECK(iterate(grid_doubling(729), 1, 8) == 256);
  CHECK(iterate(finite_rotation(5, 1), 3, 0) == 3);
}

TEST_CASE("iterate is a semigroup action (a+b <= 32)") {
  for (const auto& sys : {finite_rotation(5, 1), grid_tent(16), chain3()}) {
    for (int x = 0; x < sys.space.count(); ++x)
      for (int a = 0; a <= 16; ++a)
        for (int b = 0; b <= 16; ++b)
          CHECK(iterate(sys, x, a + b) == iterate(sys, iterate(sys, x, a), b));
  }
}

TEST_CASE("orbit structure") {
  OrbitStructure o1 = orbit_structure(finite_rotation(5, 1), 0);
  CHECK(o1.transient == 0);
  CHECK(o1.period == 5);

  OrbitStructure o2 = orbit_structure(chain3(), 0);
  CHECK(o2.transient == 1);
  CHECK(o2.period == 2);

  OrbitStructure o3 = orbit_structure(constant_system(3), 0);
  CHECK(o3.transient == 0);
  CHECK(o3.period == 1);

  for (const auto& sys : {finite_rotation(6, 2), chain3(), grid_tent(16)})
    for (int x = 0; x < sys.space.count(); ++x) {
      OrbitStructure o = orbit_structure(sys, x);
      CHECK(iterate(sys, x, o.transient + o.period) == iterate(sys, x, o.transient));
    }
}

TEST_CASE("preimage") {
  CHECK(preimage(finite_rotation(5, 1), PointSet({2})) == PointSet({1}));
  CHECK(preimage(chain3(), PointSet({1})) == PointSet({0, 2}));
  CHECK(preimage(chain3(), PointSet({0})) == PointSet());
}

TEST_CASE("subset trajectories") {
  OrbitStructure f = subset_trajectory_period(finite_rotation(4, 1), PointSet({0}), Direction::Forward);
  CHECK(f.transient == 0);
  CHECK(f.period == 4);

  // {0,1} -> {1,2} -> {1,2} -> ...
  OrbitStructure g = subset_trajectory_period(chain3(), PointSet({0, 1}), Direction::Forward);
  CHECK(g.transient == 1);
  CHECK(g.period == 1);

  // preimages of {1}: the sequence {1},{0,2},{1},... is periodic from the
  // start, so the minimal transient is 0
  OrbitStructure h = subset_trajectory_period(chain3(), PointSet({1}), Direction::Preimage);
  CHECK(h.transient == 0);
  CHECK(h.period == 2);
}

TEST_CASE("rotations are isometries") {
  for (const auto& sys : {finite_rotation(5, 1), finite_rotation(6, 2)}) {
    for (int x = 0; x < sys.space.count(); ++x)
      for (int y = 0; y < sys.space.count(); ++y)
        CHECK(sys.space.dist(sys.map(x), sys.map(y)) == sys.space.dist(x, y));
  }
}

TEST_CASE("shift points canonicalize") {
  ShiftPoint p = ShiftPoint::ev_periodic("01", "1");
  CHECK(p.preperiod() == "0");
  CHECK(p.period() == "1");
  CHECK(ShiftPoint::ev_periodic("", "0101") == ShiftPoint::periodic("01"));
  CHECK(ShiftPoint::ev_periodic("0", "10") == ShiftPoint::periodic("01"));

  // sigma^2 of 01.(1)* is (1)*
  ShiftPoint q = ShiftPoint::ev_periodic("01", "1").shifted(2);
  CHECK(q == ShiftPoint::constant('1'));
  CHECK(q.preperiod().empty());
}

TEST_CASE("shift orbit structure is read off the canonical form") {
  ShiftOrbit o = shift_orbit_structure(ShiftPoint::ev_periodic("001", "10"));
  CHECK(o.transient == 3);
  CHECK(o.period == 2);
  CHECK_THROWS_AS(shift_orbit_structure(ShiftPoint::stream(2)), std::invalid_argument);
}

TEST_CASE("shift metric") {
  ShiftPoint z = ShiftPoint::constant('0');
  ShiftPoint o = ShiftPoint::constant('1');
  CHECK(shift_dist(z, o) == Rational(1));
  CHECK(shift_dist(z, z) == Rational(0));
  CHECK(shift_dist(ShiftPoint::ev_periodic("0001", "0"), z) == Rational(1, 8));

  // strong triangle inequality d(x,z) <= max(d(x,y), d(y,z)) on a family of
  // eventually periodic points
  std::vector<ShiftPoint> pts = {z, o, ShiftPoint::periodic("01"), ShiftPoint::periodic("10"),
                                 ShiftPoint::ev_periodic("0", "1"), ShiftPoint::ev_periodic("11", "0"),
                                 ShiftPoint::ev_periodic("0110", "010")};
  for (const auto& x : pts)
    for (const auto& y : pts)
      for (const auto& w : pts)
        CHECK(shift_dist(x, w) <= Rational::max(shift_dist(x, y), shift_dist(y, w)));
}

TEST_CASE("shift semigroup action") {
  ShiftPoint x = ShiftPoint::ev_periodic("0110", "010");
  for (int a = 0; a <= 16; ++a)
    for (int b = 0; b <= 16; ++b)
      CHECK(x.shifted(a + b) == x.shifted(a).shifted(b));
}

TEST_CASE("cylinder machinery") {
  ShiftSystem sh = full_shift(2);
  auto pre = shift_cylinder_preimage(sh, "01");
  REQUIRE(pre.size() == 2);
  CHECK(pre[0] == "001");
  CHECK(pre[1] == "101");
  CHECK(cylinders_meet("01", "011"));
  CHECK_FALSE(cylinders_meet("01", "00"));
  CHECK(ShiftPoint::periodic("01").starts_with("0101"));
  CHECK_FALSE(ShiftPoint::periodic("01").starts_with("00"));
}

TEST_CASE("enumeration stream visits every word") {
  // stream over 2 symbols starts 0 1 00 01 10 11 000...
  ShiftPoint s = ShiftPoint::stream(2);
  std::string first10;
  for (int i = 0; i < 10; ++i) first10 += s.at(i);
  CHECK(first10 == "0100011011");
  // every length-3 word occurs somewhere in the first 100 symbols
  std::string buf;
  for (int i = 0; i < 100; ++i) buf += s.at(i);
  for (const std::string& w : full_shift(2, 3).cylinders())
    if (w.size() == 3) CHECK(buf.find(w) != std::string::npos);
}

TEST_CASE("shift NSubsets") {
  ShiftNSubset a({ShiftPoint::constant('0'), ShiftPoint::ev_periodic("10", "0")});
  CHECK(a.size() == 2);
  CHECK(shift_chebyshev_radius(a) == Rational(1)); // members split at index 0
  ShiftNSubset b({ShiftPoint::ev_periodic("00", "1"), ShiftPoint::ev_periodic("01", "1")});
  CHECK(shift_chebyshev_radius(b) == Rational(1, 2)); // common prefix "0"
  CHECK(shift_hausdorff(a, a) == Rational(0));
  CHECK(shift_hausdorff(ShiftNSubset({ShiftPoint::constant('0')}),
                        ShiftNSubset({ShiftPoint::constant('1')})) == Rational(1));
  // merging members under the shift: 0(1)* and 1(1)* both shift to (1)*
  ShiftNSubset c({ShiftPoint::ev_periodic("0", "1"), ShiftPoint::constant('1')});
  CHECK(c.size() == 2);
  CHECK(c.shifted().size() == 1);
}
