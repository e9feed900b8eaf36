#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include <symdyn/metric_space.hpp>

using namespace symdyn;

TEST_CASE("rational arithmetic and parsing") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(7, 3) - Rational(1, 3) == Rational(2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational::le_sum(Rational(1), Rational(1, 2), Rational(1, 2)));
  CHECK_FALSE(Rational::le_sum(Rational(2), Rational(1, 2), Rational(1, 2)));
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-2") == Rational(-2));
  CHECK(Rational(5, 10).str() == "1/2");
  CHECK(Rational::pow2_inv(3) == Rational(1, 8));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational::pow2_inv(63), std::overflow_error);
}

TEST_CASE("point set algebra") {
  PointSet a{3, 1, 1, 2};
  CHECK(a.size() == 3);
  CHECK(a.str() == "{1,2,3}");
  PointSet b{2, 5};
  CHECK(set_union(a, b) == PointSet({1, 2, 3, 5}));
  CHECK(set_intersect(a, b) == PointSet({2}));
  CHECK(intersects(a, b));
  CHECK_FALSE(intersects(PointSet({1}), PointSet({2})));
  CHECK(subset_of(PointSet({1, 2}), a));
  CHECK_FALSE(subset_of(a, b));

  DenseSet d = DenseSet::from_points(70, PointSet({0, 63, 64, 69}));
  CHECK(d.count() == 4);
  CHECK(d.test(64));
  CHECK_FALSE(d.test(1));
  CHECK(d.to_points() == PointSet({0, 63, 64, 69}));
}

TEST_CASE("metric axioms pass on the 4-cycle") {
  // d(i,j) = min(|i-j|, 4-|i-j|)/2
  MetricSpace s = MetricSpace::cycle(4);
  CHECK(s.dist(0, 1) == Rational(1, 2));
  CHECK(s.dist(0, 2) == Rational(1));
  CHECK(check_metric_axioms(s).ok);
  CHECK(s.diameter() == Rational(1));
  CHECK(s.resolution() == Rational(1, 2));
}

TEST_CASE("axiom checker reports the violating pair") {
  std::vector<Rational> t = {Rational(0), Rational(0), Rational(0), Rational(0)};
  MetricSpace bad(2, t);
  AxiomReport r = check_metric_axioms(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.x == 0);
  CHECK(r.y == 1);
  CHECK(r.message.find("identity") != std::string::npos);
}

TEST_CASE("axiom checker finds a perturbed triangle") {
  // A deterministic "random" table with all entries in [1,2] is automatically
  // a metric; bumping one entry above 4 breaks the triangle inequality, and
  // the brute-force scan must land on a triple through that entry.
  std::mt19937 rng(12345);
  const int m = 6;
  std::vector<Rational> t(m * m, Rational(0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Rational d(1 + (int)(rng() % 16), 16);
      d = d + Rational(1);
      t[i * m + j] = t[j * m + i] = d;
    }
  CHECK(check_metric_axioms(MetricSpace(m, t)).ok);
  t[1 * m + 4] = t[4 * m + 1] = Rational(5);
  AxiomReport r = check_metric_axioms(MetricSpace(m, t));
  CHECK_FALSE(r.ok);
  CHECK(r.message.find("triangle") != std::string::npos);
  bool through_entry = (r.x == 1 && r.z == 4) || (r.x == 4 && r.z == 1);
  CHECK(through_entry);
}

TEST_CASE("balls on the unit-step 4-cycle") {
  MetricSpace s = MetricSpace::cycle_steps(4);
  CHECK(ball(s, 0, Rational(1)) == PointSet({0}));
  CHECK(ball(s, 0, Rational(3, 2)) == PointSet({0, 1, 3}));
  CHECK(ball(s, 0, s.diameter() + Rational(1)) == PointSet({0, 1, 2, 3}));
  CHECK_THROWS_AS(ball(s, 0, Rational(0)), std::invalid_argument);
}

TEST_CASE("hausdorff on the unit-step 4-cycle") {
  MetricSpace s = MetricSpace::cycle_steps(4);
  CHECK(hausdorff(s, PointSet({0, 1}), PointSet({0, 1})) == Rational(0));
  CHECK(hausdorff(s, PointSet({0}), PointSet({2})) == Rational(2));
  CHECK(hausdorff(s, PointSet({0, 2}), PointSet({1})) == Rational(1));
  CHECK_THROWS_AS(hausdorff(s, PointSet(), PointSet({1})), std::invalid_argument);
}

TEST_CASE("chebyshev radius on the unit-step 4-cycle") {
  MetricSpace s = MetricSpace::cycle_steps(4);
  CHECK(chebyshev_radius(s, PointSet({0})) == Rational(0));
  CHECK(chebyshev_radius(s, PointSet({0, 2})) == Rational(1));
  // Scanning all centers: the whole cycle has no center closer than 2 steps
  // to every point.
  CHECK(chebyshev_radius(s, PointSet({0, 1, 2, 3})) == Rational(2));
}

static std::vector<PointSet> all_nonempty_subsets(int m) {
  std::vector<PointSet> out;
  for (int mask = 1; mask < (1 << m); ++mask) {
    std::vector<PointId> v;
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i)) v.push_back(i);
    out.push_back(PointSet(std::move(v)));
  }
  return out;
}

TEST_CASE("hausdorff is a metric on nonempty subsets (exhaustive, <=6 points)") {
  for (const MetricSpace& s : {MetricSpace::cycle_steps(5), MetricSpace::path(6), MetricSpace::cycle(6)}) {
    auto subs = all_nonempty_subsets(s.count());
    for (const auto& a : subs) {
      CHECK(hausdorff(s, a, a) == Rational(0));
      for (const auto& b : subs) {
        Rational hab = hausdorff(s, a, b);
        CHECK(hab == hausdorff(s, b, a));
        if (a != b) CHECK(hab > Rational(0));
        for (const auto& c : subs)
          CHECK(Rational::le_sum(hausdorff(s, a, c), hab, hausdorff(s, b, c)));
      }
    }
  }
}

TEST_CASE("directed collapse for singletons and chebyshev as min over centers") {
  MetricSpace s = MetricSpace::cycle_steps(6);
  auto subs = all_nonempty_subsets(6);
  for (const auto& a : subs) {
    Rational best = hausdorff(s, a, PointSet({0}));
    for (int x = 0; x < 6; ++x) {
      Rational worst(0);
      for (PointId p : a)
        if (s.dist(p, x) > worst) worst = s.dist(p, x);
      CHECK(hausdorff(s, a, PointSet({x})) == worst);
      if (hausdorff(s, a, PointSet({x})) < best) best = hausdorff(s, a, PointSet({x}));
    }
    CHECK(chebyshev_radius(s, a) == best);
  }
}

TEST_CASE("metric space file loading") {
  std::istringstream builtin("points=4\nmetric=cycle\nscale=steps\n");
  MetricSpace cyc = load_metric_space(builtin);
  CHECK(cyc.dist(0, 2) == Rational(2));

  std::istringstream table(
      "points=3\n"
      "labels=a,b,c\n"
      "metric=table\n"
      "1/2\n"
      "1 1/2\n");
  MetricSpace t = load_metric_space(table);
  CHECK(t.dist(1, 0) == Rational(1, 2));
  CHECK(t.dist(2, 0) == Rational(1));
  CHECK(t.dist(2, 1) == Rational(1, 2));
  CHECK(t.label(2) == "c");

  std::istringstream broken(
      "points=3\n"
      "metric=table\n"
      "0\n"
      "1 1/2\n");
  CHECK_THROWS_AS(load_metric_space(broken), std::invalid_argument);
}
