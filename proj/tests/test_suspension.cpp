#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include <symdyn/suspension.hpp>

using namespace symdyn;

static FiniteDynSystem cycle4_steps() {
  std::vector<int> t = {1, 2, 3, 0};
  return make_finite_system("rot4steps", MetricSpace::cycle_steps(4), Endomap(std::move(t)));
}

TEST_CASE("quotient structure") {
  FiniteDynSystem sys = cycle4_steps();
  SymmetricProduct h = build_symmetric_product(sys, 2);
  SuspensionSpace s(h);
  CHECK(s.count() == 7); // basepoint + C(4,2) pairs

  for (int i : h.singleton_stratum()) CHECK(s.q(i) == kCollapsed);
  int i02 = h.index_of(PointSet({0, 2}));
  CHECK(s.q_inv(s.q(i02)) == i02);
  CHECK_THROWS_AS(s.q_inv(kCollapsed), std::invalid_argument);

  SymmetricProduct h1 = build_symmetric_product(sys, 1);
  CHECK_THROWS_AS(SuspensionSpace(h1), std::invalid_argument);
}

TEST_CASE("q is injective on multi-point subsets (|X|<=5, n<=3)") {
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 3; ++n) {
      FiniteDynSystem sys = finite_rotation(m, 1);
      SymmetricProduct h = build_symmetric_product(sys, n);
      SuspensionSpace s(h);
      std::map<SuspIdx, int> hits;
      for (int i = 0; i < h.count(); ++i) {
        if (h.is_singleton(i)) continue;
        SuspIdx c = s.q(i);
        CHECK(c != kCollapsed);
        CHECK(++hits[c] == 1);
      }
      CHECK((int)hits.size() == s.count() - 1);
    }
}

TEST_CASE("rho closed form on the unit-step 4-cycle") {
  FiniteDynSystem sys = cycle4_steps();
  SymmetricProduct h = build_symmetric_product(sys, 2);
  SuspensionSpace s(h);
  SuspIdx c02 = s.q(h.index_of(PointSet({0, 2})));
  SuspIdx c13 = s.q(h.index_of(PointSet({1, 3})));
  CHECK(s.rho(c02, c02) == Rational(0));
  CHECK(s.rho(c02, kCollapsed) == Rational(1)); // chebyshev radius of {0,2}
  CHECK(s.rho(c02, c13) == Rational(1));
  CHECK(s.rho(kCollapsed, kCollapsed) == Rational(0));
}

TEST_CASE("gn images") {
  FiniteDynSystem sys = cycle4_steps();
  SymmetricProduct h = build_symmetric_product(sys, 2);
  SuspensionSpace s(h);
  CHECK(s.gn_image(kCollapsed).size() == 4);           // F_1(X) alone
  CHECK(s.gn_image(s.q(h.index_of(PointSet({0, 1})))).size() == 5);
  CHECK(s.rho_direct_oracle(kCollapsed, kCollapsed) == Rational(0));
}

TEST_CASE("rho equals the direct oracle and is a metric (|X|<=5, n in {2,3})") {
  std::vector<FiniteDynSystem> systems;
  for (int m = 2; m <= 5; ++m) systems.push_back(finite_rotation(m, 1));
  systems.push_back(cycle4_steps());
  systems.push_back(make_finite_system("chain3", MetricSpace::cycle(3), Endomap({1, 2, 1})));
  systems.push_back(make_finite_system("path5", MetricSpace::path(5), Endomap({1, 2, 3, 4, 4})));
  for (const auto& sys : systems)
    for (int n = 2; n <= 3; ++n) {
      SymmetricProduct h = build_symmetric_product(sys, n);
      SuspensionSpace s(h);
      for (SuspIdx a = 0; a < s.count(); ++a) {
        CHECK(s.rho(a, a) == Rational(0));
        for (SuspIdx b = 0; b < s.count(); ++b) {
          CHECK(s.rho(a, b) == s.rho_direct_oracle(a, b));
          CHECK(s.rho(a, b) == s.rho(b, a));
          if (a != b) CHECK(s.rho(a, b) > Rational(0));
          for (SuspIdx c = 0; c < s.count(); ++c)
            CHECK(Rational::le_sum(s.rho(a, c), s.rho(a, b), s.rho(b, c)));
        }
      }
    }
}

TEST_CASE("oracle spot checks on a larger space (seeded sample)") {
  FiniteDynSystem sys = finite_rotation(7, 3);
  SymmetricProduct h = build_symmetric_product(sys, 2);
  SuspensionSpace s(h);
  std::mt19937 rng(777);
  for (int t = 0; t < 200; ++t) {
    SuspIdx a = (SuspIdx)(rng() % s.count());
    SuspIdx b = (SuspIdx)(rng() % s.count());
    CHECK(s.rho(a, b) == s.rho_direct_oracle(a, b));
  }
}

TEST_CASE("rho(q(A),q(B)) <= H(A,B) for multi-point A,B") {
  for (int m = 3; m <= 5; ++m) {
    FiniteDynSystem sys = finite_rotation(m, 1);
    SymmetricProduct h = build_symmetric_product(sys, 3);
    SuspensionSpace s(h);
    for (int i = 0; i < h.count(); ++i)
      for (int j = 0; j < h.count(); ++j) {
        if (h.is_singleton(i) || h.is_singleton(j)) continue;
        CHECK(s.rho(s.q(i), s.q(j)) <= h.dist(i, j));
      }
  }
}

TEST_CASE("induced map on the suspension") {
  FiniteDynSystem rot4 = cycle4_steps();
  SymmetricProduct h = build_symmetric_product(rot4, 2);
  SuspensionSpace s(h);
  CHECK(induced_apply_sfn(s, kCollapsed) == kCollapsed);
  CHECK(s.apply(s.q(h.index_of(PointSet({0, 2})))) == s.q(h.index_of(PointSet({1, 3}))));

  // image collapses when the class maps to a singleton
  FiniteDynSystem merge = make_finite_system("merge", MetricSpace::cycle(2), Endomap({1, 1}));
  SymmetricProduct hm = build_symmetric_product(merge, 2);
  SuspensionSpace sm(hm);
  CHECK(sm.apply(sm.q(hm.index_of(PointSet({0, 1})))) == kCollapsed);
}

TEST_CASE("semiconjugacy q o F^k = SF^k o q (k <= 20)") {
  std::vector<FiniteDynSystem> systems;
  systems.push_back(finite_rotation(5, 1));
  systems.push_back(constant_system(4));
  systems.push_back(make_finite_system("chain3", MetricSpace::cycle(3), Endomap({1, 2, 1})));
  for (const auto& sys : systems)
    for (int n = 2; n <= 3; ++n) {
      SymmetricProduct h = build_symmetric_product(sys, n);
      SuspensionSpace s(h);
      for (int i = 0; i < h.count(); ++i) {
        int p = i;
        SuspIdx c = s.q(i);
        for (int k = 1; k <= 20; ++k) {
          p = h.apply(p);
          c = s.apply(c);
          CHECK(s.q(p) == c);
        }
      }
      SuspIdx base = kCollapsed;
      for (int k = 0; k < 20; ++k) {
        base = s.apply(base);
        CHECK(base == kCollapsed);
      }
    }
}

TEST_CASE("lemma inclusion holds for all small Gamma (|X|=4, n=2)") {
  FiniteDynSystem rot4 = cycle4_steps();
  SymmetricProduct h = build_symmetric_product(rot4, 2);
  SuspensionSpace s(h);
  CHECK(lemma_inclusion_check(s, {}));
  for (SuspIdx a = 1; a < s.count(); ++a) {
    CHECK(lemma_inclusion_check(s, {a}));
    for (SuspIdx b = 1; b < s.count(); ++b) CHECK(lemma_inclusion_check(s, {a, b}));
  }
  CHECK_THROWS_AS(lemma_inclusion_check(s, {kCollapsed}), std::invalid_argument);
}

TEST_CASE("open-set transport: disjoint Vietoris images avoid the basepoint injectively") {
  FiniteDynSystem rot4 = cycle4_steps();
  SymmetricProduct h = build_symmetric_product(rot4, 2);
  SuspensionSpace s(h);
  VietorisBasisElement v{{PointSet({0, 1}), PointSet({2, 3})}};
  PointSet members = vietoris_point_set(h, v);
  std::set<SuspIdx> images;
  for (PointId i : members) {
    SuspIdx c = s.q(i);
    CHECK(c != kCollapsed);
    CHECK(images.insert(c).second); // q injective on the element
  }
}
