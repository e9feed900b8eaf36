#include <catch2/catch_amalgamated.hpp>

#include <symdyn/hyperspace.hpp>

using namespace symdyn;

static std::vector<PointSet> all_nonempty_subsets(int m, int max_size = 99) {
  std::vector<PointSet> out;
  for (int mask = 1; mask < (1 << m); ++mask) {
    std::vector<PointId> v;
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i)) v.push_back(i);
    if ((int)v.size() <= max_size) out.push_back(PointSet(std::move(v)));
  }
  return out;
}

TEST_CASE("enumeration counts and strata") {
  FiniteDynSystem rot5 = finite_rotation(5, 1);
  SymmetricProduct h2 = build_symmetric_product(rot5, 2);
  CHECK(h2.count() == 15); // C(5,1) + C(5,2)
  CHECK(h2.singleton_stratum().size() == 5);

  SymmetricProduct h1 = build_symmetric_product(rot5, 1);
  CHECK(h1.count() == 5);
  // n=1 is isometric to the base via x <-> {x}
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(h1.dist(i, j) == rot5.space.dist(i, j));

  CHECK_THROWS_AS(build_symmetric_product(rot5, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_symmetric_product(rot5, 3, /*cap=*/10), EnumerationCapExceeded);
}

TEST_CASE("singleton stratum is +invariant") {
  for (const auto& sys : {finite_rotation(5, 1), constant_system(4),
                          make_finite_system("m", MetricSpace::cycle(3), Endomap({1, 2, 1}))}) {
    SymmetricProduct h = build_symmetric_product(sys, 2);
    for (int i : h.singleton_stratum()) CHECK(h.is_singleton(h.apply(i)));
  }
}

TEST_CASE("induced map") {
  FiniteDynSystem rot4 = finite_rotation(4, 1);
  SymmetricProduct h = build_symmetric_product(rot4, 2);
  CHECK(h.induced_apply(PointSet({0, 2})) == PointSet({1, 3}));

  FiniteDynSystem merge = make_finite_system("merge", MetricSpace::cycle(2), Endomap({1, 1}));
  SymmetricProduct hm = build_symmetric_product(merge, 2);
  CHECK(hm.induced_apply(PointSet({0, 1})) == PointSet({1})); // cardinality drops
}

TEST_CASE("induced iterates equal images under f^k (k <= 10)") {
  for (const auto& sys : {finite_rotation(5, 1), constant_system(3),
                          make_finite_system("m", MetricSpace::cycle(3), Endomap({1, 2, 1}))}) {
    SymmetricProduct h = build_symmetric_product(sys, 3);
    for (int i = 0; i < h.count(); ++i) {
      int idx = i;
      for (int k = 1; k <= 10; ++k) {
        idx = h.apply(idx);
        std::vector<PointId> img;
        for (PointId p : h.element(i)) img.push_back(iterate(sys, p, k));
        CHECK(h.element(idx) == PointSet(std::move(img)));
      }
    }
  }
}

TEST_CASE("rotation(5,1) n=2: three 5-cycles") {
  SymmetricProduct h = build_symmetric_product(finite_rotation(5, 1), 2);
  // orbit decomposition of the induced permutation
  std::vector<int> seen(h.count(), 0);
  std::vector<int> cycle_lengths;
  for (int i = 0; i < h.count(); ++i) {
    if (seen[i]) continue;
    int len = 0, p = i;
    while (!seen[p]) {
      seen[p] = 1;
      p = h.apply(p);
      ++len;
    }
    cycle_lengths.push_back(len);
  }
  std::sort(cycle_lengths.begin(), cycle_lengths.end());
  CHECK(cycle_lengths == std::vector<int>({5, 5, 5}));
}

TEST_CASE("hausdorff lifted to the product is a metric (|X|<=5, n<=3)") {
  FiniteDynSystem rot5 = finite_rotation(5, 1);
  SymmetricProduct h = build_symmetric_product(rot5, 3);
  for (int i = 0; i < h.count(); ++i) {
    CHECK(h.dist(i, i) == Rational(0));
    for (int j = i + 1; j < h.count(); ++j) {
      CHECK(h.dist(i, j) == h.dist(j, i));
      CHECK(h.dist(i, j) > Rational(0));
      for (int k = 0; k < h.count(); ++k)
        CHECK(Rational::le_sum(h.dist(i, k), h.dist(i, j), h.dist(j, k)));
    }
  }
}

TEST_CASE("isometric base maps induce isometries of the product (|X|<=6)") {
  for (const auto& sys : {finite_rotation(5, 1), finite_rotation(6, 2)}) {
    SymmetricProduct h = build_symmetric_product(sys, 2);
    for (int i = 0; i < h.count(); ++i)
      for (int j = 0; j < h.count(); ++j)
        CHECK(h.dist(h.apply(i), h.apply(j)) == h.dist(i, j));
  }
}

TEST_CASE("vietoris membership") {
  FiniteDynSystem rot4 = finite_rotation(4, 1);
  VietorisBasisElement whole{{PointSet({0, 1, 2, 3})}};
  VietorisBasisElement v{{PointSet({0}), PointSet({2})}};
  CHECK(vietoris_contains(whole, PointSet({1})));
  CHECK(vietoris_contains(whole, PointSet({0, 3})));
  CHECK(vietoris_contains(v, PointSet({0, 2})));
  CHECK_FALSE(vietoris_contains(v, PointSet({0})));      // misses {2}
  CHECK_FALSE(vietoris_contains(v, PointSet({0, 1, 2}))); // 1 escapes the union
  SymmetricProduct h = build_symmetric_product(rot4, 2);
  CHECK(vietoris_point_set(h, v) == PointSet({h.index_of(PointSet({0, 2}))}));
}

TEST_CASE("vietoris membership agrees with the brute-force definition (|X|<=5, k<=3)") {
  const int m = 5;
  auto subsets = all_nonempty_subsets(m);
  std::vector<PointSet> parts = {PointSet({0}), PointSet({1, 2}), PointSet({0, 1}), PointSet({3, 4}),
                                 PointSet({2, 3, 4})};
  std::vector<std::vector<int>> choices;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    choices.push_back({(int)i});
    for (std::size_t j = 0; j < parts.size(); ++j) {
      choices.push_back({(int)i, (int)j});
      for (std::size_t k = 0; k < parts.size(); ++k) choices.push_back({(int)i, (int)j, (int)k});
    }
  }
  for (const auto& ch : choices) {
    VietorisBasisElement v;
    for (int i : ch) v.parts.push_back(parts[i]);
    for (const auto& a : subsets) {
      // literal definition: A inside the union, A meets every part
      PointSet uni;
      for (const auto& u : v.parts) uni = set_union(uni, u);
      bool expect = subset_of(a, uni);
      for (const auto& u : v.parts) expect = expect && intersects(u, a);
      CHECK(vietoris_contains(v, a) == expect);
    }
  }
}

TEST_CASE("for k >= 2 disjoint parts exclude singletons") {
  VietorisBasisElement v{{PointSet({0, 1}), PointSet({2})}};
  for (int x = 0; x < 4; ++x) CHECK_FALSE(vietoris_contains(v, PointSet({x})));
}

TEST_CASE("disjoint refinement") {
  FiniteDynSystem rot4 = finite_rotation(4, 1);
  // overlapping parts get split via singleton basis balls
  auto r = disjoint_refinement({PointSet({0, 1}), PointSet({0, 1})}, rot4.basis);
  REQUIRE(r.has_value());
  REQUIRE(r->size() == 2);
  CHECK_FALSE(intersects((*r)[0], (*r)[1]));
  CHECK(subset_of((*r)[0], PointSet({0, 1})));
  CHECK(subset_of((*r)[1], PointSet({0, 1})));

  // already-disjoint parts come back unchanged
  std::vector<PointSet> parts = {PointSet({0}), PointSet({2, 3})};
  auto r2 = disjoint_refinement(parts, rot4.basis);
  REQUIRE(r2.has_value());
  CHECK(*r2 == parts);

  // pigeonhole failure is reported, not fatal
  auto r3 = disjoint_refinement({PointSet({0}), PointSet({0})}, rot4.basis);
  CHECK_FALSE(r3.has_value());
}
