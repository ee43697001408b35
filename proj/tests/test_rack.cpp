#include <doctest.h>

#include "fixtures.hpp"

using namespace rackrep;

TEST_CASE("takasaki table validates") {
  const std::vector<std::vector<long long>> t{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  const Rack r = validate_rack(t);
  CHECK(r.size() == 3);
  CHECK(r == builtin::takasaki(3));
  CHECK(r.op(1, 2) == 0);
  CHECK(r.op_inv(0, 1) == 2);
}

TEST_CASE("validation errors") {
  SUBCASE("constant row") {
    try {
      validate_rack(std::vector<std::vector<long long>>{{0, 0}, {1, 1}});
      FAIL("accepted");
    } catch (const NonBijectiveRow &e) {
      CHECK(e.x == 0);
    }
  }
  SUBCASE("out of range") {
    CHECK_THROWS_AS(validate_rack(std::vector<std::vector<long long>>{{0, 2}, {1, 0}}),
                    OutOfRangeEntry);
    CHECK_THROWS_AS(validate_rack(std::vector<std::vector<long long>>{{0, -1}, {1, 0}}),
                    OutOfRangeEntry);
  }
  SUBCASE("ragged") {
    CHECK_THROWS_AS(validate_rack(std::vector<std::vector<long long>>{{0, 1}, {1}}), InvalidInput);
    CHECK_THROWS_AS(validate_rack(std::vector<std::vector<long long>>{}), InvalidInput);
  }
  SUBCASE("not distributive") {
    // rows are bijections but x |> y = y + x + 1 mod 3 is not self-distributive
    std::vector<std::vector<long long>> t(3, std::vector<long long>(3));
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        t[x][y] = (x + y + 1) % 3;
    CHECK_THROWS_AS(validate_rack(t), DistributivityViolation);
  }
}

TEST_CASE("classification") {
  SUBCASE("P3") {
    const auto c = classify(*fx::p3());
    CHECK(c.is_quandle);
    CHECK(c.is_involutive);
    CHECK(c.is_connected);
    CHECK(c.left_orders == std::vector<std::size_t>{2, 2, 2});
    CHECK(c.common_order == 2);
  }
  SUBCASE("cyclic (0 1 2)") {
    const auto c = classify(*fx::cyclic3());
    CHECK_FALSE(c.is_quandle);
    CHECK_FALSE(c.is_involutive);
    CHECK(c.is_connected);
    CHECK(c.left_orders == std::vector<std::size_t>{3, 3, 3});
  }
  SUBCASE("trivial 2") {
    const auto c = classify(builtin::trivial(2));
    CHECK(c.is_quandle);
    CHECK(c.is_involutive);
    CHECK_FALSE(c.is_connected);
    CHECK(c.left_orders == std::vector<std::size_t>{1, 1});
  }
  SUBCASE("disconnected with unequal orders") {
    // L_0 = L_1 = id, L_2 = (0 1)
    const std::vector<std::vector<Index>> t{{0, 1, 2}, {0, 1, 2}, {1, 0, 2}};
    const Rack r = validate_rack(t);
    const auto c = classify(r);
    CHECK_FALSE(c.is_connected);
    CHECK(c.left_orders == std::vector<std::size_t>{1, 1, 2});
    CHECK_FALSE(c.common_order.has_value());
  }
}

TEST_CASE("left multiplications") {
  CHECK(left_mult(builtin::trivial(4), 2).is_identity());
  const auto l0 = left_mult(builtin::takasaki(3), 0);
  CHECK(std::vector<Index>(l0.images().begin(), l0.images().end()) == std::vector<Index>{0, 2, 1});
  // (1 2) is element 0 in lexicographic order: fixes itself, swaps (1 3) and (2 3)
  const auto l12 = left_mult(*fx::p3(), 0);
  CHECK(std::vector<Index>(l12.images().begin(), l12.images().end()) == std::vector<Index>{0, 2, 1});
  CHECK(left_mult(*fx::p3(), 1).inverse() == left_mult(*fx::p3(), 1));
}

TEST_CASE("orbits") {
  CHECK(orbits(builtin::trivial(3)) == std::vector<std::vector<Index>>{{0}, {1}, {2}});
  CHECK(orbits(*fx::p3()) == std::vector<std::vector<Index>>{{0, 1, 2}});
  CHECK(orbits(builtin::cyclic(Permutation({1, 0, 2}))) ==
        std::vector<std::vector<Index>>{{0, 1}, {2}});
}

TEST_CASE("builtins") {
  CHECK(builtin::takasaki(3).table() == std::vector<std::vector<Index>>{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  CHECK_THROWS_AS(builtin::permutation_quandle(2), InvalidInput);

  SUBCASE("P3 is isomorphic to takasaki via 0->(2 3), 1->(1 3), 2->(1 2)") {
    const std::vector<Index> phi{2, 1, 0};
    const auto h = check_hom(builtin::takasaki(3), *fx::p3(), phi);
    CHECK(h.is_hom);
    CHECK(h.is_iso);
  }
  SUBCASE("conjugacy class of (1 2) in S3 is P3 up to relabelling") {
    const auto s3 = groups::symmetric(3);
    Index t12 = 0;
    for (Index e = 0; e < s3.size(); ++e)
      if (groups::symmetric_element(3, e) == Permutation({1, 0, 2}))
        t12 = e;
    const Rack cc = builtin::conj_class(s3, t12);
    REQUIRE(cc.size() == 3);
    // brute-force search for an isomorphism onto P3
    std::vector<Index> map{0, 1, 2};
    bool found = false;
    do {
      found = found || check_hom(cc, *fx::p3(), map).is_iso;
    } while (std::next_permutation(map.begin(), map.end()));
    CHECK(found);
  }
  SUBCASE("every builtin satisfies the axioms (oracle)") {
    std::vector<Rack> all{builtin::trivial(3), builtin::cyclic(Permutation({2, 0, 1, 3})),
                          builtin::takasaki(5), builtin::takasaki(6)};
    for (std::size_t n = 3; n <= 6; ++n)
      all.push_back(builtin::permutation_quandle(n));
    for (const auto &g : {groups::symmetric(3), groups::dihedral(4), groups::cyclic(5)}) {
      all.push_back(builtin::conj(g));
      all.push_back(builtin::core(g));
      for (Index e = 0; e < g.size(); ++e)
        all.push_back(builtin::conj_class(g, e));
    }
    for (const auto &r : all)
      CHECK(fx::oracle_distributive(r.table()));
  }
  SUBCASE("permutation quandles are involutive and connected") {
    for (std::size_t n = 3; n <= 6; ++n) {
      const auto c = classify(builtin::permutation_quandle(n));
      CHECK(c.is_involutive);
      CHECK(c.is_connected);
      CHECK(builtin::permutation_quandle(n).size() == n * (n - 1) / 2);
    }
  }
  SUBCASE("conjugacy classes are closed under conjugation") {
    const auto d4 = groups::dihedral(4);
    for (Index e = 0; e < d4.size(); ++e) {
      const Rack cc = builtin::conj_class(d4, e);
      CHECK(fx::oracle_distributive(cc.table()));
    }
  }
}

TEST_CASE("connected fixtures have equal left orders") {
  for (const auto &r : fx::small_connected()) {
    const auto c = classify(*r);
    REQUIRE(c.is_connected);
    CHECK(c.common_order.has_value());
  }
}

TEST_CASE("homomorphisms") {
  const auto p3 = fx::p3();
  const std::vector<Index> id{0, 1, 2};
  CHECK(check_hom(*p3, *p3, id).is_iso);
  const std::vector<Index> constant{1, 1, 1};
  const auto h = check_hom(*p3, *p3, constant);
  CHECK(h.is_hom);
  CHECK_FALSE(h.is_iso);
  const std::vector<Index> bad{0, 0, 1};
  CHECK_FALSE(check_hom(*p3, *p3, bad).is_hom);

  // composition of two homs is a hom
  const std::vector<Index> f{2, 1, 0}, g{1, 0, 2};
  REQUIRE(check_hom(builtin::takasaki(3), *p3, f).is_hom);
  REQUIRE(check_hom(*p3, *p3, g).is_hom);
  std::vector<Index> gf(3);
  for (Index i = 0; i < 3; ++i)
    gf[i] = g[f[i]];
  CHECK(check_hom(builtin::takasaki(3), *p3, gf).is_hom);
}
