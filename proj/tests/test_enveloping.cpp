#include <doctest.h>

#include <numeric>

#include "fixtures.hpp"

using namespace rackrep;

namespace {

Presentation pres(std::size_t n, std::vector<std::vector<Letter>> rels) {
  return Presentation{n, std::move(rels)};
}

// Element reached by a positive word of generator slots.
Index evaluate(const FiniteGroup &g, const std::vector<Index> &word) {
  Index e = g.identity();
  for (Index s : word)
    e = g.mul(e, g.generators()[s]);
  return e;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

} // namespace

TEST_CASE("coset enumeration of small presentations") {
  const Letter a = gen_letter(0), b = gen_letter(1), A = inv_letter(0);
  CHECK(todd_coxeter(pres(1, {{a, a, a, a, a}})).size() == 5);
  CHECK(todd_coxeter(pres(1, {{a}})).size() == 1);
  CHECK(todd_coxeter(pres(2, {{a, a}, {b, b, b}, {a, b, a, b}})).size() == 6);
  CHECK(todd_coxeter(pres(2, {{a, a}, {b, b}, {a, b, a, b, a, b, a, b}})).size() == 8);
  CHECK(todd_coxeter(pres(2, {{a, a}, {b, b}, {a, b, A, inv_letter(1)}})).size() == 4);
  // binary-tetrahedral-style presentation <a,b | a^3, b^3, (ab)^2> is A4
  CHECK(todd_coxeter(pres(2, {{a, a, a}, {b, b, b}, {a, b, a, b}})).size() == 12);

  SUBCASE("table invariants") {
    const auto p = pres(2, {{a, a}, {b, b, b}, {a, b, a, b}});
    const auto ct = todd_coxeter(p);
    for (Index c = 0; c < ct.size(); ++c) {
      std::vector<Letter> word;
      for (Index g : ct.representative_words[c])
        word.push_back(gen_letter(g));
      CHECK(ct.trace(0, word) == c);
      for (const auto &r : p.relators)
        CHECK(ct.trace(c, r) == c);
    }
  }
  SUBCASE("limits and bad input") {
    CHECK_THROWS_AS(todd_coxeter(pres(2, {{a, a}, {b, b, b}, {a, b, a, b}}), 3), CosetLimitExceeded);
    CHECK_THROWS_AS(todd_coxeter(pres(1, {{}})), InvalidInput);
    CHECK_THROWS_AS(todd_coxeter(pres(1, {{b}})), InvalidInput);
  }
}

TEST_CASE("relator formatting") {
  CHECK(format_relator({gen_letter(2), inv_letter(0)}) == "g2 g0^-1");
}

TEST_CASE("presentation of a connected rack") {
  const auto p = presentation_of(*fx::p3());
  CHECK(p.n_generators == 3);
  // one conjugation relator per pair (x, y) and one power relator per x
  std::set<std::vector<Letter>> unique(p.relators.begin(), p.relators.end());
  CHECK(unique.size() == p.relators.size());
  CHECK(p.relators.size() == 12);
  CHECK_THROWS_AS(presentation_of(builtin::trivial(2)), NotConnected);
}

TEST_CASE("finite enveloping groups") {
  SUBCASE("permutation quandles give symmetric groups") {
    for (std::size_t n = 3; n <= 5; ++n) {
      const auto env = enveloping_group(builtin::permutation_quandle(n));
      CHECK(env.group->size() == factorial(n));
      CHECK(env.center.size() == 1);
      CHECK(env.kernel.size() == 1);
      CHECK(conjugacy_classes(*env.group).size() == std::vector<std::size_t>{0, 0, 0, 3, 5, 7}[n]);
    }
  }
  SUBCASE("cyclic rack gives Z3") {
    const auto env = enveloping_group(fx::cyclic3());
    CHECK(env.group->size() == 3);
    CHECK(env.center.size() == 3);
    CHECK(env.eta == std::vector<Index>{env.eta[0], env.eta[0], env.eta[0]});
    CHECK(env.inn.perm.group.size() == 3);
  }
  SUBCASE("tetrahedral quandle has a nontrivial center") {
    const auto env = enveloping_group(fx::tetrahedral());
    CHECK(env.group->size() == 24);
    CHECK(env.center.size() == 2);
    CHECK(env.kernel.size() == 2);
    CHECK(env.inn.perm.group.size() == 12);
  }
  SUBCASE("disconnected racks are rejected") {
    CHECK_THROWS_AS(enveloping_group(builtin::trivial(3)), NotConnected);
    CHECK_THROWS_AS(enveloping_group(builtin::takasaki(4)), NotConnected);
  }
  SUBCASE("coset cap") {
    Config c;
    c.max_cosets = 10;
    CHECK_THROWS_AS(enveloping_group(builtin::permutation_quandle(4), c), CosetLimitExceeded);
  }
}

TEST_CASE("eta relations hold in every computed group") {
  for (const auto &r : fx::small_connected()) {
    const auto env = enveloping_group(r);
    const auto &g = *env.group;
    const std::size_t k = r->size();
    for (Index x = 0; x < k; ++x) {
      CHECK(g.power(env.eta[x], env.common_order) == g.identity());
      for (Index y = 0; y < k; ++y)
        CHECK(env.eta[r->op(x, y)] ==
              g.mul(g.mul(env.eta[x], env.eta[y]), g.inverse(env.eta[x])));
    }
    // the eta images generate and every element's word evaluates to it
    for (Index h = 0; h < g.size(); ++h)
      CHECK(evaluate(g, g.word(h)) == h);
    // g -> L is a homomorphism onto Inn(X) with the recorded kernel
    for (Index h = 0; h < g.size(); ++h) {
      const bool in_kernel = env.to_inn.images[h] == env.inn.perm.group.identity();
      CHECK(in_kernel == std::binary_search(env.kernel.begin(), env.kernel.end(), h));
    }
    CHECK(g.size() == env.kernel.size() * env.inn.perm.group.size());
    // kernel words are positive words of rack elements
    for (std::size_t i = 0; i < env.kernel.size(); ++i) {
      Index e = g.identity();
      for (Index x : env.kernel_words[i])
        e = g.mul(e, env.eta[x]);
      CHECK(e == env.kernel[i]);
    }
  }
}

TEST_CASE("stabilizing families") {
  const auto p3 = fx::p3();
  const auto fams = enumerate_stabilizing_families(*p3, 2);
  REQUIRE(fams.size() == 3);
  CHECK(fams[0].word == Word{0, 0});
  CHECK(fams[2].word == Word{2, 2});
  CHECK(enumerate_stabilizing_families(*p3, 1).empty());
  CHECK(is_stabilizing_family(*p3, std::vector<Index>{0, 1, 0, 1, 0, 1}));
  CHECK_FALSE(is_stabilizing_family(*p3, std::vector<Index>{0, 1}));
  CHECK_THROWS_AS(enumerate_stabilizing_families(*p3, 0), InvalidInput);
  CHECK_THROWS_AS(enumerate_stabilizing_families(builtin::permutation_quandle(6), 8), BudgetExceeded);

  SUBCASE("enumeration agrees with a direct scan") {
    for (const auto &r : {fx::tetrahedral(), fx::cyclic3(), fx::share(builtin::trivial(2))}) {
      const auto got = enumerate_stabilizing_families(*r, 4);
      std::vector<Word> expected;
      std::vector<Word> level{{}};
      for (std::size_t len = 1; len <= 4; ++len) {
        std::vector<Word> next;
        for (const auto &w : level)
          for (Index x = 0; x < r->size(); ++x) {
            auto v = w;
            v.push_back(x);
            next.push_back(v);
          }
        for (const auto &w : next)
          if (is_stabilizing_family(*r, w))
            expected.push_back(w);
        level = std::move(next);
      }
      std::sort(expected.begin(), expected.end());
      std::vector<Word> words;
      for (const auto &f : got)
        words.push_back(f.word);
      CHECK(words == expected);
    }
  }
}

TEST_CASE("central products characterize stabilizing families of Conj(G)") {
  for (const auto &g : {groups::symmetric(3), groups::dihedral(4)}) {
    const Rack conj = builtin::conj(g);
    const std::size_t m = g.size();
    for (Index a = 0; a < m; ++a)
      for (Index b = 0; b < m; ++b) {
        const std::vector<Index> w2{a, b};
        CHECK(conj_center_criterion(g, w2) == is_stabilizing_family(conj, w2));
        for (Index c = 0; c < m; ++c) {
          const std::vector<Index> w3{a, b, c};
          CHECK(conj_center_criterion(g, w3) == is_stabilizing_family(conj, w3));
        }
      }
  }
}
