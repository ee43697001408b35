#include <doctest.h>

#include <random>
#include <variant>

#include "fixtures.hpp"

using namespace rackrep;
using fx::max_diff;

namespace {

GroupRep lifted_regular(const EnvelopingGroup &env) { return lift(env, regular_rep(env.rack)); }

// B^-1 M_g B is block diagonal with the reported blocks.
void check_block_diagonal(const GroupRep &g, const DecompositionReport &rep, double tol) {
  const CMatrix b_inv = rep.basis_change.inverse();
  for (Index h = 0; h < g.group->size(); ++h) {
    const CMatrix m = b_inv * g.matrices[h] * rep.basis_change;
    Eigen::Index at = 0;
    for (const auto &blk : rep.blocks) {
      const auto d = static_cast<Eigen::Index>(blk.irrep.dimension());
      for (std::size_t copy = 0; copy < blk.multiplicity; ++copy) {
        CHECK(m.block(at, 0, d, at).cwiseAbs().maxCoeff() < tol + (at == 0 ? 1.0 : 0.0));
        at += d;
      }
    }
    CHECK(at == m.rows());
  }
}

} // namespace

TEST_CASE("commutant dimension") {
  const auto env = enveloping_group(fx::p3());
  CHECK(commutant_dimension(lifted_regular(env)) == 2);
  CHECK(commutant_dimension(lift(env, RackRep{env.rack, fx::psi_lex()})) == 1);
  const auto s4 = std::make_shared<const FiniteGroup>(groups::symmetric(4));
  // sum of squared multiplicities of the regular rep = |G|
  CHECK(commutant_dimension(regular_group_rep(s4)) == 24);
}

TEST_CASE("split") {
  const auto env = enveloping_group(fx::p3());
  SUBCASE("lifted regular rep splits off the all-ones line") {
    const auto g = lifted_regular(env);
    const auto res = split(g);
    REQUIRE(std::holds_alternative<SplitResult>(res));
    const auto &s = std::get<SplitResult>(res);
    CHECK(s.invariant.cols() + s.complement.cols() == 3);
    const CMatrix &line = s.invariant.cols() == 1 ? s.invariant : s.complement;
    REQUIRE(line.cols() == 1);
    // proportional to (1,1,1)
    CHECK(std::abs(line(0, 0) - line(1, 0)) < 1e-9);
    CHECK(std::abs(line(0, 0) - line(2, 0)) < 1e-9);
    // both pieces invariant
    for (const CMatrix *v : {&s.invariant, &s.complement}) {
      const CMatrix proj = *v * (v->adjoint() * *v).inverse() * v->adjoint();
      for (const auto &m : g.matrices)
        CHECK((m * *v - proj * m * *v).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
  SUBCASE("psi is irreducible") {
    CHECK(std::holds_alternative<Irreducible>(split(lift(env, RackRep{env.rack, fx::psi_lex()}))));
  }
  SUBCASE("one-dimensional") {
    CHECK(std::holds_alternative<Irreducible>(split(lift(env, scalar_rep(env.rack, -1.0)))));
  }
  SUBCASE("gap failure when nothing can be separated") {
    Config c;
    c.tol.eps_gap = 1e6;
    CHECK_THROWS_AS(split(lifted_regular(env), c), GapFailure);
    CHECK_THROWS_AS(decompose(lifted_regular(env), c), GapFailure);
  }
}

TEST_CASE("decompose") {
  SUBCASE("lifted lambda of P3 is trivial + 2-dim") {
    const auto env = enveloping_group(fx::p3());
    const auto g = lifted_regular(env);
    const auto rep = decompose(g);
    REQUIRE(rep.blocks.size() == 2);
    CHECK(rep.blocks[0].irrep.dimension() == 1);
    CHECK(rep.blocks[0].multiplicity == 1);
    for (auto v : rep.blocks[0].character)
      CHECK(std::abs(v - 1.0) < 1e-9);
    CHECK(rep.blocks[1].irrep.dimension() == 2);
    CHECK(rep.blocks[1].multiplicity == 1);
    CHECK(rep.residual < 1e-7);
    check_block_diagonal(g, rep, 1e-9);
    // the 2-dim block is psi up to equivalence
    CHECK(are_equivalent(project(env, rep.blocks[1].irrep), RackRep{env.rack, fx::psi_lex()})
              .has_value());
  }
  SUBCASE("lifted lambda of the cyclic rack is 1 + w + w^2") {
    const auto env = enveloping_group(fx::cyclic3());
    const auto rep = decompose(lifted_regular(env));
    REQUIRE(rep.blocks.size() == 3);
    const std::vector<std::vector<Complex>> table{
        {1.0, 1.0, 1.0}, {1.0, fx::w, fx::w * fx::w}, {1.0, fx::w * fx::w, fx::w}};
    // classes of Z3 in element order; eta(x) is the generator
    const Index gen = env.eta[0];
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(rep.blocks[i].multiplicity == 1);
      const auto &chi = rep.blocks[i].character;
      CHECK(std::abs(chi[0] - 1.0) < 1e-9);
      CHECK(std::abs(chi[gen] - table[i][1]) < 1e-9);
      CHECK(std::abs(chi[env.group->mul(gen, gen)] - table[i][2]) < 1e-9);
    }
  }
  SUBCASE("an irreducible rep is returned whole") {
    const auto env = enveloping_group(fx::p3());
    const auto rep = decompose(lift(env, RackRep{env.rack, fx::psi_lex()}));
    REQUIRE(rep.blocks.size() == 1);
    CHECK(rep.blocks[0].multiplicity == 1);
    CHECK(rep.blocks[0].irrep.dimension() == 2);
  }
  SUBCASE("multiplicities of regular representations") {
    const auto s4 = std::make_shared<const FiniteGroup>(groups::symmetric(4));
    const auto g = regular_group_rep(s4);
    const auto rep = decompose(g);
    std::vector<std::size_t> dims, mults;
    for (const auto &b : rep.blocks) {
      dims.push_back(b.irrep.dimension());
      mults.push_back(b.multiplicity);
    }
    CHECK(dims == std::vector<std::size_t>{1, 1, 2, 3, 3});
    CHECK(mults == dims);
    check_block_diagonal(g, rep, 1e-9);
  }
  SUBCASE("non-unitary input") {
    std::mt19937_64 rng(1);
    const auto d4 = std::make_shared<const FiniteGroup>(groups::dihedral(4));
    auto g = regular_group_rep(d4);
    const CMatrix s = random_complex(8, 8, rng);
    const CMatrix s_inv = s.inverse();
    for (auto &m : g.matrices)
      m = s * m * s_inv;
    const auto rep = decompose(g);
    std::size_t total = 0;
    for (const auto &b : rep.blocks)
      total += b.irrep.dimension() * b.multiplicity;
    CHECK(total == 8);
    CHECK(rep.blocks.size() == 5);
    check_block_diagonal(g, rep, 1e-7);
  }
  SUBCASE("deterministic") {
    const auto env = enveloping_group(fx::tetrahedral());
    const auto a = decompose(regular_group_rep(env.group));
    const auto b = decompose(regular_group_rep(env.group));
    CHECK(a.basis_change == b.basis_change);
  }
}

TEST_CASE("orthogonality of irreducible characters") {
  for (const auto &r : fx::small_connected()) {
    const auto env = enveloping_group(r);
    const auto rep = decompose(regular_group_rep(env.group));
    const auto sizes = class_sizes(*env.group);
    for (std::size_t i = 0; i < rep.blocks.size(); ++i)
      for (std::size_t j = 0; j < rep.blocks.size(); ++j) {
        const Complex ip = rackrep::inner_product(rep.blocks[i].character, rep.blocks[j].character, sizes,
                                         env.group->size());
        CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 10 * 1e-9);
      }
    CHECK(rep.blocks.size() == sizes.size());
  }
}

TEST_CASE("strong irreducible inventories") {
  SUBCASE("P3") {
    const auto inv = enumerate_strong_irreps(fx::p3());
    REQUIRE(inv.reps.size() == 3);
    CHECK(inv.exact);
    CHECK(inv.bound == 3);
    CHECK(inv.reps[0].dimension() == 1);
    CHECK(inv.reps[1].dimension() == 1);
    CHECK(inv.reps[2].dimension() == 2);
  }
  SUBCASE("cyclic rack") {
    const auto inv = enumerate_strong_irreps(fx::cyclic3());
    REQUIRE(inv.reps.size() == 3);
    CHECK(inv.exact);
    const std::vector<Complex> values{1.0, fx::w, fx::w * fx::w};
    for (std::size_t i = 0; i < 3; ++i)
      for (const auto &m : inv.reps[i].matrices)
        CHECK(std::abs(m(0, 0) - values[i]) < 1e-9);
  }
  SUBCASE("takasaki Z3 matches P3") {
    const auto a = enumerate_strong_irreps(fx::takasaki3());
    const auto b = enumerate_strong_irreps(fx::p3());
    REQUIRE(a.reps.size() == b.reps.size());
    for (std::size_t i = 0; i < a.reps.size(); ++i)
      CHECK(are_equivalent(a.reps[i], RackRep{a.reps[i].rack, b.reps[i].matrices}).has_value());
  }
  SUBCASE("nontrivial center: oracle-confirmed subset") {
    const auto inv = enumerate_strong_irreps(fx::tetrahedral());
    CHECK(inv.reps.size() == 4);
    CHECK(inv.bound == 7);
    CHECK(inv.exact);
    Config tiny;
    tiny.word_budget = 10;
    CHECK_FALSE(enumerate_strong_irreps(fx::tetrahedral(), tiny).exact);
  }
  SUBCASE("count bound and pairwise inequivalence on every fixture") {
    auto racks = fx::small_connected();
    racks.push_back(fx::share(builtin::permutation_quandle(4)));
    racks.push_back(fx::share(builtin::takasaki(5)));
    for (const auto &r : racks) {
      const auto env = enveloping_group(r);
      const auto inv = enumerate_strong_irreps(env);
      CHECK(inv.reps.size() <= inv.bound);
      for (std::size_t i = 0; i < inv.reps.size(); ++i) {
        CHECK(is_strong(env, inv.reps[i]));
        CHECK(is_irreducible(inv.reps[i].matrices, inv.reps[i].dimension()));
        for (std::size_t j = i + 1; j < inv.reps.size(); ++j)
          if (inv.reps[i].dimension() == inv.reps[j].dimension())
            CHECK_FALSE(are_equivalent(inv.reps[i], inv.reps[j]).has_value());
      }
    }
  }
  SUBCASE("disconnected racks") {
    CHECK_THROWS_AS(enumerate_strong_irreps(fx::share(builtin::trivial(2))), NotConnected);
  }
}
