#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "rackrep/kernels.hpp"

using namespace rackrep;

namespace {

std::vector<Permutation> lefts_of(const Rack &r) {
  std::vector<Permutation> out;
  for (Index x = 0; x < r.size(); ++x)
    out.push_back(left_mult(r, x));
  return out;
}

std::vector<Index> flat(const std::vector<std::vector<Index>> &t) {
  std::vector<Index> out;
  for (const auto &row : t)
    out.insert(out.end(), row.begin(), row.end());
  return out;
}

} // namespace

TEST_CASE("word counts") {
  CHECK(word_count(3, 2) == 12);
  CHECK(word_count(1, 5) == 5);
  CHECK(word_count(10, 6) == 1111110);
  CHECK(word_count(1000, 100) == UINT64_MAX);
}

TEST_CASE("distributivity scans agree") {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto r = builtin::permutation_quandle(n);
    const auto t = r.flat_table();
    const std::size_t k = n * (n - 1) / 2;
    CHECK_FALSE(par::first_distributivity_violation(t, k));
    CHECK_FALSE(serial::first_distributivity_violation(t, k));
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    // random tables with bijective rows are almost never distributive
    const std::size_t k = 6;
    std::vector<std::vector<Index>> t(k);
    for (auto &row : t) {
      row.resize(k);
      std::iota(row.begin(), row.end(), 0);
      std::shuffle(row.begin(), row.end(), rng);
    }
    const auto f = flat(t);
    const auto a = par::first_distributivity_violation(f, k);
    const auto b = serial::first_distributivity_violation(f, k);
    CHECK(a == b);
    CHECK(a.has_value() == !fx::oracle_distributive(t));
  }
}

TEST_CASE("associativity scans agree") {
  const auto s4 = groups::symmetric(4);
  CHECK_FALSE(par::first_associativity_violation(s4.flat_table(), 24));
  CHECK_FALSE(serial::first_associativity_violation(s4.flat_table(), 24));
  // a Latin square that is not a group
  const std::vector<Index> bad{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  const auto a = par::first_associativity_violation(bad, 5);
  CHECK(a.has_value());
  CHECK(a == serial::first_associativity_violation(bad, 5));
}

TEST_CASE("stabilizing word scans agree") {
  for (const auto &r : fx::small_connected()) {
    const auto lefts = lefts_of(*r);
    for (std::size_t len = 1; len <= 5; ++len)
      CHECK(par::stabilizing_words(lefts, len) == serial::stabilizing_words(lefts, len));
  }
  const auto lefts = lefts_of(builtin::permutation_quandle(4));
  CHECK(par::stabilizing_words(lefts, 4) == serial::stabilizing_words(lefts, 4));
}

TEST_CASE("unstable word scans agree") {
  const auto p3 = fx::p3();
  const auto lefts = lefts_of(*p3);
  const std::vector<CMatrix> twos(3, CMatrix::Constant(1, 1, 2.0));
  const auto a = par::first_unstable_word(lefts, twos, 4, 1e-9);
  REQUIRE(a.has_value());
  CHECK(*a == Word{0, 0});
  CHECK(a == serial::first_unstable_word(lefts, twos, 4, 1e-9));

  const auto reg = regular_rep(p3);
  CHECK_FALSE(par::first_unstable_word(lefts, reg.matrices, 6, 1e-9));
  CHECK_FALSE(serial::first_unstable_word(lefts, reg.matrices, 6, 1e-9));

  const auto tl = lefts_of(*fx::tetrahedral());
  const std::vector<CMatrix> minus(4, CMatrix::Constant(1, 1, -1.0));
  CHECK(par::first_unstable_word(tl, minus, 6, 1e-9) ==
        serial::first_unstable_word(tl, minus, 6, 1e-9));
}

TEST_CASE("residual kernels agree") {
  std::mt19937_64 rng(11);
  const auto p4 = builtin::permutation_quandle(4);
  auto reg = regular_rep(fx::share(p4));
  std::vector<CMatrix> inv;
  for (const auto &m : reg.matrices)
    inv.push_back(m.inverse());
  const auto a = par::rack_axiom_residual(p4.flat_table(), p4.size(), reg.matrices, inv);
  const auto b = serial::rack_axiom_residual(p4.flat_table(), p4.size(), reg.matrices, inv);
  CHECK(a.residual == 0.0);
  CHECK(b.residual == 0.0);

  reg.matrices[2] = random_complex(6, 6, rng);
  inv[2] = reg.matrices[2].inverse();
  const auto c = par::rack_axiom_residual(p4.flat_table(), p4.size(), reg.matrices, inv);
  const auto d = serial::rack_axiom_residual(p4.flat_table(), p4.size(), reg.matrices, inv);
  CHECK(c.residual > 1e-3);
  CHECK(c.residual == doctest::Approx(d.residual));
  CHECK(c.a == d.a);
  CHECK(c.b == d.b);

  const auto s4 = std::make_shared<const FiniteGroup>(groups::symmetric(4));
  auto greg = regular_group_rep(s4);
  CHECK(par::multiplicativity_residual(s4->flat_table(), 24, greg.matrices).residual == 0.0);
  greg.matrices[5] *= 2.0;
  const auto e = par::multiplicativity_residual(s4->flat_table(), 24, greg.matrices);
  const auto f = serial::multiplicativity_residual(s4->flat_table(), 24, greg.matrices);
  CHECK(e.residual == doctest::Approx(f.residual));
  CHECK(e.a == f.a);
  CHECK(e.b == f.b);
}

TEST_CASE("group averages agree and are invariant") {
  std::mt19937_64 rng(5);
  const auto s4 = std::make_shared<const FiniteGroup>(groups::symmetric(4));
  const auto greg = regular_group_rep(s4);
  std::vector<CMatrix> inv;
  for (Index g = 0; g < s4->size(); ++g)
    inv.push_back(greg.matrices[s4->inverse(g)]);
  const CMatrix x = random_complex(24, 24, rng);
  const CMatrix a = par::group_average(greg.matrices, inv, x);
  const CMatrix b = serial::group_average(greg.matrices, inv, x);
  CHECK(fx::max_diff(a, b) == 0.0);
  for (Index s : s4->generators())
    CHECK(fx::max_diff(greg.matrices[s] * a, a * greg.matrices[s]) < 1e-12);
}
