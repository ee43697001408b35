#pragma once

// Shared fixtures and test-side oracles. The oracles are deliberately naive
// (nested loops, std::set closures) and share no code with the library.

#include <complex>
#include <initializer_list>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "rackrep/decompose.hpp"

namespace fx {

using namespace rackrep;

inline CMatrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  CMatrix m(static_cast<Eigen::Index>(rows.size()),
            static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto &r : rows) {
    Eigen::Index j = 0;
    for (auto v : r)
      m(i, j++) = v;
    ++i;
  }
  return m;
}

inline const Complex w = std::polar(1.0, 2.0 * std::acos(-1.0) / 3.0);

inline std::shared_ptr<const Rack> share(Rack r) { return std::make_shared<const Rack>(std::move(r)); }

inline std::shared_ptr<const Rack> p3() { return share(builtin::permutation_quandle(3)); }
inline std::shared_ptr<const Rack> takasaki3() { return share(builtin::takasaki(3)); }
/// sigma = (0 1 2)
inline std::shared_ptr<const Rack> cyclic3() { return share(builtin::cyclic(Permutation({1, 2, 0}))); }

/// P3 with elements ordered ((2 3), (1 3), (1 2)).
inline std::shared_ptr<const Rack> p3_reversed() {
  return share(validate_rack(std::vector<std::vector<Index>>{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}));
}

/// Alexander quandle on F4 with t = a: x |> y = a*y + (1+a)*x. Encoding
/// 0, 1, a, a+1 as 0..3; its enveloping group has a center of order 2.
inline std::shared_ptr<const Rack> tetrahedral() {
  const Index times_a[4] = {0, 2, 3, 1}, times_a1[4] = {0, 3, 1, 2};
  std::vector<std::vector<Index>> t(4, std::vector<Index>(4));
  for (Index x = 0; x < 4; ++x)
    for (Index y = 0; y < 4; ++y)
      t[x][y] = times_a[y] ^ times_a1[x];
  return share(validate_rack(t, "tetrahedral"));
}

/// Connected racks of size <= 4 used by the property suites.
inline std::vector<std::shared_ptr<const Rack>> small_connected() {
  return {share(builtin::trivial(1)),
          share(builtin::cyclic(Permutation({1, 0}))),
          cyclic3(),
          share(builtin::cyclic(Permutation({1, 2, 3, 0}))),
          takasaki3(),
          p3(),
          tetrahedral()};
}

// ---- reference matrices ------------------------------------------------------

/// Regular representation of the Takasaki quandle on Z3.
inline std::vector<CMatrix> lambda_takasaki3() {
  return {mat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}), mat({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}),
          mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})};
}

inline CMatrix three_cycle_matrix() { return mat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}); }

/// The 2-dimensional psi on P3, lexicographic element order (1 2), (1 3), (2 3).
inline std::vector<CMatrix> psi_lex() {
  return {mat({{-1, -1}, {0, 1}}), mat({{1, 0}, {-1, -1}}), mat({{0, 1}, {1, 0}})};
}

/// Same matrices in the order ((2 3), (1 3), (1 2)).
inline std::vector<CMatrix> psi_reversed() {
  auto p = psi_lex();
  return {p[2], p[1], p[0]};
}

inline CMatrix fixed_T() { return mat({{1, 1, 1}, {1, -2, 1}, {1, -1, -2}}); }

// ---- oracles -----------------------------------------------------------------

inline bool oracle_distributive(const std::vector<std::vector<Index>> &t) {
  const std::size_t k = t.size();
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      for (std::size_t z = 0; z < k; ++z)
        if (t[x][t[y][z]] != t[t[x][y]][t[x][z]])
          return false;
  return true;
}

/// Naive closure of a set of permutations (as image vectors).
inline std::set<std::vector<Index>> oracle_closure(const std::vector<std::vector<Index>> &gens) {
  const std::size_t n = gens.front().size();
  std::vector<Index> id(n);
  for (Index i = 0; i < n; ++i)
    id[i] = i;
  std::set<std::vector<Index>> seen{id};
  std::vector<std::vector<Index>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<Index>> next;
    for (const auto &p : frontier)
      for (const auto &g : gens) {
        std::vector<Index> q(n);
        for (Index i = 0; i < n; ++i)
          q[i] = g[p[i]];
        if (seen.insert(q).second)
          next.push_back(q);
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Naive conjugacy class sizes, sorted.
inline std::multiset<std::size_t> oracle_class_sizes(const FiniteGroup &g) {
  std::vector<bool> done(g.size(), false);
  std::multiset<std::size_t> out;
  for (Index a = 0; a < g.size(); ++a) {
    if (done[a])
      continue;
    std::set<Index> cls;
    for (Index h = 0; h < g.size(); ++h)
      cls.insert(g.mul(g.mul(h, a), g.inverse(h)));
    for (Index c : cls)
      done[c] = true;
    out.insert(cls.size());
  }
  return out;
}

/// Every word up to max_len, checked against the definition of strongness
/// directly with composed tables and matrix products.
inline bool oracle_strong(const Rack &rack, const std::vector<CMatrix> &rho, std::size_t max_len,
                          double eps = 1e-9) {
  const std::size_t k = rack.size();
  const auto d = rho.front().rows();
  struct State {
    std::vector<Index> perm;
    CMatrix prod;
  };
  std::vector<Index> id(k);
  for (Index i = 0; i < k; ++i)
    id[i] = i;
  std::vector<State> level{{id, CMatrix::Identity(d, d)}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<State> next;
    for (const auto &s : level)
      for (Index x = 0; x < k; ++x) {
        State t{std::vector<Index>(k), rho[x] * s.prod};
        for (Index i = 0; i < k; ++i)
          t.perm[i] = rack.op(x, s.perm[i]);
        if (t.perm == id && (t.prod - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > eps)
          return false;
        next.push_back(std::move(t));
      }
    level = std::move(next);
  }
  return true;
}

inline double max_diff(const CMatrix &a, const CMatrix &b) { return (a - b).cwiseAbs().maxCoeff(); }

} // namespace fx
