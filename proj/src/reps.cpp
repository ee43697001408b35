#include "rackrep/reps.hpp"

#include <algorithm>
#include <cmath>

#include "rackrep/kernels.hpp"

namespace rackrep {

namespace {

constexpr std::size_t kMaxSolveDim = 40;

std::size_t check_square_family(std::span<const CMatrix> mats, std::size_t count,
                                const char *what) {
  if (mats.size() != count)
    throw DimensionMismatch(std::string("expected ") + std::to_string(count) + " " + what +
                            " matrices, got " + std::to_string(mats.size()));
  if (count == 0)
    throw DimensionMismatch("empty matrix family");
  const auto d = mats.front().rows();
  if (d == 0)
    throw DimensionMismatch("representation dimension must be positive");
  for (const auto &m : mats) {
    if (m.rows() != d || m.cols() != d)
      throw DimensionMismatch("matrices must all be square of the same size");
    if (!m.allFinite())
      throw InvalidInput("matrix entries must be finite");
  }
  return static_cast<std::size_t>(d);
}

std::vector<Permutation> left_mults(const Rack &rack) {
  std::vector<Permutation> out;
  for (Index x = 0; x < rack.size(); ++x)
    out.push_back(left_mult(rack, x));
  return out;
}

CMatrix matrix_power(const CMatrix &m, std::size_t n) {
  CMatrix p = CMatrix::Identity(m.rows(), m.cols());
  for (std::size_t i = 0; i < n; ++i)
    p = p * m;
  return p;
}

bool near_identity(const CMatrix &m, double eps) {
  return max_abs(m - CMatrix::Identity(m.rows(), m.cols())) <= eps;
}

// Fixes the overall scale (and phase) so the entry of largest modulus is 1.
CMatrix normalized(const CMatrix &t) {
  Eigen::Index r = 0, c = 0;
  t.cwiseAbs().maxCoeff(&r, &c);
  return t / t(r, c);
}

} // namespace

RackRep validate_rack_rep(std::shared_ptr<const Rack> rack, std::vector<CMatrix> matrices,
                          const Tolerances &tol) {
  check_square_family(matrices, rack->size(), "rack");
  std::vector<CMatrix> inverses;
  inverses.reserve(matrices.size());
  for (Index x = 0; x < matrices.size(); ++x) {
    if (!is_invertible(matrices[x], tol.eps_inv))
      throw NotInvertible(x);
    inverses.push_back(matrices[x].inverse());
  }
  const auto w = par::rack_axiom_residual(rack->flat_table(), rack->size(), matrices, inverses);
  if (w.residual >= tol.eps)
    throw AxiomViolation(w.a, w.b, w.residual);
  return RackRep{std::move(rack), std::move(matrices)};
}

GroupRep validate_group_rep(std::shared_ptr<const FiniteGroup> group,
                            std::vector<CMatrix> matrices, const Tolerances &tol) {
  const std::size_t d = check_square_family(matrices, group->size(), "group");
  const Index e = group->identity();
  if (!near_identity(matrices[e], tol.eps))
    throw NotAHomomorphism(e, e, "identity element is not sent to the identity matrix");
  const std::size_t m = group->size();
  const double pair_cost = static_cast<double>(m) * static_cast<double>(m) *
                           static_cast<double>(d) * static_cast<double>(d) *
                           static_cast<double>(d);
  if (pair_cost <= 2e9) {
    const auto w = par::multiplicativity_residual(group->flat_table(), m, matrices);
    if (w.residual >= tol.eps)
      throw NotAHomomorphism(w.a, w.b, "residual " + std::to_string(w.residual));
  } else {
    for (Index a = 0; a < m; ++a)
      for (Index s : group->generators())
        if (max_abs(matrices[group->mul(a, s)] - matrices[a] * matrices[s]) >= tol.eps)
          throw NotAHomomorphism(a, s);
  }
  return GroupRep{std::move(group), std::move(matrices)};
}

RackRep regular_rep(std::shared_ptr<const Rack> rack) {
  const std::size_t k = rack->size();
  const auto dk = static_cast<Eigen::Index>(k);
  std::vector<CMatrix> mats;
  for (Index t = 0; t < k; ++t) {
    CMatrix m = CMatrix::Zero(dk, dk);
    for (Index x = 0; x < k; ++x)
      m(static_cast<Eigen::Index>(rack->op(t, x)), static_cast<Eigen::Index>(x)) = 1.0;
    mats.push_back(std::move(m));
  }
  return RackRep{std::move(rack), std::move(mats)};
}

RackRep scalar_rep(std::shared_ptr<const Rack> rack, Complex c) {
  if (c == Complex{})
    throw ZeroScalar();
  std::vector<CMatrix> mats(rack->size(), CMatrix::Constant(1, 1, c));
  return RackRep{std::move(rack), std::move(mats)};
}

GroupRep regular_group_rep(std::shared_ptr<const FiniteGroup> group) {
  const std::size_t m = group->size();
  const auto dm = static_cast<Eigen::Index>(m);
  std::vector<CMatrix> mats;
  mats.reserve(m);
  for (Index g = 0; g < m; ++g) {
    CMatrix p = CMatrix::Zero(dm, dm);
    for (Index h = 0; h < m; ++h)
      p(static_cast<Eigen::Index>(group->mul(g, h)), static_cast<Eigen::Index>(h)) = 1.0;
    mats.push_back(std::move(p));
  }
  return GroupRep{std::move(group), std::move(mats)};
}

GroupRep lift(const EnvelopingGroup &env, const RackRep &rep, const Tolerances &tol) {
  const auto &g = *env.group;
  check_square_family(rep.matrices, env.rack->size(), "rack");
  for (Index x = 0; x < rep.matrices.size(); ++x)
    if (!near_identity(matrix_power(rep.matrices[x], env.common_order), tol.eps))
      throw PowerObstruction(x);

  const auto d = rep.matrices.front().rows();
  std::vector<CMatrix> mats(g.size(), CMatrix::Identity(d, d));
  for (Index b : g.bfs_order())
    if (b != g.identity())
      mats[b] = mats[g.parent(b)] * rep.matrices[g.via(b)];
  for (Index x = 0; x < env.eta.size(); ++x)
    if (max_abs(mats[env.eta[x]] - rep.matrices[x]) >= tol.eps)
      throw NotAHomomorphism(env.eta[x], x,
                             "rack elements with the same image carry different matrices");
  return validate_group_rep(env.group, std::move(mats), tol);
}

RackRep project(const EnvelopingGroup &env, const GroupRep &grep, const Tolerances &tol) {
  if (grep.group->size() != env.group->size())
    throw DimensionMismatch("group representation is not over this enveloping group");
  std::vector<CMatrix> mats;
  for (Index h : env.eta)
    mats.push_back(grep.matrices[h]);
  return validate_rack_rep(env.rack, std::move(mats), tol);
}

bool is_strong(const EnvelopingGroup &env, const RackRep &rep, const Tolerances &tol) {
  check_square_family(rep.matrices, env.rack->size(), "rack");
  for (const auto &m : rep.matrices)
    if (!near_identity(matrix_power(m, env.common_order), tol.eps))
      return false;
  const auto d = rep.matrices.front().rows();
  for (const auto &w : env.kernel_words) {
    CMatrix p = CMatrix::Identity(d, d);
    for (Index x : w)
      p = p * rep.matrices[x];
    if (!near_identity(p, tol.eps))
      return false;
  }
  return true;
}

bool is_strong_bruteforce(const RackRep &rep, std::size_t max_len, const Config &config) {
  const Rack &rack = *rep.rack;
  check_square_family(rep.matrices, rack.size(), "rack");
  if (word_count(rack.size(), max_len) > config.word_budget)
    throw BudgetExceeded("brute-force strongness check over " + std::to_string(rack.size()) +
                         "^" + std::to_string(max_len) + " words exceeds budget");
  const auto lefts = left_mults(rack);
  return !par::first_unstable_word(lefts, rep.matrices, max_len, config.tol.eps);
}

std::size_t algebra_span_dimension(std::span<const CMatrix> matrices, std::size_t dim) {
  if (dim > kMaxSolveDim)
    throw BudgetExceeded("algebra span limited to dimension " + std::to_string(kMaxSolveDim));
  const auto d = static_cast<Eigen::Index>(dim);
  const Eigen::Index full = d * d;
  CMatrix basis(full, 0);
  std::vector<CMatrix> queue;

  auto try_add = [&](const CMatrix &m) {
    CVector v = Eigen::Map<const CVector>(m.data(), full);
    const double scale = v.norm();
    if (scale == 0.0)
      return;
    for (int pass = 0; pass < 2 && basis.cols() > 0; ++pass)
      v -= basis * (basis.adjoint() * v);
    if (v.norm() <= 1e-9 * scale)
      return;
    v /= v.norm();
    basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
    basis.col(basis.cols() - 1) = v;
    queue.push_back(unvec(v, d, d));
  };

  try_add(CMatrix::Identity(d, d));
  for (std::size_t head = 0; head < queue.size() && basis.cols() < full; ++head) {
    const CMatrix b = queue[head];
    for (const auto &m : matrices) {
      try_add(m * b);
      if (basis.cols() == full)
        break;
    }
  }
  return static_cast<std::size_t>(basis.cols());
}

bool is_irreducible(std::span<const CMatrix> matrices, std::size_t dim) {
  if (dim == 1)
    return true;
  return algebra_span_dimension(matrices, dim) == dim * dim;
}

std::optional<CMatrix> find_intertwiner(std::span<const CMatrix> lhs,
                                        std::span<const CMatrix> rhs,
                                        const Config &config) {
  if (lhs.size() != rhs.size() || lhs.empty())
    throw DimensionMismatch("representations have different index sets");
  const auto d = lhs.front().rows();
  if (rhs.front().rows() != d)
    throw DimensionMismatch("representations have different dimensions");
  if (static_cast<std::size_t>(d) > kMaxSolveDim)
    throw BudgetExceeded("intertwiner solve limited to dimension " +
                         std::to_string(kMaxSolveDim));
  const CMatrix null = psd_null_space(sylvester_gram(lhs, rhs), 1e-10);
  if (null.cols() == 0)
    return std::nullopt;
  std::mt19937_64 rng(config.seed);
  for (int attempt = 0; attempt < 5; ++attempt) {
    CVector v = null.cols() == 1 && attempt == 0
                    ? CVector(null.col(0))
                    : CVector(null * random_complex(null.cols(), 1, rng));
    CMatrix t = unvec(v, d, d);
    if (!is_invertible(t, config.tol.eps_inv))
      continue;
    t = normalized(t);
    double residual = 0.0;
    for (std::size_t i = 0; i < lhs.size(); ++i)
      residual = std::max(residual, max_abs(lhs[i] * t - t * rhs[i]));
    if (residual < std::sqrt(config.tol.eps))
      return t;
  }
  return std::nullopt;
}

std::optional<CMatrix> are_equivalent(const RackRep &a, const RackRep &b,
                                      const Config &config) {
  if (a.rack->size() != b.rack->size())
    throw DimensionMismatch("representations are over different racks");
  if (a.dimension() != b.dimension())
    throw DimensionMismatch("representations have different dimensions");
  return find_intertwiner(a.matrices, b.matrices, config);
}

std::optional<CMatrix> are_equivalent(const GroupRep &a, const GroupRep &b,
                                      const Config &config) {
  if (a.group->size() != b.group->size())
    throw DimensionMismatch("representations are over different groups");
  if (a.dimension() != b.dimension())
    throw DimensionMismatch("representations have different dimensions");
  const auto chi_a = character(a, config.tol);
  const auto chi_b = character(b, config.tol);
  for (std::size_t c = 0; c < chi_a.size(); ++c)
    if (std::abs(chi_a[c] - chi_b[c]) > 1e-6 * std::max<double>(1.0, static_cast<double>(a.dimension())))
      return std::nullopt;

  const auto &g = *a.group;
  if (a.dimension() <= kMaxSolveDim) {
    std::vector<CMatrix> lhs, rhs;
    for (Index s : g.generators()) {
      lhs.push_back(a.matrices[s]);
      rhs.push_back(b.matrices[s]);
    }
    if (lhs.empty()) { // trivial group
      lhs.push_back(a.matrices[g.identity()]);
      rhs.push_back(b.matrices[g.identity()]);
    }
    return find_intertwiner(lhs, rhs, config);
  }
  // Large dimension: average random matrices onto the intertwiner space.
  std::vector<CMatrix> rhs_inv;
  for (Index h = 0; h < g.size(); ++h)
    rhs_inv.push_back(b.matrices[g.inverse(h)]);
  const auto d = static_cast<Eigen::Index>(a.dimension());
  std::mt19937_64 rng(config.seed);
  for (int attempt = 0; attempt < 5; ++attempt) {
    CMatrix t = par::group_average(a.matrices, rhs_inv, random_complex(d, d, rng));
    if (is_invertible(t, config.tol.eps_inv))
      return normalized(t);
  }
  return std::nullopt;
}

std::vector<std::size_t> class_sizes(const FiniteGroup &g) {
  std::vector<std::size_t> out;
  for (const auto &c : conjugacy_classes(g))
    out.push_back(c.size());
  return out;
}

ClassFunction character(const GroupRep &grep, const Tolerances &tol) {
  const auto classes = conjugacy_classes(*grep.group);
  const double slack = tol.eps * std::max<double>(1.0, static_cast<double>(grep.dimension()));
  ClassFunction chi;
  for (Index c = 0; c < classes.size(); ++c) {
    const Complex t0 = grep.matrices[classes[c].front()].trace();
    for (Index h : classes[c])
      if (std::abs(grep.matrices[h].trace() - t0) > std::max(slack, 1e-9 * std::abs(t0)))
        throw ClassInconsistency(c);
    chi.push_back(t0);
  }
  return chi;
}

Complex inner_product(const ClassFunction &chi1, const ClassFunction &chi2,
                      std::span<const std::size_t> sizes, std::size_t group_order) {
  if (chi1.size() != chi2.size() || chi1.size() != sizes.size())
    throw DimensionMismatch("class functions have different class structure");
  Complex sum{};
  for (std::size_t c = 0; c < sizes.size(); ++c)
    sum += static_cast<double>(sizes[c]) * chi1[c] * std::conj(chi2[c]);
  return sum / static_cast<double>(group_order);
}

} // namespace rackrep
