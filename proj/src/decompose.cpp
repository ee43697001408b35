#include "rackrep/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "rackrep/kernels.hpp"

namespace rackrep {

namespace {

constexpr std::size_t kCommutantSolveDim = 24;
constexpr int kSplitAttempts = 5;

std::vector<CMatrix> adjoints(std::span<const CMatrix> mats) {
  std::vector<CMatrix> out;
  out.reserve(mats.size());
  for (const auto &m : mats)
    out.push_back(m.adjoint());
  return out;
}

// (1/|G|) sum_g |tr M_g|^2, the dimension of the commutant.
double trace_norm(std::span<const CMatrix> mats) {
  double sum = 0.0;
  for (const auto &m : mats)
    sum += std::norm(m.trace());
  return sum / static_cast<double>(mats.size());
}

// A with A M_g A^-1 unitary for every g.
struct Unitarized {
  CMatrix a, a_inv;
  std::vector<CMatrix> u;
};

Unitarized unitarize(const GroupRep &grep, double eps) {
  const auto d = static_cast<Eigen::Index>(grep.dimension());
  bool unitary = true;
  CMatrix p = CMatrix::Zero(d, d);
  for (const auto &m : grep.matrices) {
    const CMatrix mm = m.adjoint() * m;
    unitary = unitary && max_abs(mm - CMatrix::Identity(d, d)) < eps;
    p += mm;
  }
  Unitarized out;
  if (unitary) {
    out.a = out.a_inv = CMatrix::Identity(d, d);
    out.u = grep.matrices;
    return out;
  }
  p /= static_cast<double>(grep.matrices.size());
  auto root = hermitian_sqrt(p);
  out.a = std::move(root.root);
  out.a_inv = std::move(root.inverse_root);
  for (const auto &m : grep.matrices)
    out.u.push_back(out.a * m * out.a_inv);
  return out;
}

std::vector<CMatrix> restrict_to(std::span<const CMatrix> u, const CMatrix &v) {
  std::vector<CMatrix> out;
  out.reserve(u.size());
  for (const auto &m : u)
    out.push_back(v.adjoint() * m * v);
  return out;
}

// Eigenspaces of a random invariant Hermitian matrix, split wherever
// consecutive eigenvalues are more than eps_gap * scale apart. Returns fewer
// than two clusters when no split was found; `smallest_gap` then holds the
// tightest spacing seen.
std::vector<CMatrix> invariant_clusters(std::span<const CMatrix> u, double eps_gap,
                                        std::uint64_t seed, double &smallest_gap) {
  const auto d = u.front().rows();
  std::mt19937_64 rng(seed);
  const auto u_inv = adjoints(u);
  CMatrix h = par::group_average(u, u_inv, random_hermitian(d, rng));
  h = (h + h.adjoint()).eval() / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const auto &vals = es.eigenvalues();
  const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());

  std::vector<CMatrix> clusters;
  Eigen::Index start = 0;
  smallest_gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 1; i <= d; ++i) {
    if (i < d) {
      const double gap = vals(i) - vals(i - 1);
      smallest_gap = std::min(smallest_gap, gap);
      if (gap <= eps_gap * scale)
        continue;
    }
    clusters.push_back(es.eigenvectors().middleCols(start, i - start));
    start = i;
  }
  return clusters;
}

// Orthonormal bases of irreducible invariant subspaces of a unitary rep.
std::vector<CMatrix> irreducible_bases(std::span<const CMatrix> u, const Config &config,
                                       std::uint64_t seed) {
  const auto d = u.front().rows();
  if (d == 1 || std::llround(trace_norm(u)) == 1)
    return {CMatrix::Identity(d, d)};
  double gap = 0.0;
  for (int attempt = 0; attempt < kSplitAttempts; ++attempt) {
    const auto clusters =
        invariant_clusters(u, config.tol.eps_gap, seed + static_cast<std::uint64_t>(attempt), gap);
    if (clusters.size() < 2)
      continue;
    std::vector<CMatrix> out;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      const auto sub = restrict_to(u, clusters[c]);
      for (const auto &b : irreducible_bases(sub, config, seed + 7919 * (c + 1)))
        out.push_back(clusters[c] * b);
    }
    return out;
  }
  throw GapFailure(gap);
}

// Descending per class, real part first; values are rounded so numerically
// equal characters compare equal.
bool character_before(const ClassFunction &a, const ClassFunction &b) {
  auto key = [](double v) { return std::round(v * 1e6); };
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (key(a[c].real()) != key(b[c].real()))
      return key(a[c].real()) > key(b[c].real());
    if (key(a[c].imag()) != key(b[c].imag()))
      return key(a[c].imag()) > key(b[c].imag());
  }
  return false;
}

} // namespace

std::size_t commutant_dimension(const GroupRep &grep) {
  const std::size_t d = grep.dimension();
  if (d <= kCommutantSolveDim) {
    std::vector<CMatrix> gens;
    for (Index s : grep.group->generators())
      gens.push_back(grep.matrices[s]);
    if (gens.empty())
      gens.push_back(grep.matrices[grep.group->identity()]);
    return static_cast<std::size_t>(psd_null_space(sylvester_gram(gens, gens), 1e-10).cols());
  }
  return static_cast<std::size_t>(std::llround(trace_norm(grep.matrices)));
}

std::variant<Irreducible, SplitResult> split(const GroupRep &grep, const Config &config) {
  if (commutant_dimension(grep) == 1)
    return Irreducible{};
  const auto un = unitarize(grep, config.tol.eps);
  double gap = 0.0;
  for (int attempt = 0; attempt < kSplitAttempts; ++attempt) {
    const auto clusters = invariant_clusters(
        un.u, config.tol.eps_gap, config.seed + static_cast<std::uint64_t>(attempt), gap);
    if (clusters.size() < 2)
      continue;
    CMatrix rest(un.u.front().rows(), 0);
    for (std::size_t c = 1; c < clusters.size(); ++c) {
      rest.conservativeResize(Eigen::NoChange, rest.cols() + clusters[c].cols());
      rest.rightCols(clusters[c].cols()) = clusters[c];
    }
    return SplitResult{un.a_inv * clusters.front(), un.a_inv * rest};
  }
  throw GapFailure(gap);
}

DecompositionReport decompose(const GroupRep &grep, const Config &config) {
  const auto un = unitarize(grep, config.tol.eps);
  const auto bases = irreducible_bases(un.u, config, config.seed);

  struct Piece {
    GroupRep rep;
    ClassFunction chi;
    std::vector<CMatrix> bases;
  };
  std::vector<Piece> types;
  for (const auto &b : bases) {
    GroupRep block{grep.group, restrict_to(un.u, b)};
    auto it = std::find_if(types.begin(), types.end(), [&](const Piece &p) {
      return p.rep.dimension() == block.dimension() &&
             are_equivalent(p.rep, block, config).has_value();
    });
    if (it != types.end()) {
      it->bases.push_back(b);
      continue;
    }
    auto chi = character(block, config.tol);
    types.push_back({std::move(block), std::move(chi), {b}});
  }
  std::stable_sort(types.begin(), types.end(), [](const Piece &a, const Piece &b) {
    if (a.rep.dimension() != b.rep.dimension())
      return a.rep.dimension() < b.rep.dimension();
    return character_before(a.chi, b.chi);
  });

  const auto d = static_cast<Eigen::Index>(grep.dimension());
  CMatrix v_all(d, d);
  std::vector<std::pair<Eigen::Index, Eigen::Index>> ranges;
  Eigen::Index col = 0;
  DecompositionReport report;
  for (auto &t : types) {
    for (const auto &b : t.bases) {
      v_all.middleCols(col, b.cols()) = b;
      ranges.emplace_back(col, b.cols());
      col += b.cols();
    }
    report.blocks.push_back({std::move(t.rep), t.bases.size(), std::move(t.chi)});
  }

  double residual = 0.0;
  for (const auto &u : un.u) {
    CMatrix r = v_all.adjoint() * u * v_all;
    for (const auto &[start, len] : ranges)
      r.block(start, start, len, len).setZero();
    residual = std::max(residual, max_abs(r));
  }
  if (residual >= config.tol.eps_dec)
    throw Error("block-diagonalization residual " + std::to_string(residual) +
                " exceeds tolerance");
  report.basis_change = un.a_inv * v_all;
  report.residual = residual;
  return report;
}

StrongInventory enumerate_strong_irreps(const EnvelopingGroup &env, const Config &config) {
  if (env.group->size() > kInventoryGroupCap)
    throw CapExceeded(kInventoryGroupCap);
  const auto report = decompose(regular_group_rep(env.group), config);

  StrongInventory inv;
  inv.bound = conjugacy_classes(*env.group).size();
  std::vector<RackRep> projected;
  for (const auto &block : report.blocks) {
    auto rep = project(env, block.irrep, config.tol);
    if (is_strong(env, rep, config.tol)) {
      const bool duplicate = std::any_of(inv.reps.begin(), inv.reps.end(), [&](const RackRep &r) {
        return r.dimension() == rep.dimension() && are_equivalent(r, rep, config).has_value();
      });
      if (!duplicate) {
        inv.reps.push_back(rep);
        inv.characters.push_back(block.character);
      }
    }
    projected.push_back(std::move(rep));
  }

  if (env.center.size() == 1) {
    inv.exact = true;
    return inv;
  }
  // Confirm the kernel criterion against the direct definition, over words
  // long enough to contain every kernel word and every power relator.
  std::size_t max_len = env.common_order;
  for (const auto &w : env.kernel_words)
    max_len = std::max(max_len, w.size());
  if (word_count(env.rack->size(), max_len) > config.word_budget)
    return inv;
  inv.exact = std::all_of(projected.begin(), projected.end(), [&](const RackRep &rep) {
    return is_strong(env, rep, config.tol) == is_strong_bruteforce(rep, max_len, config);
  });
  return inv;
}

StrongInventory enumerate_strong_irreps(std::shared_ptr<const Rack> rack, const Config &config) {
  return enumerate_strong_irreps(enveloping_group(std::move(rack), config), config);
}

} // namespace rackrep
