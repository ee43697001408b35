#pragma once

#include <cstddef>
#include <cstdint>

namespace rackrep {

/// Numerical thresholds shared by the representation routines.
struct Tolerances {
  double eps = 1e-9;     // entrywise residuals
  double eps_inv = 1e-9; // |det| after row-norm scaling
  double eps_gap = 1e-6; // eigenvalue cluster separation
  double eps_dec = 1e-7; // block-diagonalization residual
};

struct Config {
  Tolerances tol{};
  std::uint64_t seed = 42;
  std::size_t max_cosets = 1'000'000;
  std::size_t group_cap = 10'000;
  /// Upper bound on words visited by exhaustive stabilizing-family scans.
  std::uint64_t word_budget = 100'000'000;
};

} // namespace rackrep
