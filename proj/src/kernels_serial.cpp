#include "rackrep/kernels.hpp"

#include <limits>

#include "word_scan.hpp"

namespace rackrep {

std::uint64_t word_count(std::size_t k, std::size_t max_len) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t layer = 1;
  for (std::size_t len = 1; len <= max_len; ++len) {
    if (k != 0 && layer > kMax / k)
      return kMax;
    layer *= k;
    if (total > kMax - layer)
      return kMax;
    total += layer;
  }
  return total;
}

namespace serial {

std::optional<Triple> first_distributivity_violation(std::span<const Index> t,
                                                     std::size_t k) {
  for (Index x = 0; x < k; ++x)
    if (auto v = detail::distributivity_row(t, k, x))
      return v;
  return std::nullopt;
}

std::optional<Triple> first_associativity_violation(std::span<const Index> t,
                                                    std::size_t m) {
  for (Index a = 0; a < m; ++a)
    if (auto v = detail::associativity_row(t, m, a))
      return v;
  return std::nullopt;
}

std::vector<Word> stabilizing_words(std::span<const Permutation> lefts,
                                    std::size_t max_len) {
  std::vector<Word> out;
  if (lefts.empty() || max_len == 0)
    return out;
  detail::WordScanner scan(lefts, {}, max_len, 0.0);
  scan.collect_from({}, out);
  return out;
}

std::optional<Word> first_unstable_word(std::span<const Permutation> lefts,
                                        std::span<const CMatrix> rho,
                                        std::size_t max_len, double eps) {
  if (lefts.empty() || max_len == 0)
    return std::nullopt;
  detail::WordScanner scan(lefts, rho, max_len, eps);
  return scan.first_unstable_from({});
}

ResidualWitness rack_axiom_residual(std::span<const Index> table, std::size_t k,
                                    std::span<const CMatrix> rho,
                                    std::span<const CMatrix> rho_inv) {
  ResidualWitness best;
  for (Index x = 0; x < k; ++x) {
    const auto row = detail::axiom_row(table, k, rho, rho_inv, x);
    if (row.residual > best.residual)
      best = row;
  }
  return best;
}

ResidualWitness multiplicativity_residual(std::span<const Index> table,
                                          std::size_t m,
                                          std::span<const CMatrix> mats) {
  ResidualWitness best;
  for (Index a = 0; a < m; ++a) {
    const auto row = detail::multiplicativity_row(table, m, mats, a);
    if (row.residual > best.residual)
      best = row;
  }
  return best;
}

CMatrix group_average(std::span<const CMatrix> lhs,
                      std::span<const CMatrix> rhs_inverses, const CMatrix &x) {
  const std::size_t chunks = detail::chunk_count(lhs.size());
  CMatrix sum = CMatrix::Zero(lhs.front().rows(), rhs_inverses.front().cols());
  for (std::size_t c = 0; c < chunks; ++c)
    sum += detail::average_chunk(lhs, rhs_inverses, x, c);
  return sum / static_cast<double>(lhs.size());
}

} // namespace serial
} // namespace rackrep
