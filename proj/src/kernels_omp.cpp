#include "rackrep/kernels.hpp"

#include <algorithm>
#include <atomic>

#include <omp.h>

#include "word_scan.hpp"

namespace rackrep::par {

namespace {

/// Prefix length for splitting a word scan into independent tasks.
std::size_t split_depth(std::size_t k, std::size_t max_len) {
  const std::size_t want = 8 * static_cast<std::size_t>(omp_get_max_threads());
  std::size_t depth = 1;
  std::size_t tasks = k;
  while (depth < max_len && tasks < want) {
    tasks *= k;
    ++depth;
  }
  return std::min(depth, max_len);
}

// Row-parallel search for the first violating triple; rows are independent
// so the smallest violating row wins.
template <class RowFn>
std::optional<Triple> first_violation(std::size_t n, RowFn row) {
  std::vector<std::optional<Triple>> hits(n);
  std::atomic<std::size_t> first_hit{n};
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    const auto x = static_cast<std::size_t>(i);
    if (x > first_hit.load(std::memory_order_relaxed))
      continue;
    hits[x] = row(x);
    if (hits[x]) {
      std::size_t cur = first_hit.load();
      while (x < cur && !first_hit.compare_exchange_weak(cur, x)) {
      }
    }
  }
  const std::size_t at = first_hit.load();
  return at < n ? hits[at] : std::nullopt;
}

template <class RowFn>
ResidualWitness max_residual(std::size_t n, RowFn row) {
  std::vector<ResidualWitness> rows(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    rows[static_cast<std::size_t>(i)] = row(static_cast<std::size_t>(i));
  ResidualWitness best;
  for (const auto &r : rows)
    if (r.residual > best.residual)
      best = r;
  return best;
}

} // namespace

std::optional<Triple> first_distributivity_violation(std::span<const Index> t,
                                                     std::size_t k) {
  return first_violation(k, [&](Index x) { return detail::distributivity_row(t, k, x); });
}

std::optional<Triple> first_associativity_violation(std::span<const Index> t,
                                                    std::size_t m) {
  return first_violation(m, [&](Index a) { return detail::associativity_row(t, m, a); });
}

std::vector<Word> stabilizing_words(std::span<const Permutation> lefts,
                                    std::size_t max_len) {
  std::vector<Word> out;
  if (lefts.empty() || max_len == 0)
    return out;
  const detail::WordScanner scan(lefts, {}, max_len, 0.0);
  const std::size_t depth = split_depth(lefts.size(), max_len);
  scan.collect_below(depth, out);

  const auto prefixes = detail::all_words(lefts.size(), depth);
  std::vector<std::vector<Word>> found(prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(prefixes.size()); ++i)
    scan.collect_from(prefixes[static_cast<std::size_t>(i)],
                      found[static_cast<std::size_t>(i)]);
  for (auto &part : found)
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Word> first_unstable_word(std::span<const Permutation> lefts,
                                        std::span<const CMatrix> rho,
                                        std::size_t max_len, double eps) {
  if (lefts.empty() || max_len == 0)
    return std::nullopt;
  const detail::WordScanner scan(lefts, rho, max_len, eps);
  const std::size_t depth = split_depth(lefts.size(), max_len);
  std::optional<Word> best = scan.first_unstable_below(depth);

  const auto prefixes = detail::all_words(lefts.size(), depth);
  std::vector<std::optional<Word>> found(prefixes.size());
  std::atomic<std::size_t> first_hit{prefixes.size()};
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(prefixes.size()); ++i) {
    const auto p = static_cast<std::size_t>(i);
    if (p > first_hit.load(std::memory_order_relaxed))
      continue;
    found[p] = scan.first_unstable_from(prefixes[p]);
    if (found[p]) {
      std::size_t cur = first_hit.load();
      while (p < cur && !first_hit.compare_exchange_weak(cur, p)) {
      }
    }
  }
  const std::size_t at = first_hit.load();
  if (at < prefixes.size() && (!best || *found[at] < *best))
    best = found[at];
  return best;
}

ResidualWitness rack_axiom_residual(std::span<const Index> table, std::size_t k,
                                    std::span<const CMatrix> rho,
                                    std::span<const CMatrix> rho_inv) {
  return max_residual(k, [&](Index x) { return detail::axiom_row(table, k, rho, rho_inv, x); });
}

ResidualWitness multiplicativity_residual(std::span<const Index> table,
                                          std::size_t m,
                                          std::span<const CMatrix> mats) {
  return max_residual(m, [&](Index a) { return detail::multiplicativity_row(table, m, mats, a); });
}

CMatrix group_average(std::span<const CMatrix> lhs,
                      std::span<const CMatrix> rhs_inverses, const CMatrix &x) {
  const std::size_t chunks = detail::chunk_count(lhs.size());
  std::vector<CMatrix> parts(chunks);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c)
    parts[static_cast<std::size_t>(c)] =
        detail::average_chunk(lhs, rhs_inverses, x, static_cast<std::size_t>(c));
  CMatrix sum = CMatrix::Zero(lhs.front().rows(), rhs_inverses.front().cols());
  for (const auto &p : parts)
    sum += p;
  return sum / static_cast<double>(lhs.size());
}

} // namespace rackrep::par
