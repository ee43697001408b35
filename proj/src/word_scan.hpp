#pragma once

// Per-row / per-prefix work units shared by the serial and OpenMP kernels.

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "rackrep/kernels.hpp"

namespace rackrep::detail {

inline std::optional<Triple> distributivity_row(std::span<const Index> t,
                                                std::size_t k, Index x) {
  const Index *rx = t.data() + x * k;
  for (Index y = 0; y < k; ++y) {
    const Index *ry = t.data() + y * k;
    const Index *rxy = t.data() + rx[y] * k;
    for (Index z = 0; z < k; ++z)
      if (rx[ry[z]] != rxy[rx[z]])
        return Triple{x, y, z};
  }
  return std::nullopt;
}

inline std::optional<Triple> associativity_row(std::span<const Index> t,
                                               std::size_t m, Index a) {
  const Index *ra = t.data() + a * m;
  for (Index b = 0; b < m; ++b) {
    const Index *rab = t.data() + ra[b] * m;
    const Index *rb = t.data() + b * m;
    for (Index c = 0; c < m; ++c)
      if (rab[c] != ra[rb[c]])
        return Triple{a, b, c};
  }
  return std::nullopt;
}

inline ResidualWitness axiom_row(std::span<const Index> t, std::size_t k,
                                 std::span<const CMatrix> rho,
                                 std::span<const CMatrix> rho_inv, Index x) {
  ResidualWitness best{0.0, x, 0};
  for (Index y = 0; y < k; ++y) {
    const CMatrix conj = rho[x] * rho[y] * rho_inv[x];
    const double r = max_abs(rho[t[x * k + y]] - conj);
    if (r > best.residual)
      best = {r, x, y};
  }
  return best;
}

inline ResidualWitness multiplicativity_row(std::span<const Index> t, std::size_t m,
                                            std::span<const CMatrix> mats, Index a) {
  ResidualWitness best{0.0, a, 0};
  for (Index b = 0; b < m; ++b) {
    const double r = max_abs(mats[t[a * m + b]] - mats[a] * mats[b]);
    if (r > best.residual)
      best = {r, a, b};
  }
  return best;
}

inline constexpr std::size_t kAverageChunk = 16;

inline std::size_t chunk_count(std::size_t n) {
  return (n + kAverageChunk - 1) / kAverageChunk;
}

inline CMatrix average_chunk(std::span<const CMatrix> lhs,
                             std::span<const CMatrix> rhs_inv, const CMatrix &x,
                             std::size_t chunk) {
  CMatrix part = CMatrix::Zero(lhs.front().rows(), rhs_inv.front().cols());
  const std::size_t end = std::min(lhs.size(), (chunk + 1) * kAverageChunk);
  for (std::size_t g = chunk * kAverageChunk; g < end; ++g)
    part.noalias() += lhs[g] * x * rhs_inv[g];
  return part;
}

/// Depth-first walk over words in lexicographic order, carrying the composed
/// left multiplication and (optionally) the composed representation matrix.
class WordScanner {
public:
  WordScanner(std::span<const Permutation> lefts, std::span<const CMatrix> rho,
              std::size_t max_len, double eps)
      : lefts_(lefts), rho_(rho), max_len_(max_len), eps_(eps),
        k_(lefts.size()), degree_(lefts.front().degree()) {}

  /// Appends every stabilizing word that starts with `prefix` (including the
  /// prefix itself when it stabilizes) in lexicographic order.
  void collect_from(const Word &prefix, std::vector<Word> &out) const {
    State st = start(prefix);
    if (!prefix.empty() && is_identity(st.perm))
      out.push_back(prefix);
    Word w = prefix;
    collect(st, w, out);
  }

  /// Lexicographically first stabilizing word starting with `prefix` whose
  /// matrix product is not the identity.
  std::optional<Word> first_unstable_from(const Word &prefix) const {
    State st = start(prefix);
    if (!prefix.empty() && is_identity(st.perm) && !matrix_is_identity(st.mat))
      return prefix;
    Word w = prefix;
    if (unstable(st, w))
      return w;
    return std::nullopt;
  }

  /// Same, but only over words of length < limit (the prefix-free part that
  /// the parallel driver handles serially).
  std::optional<Word> first_unstable_below(std::size_t limit) const {
    WordScanner shallow = *this;
    shallow.max_len_ = std::min(max_len_, limit - 1);
    if (shallow.max_len_ == 0)
      return std::nullopt;
    return shallow.first_unstable_from({});
  }

  void collect_below(std::size_t limit, std::vector<Word> &out) const {
    WordScanner shallow = *this;
    shallow.max_len_ = std::min(max_len_, limit - 1);
    if (shallow.max_len_ == 0)
      return;
    shallow.collect_from({}, out);
  }

private:
  struct State {
    std::vector<Index> perm;
    CMatrix mat;
  };

  bool with_matrices() const { return !rho_.empty(); }

  State start(const Word &prefix) const {
    State st;
    st.perm.resize(degree_);
    for (Index i = 0; i < degree_; ++i)
      st.perm[i] = i;
    if (with_matrices())
      st.mat = CMatrix::Identity(rho_.front().rows(), rho_.front().cols());
    for (Index x : prefix)
      st = step(st, x);
    return st;
  }

  State step(const State &st, Index x) const {
    State next;
    next.perm.resize(degree_);
    for (Index i = 0; i < degree_; ++i)
      next.perm[i] = lefts_[x](st.perm[i]);
    if (with_matrices())
      next.mat = rho_[x] * st.mat;
    return next;
  }

  bool is_identity(const std::vector<Index> &p) const {
    for (Index i = 0; i < p.size(); ++i)
      if (p[i] != i)
        return false;
    return true;
  }

  bool matrix_is_identity(const CMatrix &m) const {
    return max_abs(m - CMatrix::Identity(m.rows(), m.cols())) <= eps_;
  }

  void collect(const State &st, Word &w, std::vector<Word> &out) const {
    if (w.size() >= max_len_)
      return;
    for (Index x = 0; x < k_; ++x) {
      State next = step(st, x);
      w.push_back(x);
      if (is_identity(next.perm))
        out.push_back(w);
      collect(next, w, out);
      w.pop_back();
    }
  }

  bool unstable(const State &st, Word &w) const {
    if (w.size() >= max_len_)
      return false;
    for (Index x = 0; x < k_; ++x) {
      State next = step(st, x);
      w.push_back(x);
      if (is_identity(next.perm) && !matrix_is_identity(next.mat))
        return true;
      if (unstable(next, w))
        return true;
      w.pop_back();
    }
    return false;
  }

  std::span<const Permutation> lefts_;
  std::span<const CMatrix> rho_;
  std::size_t max_len_;
  double eps_;
  std::size_t k_;
  std::size_t degree_;
};

/// All words of exactly `len` letters over k, in lexicographic order.
inline std::vector<Word> all_words(std::size_t k, std::size_t len) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * k);
    for (const Word &w : out)
      for (Index x = 0; x < k; ++x) {
        Word v = w;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

} // namespace rackrep::detail
