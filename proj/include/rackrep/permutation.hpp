#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rackrep {

using Index = std::size_t;

/// A bijection of {0, ..., k-1}, stored by images.
///
/// Products compose as functions: (a * b)(i) = a(b(i)), i.e. b acts first.
class Permutation {
public:
  Permutation() = default;
  /// Throws InvalidInput if `images` is not a bijection.
  explicit Permutation(std::vector<Index> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Index operator()(Index i) const { return images_[i]; }
  std::span<const Index> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// Least n >= 1 with p^n = id.
  std::size_t order() const;

  friend Permutation operator*(const Permutation &a, const Permutation &b);
  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<Index> images_;
};

} // namespace rackrep
