#include "rackrep/permutation.hpp"

#include <numeric>

#include "rackrep/error.hpp"

namespace rackrep {

Permutation::Permutation(std::vector<Index> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Index v : images_) {
    if (v >= images_.size() || seen[v])
      throw InvalidInput("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Index{0});
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (Index i = 0; i < images_.size(); ++i)
    p.images_[images_[i]] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (Index i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::size_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t result = 1;
  for (Index start = 0; start < images_.size(); ++start) {
    if (seen[start])
      continue;
    std::size_t len = 0;
    for (Index i = start; !seen[i]; i = images_[i]) {
      seen[i] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  if (a.degree() != b.degree())
    throw InvalidInput("cannot compose permutations of different degree");
  Permutation p;
  p.images_.resize(a.degree());
  for (Index i = 0; i < a.degree(); ++i)
    p.images_[i] = a.images_[b.images_[i]];
  return p;
}

} // namespace rackrep
