#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rackrep/error.hpp"
#include "rackrep/permutation.hpp"

namespace rackrep {

class Rack;

/// A finite group given by its multiplication table, table[a][b] = a*b.
///
/// Every group carries a generator list (repeats allowed; one slot per
/// generator) and the breadth-first spanning tree those generators induce
/// from the identity, visiting generators in slot order. That tree gives each
/// element a canonical positive word: element b = parent(b) * generator(via(b)).
class FiniteGroup {
public:
  /// Validates the table (shape, range, identity, inverses, associativity).
  /// Without explicit generators a greedy generating set is chosen.
  /// Throws InvalidInput; throws InvalidInput too if `generators` do not
  /// generate the group.
  static FiniteGroup from_table(const std::vector<std::vector<long long>> &table,
                                std::vector<std::string> labels = {},
                                std::optional<std::vector<Index>> generators = {});

  /// Trusted construction from a table already known to be a group (element
  /// 0 must be the identity).
  static FiniteGroup from_trusted_table(std::vector<Index> flat, std::size_t size,
                                        std::vector<Index> generators,
                                        std::vector<std::string> labels = {});

  std::size_t size() const { return size_; }
  Index identity() const { return identity_; }
  Index mul(Index a, Index b) const { return table_[a * size_ + b]; }
  Index inverse(Index a) const { return inverse_[a]; }
  std::span<const Index> flat_table() const { return table_; }
  std::vector<std::vector<Index>> table() const;

  const std::vector<std::string> &labels() const { return labels_; }
  std::span<const Index> generators() const { return generators_; }

  /// Positive word of generator slots: element = g[w0] * g[w1] * ... * g[wn].
  std::vector<Index> word(Index element) const;
  Index parent(Index element) const { return parent_[element]; }
  Index via(Index element) const { return via_[element]; }
  /// Elements in breadth-first order (identity first).
  std::span<const Index> bfs_order() const { return bfs_order_; }

  std::size_t element_order(Index a) const;
  Index power(Index a, std::size_t n) const;

  friend bool operator==(const FiniteGroup &a, const FiniteGroup &b) {
    return a.size_ == b.size_ && a.table_ == b.table_;
  }

private:
  void build_tree();

  std::size_t size_ = 0;
  std::vector<Index> table_;
  Index identity_ = 0;
  std::vector<Index> inverse_;
  std::vector<std::string> labels_;
  std::vector<Index> generators_;
  std::vector<Index> parent_;
  std::vector<Index> via_;
  std::vector<Index> bfs_order_;
};

/// A permutation group: abstract group plus the permutation of each element.
struct PermGroup {
  FiniteGroup group;
  std::vector<Permutation> elements;
};

/// Breadth-first closure. Element 0 is the identity; elements appear in
/// discovery order with generators tried in the given order; the resulting
/// group records each input generator's element index. Throws CapExceeded.
PermGroup closure(std::span<const Permutation> generators, std::size_t cap = 10'000,
                  std::size_t degree = 0);

struct InnGroup {
  PermGroup perm;
  /// Element index of L_x for every rack element x.
  std::vector<Index> left_index;
};

InnGroup inn_group(const Rack &rack, std::size_t cap = 10'000);

/// Classes sorted internally and ordered by smallest element.
std::vector<std::vector<Index>> conjugacy_classes(const FiniteGroup &g);

/// Index of the conjugacy class of every element.
std::vector<Index> class_of(const std::vector<std::vector<Index>> &classes,
                            std::size_t group_size);

std::vector<Index> center(const FiniteGroup &g);

/// A group homomorphism out of a finite group, given by all element images.
struct GroupHom {
  std::vector<Index> images;

  bool is_injective() const;
  bool is_surjective(std::size_t target_size) const;
  std::vector<Index> kernel(Index target_identity) const;
};

/// Extends per-generator-slot images along each element's canonical word and
/// verifies the result is a homomorphism on every pair (and agrees with the
/// given image on every generator slot). Throws NotAHomomorphism.
template <class T, class Mul, class Eq>
std::vector<T> extend_generator_images(const FiniteGroup &g,
                                       std::span<const T> generator_images,
                                       const T &identity, Mul &&mul, Eq &&eq) {
  if (generator_images.size() != g.generators().size())
    throw InvalidInput("need one image per generator slot");
  std::vector<T> images(g.size(), identity);
  for (Index b : g.bfs_order())
    if (b != g.identity())
      images[b] = mul(images[g.parent(b)], generator_images[g.via(b)]);
  for (Index s = 0; s < generator_images.size(); ++s)
    if (!eq(images[g.generators()[s]], generator_images[s]))
      throw NotAHomomorphism(g.generators()[s], s,
                             "generator slots naming the same element disagree");
  for (Index a = 0; a < g.size(); ++a)
    for (Index b = 0; b < g.size(); ++b)
      if (!eq(images[g.mul(a, b)], mul(images[a], images[b])))
        throw NotAHomomorphism(a, b);
  return images;
}

GroupHom hom_from_generator_images(const FiniteGroup &g,
                                   std::span<const Index> generator_images,
                                   const FiniteGroup &target);

namespace groups {

/// S_n, n <= 6: permutations in lexicographic one-line order, product a*b = a o b.
/// Generators are the adjacent transpositions.
FiniteGroup symmetric(std::size_t n);
/// Z_n by residues, generator 1.
FiniteGroup cyclic(std::size_t n);
/// D_n of order 2n: r^0..r^{n-1} then r^0 s..r^{n-1} s. Generators r, s.
FiniteGroup dihedral(std::size_t n);

/// The permutation in one-line notation of element `index` of symmetric(n).
Permutation symmetric_element(std::size_t n, Index index);
Index symmetric_index(const Permutation &p);

} // namespace groups

} // namespace rackrep
