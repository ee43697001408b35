#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rackrep/permutation.hpp"

namespace rackrep {

class FiniteGroup;

/// A finite rack stored as a dense operation table, table[x][y] = x |> y.
///
/// Instances only come out of validate_rack() (or the builtins, which go
/// through it), so every Rack satisfies both axioms: each row is a bijection
/// and the operation is left self-distributive. Racks are immutable.
class Rack {
public:
  std::size_t size() const { return size_; }
  const std::string &name() const { return name_; }

  /// x |> y
  Index op(Index x, Index y) const { return table_[x * size_ + y]; }
  /// x |>^-1 y, i.e. L_x^-1(y)
  Index op_inv(Index x, Index y) const { return inverse_[x * size_ + y]; }

  std::span<const Index> row(Index x) const {
    return {table_.data() + x * size_, size_};
  }
  /// Row-major k*k table.
  std::span<const Index> flat_table() const { return table_; }
  std::vector<std::vector<Index>> table() const;

  friend bool operator==(const Rack &a, const Rack &b) {
    return a.size_ == b.size_ && a.table_ == b.table_;
  }

private:
  friend Rack validate_rack(const std::vector<std::vector<long long>> &, std::string);
  std::size_t size_ = 0;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  std::string name_;
};

struct RackClassification {
  bool is_quandle = false;
  bool is_involutive = false;
  bool is_connected = false;
  std::vector<std::size_t> left_orders;
  std::optional<std::size_t> common_order;
};

/// Checks shape, entry range, row bijectivity and self-distributivity (the
/// last one exhaustively over all k^3 triples).
///
/// Throws OutOfRangeEntry, NonBijectiveRow or DistributivityViolation.
Rack validate_rack(const std::vector<std::vector<long long>> &table, std::string name = {});
Rack validate_rack(const std::vector<std::vector<Index>> &table, std::string name = {});

RackClassification classify(const Rack &rack);

/// L_x : y -> x |> y. Its inverse realizes x |>^-1 y.
Permutation left_mult(const Rack &rack, Index x);

/// Connected components: orbits of <L_x> on the underlying set, each sorted,
/// ordered by smallest member.
std::vector<std::vector<Index>> orbits(const Rack &rack);

struct HomCheck {
  bool is_hom = false;
  bool is_iso = false;
};

HomCheck check_hom(const Rack &source, const Rack &target, std::span<const Index> map);

namespace builtin {

/// x |> y = y
Rack trivial(std::size_t k);
/// x |> y = sigma(y)
Rack cyclic(const Permutation &sigma);
/// Z_m with x |> y = 2x - y
Rack takasaki(std::size_t m);
/// Transpositions of S_n under conjugation, ordered (1 2),(1 3),...,(1 n),(2 3),...
Rack permutation_quandle(std::size_t n);
/// The transposition (i+1 j+1) at index i, using 0-based points i < j.
std::vector<std::pair<Index, Index>> transpositions(std::size_t n);
/// g |> h = g h g^-1 on all of G, elements in group index order.
Rack conj(const FiniteGroup &g);
/// g |> h = g h^-1 g
Rack core(const FiniteGroup &g);
/// Subquandle of Conj(G) on the conjugacy class of `element`, members in
/// increasing group index order.
Rack conj_class(const FiniteGroup &g, Index element);

} // namespace builtin

} // namespace rackrep
