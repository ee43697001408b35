#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "rackrep/config.hpp"
#include "rackrep/group.hpp"
#include "rackrep/kernels.hpp"
#include "rackrep/rack.hpp"
#include "rackrep/todd_coxeter.hpp"

namespace rackrep {

/// Presentation of the finite enveloping group of a connected rack: one
/// generator g_x per element, relators g_{x|>y} g_x g_y^-1 g_x^-1 for all x,y
/// and g_x^n for all x (n the common order of the left multiplications).
/// Duplicates are dropped. Throws NotConnected.
Presentation presentation_of(const Rack &rack);

/// The finite enveloping group together with its structure maps.
struct EnvelopingGroup {
  std::shared_ptr<const Rack> rack;
  /// Regular action read off the coset table. Generator slot x is g_x, so
  /// group->word(h) is a positive word of rack elements with
  /// h = g_{w0} g_{w1} ... g_{wm}.
  std::shared_ptr<const FiniteGroup> group;
  /// eta[x] = element index of g_x. Not injective in general.
  std::vector<Index> eta;
  std::size_t common_order = 0;
  InnGroup inn;
  /// g_x -> L_x
  GroupHom to_inn;
  /// Kernel of to_inn, ascending, with a positive word per element.
  std::vector<Index> kernel;
  std::vector<Word> kernel_words;
  std::vector<Index> center;
  CosetTable cosets;
};

/// Throws NotConnected, CosetLimitExceeded.
EnvelopingGroup enveloping_group(std::shared_ptr<const Rack> rack,
                                 const Config &config = {});
EnvelopingGroup enveloping_group(const Rack &rack, const Config &config = {});

/// Word (x_1, ..., x_m) stabilizes when L_{x_m} o ... o L_{x_1} = id.
struct StabilizingFamily {
  Word word;
  friend bool operator==(const StabilizingFamily &, const StabilizingFamily &) = default;
};

bool is_stabilizing_family(const Rack &rack, std::span<const Index> word);

/// Every stabilizing family of length 1..max_len, lexicographic.
/// Throws BudgetExceeded when more than `budget` words would be visited.
std::vector<StabilizingFamily> enumerate_stabilizing_families(
    const Rack &rack, std::size_t max_len, std::uint64_t budget = 100'000'000);

/// Whether u_n u_{n-1} ... u_1 is central in G, for a family over the
/// elements of G (that is, over Conj(G)).
bool conj_center_criterion(const FiniteGroup &g, std::span<const Index> family);

} // namespace rackrep
