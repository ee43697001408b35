#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rackrep/permutation.hpp"

namespace rackrep {

/// A letter of a relator: +(g+1) is generator g, -(g+1) its inverse.
using Letter = int;

inline Letter gen_letter(Index g) { return static_cast<Letter>(g) + 1; }
inline Letter inv_letter(Index g) { return -static_cast<Letter>(g) - 1; }

/// Finitely presented group <g_0..g_{n-1} | relators>.
struct Presentation {
  std::size_t n_generators = 0;
  std::vector<std::vector<Letter>> relators;

  /// Throws InvalidInput on an empty relator, a zero letter or an index out of range.
  void validate() const;
};

std::string format_relator(const std::vector<Letter> &relator);

/// Complete coset table of the trivial subgroup: the regular right action of
/// the presented group on itself, renumbered in breadth-first order over the
/// positive generators so that coset 0 is the identity.
struct CosetTable {
  std::size_t n_generators = 0;
  /// action[c][2g] = c * g, action[c][2g+1] = c * g^-1
  std::vector<std::vector<Index>> action;
  /// Positive word (generator indices) reaching each coset from coset 0; it is
  /// the breadth-first tree path, so a shortest positive word.
  std::vector<std::vector<Index>> representative_words;
  /// Breadth-first tree: coset c = parent[c] * g_{via[c]} (c != 0).
  std::vector<Index> parent;
  std::vector<Index> via;

  // Enumeration bookkeeping.
  std::size_t cosets_defined = 0;
  std::size_t coincidences = 0;
  std::size_t max_live = 0;

  std::size_t size() const { return action.size(); }
  Index apply(Index coset, Letter letter) const;
  Index trace(Index coset, const std::vector<Letter> &word) const;
};

/// Felsch-style (deduction-driven) Todd-Coxeter enumeration over the trivial
/// subgroup. Throws CosetLimitExceeded when more than `max_cosets` cosets
/// would be allocated; the result is verified (bijective columns, every
/// relator closes at every coset) before it is returned.
CosetTable todd_coxeter(const Presentation &pres, std::size_t max_cosets = 1'000'000);

} // namespace rackrep
