#pragma once

// Data-parallel inner loops. Every kernel exists twice with the same
// signature: rackrep::par (OpenMP) is what the library calls, rackrep::serial
// is the plain reference the tests compare against and the benchmark times.
// Both report the same witness (the lexicographically first one) and the
// floating point sums use a fixed chunked order, so results do not depend on
// the thread count.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rackrep/linalg.hpp"
#include "rackrep/permutation.hpp"

namespace rackrep {

using Triple = std::array<Index, 3>;
using Word = std::vector<Index>;

/// Largest entrywise residual over a family of checks and where it occurs.
struct ResidualWitness {
  double residual = 0.0;
  Index a = 0;
  Index b = 0;
};

/// Number of nonempty words of length <= max_len over k letters, saturating
/// at UINT64_MAX.
std::uint64_t word_count(std::size_t k, std::size_t max_len);

namespace par {

/// First (x,y,z) with x|>(y|>z) != (x|>y)|>(x|>z). `table` is row-major k*k.
std::optional<Triple> first_distributivity_violation(std::span<const Index> table,
                                                     std::size_t k);

/// First (a,b,c) with (ab)c != a(bc).
std::optional<Triple> first_associativity_violation(std::span<const Index> table,
                                                    std::size_t m);

/// All words w of length 1..max_len, in lexicographic order, with
/// L_{w_m} o ... o L_{w_1} = id. `lefts[x]` is L_x.
std::vector<Word> stabilizing_words(std::span<const Permutation> lefts,
                                    std::size_t max_len);

/// First stabilizing word (lexicographic) whose product rho_{w_m}...rho_{w_1}
/// is farther than eps from the identity.
std::optional<Word> first_unstable_word(std::span<const Permutation> lefts,
                                        std::span<const CMatrix> rho,
                                        std::size_t max_len, double eps);

/// max over (x,y) of |rho_{x|>y} - rho_x rho_y rho_x^-1|.
ResidualWitness rack_axiom_residual(std::span<const Index> table, std::size_t k,
                                    std::span<const CMatrix> rho,
                                    std::span<const CMatrix> rho_inv);

/// max over (a,b) of |M_{ab} - M_a M_b|.
ResidualWitness multiplicativity_residual(std::span<const Index> table,
                                          std::size_t m,
                                          std::span<const CMatrix> mats);

/// (1/|G|) sum_g A_g X B_g^-1. With A = B this is the Reynolds projection onto
/// the commutant; otherwise it projects onto intertwiners A_g T = T B_g.
CMatrix group_average(std::span<const CMatrix> lhs,
                      std::span<const CMatrix> rhs_inverses, const CMatrix &x);

} // namespace par

namespace serial {

std::optional<Triple> first_distributivity_violation(std::span<const Index> table,
                                                     std::size_t k);
std::optional<Triple> first_associativity_violation(std::span<const Index> table,
                                                    std::size_t m);
std::vector<Word> stabilizing_words(std::span<const Permutation> lefts,
                                    std::size_t max_len);
std::optional<Word> first_unstable_word(std::span<const Permutation> lefts,
                                        std::span<const CMatrix> rho,
                                        std::size_t max_len, double eps);
ResidualWitness rack_axiom_residual(std::span<const Index> table, std::size_t k,
                                    std::span<const CMatrix> rho,
                                    std::span<const CMatrix> rho_inv);
ResidualWitness multiplicativity_residual(std::span<const Index> table,
                                          std::size_t m,
                                          std::span<const CMatrix> mats);
CMatrix group_average(std::span<const CMatrix> lhs,
                      std::span<const CMatrix> rhs_inverses, const CMatrix &x);

} // namespace serial

} // namespace rackrep
