#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "rackrep/config.hpp"
#include "rackrep/enveloping.hpp"
#include "rackrep/linalg.hpp"

namespace rackrep {

/// rho : X -> Conj(GL(d, C)), one invertible matrix per rack element.
struct RackRep {
  std::shared_ptr<const Rack> rack;
  std::vector<CMatrix> matrices;

  std::size_t dimension() const {
    return matrices.empty() ? 0 : static_cast<std::size_t>(matrices.front().rows());
  }
};

/// A representation of a finite group, one matrix per group element.
struct GroupRep {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<CMatrix> matrices;

  std::size_t dimension() const {
    return matrices.empty() ? 0 : static_cast<std::size_t>(matrices.front().rows());
  }
};

/// Trace per conjugacy class, classes as ordered by conjugacy_classes().
using ClassFunction = std::vector<Complex>;

/// Exhaustive check of rho_{x|>y} = rho_x rho_y rho_x^-1 within tol.eps.
/// Throws DimensionMismatch, NotInvertible, AxiomViolation.
RackRep validate_rack_rep(std::shared_ptr<const Rack> rack, std::vector<CMatrix> matrices,
                          const Tolerances &tol = {});

/// Checks identity -> I and multiplicativity. Small cases are checked on
/// every pair; large ones on every (element, generator) pair, which is
/// equivalent because every element is a product of generators.
/// Throws DimensionMismatch, NotAHomomorphism.
GroupRep validate_group_rep(std::shared_ptr<const FiniteGroup> group,
                            std::vector<CMatrix> matrices, const Tolerances &tol = {});

/// lambda_t sends basis vector delta_x to delta_{t|>x}.
RackRep regular_rep(std::shared_ptr<const Rack> rack);

/// Every rho_x = (c). Throws ZeroScalar.
RackRep scalar_rep(std::shared_ptr<const Rack> rack, Complex c);

/// Left regular representation of a group: M_g delta_h = delta_{gh}.
GroupRep regular_group_rep(std::shared_ptr<const FiniteGroup> group);

/// Induced representation of the finite enveloping group; the matrix at h is
/// the product of rho along h's positive word and the matrix at eta(x) is rho_x.
/// Throws PowerObstruction when some rho_x^n != I, NotAHomomorphism when rho
/// does not factor.
GroupRep lift(const EnvelopingGroup &env, const RackRep &rep, const Tolerances &tol = {});

/// rho_x = grep(eta(x)), validated as a rack representation.
RackRep project(const EnvelopingGroup &env, const GroupRep &grep,
                const Tolerances &tol = {});

/// Kernel criterion: rho_x^n = I for all x and the induced representation
/// kills the kernel of the map to Inn(X).
bool is_strong(const EnvelopingGroup &env, const RackRep &rep, const Tolerances &tol = {});

/// Direct check over every word of length <= max_len: whenever the composed
/// left multiplications are the identity, so is the composed matrix product.
/// Works for disconnected racks too. Throws BudgetExceeded.
bool is_strong_bruteforce(const RackRep &rep, std::size_t max_len, const Config &config = {});

/// Dimension of the algebra spanned by all products of the matrices
/// (identity included). Throws BudgetExceeded for dimension > 40.
std::size_t algebra_span_dimension(std::span<const CMatrix> matrices, std::size_t dim);

/// No proper invariant subspace, i.e. the generated algebra is all of M_d(C).
bool is_irreducible(std::span<const CMatrix> matrices, std::size_t dim);

/// An invertible T with A_x T = T B_x for every x, or nothing when the two
/// representations are inequivalent. Throws DimensionMismatch.
std::optional<CMatrix> are_equivalent(const RackRep &a, const RackRep &b,
                                      const Config &config = {});
std::optional<CMatrix> are_equivalent(const GroupRep &a, const GroupRep &b,
                                      const Config &config = {});

/// Throws ClassInconsistency.
ClassFunction character(const GroupRep &grep, const Tolerances &tol = {});

/// (1/|G|) sum over classes of size * chi1 * conj(chi2).
Complex inner_product(const ClassFunction &chi1, const ClassFunction &chi2,
                      std::span<const std::size_t> class_sizes, std::size_t group_order);

std::vector<std::size_t> class_sizes(const FiniteGroup &g);

/// Matrix-level intertwiner search shared by the rack and group versions.
std::optional<CMatrix> find_intertwiner(std::span<const CMatrix> lhs,
                                        std::span<const CMatrix> rhs,
                                        const Config &config);

} // namespace rackrep
