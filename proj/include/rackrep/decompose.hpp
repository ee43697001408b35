#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "rackrep/reps.hpp"

namespace rackrep {

/// dim {C : C M_g = M_g C for all g}. Solved directly on the generator
/// matrices for small dimension, read off <chi, chi> otherwise.
std::size_t commutant_dimension(const GroupRep &grep);

struct Irreducible {};

/// Two complementary invariant subspaces, as column bases in the input
/// coordinates.
struct SplitResult {
  CMatrix invariant;
  CMatrix complement;
};

/// Throws GapFailure.
std::variant<Irreducible, SplitResult> split(const GroupRep &grep, const Config &config = {});

struct DecompositionBlock {
  GroupRep irrep;
  std::size_t multiplicity = 0;
  ClassFunction character;
};

/// Columns of basis_change are the block bases in block order, so
/// basis_change^-1 M_g basis_change is block diagonal for every g.
struct DecompositionReport {
  std::vector<DecompositionBlock> blocks;
  CMatrix basis_change;
  double residual = 0.0;
};

/// Blocks are ordered by dimension, then by character (descending real and
/// imaginary parts per class, so the trivial character comes first).
/// Throws GapFailure, and Error if the residual check fails.
DecompositionReport decompose(const GroupRep &grep, const Config &config = {});

struct StrongInventory {
  std::vector<RackRep> reps;
  std::vector<ClassFunction> characters;
  bool exact = false;
  std::size_t bound = 0;
};

/// Every strong irreducible representation of a connected rack, up to
/// equivalence, read off the regular representation of the finite enveloping
/// group (order at most kInventoryGroupCap). Throws NotConnected,
/// CosetLimitExceeded, CapExceeded, GapFailure.
constexpr std::size_t kInventoryGroupCap = 200;
StrongInventory enumerate_strong_irreps(const EnvelopingGroup &env, const Config &config = {});
StrongInventory enumerate_strong_irreps(std::shared_ptr<const Rack> rack,
                                        const Config &config = {});

} // namespace rackrep
