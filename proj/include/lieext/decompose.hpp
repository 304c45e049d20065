#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lieext/structure_tensor.hpp"

namespace lieext {

/// Splitting of the algebra into ideals. The new basis (rows of
/// basis_change.a()) lists the blocks in order, so change_basis(w,
/// basis_change) == direct_sum(blocks).
struct Decomposition {
  BasisChange basis_change = BasisChange::identity(0);
  std::vector<int> block_dims;
  std::vector<StructureTensor> blocks;
  bool complete = true;  // false when a factor irreducible over Q blocked a split
};

/// Default number of seeded centroid elements tried per level.
inline constexpr int kDecomposeAttempts = 8;

Decomposition decompose_ideals(const StructureTensor& w, std::uint64_t seed = 0,
                               int attempts = kDecomposeAttempts);

bool is_nilpotent_family(const StructureTensor& w);

struct CanonicalForm {
  BasisChange basis_change;
  StructureTensor tensor;
};

/// Basis adapted to the power filtration A > A^2 > A^3 > ...; the result has
/// W^{ij}_s = 0 unless s > max(i,j). Throws NotNilpotent.
CanonicalForm canonical_solvable_basis(const StructureTensor& w);

struct BlockKind {
  enum class Kind { Semisimple, Solvable };
  Kind kind = Kind::Solvable;
  Rational scale;  // a, for Semisimple: eigenvalue of the first non-nilpotent generator
  std::string str() const;
};

/// Throws Unclassifiable when the algebra is neither nilpotent nor a unital
/// local algebra with rational spectrum.
BlockKind classify(const StructureTensor& w);
std::vector<BlockKind> classify(const Decomposition& d);

}  // namespace lieext
