#pragma once

#include <string>

#include "lieext/structure_tensor.hpp"

namespace lieext {

/// K[t]/(t^{n+1}) in the basis 1, t, ..., t^n (index i holds t^{i-1}).
StructureTensor truncpoly(int n);

/// Its solvable part: basis t, ..., t^n (index i holds t^i).
StructureTensor truncpoly_solvable(int n);

/// n-dimensional algebra with zero multiplication.
StructureTensor zero_algebra(int n);

/// "truncpoly:<n>", "truncpoly-solvable:<n>" or "zero:<n>".
/// Throws UnknownPreset for anything else.
StructureTensor preset(const std::string& name);

}  // namespace lieext
