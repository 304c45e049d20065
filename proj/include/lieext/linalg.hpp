#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lieext/matrix.hpp"
#include "lieext/polynomial.hpp"

namespace lieext {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
  std::size_t rank = 0;
};

/// Reduced row-echelon form. Elimination is fraction-free (Bareiss) on
/// integer-scaled rows; only the final normalisation divides.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Kernel basis as columns, one per free column of the RREF: the free
/// variable is 1, the other free variables 0.
Matrix null_space(const Matrix& m);

/// Throws Error(Singular) when m is not invertible.
Matrix invert(const Matrix& m);

/// Monic characteristic polynomial det(x I - m), Faddeev-LeVerrier.
Polynomial1 char_poly(const Matrix& m);

struct RootFactorization {
  std::vector<std::pair<Rational, int>> roots;  // ascending, with multiplicity
  Polynomial1 remainder;                        // no rational roots
};

/// Extracts all rational roots. p == lead(p)/lead(rem) * rem * prod (x-r)^m.
RootFactorization rational_roots(const Polynomial1& p);

/// One solution of a x = b, if any.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Basis (as columns) of the column space, taken from the pivot columns.
Matrix column_space(const Matrix& m);

/// Basis of the column space in reduced echelon form (rows of rref(m^T)),
/// so equal spans give identical bases.
Matrix canonical_basis(const Matrix& m);

/// Columns of `a` lie in the column span of `basis`.
bool contains_span(const Matrix& basis, const Matrix& a);
bool in_span(const Matrix& basis, const Vector& v);
/// Equal column spans.
bool same_span(const Matrix& a, const Matrix& b);

/// Basis of the intersection of two column spans (as columns).
Matrix intersect_spans(const Matrix& a, const Matrix& b);

/// Columns extending `sub` (a basis of a subspace of span(`whole`)) to a basis
/// of span(`whole`): chosen greedily among the columns of `whole` in order.
Matrix complement_in(const Matrix& sub, const Matrix& whole);

Matrix matrix_power(const Matrix& m, unsigned e);

}  // namespace lieext
