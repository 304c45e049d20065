#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieext/matrix.hpp"
#include "lieext/structure_tensor.hpp"

namespace lieext {

struct Violation {
  enum class Kind { Symmetry, Commutation };
  Kind kind;
  std::vector<int> indices;  // (i,j,k) for symmetry, (i,s,q,p) for commutation
  Rational lhs;
  Rational rhs;
};

/// Verdict on the two tensor conditions that make the bracket a Lie bracket
/// for every Lie algebra: W^{ij}_k = W^{ji}_k, and pairwise commuting
/// structure matrices.
struct ValidationReport {
  bool symmetric = true;
  bool commuting = true;
  std::optional<Violation> first_violation;

  bool valid() const { return symmetric && commuting; }
};

ValidationReport validate(const StructureTensor& w);

/// Matrix of multiplication by e^i: entry (k-1, j-1) is W^{ij}_k.
Matrix structure_matrix(const StructureTensor& w, int i);
std::vector<Matrix> structure_matrices(const StructureTensor& w);

AlgebraElement multiply(const StructureTensor& w, const AlgebraElement& a, const AlgebraElement& b);

/// Transforms W as a (2,1) tensor: W'^{i'j'}_{k'} = sum a(i',i) a(j',j) a_inv(k,k') W^{ij}_k.
StructureTensor change_basis(const StructureTensor& w, const BasisChange& bc);

/// The same transformation applied to the structure matrices directly:
/// M'_{i'} = sum_i a(i',i) P^{-1} M_i P with P = a^T (columns = new basis).
std::vector<Matrix> transform_structure_matrices(const std::vector<Matrix>& mats, const BasisChange& bc);

/// Columns span {p : e^j * p = 0 for all j}.
Matrix annihilator(const StructureTensor& w);

std::optional<AlgebraElement> find_unity(const StructureTensor& w);

struct JointEigenvector {
  AlgebraElement vector;
  Vector eigenvalues;  // eigenvalue of each structure matrix, in index order
};

/// Basis vectors of every joint eigenspace of the structure matrices, grouped
/// by eigenvalue tuple (ascending). Throws NonRationalSpectrum if some
/// structure matrix has an eigenvalue outside the rationals.
std::vector<JointEigenvector> common_eigenvectors(const StructureTensor& w);

/// Dimension n+1 algebra whose first basis element is a unity; e^i maps to e^{i+1}.
StructureTensor adjoin_unity(const StructureTensor& w);

/// Removes the basis element at `unity_pos` (1-based), which must act as the
/// identity; otherwise throws NotUnity.
StructureTensor strip_unity(const StructureTensor& w, int unity_pos);

/// Basis-triple check of the product itself: commutativity and associativity.
struct ProductLaws {
  bool commutative = true;
  bool associative = true;
  std::vector<int> witness;
  bool ok() const { return commutative && associative; }
};
ProductLaws check_product_laws(const StructureTensor& w);

/// Structure constants of a multiplicatively closed subspace in the basis
/// given by the columns. Throws Inconsistent if the span is not closed.
StructureTensor restrict_to(const StructureTensor& w, const Matrix& basis_columns);

/// Coordinates of each column of `vectors` in the basis `basis` (full column
/// rank). Throws Inconsistent if some column is outside the span.
Matrix coordinates_in(const Matrix& basis, const Matrix& vectors);

/// Block-diagonal sum; blocks are placed in order.
StructureTensor direct_sum(const std::vector<StructureTensor>& blocks);

/// Adds W^{ji}_k wherever only W^{ij}_k is present.
StructureTensor symmetric_completion(const StructureTensor& w);

/// Basis vectors (as columns) of the span of all products a*b.
Matrix product_span(const StructureTensor& w, const Matrix& left, const Matrix& right);

}  // namespace lieext
