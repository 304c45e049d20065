#pragma once

#include <vector>

#include "lieext/matrix.hpp"
#include "lieext/structure_tensor.hpp"

namespace lieext {

/// Coefficients p of the linear Casimir sum_i p_i <y, xi^i>.
struct LinearCasimir {
  AlgebraElement p;
};

/// Symmetric coefficient matrix C_{ij} of a quadratic Casimir.
struct SymmetricForm {
  Matrix c;
  friend bool operator==(const SymmetricForm&, const SymmetricForm&) = default;
};

std::vector<LinearCasimir> linear_casimirs(const StructureTensor& w);

/// Basis of the symmetric C with sum_i (W^{ji}_k C_{ir} - W^{ji}_r C_{ik}) = 0
/// for all j and k < r. Unknowns are C_{ij}, i <= j, in lexicographic order.
std::vector<SymmetricForm> quadratic_casimirs(const StructureTensor& w);

/// The same space from the invariance form M_j C = C M_j^T, assembled from
/// matrix products instead of index sums.
std::vector<SymmetricForm> quadratic_casimirs_invariance(const StructureTensor& w);

/// Coefficient matrix of the quadratic system (rows = equations, columns =
/// upper-triangle unknowns).
Matrix quadratic_casimir_system(const StructureTensor& w);

/// C satisfies the quadratic condition (and is symmetric).
bool is_quadratic_casimir(const StructureTensor& w, const Matrix& c);
bool is_linear_casimir(const StructureTensor& w, const Vector& p);

/// C = n n^T for a simultaneous eigenvector n. Throws NotCommonEigenvector.
SymmetricForm rank_one_casimir(const StructureTensor& w, const AlgebraElement& n_vec);

// Upper-triangle packing (i <= j, lexicographic) of symmetric matrices.
Vector pack_symmetric(const Matrix& c);
Matrix unpack_symmetric(const Vector& v, std::size_t n);

/// Forms as columns of packed vectors (n(n+1)/2 rows).
Matrix forms_as_columns(const std::vector<SymmetricForm>& forms, std::size_t n);

/// Reduced echelon basis of the span of the given forms; equal spans give
/// identical lists.
std::vector<SymmetricForm> canonical_form_basis(const std::vector<SymmetricForm>& forms, std::size_t n);
std::vector<LinearCasimir> canonical_vector_basis(const std::vector<LinearCasimir>& ps, std::size_t n);

bool same_form_space(const std::vector<SymmetricForm>& a, const std::vector<SymmetricForm>& b, std::size_t n);

}  // namespace lieext
