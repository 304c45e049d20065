#include "lieext/casimir.hpp"

#include "lieext/algebra.hpp"
#include "lieext/errors.hpp"
#include "lieext/linalg.hpp"

namespace lieext {

namespace {

std::size_t packed_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i - 1) / 2 + (j - i);
}

std::vector<SymmetricForm> forms_from_kernel(const Matrix& ker, std::size_t n) {
  std::vector<SymmetricForm> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) out.push_back({unpack_symmetric(ker.column(c), n)});
  return out;
}

}  // namespace

Vector pack_symmetric(const Matrix& c) {
  const std::size_t n = c.rows();
  Vector v;
  v.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) v.push_back(c(i, j));
  return v;
}

Matrix unpack_symmetric(const Vector& v, std::size_t n) {
  if (v.size() != n * (n + 1) / 2) throw Error(ErrorCode::DimensionMismatch, "packed symmetric vector length");
  Matrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) c(i, j) = c(j, i) = v[packed_index(i, j, n)];
  return c;
}

Matrix forms_as_columns(const std::vector<SymmetricForm>& forms, std::size_t n) {
  std::vector<Vector> cols;
  for (const auto& f : forms) {
    if (f.c.rows() != n || f.c.cols() != n) throw Error(ErrorCode::DimensionMismatch, "form size");
    cols.push_back(pack_symmetric(f.c));
  }
  return Matrix::from_columns(n * (n + 1) / 2, cols);
}

std::vector<SymmetricForm> canonical_form_basis(const std::vector<SymmetricForm>& forms, std::size_t n) {
  return forms_from_kernel(canonical_basis(forms_as_columns(forms, n)), n);
}

std::vector<LinearCasimir> canonical_vector_basis(const std::vector<LinearCasimir>& ps, std::size_t n) {
  std::vector<Vector> cols;
  for (const auto& p : ps) cols.push_back(p.p.coords);
  const Matrix b = canonical_basis(Matrix::from_columns(n, cols));
  std::vector<LinearCasimir> out;
  for (std::size_t c = 0; c < b.cols(); ++c) out.push_back({{b.column(c)}});
  return out;
}

bool same_form_space(const std::vector<SymmetricForm>& a, const std::vector<SymmetricForm>& b, std::size_t n) {
  return same_span(forms_as_columns(a, n), forms_as_columns(b, n));
}

std::vector<LinearCasimir> linear_casimirs(const StructureTensor& w) {
  // sum_i W^{ij}_k p_i = 0: row (j,k), column i.
  const auto n = static_cast<std::size_t>(w.dim());
  Matrix sys(n * n, n);
  for (const auto& [idx, v] : w.entries()) sys((idx[1] - 1) * n + (idx[2] - 1), idx[0] - 1) += v;
  const Matrix ker = null_space(sys);
  std::vector<LinearCasimir> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) out.push_back({{ker.column(c)}});
  return out;
}

Matrix quadratic_casimir_system(const StructureTensor& w) {
  const auto n = static_cast<std::size_t>(w.dim());
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  Matrix sys(n * pairs, n * (n + 1) / 2);
  std::size_t row = 0;
  for (int j = 1; j <= w.dim(); ++j)
    for (int k = 1; k <= w.dim(); ++k)
      for (int r = k + 1; r <= w.dim(); ++r, ++row)
        for (int i = 1; i <= w.dim(); ++i) {
          const Rational a = w(j, i, k);
          const Rational b = w(j, i, r);
          if (!a.is_zero()) sys(row, packed_index(i - 1, r - 1, n)) += a;
          if (!b.is_zero()) sys(row, packed_index(i - 1, k - 1, n)) -= b;
        }
  return sys;
}

std::vector<SymmetricForm> quadratic_casimirs(const StructureTensor& w) {
  const auto n = static_cast<std::size_t>(w.dim());
  return forms_from_kernel(null_space(quadratic_casimir_system(w)), n);
}

std::vector<SymmetricForm> quadratic_casimirs_invariance(const StructureTensor& w) {
  const auto n = static_cast<std::size_t>(w.dim());
  const std::size_t unknowns = n * (n + 1) / 2;
  const auto mats = structure_matrices(w);
  std::vector<Vector> cols;
  for (std::size_t u = 0; u < unknowns; ++u) {
    Vector e(unknowns);
    e[u] = 1;
    const Matrix basis = unpack_symmetric(e, n);
    Vector col;
    for (const auto& m : mats) {
      const Matrix d = m * basis - basis * m.transpose();
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < n; ++r) col.push_back(d(k, r));
    }
    cols.push_back(std::move(col));
  }
  return forms_from_kernel(null_space(Matrix::from_columns(n * n * n, cols)), n);
}

bool is_quadratic_casimir(const StructureTensor& w, const Matrix& c) {
  const auto n = static_cast<std::size_t>(w.dim());
  if (c.rows() != n || c.cols() != n) throw Error(ErrorCode::DimensionMismatch, "form size differs from algebra dimension");
  if (!c.is_symmetric()) return false;
  for (const auto& m : structure_matrices(w))
    if (m * c != c * m.transpose()) return false;
  return true;
}

bool is_linear_casimir(const StructureTensor& w, const Vector& p) {
  const auto n = static_cast<std::size_t>(w.dim());
  if (p.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector size differs from algebra dimension");
  for (const auto& m : structure_matrices(w))
    if (!is_zero(m * p)) return false;
  return true;
}

SymmetricForm rank_one_casimir(const StructureTensor& w, const AlgebraElement& n_vec) {
  const auto n = static_cast<std::size_t>(w.dim());
  if (n_vec.coords.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector size differs from algebra dimension");
  if (is_zero(n_vec.coords)) throw Error(ErrorCode::NotCommonEigenvector, "zero vector is not an eigenvector");
  std::size_t pivot = 0;
  while (n_vec.coords[pivot].is_zero()) ++pivot;
  for (int i = 1; i <= w.dim(); ++i) {
    const Vector image = structure_matrix(w, i) * n_vec.coords;
    const Rational lambda = image[pivot] / n_vec.coords[pivot];
    if (image != scale(n_vec.coords, lambda))
      throw Error(ErrorCode::NotCommonEigenvector,
                  "structure matrix " + std::to_string(i) + " does not map the vector to a multiple of itself");
  }
  SymmetricForm f{outer(n_vec.coords, n_vec.coords)};
  if (!is_quadratic_casimir(w, f.c)) throw Error(ErrorCode::Inconsistent, "rank-one form fails the Casimir condition");
  return f;
}

}  // namespace lieext
