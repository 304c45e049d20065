#include "lieext/structure_tensor.hpp"

#include <cassert>

#include "lieext/errors.hpp"
#include "lieext/linalg.hpp"

namespace lieext {

StructureTensor::StructureTensor(int n, std::string name) : n_(n), name_(std::move(name)) {
  if (n < 0) throw Error(ErrorCode::DimensionMismatch, "negative tensor dimension");
}

void StructureTensor::check(int i, int j, int k) const {
  if (i < 1 || i > n_ || j < 1 || j > n_ || k < 1 || k > n_)
    throw Error(ErrorCode::IndexOutOfRange,
                "tensor index (" + std::to_string(i) + "," + std::to_string(j) + "," +
                    std::to_string(k) + ") outside 1.." + std::to_string(n_));
}

Rational StructureTensor::operator()(int i, int j, int k) const {
  check(i, j, k);
  auto it = w_.find({i, j, k});
  return it == w_.end() ? Rational(0) : it->second;
}

void StructureTensor::set(int i, int j, int k, const Rational& v) {
  check(i, j, k);
  if (v.is_zero())
    w_.erase({i, j, k});
  else
    w_[{i, j, k}] = v;
}

void StructureTensor::add(int i, int j, int k, const Rational& v) {
  if (v.is_zero()) return;
  set(i, j, k, (*this)(i, j, k) + v);
}

BasisChange::BasisChange(Matrix a) : a_(std::move(a)), a_inv_(invert(a_)) {}

BasisChange::BasisChange(Matrix a, Matrix a_inv) : a_(std::move(a)), a_inv_(std::move(a_inv)) {
  assert(a_ * a_inv_ == Matrix::identity(a_.rows()));
}

BasisChange BasisChange::identity(std::size_t n) {
  return BasisChange(Matrix::identity(n), Matrix::identity(n));
}

BasisChange BasisChange::from_new_basis_columns(const Matrix& columns) {
  return BasisChange(columns.transpose());
}

BasisChange BasisChange::then(const BasisChange& next) const {
  if (next.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "basis change composition");
  return BasisChange(next.a_ * a_, a_inv_ * next.a_inv_);
}

}  // namespace lieext
