#pragma once

#include <array>
#include <map>
#include <string>

#include "lieext/matrix.hpp"
#include "lieext/rational.hpp"

namespace lieext {

/// Index triple (i, j, k) of W^{ij}_k, 1-based.
using Index3 = std::array<int, 3>;

/// The constant tensor W^{ij}_k defining both the extension bracket
/// [x,y]_s = sum W^{ij}_s [x_i, y_j] and the product e^i * e^j = sum W^{ij}_s e^s.
///
/// Only nonzero entries are stored. Indices run over 1..n; dimension 0 is
/// allowed (the reduced algebra of a two-dimensional frame is empty).
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(int n, std::string name = {});

  int dim() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  Rational operator()(int i, int j, int k) const;
  /// Setting a zero value erases the entry. Throws IndexOutOfRange.
  void set(int i, int j, int k, const Rational& v);
  void add(int i, int j, int k, const Rational& v);

  const std::map<Index3, Rational>& entries() const { return w_; }

  /// Value equality (the name is ignored).
  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

 private:
  void check(int i, int j, int k) const;

  int n_ = 0;
  std::string name_;
  std::map<Index3, Rational> w_;
};

/// Coordinates of an element of the commutative algebra in the basis {e^i}.
struct AlgebraElement {
  Vector coords;
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

/// Coordinates over the dual basis {e_i}.
struct DualElement {
  Vector coords;
  friend bool operator==(const DualElement&, const DualElement&) = default;
};

/// Basis change e^{i'} = sum_i a(i', i) e^i. The rows of `a` are the new basis
/// vectors written in the old basis; a * a_inv = identity.
class BasisChange {
 public:
  /// Throws Error(Singular) if `a` is not invertible.
  explicit BasisChange(Matrix a);
  BasisChange(Matrix a, Matrix a_inv);  // trusted, checked in debug builds

  static BasisChange identity(std::size_t n);
  /// New basis given as columns (in old coordinates).
  static BasisChange from_new_basis_columns(const Matrix& columns);

  const Matrix& a() const { return a_; }
  const Matrix& a_inv() const { return a_inv_; }
  std::size_t dim() const { return a_.rows(); }

  BasisChange inverse() const { return BasisChange(a_inv_, a_); }
  /// First this change, then `next` (expressed in this change's new basis).
  BasisChange then(const BasisChange& next) const;

  friend bool operator==(const BasisChange& x, const BasisChange& y) { return x.a_ == y.a_; }

 private:
  Matrix a_;
  Matrix a_inv_;
};

}  // namespace lieext
