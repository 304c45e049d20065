#pragma once

#include <optional>
#include <vector>

#include "lieext/casimir.hpp"
#include "lieext/structure_tensor.hpp"

namespace lieext {

/// A basis containing a unity and a pseudo-zero (e^z * e^i = delta_{i,u} e^z),
/// with no middle product landing on the unity.
///
/// Label convention: label 0 is the unity, label n the pseudo-zero and labels
/// 1..n-1 the remaining positions in ascending order. Public functions take
/// and return coordinates in the tensor's own basis order; labels are only
/// used internally and in `position_of`.
class ReductionFrame {
 public:
  /// Throws Inconsistent if the positions do not form a frame.
  ReductionFrame(StructureTensor w, int unity_pos, int pseudo_zero_pos);

  const StructureTensor& tensor() const { return w_; }
  int unity_pos() const { return unity_; }
  int pseudo_zero_pos() const { return zero_; }
  /// n: the pseudo-zero label. The tensor has dimension n+1.
  int n() const { return w_.dim() - 1; }
  /// 1-based position of a label 0..n.
  int position_of(int label) const { return pos_[static_cast<std::size_t>(label)]; }
  /// The tensor re-indexed so that index label+1 holds the basis element with that label.
  const StructureTensor& labelled() const { return lab_; }

  Vector to_labels(const Vector& v) const;
  Vector from_labels(const Vector& v) const;
  Matrix to_labels(const Matrix& c) const;
  Matrix from_labels(const Matrix& c) const;

 private:
  StructureTensor w_;
  int unity_;
  int zero_;
  std::vector<int> pos_;
  StructureTensor lab_;
};

/// Frame in the given basis, if one exists. Among several pseudo-zero
/// candidates the largest position wins.
std::optional<ReductionFrame> detect_frame(const StructureTensor& w);

/// Middle block W^{ij}_k, 1 <= i,j,k <= n-1 (labels shifted to 1..n-1).
StructureTensor reduced_algebra(const ReductionFrame& f);

/// gbar = inverse of (W^{ij}_n) over middle labels; abar(i,j,k) holds
/// Abar^k_{ij} = sum_s gbar_{is} W^{sk}_j, itself a structure tensor.
struct Coextension {
  Matrix gbar;
  StructureTensor abar;
};

/// Throws DegenerateCase when the middle block of W_n is singular.
Coextension build_coextension(const ReductionFrame& f);

/// T*_x e_n, i.e. component j is <e_n, x * e^j>.
DualElement psi(const ReductionFrame& f, const AlgebraElement& x);
AlgebraElement psi_inverse(const ReductionFrame& f, const DualElement& xi);

/// The transported product on the dual, from the closed formula in ḡ and Abar.
DualElement dual_product(const ReductionFrame& f, const DualElement& x, const DualElement& y);
/// The same product as psi(psi^{-1} x * psi^{-1} y).
DualElement dual_product_via_psi(const ReductionFrame& f, const DualElement& x, const DualElement& y);

/// T*_x xi, component j = <xi, x * e^j>.
DualElement coadjoint(const StructureTensor& w, const AlgebraElement& x, const DualElement& xi);

/// Casimir forms of the full algebra built from the boundary values C_{nk}:
/// C_{ij} = sum_k Ahat^k_{ij} C_{nk} for labels below n, then the e_n-row
/// invariance equations are imposed. Each output is re-checked against the
/// full quadratic condition.
std::vector<SymmetricForm> casimir_from_boundary(const ReductionFrame& f);

/// Symmetric forms (full size, own basis order) with C(e_0, e_j) = 0 for
/// j < n that satisfy only the e_n-row invariance equations.
std::vector<SymmetricForm> boundary_row_solutions(const ReductionFrame& f);

/// Restriction to the middle labels. Throws NotACasimir if c fails the full
/// quadratic condition.
SymmetricForm reduce_casimir(const ReductionFrame& f, const SymmetricForm& c);

struct CasimirLift {
  SymmetricForm particular;
  std::vector<SymmetricForm> homogeneous;
  /// Affine family contains c (within the particular + span(homogeneous) set).
  bool contains(const SymmetricForm& c) const;
};

/// Solves delta_i^s X_0 + sum_m W^{sm}_i X_m = sum_m W^{sm}_n cbar_{mi} for
/// X_0..X_{n-1} and assembles C(e_n,e_j) = X_j, C(e_n,e_n) = c_nn.
/// Throws NotACasimir if cbar is not a Casimir of the reduced algebra and
/// Inconsistent if the system has no solution.
CasimirLift lift_casimir(const ReductionFrame& f, const SymmetricForm& cbar, const Rational& c_nn);

/// Ahat on labels 0..n-1 (index = label + 1): Ahat^0_{ij} = gbar_{ij},
/// Ahat^k_{ij} = Abar^k_{ij}, products with e_0 vanish.
StructureTensor solvable_coextension(const ReductionFrame& f);

}  // namespace lieext
