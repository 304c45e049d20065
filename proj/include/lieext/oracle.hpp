#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieext/casimir.hpp"
#include "lieext/matrix.hpp"
#include "lieext/structure_tensor.hpp"

namespace lieext {

/// Structure constants [x_a, x_b] = sum_d c(a,b,d) x_d, indices 1..dim.
struct LiePreset {
  std::string name;
  int dim = 0;
  std::map<Index3, Rational> c;
  Matrix killing;
  Matrix killing_inv;

  Rational operator()(int a, int b, int d) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  Matrix ad(int a) const;
};

/// Basis (h, e, f).
LiePreset preset_sl2();

/// Builds a preset from brackets with a < b (the rest by antisymmetry;
/// entries with a > b must agree). Throws InvalidLiePreset unless the
/// algebra is antisymmetric, satisfies Jacobi and has a nondegenerate
/// Killing form.
LiePreset make_lie(std::string name, int dim, const std::map<Index3, Rational>& brackets);

/// Element of the extension: one Lie vector per algebra index.
using ExtElement = std::vector<Vector>;

ExtElement extension_bracket(const StructureTensor& w, const LiePreset& lie, const ExtElement& x, const ExtElement& y);

struct JacobiResult {
  bool ok = true;
  /// Basis elements (i, a), 1-based, of the failing pair or triple.
  std::vector<std::pair<int, int>> witness;
  std::string detail;
};

/// Antisymmetry on basis pairs, then Jacobi on all basis triples u < v < t of
/// the n*m-dimensional extension.
JacobiResult jacobi_check(const StructureTensor& w, const LiePreset& lie);

/// Polynomial in the coordinates xi^i_a (variable index (i-1)*m + (a-1)).
class PoissonPolynomial {
 public:
  using Monomial = std::vector<int>;  // exponent per variable

  PoissonPolynomial() = default;
  explicit PoissonPolynomial(std::size_t vars) : vars_(vars) {}
  static PoissonPolynomial variable(std::size_t vars, std::size_t v);
  static PoissonPolynomial constant(std::size_t vars, const Rational& c);

  std::size_t vars() const { return vars_; }
  const std::map<Monomial, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int degree() const;

  void add_term(const Monomial& m, const Rational& c);
  PoissonPolynomial derivative(std::size_t v) const;

  friend PoissonPolynomial operator+(const PoissonPolynomial& a, const PoissonPolynomial& b);
  friend PoissonPolynomial operator-(const PoissonPolynomial& a, const PoissonPolynomial& b);
  friend PoissonPolynomial operator*(const PoissonPolynomial& a, const PoissonPolynomial& b);
  friend PoissonPolynomial operator*(const Rational& s, const PoissonPolynomial& a);
  friend bool operator==(const PoissonPolynomial& a, const PoissonPolynomial& b) = default;

  /// Variables rendered as x<i>_<a>.
  std::string str(int lie_dim) const;

 private:
  std::size_t vars_ = 0;
  std::map<Monomial, Rational> t_;
};

/// {xi^i_a, xi^j_b} = sum W^{ij}_k c_{ab}^d xi^k_d, extended by Leibniz.
PoissonPolynomial poisson_bracket(const StructureTensor& w, const LiePreset& lie, const PoissonPolynomial& f,
                                  const PoissonPolynomial& g);

/// sum_i p_i <y, xi^i> = sum_i p_i sum_a y^a xi^i_a.
PoissonPolynomial casimir_poly_linear(const LiePreset& lie, const LinearCasimir& p, const Vector& y);

/// 1/2 sum C_ij (K^-1)^{ab} xi^i_a xi^j_b.
PoissonPolynomial casimir_poly_quadratic(const LiePreset& lie, const SymmetricForm& c);

struct CasimirVerdict {
  bool ok = true;
  std::optional<std::pair<int, int>> failing;  // coordinate (i, a)
  PoissonPolynomial residual;
};

/// True iff the bracket of C with every coordinate function vanishes.
CasimirVerdict verify_casimir(const StructureTensor& w, const LiePreset& lie, const PoissonPolynomial& c);

}  // namespace lieext
