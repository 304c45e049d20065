#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lieext/matrix.hpp"
#include "lieext/rational.hpp"

namespace lieext {

/// Univariate polynomial over the rationals, coefficients in ascending degree.
/// Trailing zero coefficients are never stored; the zero polynomial has no
/// coefficients and degree -1.
class Polynomial1 {
 public:
  Polynomial1() = default;
  explicit Polynomial1(std::vector<Rational> ascending);
  static Polynomial1 constant(const Rational& c) { return Polynomial1({c}); }
  /// The monic linear factor (x - root).
  static Polynomial1 linear_factor(const Rational& root) { return Polynomial1({-root, 1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const;
  /// Evaluates at a square matrix (Horner).
  Matrix operator()(const Matrix& m) const;

  Polynomial1 derivative() const;
  Polynomial1 monic() const;

  friend Polynomial1 operator+(const Polynomial1& a, const Polynomial1& b);
  friend Polynomial1 operator-(const Polynomial1& a, const Polynomial1& b);
  friend Polynomial1 operator*(const Polynomial1& a, const Polynomial1& b);
  friend bool operator==(const Polynomial1& a, const Polynomial1& b) = default;

  /// Quotient and remainder; throws Error(Singular) on division by zero.
  std::pair<Polynomial1, Polynomial1> divmod(const Polynomial1& divisor) const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero if both inputs are zero).
Polynomial1 gcd(Polynomial1 a, Polynomial1 b);
Polynomial1 pow(const Polynomial1& p, unsigned e);

std::ostream& operator<<(std::ostream& os, const Polynomial1& p);

}  // namespace lieext
