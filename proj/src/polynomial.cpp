#include "lieext/polynomial.hpp"

#include <ostream>
#include <sstream>

#include "lieext/errors.hpp"

namespace lieext {

Polynomial1::Polynomial1(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

void Polynomial1::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial1::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Polynomial1::operator()(const Matrix& m) const {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "polynomial of non-square matrix");
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  const Matrix id = Matrix::identity(n);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * m + id * (*it);
  return acc;
}

Polynomial1 Polynomial1::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
  return Polynomial1(std::move(d));
}

Polynomial1 Polynomial1::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> m(c_);
  const Rational lead = leading();
  for (auto& x : m) x /= lead;
  return Polynomial1(std::move(m));
}

Polynomial1 operator+(const Polynomial1& a, const Polynomial1& b) {
  std::vector<Rational> s(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = a.coefficient(k) + b.coefficient(k);
  return Polynomial1(std::move(s));
}

Polynomial1 operator-(const Polynomial1& a, const Polynomial1& b) {
  std::vector<Rational> s(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = a.coefficient(k) - b.coefficient(k);
  return Polynomial1(std::move(s));
}

Polynomial1 operator*(const Polynomial1& a, const Polynomial1& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> p(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
  return Polynomial1(std::move(p));
}

std::pair<Polynomial1, Polynomial1> Polynomial1::divmod(const Polynomial1& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::Singular, "polynomial division by zero");
  if (degree() < divisor.degree()) return {Polynomial1(), *this};
  std::vector<Rational> rem(c_);
  std::vector<Rational> quot(c_.size() - divisor.c_.size() + 1);
  const Rational lead = divisor.leading();
  const std::size_t dd = divisor.c_.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + dd] / lead;
    quot[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.c_[j];
  }
  return {Polynomial1(std::move(quot)), Polynomial1(std::move(rem))};
}

std::string Polynomial1::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != Rational(1)) os << mag.str();
    if (k > 0) {
      if (mag != Rational(1)) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

Polynomial1 gcd(Polynomial1 a, Polynomial1 b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial1 pow(const Polynomial1& p, unsigned e) {
  Polynomial1 acc = Polynomial1::constant(1);
  for (unsigned i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Polynomial1& p) { return os << p.str(); }

}  // namespace lieext
