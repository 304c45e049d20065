#include "lieext/linalg.hpp"

#include <algorithm>
#include <set>

#include "lieext/errors.hpp"

namespace lieext {

namespace {

using IntRow = std::vector<mpz_class>;

// Scale each row by the lcm of its denominators so elimination runs over Z.
std::vector<IntRow> integer_rows(const Matrix& m) {
  std::vector<IntRow> rows(m.rows(), IntRow(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) l = lcm(l, m(r, c).denominator());
    for (std::size_t c = 0; c < m.cols(); ++c)
      rows[r][c] = m(r, c).numerator() * (l / m(r, c).denominator());
  }
  return rows;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  auto a = integer_rows(m);

  // Bareiss forward pass. Every intermediate entry is a minor of the input,
  // so the division by the previous pivot is exact.
  mpz_class prev = 1;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }

  Matrix out(nr, nc);
  const std::size_t rk = pivots.size();
  for (std::size_t i = 0; i < rk; ++i) {
    const mpz_class& piv = a[i][pivots[i]];
    for (std::size_t j = 0; j < nc; ++j)
      if (a[i][j] != 0) out(i, j) = Rational(a[i][j], piv);
  }
  // Back substitution clears the entries above each pivot.
  for (std::size_t t = rk; t-- > 0;) {
    const std::size_t pc = pivots[t];
    for (std::size_t i = 0; i < t; ++i) {
      Rational f = out(i, pc);
      if (f.is_zero()) continue;
      for (std::size_t j = pc; j < nc; ++j)
        if (!out(t, j).is_zero()) out(i, j) -= f * out(t, j);
    }
  }
  return {std::move(out), std::move(pivots), rk};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix null_space(const Matrix& m) {
  const auto res = rref(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto p : res.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    Vector v(nc);
    v[f] = 1;
    for (std::size_t t = 0; t < res.rank; ++t) v[res.pivots[t]] = -res.reduced(t, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(nc, basis);
}

Matrix invert(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  const auto res = rref(m.hstack(Matrix::identity(n)));
  if (res.rank < n || (n > 0 && res.pivots[n - 1] != n - 1))
    throw Error(ErrorCode::Singular, "matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = res.reduced(i, n + j);
  return inv;
}

Polynomial1 char_poly(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  const Matrix id = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + id * c[n - k + 1];
    c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
  }
  return Polynomial1(std::move(c));
}

namespace {

int sign_changes(const std::vector<Polynomial1>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = p(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational floor_of(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
  return Rational(q);
}

Rational ceil_of(const Rational& x) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
  return Rational(q);
}

// Rational roots of a square-free polynomial with nonzero constant term.
// A rational root u/v in lowest terms of a primitive integer polynomial has
// v | lead, so lead * root is an integer; real roots are isolated with a
// Sturm chain until each interval holds at most one such candidate.
std::set<Rational> squarefree_rational_roots(const Polynomial1& s) {
  std::set<Rational> found;
  if (s.degree() < 1) return found;
  mpz_class l = 1;
  for (const auto& c : s.coefficients()) l = lcm(l, c.denominator());
  std::vector<Rational> ints;
  for (const auto& c : s.coefficients()) ints.push_back(c * Rational(l));
  const Polynomial1 p(ints);
  const Rational lead = abs(p.leading());
  if (p.degree() == 1) {
    found.insert(-p.coefficient(0) / p.coefficient(1));
    return found;
  }

  std::vector<Polynomial1> chain{p, p.derivative()};
  while (true) {
    auto r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(Polynomial1::constant(-1) * r);
  }

  Rational bound = 1;
  for (int k = 0; k < p.degree(); ++k) bound = std::max(bound, abs(p.coefficient(k) / p.leading()));
  bound = ceil_of(bound) + Rational(1);

  const Rational half(1, 2);
  struct Interval { Rational lo, hi; int vlo, vhi; };
  std::vector<Interval> todo{{-bound, bound, sign_changes(chain, -bound), sign_changes(chain, bound)}};
  while (!todo.empty()) {
    Interval iv = todo.back();
    todo.pop_back();
    if (iv.vlo - iv.vhi <= 0) continue;
    if ((iv.hi - iv.lo) * lead < half) {
      for (Rational k = ceil_of(iv.lo * lead); k <= floor_of(iv.hi * lead); k += Rational(1)) {
        Rational cand = k / lead;
        if (p(cand).is_zero()) found.insert(cand);
      }
      continue;
    }
    Rational mid = (iv.lo + iv.hi) * half;
    if (p(mid).is_zero()) found.insert(mid);
    int vm = sign_changes(chain, mid);
    todo.push_back({iv.lo, mid, iv.vlo, vm});
    todo.push_back({mid, iv.hi, vm, iv.vhi});
  }
  return found;
}

}  // namespace

RootFactorization rational_roots(const Polynomial1& p) {
  if (p.is_zero()) throw Error(ErrorCode::DimensionMismatch, "rational_roots of the zero polynomial");
  RootFactorization out;
  Polynomial1 rem = p;
  int zero_mult = 0;
  while (rem.degree() > 0 && rem.coefficient(0).is_zero()) {
    std::vector<Rational> shifted(rem.coefficients().begin() + 1, rem.coefficients().end());
    rem = Polynomial1(std::move(shifted));
    ++zero_mult;
  }
  std::set<Rational> roots;
  if (rem.degree() > 0) {
    Polynomial1 sqfree = rem.divmod(gcd(rem, rem.derivative())).first;
    roots = squarefree_rational_roots(sqfree);
  }
  if (zero_mult > 0) roots.insert(Rational(0));
  for (const auto& r : roots) {
    int mult = 0;
    if (r.is_zero()) {
      mult = zero_mult;
    } else {
      const auto f = Polynomial1::linear_factor(r);
      while (true) {
        auto [q, rr] = rem.divmod(f);
        if (!rr.is_zero()) break;
        rem = std::move(q);
        ++mult;
      }
    }
    out.roots.emplace_back(r, mult);
  }
  out.remainder = std::move(rem);
  return out;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw Error(ErrorCode::DimensionMismatch, "solve: right-hand side length");
  Matrix aug = a.hstack(Matrix::from_columns(a.rows(), {b}));
  const auto res = rref(aug);
  if (!res.pivots.empty() && res.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t t = 0; t < res.rank; ++t) x[res.pivots[t]] = res.reduced(t, a.cols());
  return x;
}

Matrix column_space(const Matrix& m) {
  const auto res = rref(m);
  std::vector<Vector> cols;
  for (auto p : res.pivots) cols.push_back(m.column(p));
  return Matrix::from_columns(m.rows(), cols);
}

Matrix canonical_basis(const Matrix& m) {
  const auto res = rref(m.transpose());
  std::vector<Vector> cols;
  for (std::size_t t = 0; t < res.rank; ++t) {
    auto r = res.reduced.row(t);
    cols.emplace_back(r.begin(), r.end());
  }
  return Matrix::from_columns(m.rows(), cols);
}

bool contains_span(const Matrix& basis, const Matrix& a) {
  if (a.cols() == 0) return true;
  if (basis.cols() == 0) return a.is_zero();
  return rank(basis) == rank(basis.hstack(a));
}

bool in_span(const Matrix& basis, const Vector& v) {
  return contains_span(basis, Matrix::from_columns(v.size(), {v}));
}

bool same_span(const Matrix& a, const Matrix& b) {
  return contains_span(a, b) && contains_span(b, a);
}

Matrix intersect_spans(const Matrix& a, const Matrix& b) {
  if (a.cols() == 0 || b.cols() == 0) return Matrix(a.rows(), 0);
  Matrix joined = a.hstack(b * Rational(-1));
  Matrix ker = null_space(joined);
  std::vector<Vector> vs;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Vector k = ker.column(c);
    k.resize(a.cols());
    vs.push_back(a * k);
  }
  return column_space(Matrix::from_columns(a.rows(), vs));
}

Matrix complement_in(const Matrix& sub, const Matrix& whole) {
  Matrix current = sub;
  std::size_t r = sub.cols() == 0 ? 0 : rank(sub);
  std::vector<Vector> added;
  for (std::size_t c = 0; c < whole.cols(); ++c) {
    Vector v = whole.column(c);
    Matrix trial = current.cols() == 0 ? Matrix::from_columns(v.size(), {v})
                                       : current.hstack(Matrix::from_columns(v.size(), {v}));
    std::size_t rt = rank(trial);
    if (rt > r) {
      current = std::move(trial);
      r = rt;
      added.push_back(std::move(v));
    }
  }
  return Matrix::from_columns(whole.rows(), added);
}

Matrix matrix_power(const Matrix& m, unsigned e) {
  Matrix acc = Matrix::identity(m.rows());
  for (unsigned i = 0; i < e; ++i) acc = acc * m;
  return acc;
}

}  // namespace lieext
