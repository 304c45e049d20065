#include "lieext/oracle.hpp"

#include <numeric>
#include <sstream>

#include "lieext/errors.hpp"
#include "lieext/linalg.hpp"

namespace lieext {

Rational LiePreset::operator()(int a, int b, int d) const {
  auto it = c.find({a, b, d});
  return it == c.end() ? Rational(0) : it->second;
}

Vector LiePreset::bracket(const Vector& x, const Vector& y) const {
  const auto m = static_cast<std::size_t>(dim);
  if (x.size() != m || y.size() != m) throw Error(ErrorCode::DimensionMismatch, "Lie vector length");
  Vector out(m);
  for (const auto& [idx, v] : c) out[idx[2] - 1] += x[idx[0] - 1] * y[idx[1] - 1] * v;
  return out;
}

Matrix LiePreset::ad(int a) const {
  const auto m = static_cast<std::size_t>(dim);
  Matrix out(m, m);
  for (const auto& [idx, v] : c)
    if (idx[0] == a) out(idx[2] - 1, idx[1] - 1) = v;
  return out;
}

LiePreset make_lie(std::string name, int dim, const std::map<Index3, Rational>& brackets) {
  auto bad = [&name](const std::string& why) { return Error(ErrorCode::InvalidLiePreset, "Lie algebra '" + name + "': " + why); };
  if (dim < 1) throw bad("dimension must be positive");
  LiePreset lie;
  lie.name = std::move(name);
  lie.dim = dim;
  for (const auto& [idx, v] : brackets) {
    for (int x : idx)
      if (x < 1 || x > dim) throw bad("bracket index outside 1.." + std::to_string(dim));
    if (v.is_zero()) continue;
    if (idx[0] == idx[1]) throw bad("[x_a, x_a] must vanish (a=" + std::to_string(idx[0]) + ")");
    const Index3 mirror{idx[1], idx[0], idx[2]};
    auto it = brackets.find(mirror);
    if (it != brackets.end() && it->second != -v)
      throw bad("brackets (" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + ") and (" +
                std::to_string(idx[1]) + "," + std::to_string(idx[0]) + ") are not antisymmetric");
    lie.c[idx] = v;
    lie.c[mirror] = -v;
  }
  const auto m = static_cast<std::size_t>(dim);
  for (int a = 1; a <= dim; ++a)
    for (int b = a + 1; b <= dim; ++b)
      for (int t = b + 1; t <= dim; ++t) {
        auto e = [m](int i) { return unit_vector(m, static_cast<std::size_t>(i - 1)); };
        Vector j = add(add(lie.bracket(lie.bracket(e(a), e(b)), e(t)), lie.bracket(lie.bracket(e(b), e(t)), e(a))),
                       lie.bracket(lie.bracket(e(t), e(a)), e(b)));
        if (!is_zero(j))
          throw bad("Jacobi identity fails on (" + std::to_string(a) + "," + std::to_string(b) + "," +
                    std::to_string(t) + ")");
      }
  std::vector<Matrix> ads;
  for (int a = 1; a <= dim; ++a) ads.push_back(lie.ad(a));
  lie.killing = Matrix(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) lie.killing(a, b) = (ads[a] * ads[b]).trace();
  try {
    lie.killing_inv = invert(lie.killing);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular) throw;
    throw bad("Killing form is degenerate (not semisimple)");
  }
  // Invariance: K(ad_x y, z) + K(y, ad_x z) = 0, i.e. ad_x^T K + K ad_x = 0.
  for (const auto& ad : ads)
    if (!(ad.transpose() * lie.killing + lie.killing * ad).is_zero()) throw bad("Killing form is not invariant");
  return lie;
}

LiePreset preset_sl2() {
  return make_lie("sl2", 3, {{{1, 2, 2}, Rational(2)}, {{1, 3, 3}, Rational(-2)}, {{2, 3, 1}, Rational(1)}});
}

ExtElement extension_bracket(const StructureTensor& w, const LiePreset& lie, const ExtElement& x, const ExtElement& y) {
  const auto n = static_cast<std::size_t>(w.dim());
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::DimensionMismatch, "extension element length");
  ExtElement out(n, zero_vector(static_cast<std::size_t>(lie.dim)));
  for (const auto& [idx, v] : w.entries()) {
    const Vector b = lie.bracket(x[idx[0] - 1], y[idx[1] - 1]);
    out[idx[2] - 1] = add(out[idx[2] - 1], scale(b, v));
  }
  return out;
}

namespace {

using Sparse = std::vector<std::pair<std::size_t, Rational>>;

// Bracket table of the n*m basis elements (i, a) -> (i-1)*m + (a-1).
std::vector<std::vector<Sparse>> basis_brackets(const StructureTensor& w, const LiePreset& lie) {
  const auto n = static_cast<std::size_t>(w.dim());
  const auto m = static_cast<std::size_t>(lie.dim);
  const std::size_t big = n * m;
  std::vector<std::vector<Vector>> dense(big, std::vector<Vector>(big, zero_vector(big)));
  for (const auto& [wi, wv] : w.entries())
    for (const auto& [ci, cv] : lie.c) {
      const std::size_t u = (wi[0] - 1) * m + (ci[0] - 1);
      const std::size_t v = (wi[1] - 1) * m + (ci[1] - 1);
      dense[u][v][(wi[2] - 1) * m + (ci[2] - 1)] += wv * cv;
    }
  std::vector<std::vector<Sparse>> out(big, std::vector<Sparse>(big));
  for (std::size_t u = 0; u < big; ++u)
    for (std::size_t v = 0; v < big; ++v)
      for (std::size_t r = 0; r < big; ++r)
        if (!dense[u][v][r].is_zero()) out[u][v].emplace_back(r, dense[u][v][r]);
  return out;
}

std::pair<int, int> basis_label(std::size_t u, int m) {
  return {static_cast<int>(u) / m + 1, static_cast<int>(u) % m + 1};
}

}  // namespace

JacobiResult jacobi_check(const StructureTensor& w, const LiePreset& lie) {
  const auto table = basis_brackets(w, lie);
  const std::size_t big = table.size();
  const int m = lie.dim;
  JacobiResult res;
  for (std::size_t u = 0; u < big; ++u)
    for (std::size_t v = u; v < big; ++v) {
      Vector s(big);
      for (const auto& [r, x] : table[u][v]) s[r] += x;
      for (const auto& [r, x] : table[v][u]) s[r] += x;
      if (!is_zero(s)) {
        res.ok = false;
        res.witness = {basis_label(u, m), basis_label(v, m)};
        res.detail = "bracket is not antisymmetric";
        return res;
      }
    }
  auto nested = [&table](std::size_t a, std::size_t b, std::size_t c, Vector& acc) {
    for (const auto& [r, x] : table[a][b])
      for (const auto& [q, y] : table[r][c]) acc[q] += x * y;
  };
  for (std::size_t u = 0; u < big; ++u)
    for (std::size_t v = u + 1; v < big; ++v)
      for (std::size_t t = v + 1; t < big; ++t) {
        Vector acc(big);
        nested(u, v, t, acc);
        nested(v, t, u, acc);
        nested(t, u, v, acc);
        if (!is_zero(acc)) {
          res.ok = false;
          res.witness = {basis_label(u, m), basis_label(v, m), basis_label(t, m)};
          res.detail = "Jacobi identity fails";
          return res;
        }
      }
  return res;
}

PoissonPolynomial PoissonPolynomial::variable(std::size_t vars, std::size_t v) {
  PoissonPolynomial p(vars);
  Monomial mono(vars, 0);
  mono[v] = 1;
  p.add_term(mono, Rational(1));
  return p;
}

PoissonPolynomial PoissonPolynomial::constant(std::size_t vars, const Rational& c) {
  PoissonPolynomial p(vars);
  p.add_term(Monomial(vars, 0), c);
  return p;
}

int PoissonPolynomial::degree() const {
  int d = -1;
  for (const auto& [mono, c] : t_) d = std::max(d, std::accumulate(mono.begin(), mono.end(), 0));
  return d;
}

void PoissonPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != vars_) throw Error(ErrorCode::DimensionMismatch, "monomial length");
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

PoissonPolynomial PoissonPolynomial::derivative(std::size_t v) const {
  PoissonPolynomial out(vars_);
  for (const auto& [mono, c] : t_) {
    if (mono[v] == 0) continue;
    Monomial d = mono;
    --d[v];
    out.add_term(d, c * Rational(mono[v]));
  }
  return out;
}

PoissonPolynomial operator+(const PoissonPolynomial& a, const PoissonPolynomial& b) {
  if (a.vars_ != b.vars_) throw Error(ErrorCode::DimensionMismatch, "polynomial variable count");
  PoissonPolynomial out = a;
  for (const auto& [mono, c] : b.t_) out.add_term(mono, c);
  return out;
}

PoissonPolynomial operator-(const PoissonPolynomial& a, const PoissonPolynomial& b) {
  return a + Rational(-1) * b;
}

PoissonPolynomial operator*(const Rational& s, const PoissonPolynomial& a) {
  PoissonPolynomial out(a.vars_);
  for (const auto& [mono, c] : a.t_) out.add_term(mono, s * c);
  return out;
}

PoissonPolynomial operator*(const PoissonPolynomial& a, const PoissonPolynomial& b) {
  if (a.vars_ != b.vars_) throw Error(ErrorCode::DimensionMismatch, "polynomial variable count");
  PoissonPolynomial out(a.vars_);
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      PoissonPolynomial::Monomial mono(a.vars_);
      for (std::size_t v = 0; v < a.vars_; ++v) mono[v] = ma[v] + mb[v];
      out.add_term(mono, ca * cb);
    }
  return out;
}

std::string PoissonPolynomial::str(int lie_dim) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [mono, c] = *it;
    os << (first ? "" : " + ") << c.str();
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      os << "*x" << v / static_cast<std::size_t>(lie_dim) + 1 << "_" << v % static_cast<std::size_t>(lie_dim) + 1;
      if (mono[v] > 1) os << "^" << mono[v];
    }
    first = false;
  }
  return os.str();
}

namespace {

// {xi^i_a, xi^j_b} for all variable pairs.
std::vector<std::vector<PoissonPolynomial>> coordinate_brackets(const StructureTensor& w, const LiePreset& lie) {
  const auto m = static_cast<std::size_t>(lie.dim);
  const std::size_t vars = static_cast<std::size_t>(w.dim()) * m;
  std::vector<std::vector<PoissonPolynomial>> out(vars, std::vector<PoissonPolynomial>(vars, PoissonPolynomial(vars)));
  for (const auto& [wi, wv] : w.entries())
    for (const auto& [ci, cv] : lie.c) {
      const std::size_t u = (wi[0] - 1) * m + (ci[0] - 1);
      const std::size_t v = (wi[1] - 1) * m + (ci[1] - 1);
      out[u][v] = out[u][v] + (wv * cv) * PoissonPolynomial::variable(vars, (wi[2] - 1) * m + (ci[2] - 1));
    }
  return out;
}

void require_vars(const StructureTensor& w, const LiePreset& lie, const PoissonPolynomial& p) {
  if (p.vars() != static_cast<std::size_t>(w.dim() * lie.dim))
    throw Error(ErrorCode::DimensionMismatch, "polynomial variable count differs from n*m");
}

}  // namespace

PoissonPolynomial poisson_bracket(const StructureTensor& w, const LiePreset& lie, const PoissonPolynomial& f,
                                  const PoissonPolynomial& g) {
  require_vars(w, lie, f);
  require_vars(w, lie, g);
  const std::size_t vars = f.vars();
  const auto coord = coordinate_brackets(w, lie);
  std::vector<PoissonPolynomial> df, dg;
  for (std::size_t v = 0; v < vars; ++v) {
    df.push_back(f.derivative(v));
    dg.push_back(g.derivative(v));
  }
  PoissonPolynomial out(vars);
  for (std::size_t u = 0; u < vars; ++u) {
    if (df[u].is_zero()) continue;
    for (std::size_t v = 0; v < vars; ++v) {
      if (dg[v].is_zero() || coord[u][v].is_zero()) continue;
      out = out + df[u] * dg[v] * coord[u][v];
    }
  }
  return out;
}

PoissonPolynomial casimir_poly_linear(const LiePreset& lie, const LinearCasimir& p, const Vector& y) {
  const auto m = static_cast<std::size_t>(lie.dim);
  if (y.size() != m) throw Error(ErrorCode::DimensionMismatch, "Lie vector length");
  const std::size_t vars = p.p.coords.size() * m;
  PoissonPolynomial out(vars);
  for (std::size_t i = 0; i < p.p.coords.size(); ++i)
    for (std::size_t a = 0; a < m; ++a) {
      PoissonPolynomial::Monomial mono(vars, 0);
      mono[i * m + a] = 1;
      out.add_term(mono, p.p.coords[i] * y[a]);
    }
  return out;
}

PoissonPolynomial casimir_poly_quadratic(const LiePreset& lie, const SymmetricForm& c) {
  const auto m = static_cast<std::size_t>(lie.dim);
  const std::size_t n = c.c.rows();
  if (!c.c.is_symmetric()) throw Error(ErrorCode::DimensionMismatch, "quadratic Casimir form must be symmetric");
  const std::size_t vars = n * m;
  const Rational half(1, 2);
  PoissonPolynomial out(vars);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (c.c(i, j).is_zero()) continue;
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
          if (lie.killing_inv(a, b).is_zero()) continue;
          PoissonPolynomial::Monomial mono(vars, 0);
          ++mono[i * m + a];
          ++mono[j * m + b];
          out.add_term(mono, half * c.c(i, j) * lie.killing_inv(a, b));
        }
    }
  return out;
}

CasimirVerdict verify_casimir(const StructureTensor& w, const LiePreset& lie, const PoissonPolynomial& c) {
  require_vars(w, lie, c);
  const std::size_t vars = c.vars();
  const auto coord = coordinate_brackets(w, lie);
  std::vector<PoissonPolynomial> dc;
  for (std::size_t u = 0; u < vars; ++u) dc.push_back(c.derivative(u));
  CasimirVerdict out;
  for (std::size_t v = 0; v < vars; ++v) {
    PoissonPolynomial b(vars);
    for (std::size_t u = 0; u < vars; ++u)
      if (!dc[u].is_zero() && !coord[u][v].is_zero()) b = b + dc[u] * coord[u][v];
    if (!b.is_zero()) {
      out.ok = false;
      out.failing = basis_label(v, lie.dim);
      out.residual = std::move(b);
      return out;
    }
  }
  return out;
}

}  // namespace lieext
