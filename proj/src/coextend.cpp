#include "lieext/coextend.hpp"

#include "lieext/algebra.hpp"
#include "lieext/errors.hpp"
#include "lieext/linalg.hpp"

namespace lieext {

namespace {

// W in labels 0..n.
Rational wl(const ReductionFrame& f, int a, int b, int c) { return f.labelled()(a + 1, b + 1, c + 1); }

std::string pos_str(int p) { return "e^" + std::to_string(p); }

}  // namespace

ReductionFrame::ReductionFrame(StructureTensor w, int unity_pos, int pseudo_zero_pos)
    : w_(std::move(w)), unity_(unity_pos), zero_(pseudo_zero_pos) {
  const int dim = w_.dim();
  if (dim < 2) throw Error(ErrorCode::Inconsistent, "a frame needs dimension at least 2");
  if (unity_ < 1 || unity_ > dim || zero_ < 1 || zero_ > dim || unity_ == zero_)
    throw Error(ErrorCode::Inconsistent, "frame positions must be distinct and within 1.." + std::to_string(dim));
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j <= dim; ++j) {
      if (w_(unity_, i, j) != Rational(i == j ? 1 : 0))
        throw Error(ErrorCode::Inconsistent, pos_str(unity_) + " is not a unity");
      if (w_(zero_, i, j) != Rational(i == unity_ && j == zero_ ? 1 : 0))
        throw Error(ErrorCode::Inconsistent, pos_str(zero_) + " is not a pseudo-zero");
    }
  pos_.push_back(unity_);
  for (int p = 1; p <= dim; ++p)
    if (p != unity_ && p != zero_) pos_.push_back(p);
  pos_.push_back(zero_);
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j <= dim; ++j)
      if (i != unity_ && i != zero_ && j != unity_ && j != zero_ && !w_(i, j, unity_).is_zero())
        throw Error(ErrorCode::Inconsistent, "product " + pos_str(i) + " * " + pos_str(j) + " has a unity component");

  std::vector<int> label_of(static_cast<std::size_t>(dim) + 1);
  for (int l = 0; l < dim; ++l) label_of[static_cast<std::size_t>(pos_[l])] = l;
  lab_ = StructureTensor(dim, w_.name());
  for (const auto& [idx, v] : w_.entries())
    lab_.set(label_of[idx[0]] + 1, label_of[idx[1]] + 1, label_of[idx[2]] + 1, v);
}

Vector ReductionFrame::to_labels(const Vector& v) const {
  if (v.size() != pos_.size()) throw Error(ErrorCode::DimensionMismatch, "vector length differs from frame dimension");
  Vector out(v.size());
  for (std::size_t l = 0; l < pos_.size(); ++l) out[l] = v[pos_[l] - 1];
  return out;
}

Vector ReductionFrame::from_labels(const Vector& v) const {
  if (v.size() != pos_.size()) throw Error(ErrorCode::DimensionMismatch, "vector length differs from frame dimension");
  Vector out(v.size());
  for (std::size_t l = 0; l < pos_.size(); ++l) out[pos_[l] - 1] = v[l];
  return out;
}

Matrix ReductionFrame::to_labels(const Matrix& c) const {
  const std::size_t d = pos_.size();
  if (c.rows() != d || c.cols() != d) throw Error(ErrorCode::DimensionMismatch, "form size differs from frame dimension");
  Matrix out(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) out(a, b) = c(pos_[a] - 1, pos_[b] - 1);
  return out;
}

Matrix ReductionFrame::from_labels(const Matrix& c) const {
  const std::size_t d = pos_.size();
  if (c.rows() != d || c.cols() != d) throw Error(ErrorCode::DimensionMismatch, "form size differs from frame dimension");
  Matrix out(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) out(pos_[a] - 1, pos_[b] - 1) = c(a, b);
  return out;
}

std::optional<ReductionFrame> detect_frame(const StructureTensor& w) {
  const int dim = w.dim();
  if (dim < 2) return std::nullopt;
  for (int u = 1; u <= dim; ++u) {
    bool unity = true;
    for (int i = 1; i <= dim && unity; ++i)
      for (int j = 1; j <= dim && unity; ++j) unity = w(u, i, j) == Rational(i == j ? 1 : 0);
    if (!unity) continue;
    for (int z = dim; z >= 1; --z) {
      if (z == u) continue;
      try {
        return ReductionFrame(w, u, z);
      } catch (const Error&) {
      }
    }
    return std::nullopt;  // the unity is unique
  }
  return std::nullopt;
}

StructureTensor reduced_algebra(const ReductionFrame& f) {
  const int n = f.n();
  StructureTensor out(n - 1, f.tensor().name().empty() ? std::string() : "reduced(" + f.tensor().name() + ")");
  for (const auto& [idx, v] : f.labelled().entries()) {
    const int a = idx[0] - 1, b = idx[1] - 1, c = idx[2] - 1;
    if (a >= 1 && a < n && b >= 1 && b < n && c >= 1 && c < n) out.set(a, b, c, v);
  }
  return out;
}

Coextension build_coextension(const ReductionFrame& f) {
  const int n = f.n();
  const auto m = static_cast<std::size_t>(n - 1);
  Matrix g(m, m);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) g(i - 1, j - 1) = wl(f, i, j, n);
  Coextension out;
  try {
    out.gbar = invert(g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular) throw;
    throw Error(ErrorCode::DegenerateCase, "the middle block of W_n (pseudo-zero component) is singular");
  }
  out.abar = StructureTensor(n - 1, "coextension");
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      for (int k = 1; k < n; ++k) {
        Rational a, b;
        for (int s = 1; s < n; ++s) {
          a += out.gbar(i - 1, s - 1) * wl(f, s, k, j);
          b += out.gbar(j - 1, s - 1) * wl(f, s, k, i);
        }
        if (a != b)
          throw Error(ErrorCode::Inconsistent, "coextension tensor is not symmetric in its lower indices");
        out.abar.set(i, j, k, a);
      }
  if (!validate(out.abar).valid())
    throw Error(ErrorCode::Inconsistent, "coextension product is not commutative and associative");
  return out;
}

DualElement coadjoint(const StructureTensor& w, const AlgebraElement& x, const DualElement& xi) {
  const auto n = static_cast<std::size_t>(w.dim());
  if (x.coords.size() != n || xi.coords.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "coadjoint: length differs from algebra dimension");
  Vector out(n);
  for (const auto& [idx, v] : w.entries()) out[idx[1] - 1] += x.coords[idx[0] - 1] * v * xi.coords[idx[2] - 1];
  return {std::move(out)};
}

DualElement psi(const ReductionFrame& f, const AlgebraElement& x) {
  const auto d = static_cast<std::size_t>(f.tensor().dim());
  return coadjoint(f.tensor(), x, {unit_vector(d, static_cast<std::size_t>(f.pseudo_zero_pos() - 1))});
}

AlgebraElement psi_inverse(const ReductionFrame& f, const DualElement& xi) {
  const auto d = static_cast<std::size_t>(f.tensor().dim());
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < d; ++i) cols.push_back(psi(f, {unit_vector(d, i)}).coords);
  try {
    return {invert(Matrix::from_columns(d, cols)) * xi.coords};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular) throw;
    throw Error(ErrorCode::DegenerateCase, "psi is not invertible");
  }
}

DualElement dual_product(const ReductionFrame& f, const DualElement& x, const DualElement& y) {
  const int n = f.n();
  const Coextension co = build_coextension(f);
  const Vector xi = f.to_labels(x.coords);
  const Vector eta = f.to_labels(y.coords);
  Vector out(xi.size());
  out[0] = xi[n] * eta[0] + eta[n] * xi[0];
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) out[0] += co.gbar(i - 1, j - 1) * xi[i] * eta[j];
  for (int k = 1; k < n; ++k) {
    out[k] = xi[n] * eta[k] + eta[n] * xi[k];
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) out[k] += xi[i] * eta[j] * co.abar(i, j, k);
  }
  out[n] = xi[n] * eta[n];
  return {f.from_labels(out)};
}

DualElement dual_product_via_psi(const ReductionFrame& f, const DualElement& x, const DualElement& y) {
  return psi(f, multiply(f.tensor(), psi_inverse(f, x), psi_inverse(f, y)));
}

namespace {

// e_n-row invariance equations for a form C given in labels, one entry per
// (s, i) with 1 <= s, i <= n-1.
Vector boundary_residuals(const ReductionFrame& f, const Matrix& c) {
  const int n = f.n();
  Vector out;
  for (int s = 1; s < n; ++s)
    for (int i = 1; i < n; ++i) {
      Rational r = s == i ? c(0, n) : Rational(0);
      for (int m = 1; m < n; ++m) r += wl(f, s, m, i) * c(m, n) - wl(f, s, m, n) * c(m, i);
      out.push_back(std::move(r));
    }
  return out;
}

void require_casimir(const StructureTensor& w, const Matrix& c, const std::string& where) {
  if (!is_quadratic_casimir(w, c))
    throw Error(ErrorCode::Inconsistent, where + ": constructed form fails the quadratic Casimir condition");
}

}  // namespace

std::vector<SymmetricForm> casimir_from_boundary(const ReductionFrame& f) {
  const int n = f.n();
  const auto d = static_cast<std::size_t>(n + 1);
  const Coextension co = build_coextension(f);
  // basis[k]: the form (in labels) produced by C_{nk} = 1, other boundary values 0.
  std::vector<Matrix> basis;
  for (int k = 0; k <= n; ++k) {
    Matrix c(d, d);
    c(n, k) = c(k, n) = 1;
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) c(i, j) = k == 0 ? co.gbar(i - 1, j - 1) : (k < n ? co.abar(i, j, k) : Rational(0));
    basis.push_back(std::move(c));
  }
  std::vector<Vector> cols;
  for (const auto& c : basis) cols.push_back(boundary_residuals(f, c));
  const auto rows = static_cast<std::size_t>((n - 1) * (n - 1));
  const Matrix ker = null_space(Matrix::from_columns(rows, cols));

  std::vector<SymmetricForm> out;
  for (std::size_t t = 0; t < ker.cols(); ++t) {
    Matrix c(d, d);
    for (std::size_t k = 0; k < d; ++k)
      if (!ker(k, t).is_zero()) c += basis[k] * ker(k, t);
    c = f.from_labels(c);
    require_casimir(f.tensor(), c, "casimir_from_boundary");
    out.push_back({std::move(c)});
  }
  return out;
}

std::vector<SymmetricForm> boundary_row_solutions(const ReductionFrame& f) {
  const int n = f.n();
  const auto d = static_cast<std::size_t>(n + 1);
  const std::size_t unknowns = d * (d + 1) / 2;
  std::vector<Vector> cols;
  for (std::size_t u = 0; u < unknowns; ++u) {
    Vector e(unknowns);
    e[u] = 1;
    const Matrix c = unpack_symmetric(e, d);
    Vector col = boundary_residuals(f, c);
    for (int j = 0; j < n; ++j) col.push_back(c(0, j));
    cols.push_back(std::move(col));
  }
  const auto rows = static_cast<std::size_t>((n - 1) * (n - 1) + n);
  const Matrix ker = null_space(Matrix::from_columns(rows, cols));
  std::vector<SymmetricForm> out;
  for (std::size_t t = 0; t < ker.cols(); ++t) out.push_back({f.from_labels(unpack_symmetric(ker.column(t), d))});
  return out;
}

SymmetricForm reduce_casimir(const ReductionFrame& f, const SymmetricForm& c) {
  if (!is_quadratic_casimir(f.tensor(), c.c))
    throw Error(ErrorCode::NotACasimir, "form is not a quadratic Casimir of the full algebra");
  const int n = f.n();
  const Matrix cl = f.to_labels(c.c);
  const auto m = static_cast<std::size_t>(n - 1);
  Matrix out(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = cl(i + 1, j + 1);
  require_casimir(reduced_algebra(f), out, "reduce_casimir");
  return {std::move(out)};
}

bool CasimirLift::contains(const SymmetricForm& c) const {
  const std::size_t d = particular.c.rows();
  if (c.c.rows() != d) return false;
  const Vector diff = pack_symmetric(c.c - particular.c);
  if (is_zero(diff)) return true;
  return in_span(forms_as_columns(homogeneous, d), diff);
}

CasimirLift lift_casimir(const ReductionFrame& f, const SymmetricForm& cbar, const Rational& c_nn) {
  const int n = f.n();
  const auto m = static_cast<std::size_t>(n - 1);
  const auto d = static_cast<std::size_t>(n + 1);
  if (cbar.c.rows() != m || cbar.c.cols() != m)
    throw Error(ErrorCode::DimensionMismatch, "reduced form must be " + std::to_string(m) + "x" + std::to_string(m));
  if (!is_quadratic_casimir(reduced_algebra(f), cbar.c))
    throw Error(ErrorCode::NotACasimir, "form is not a quadratic Casimir of the reduced algebra");

  // Unknowns X_0..X_{n-1}; rows (s, i).
  Matrix sys(m * m, static_cast<std::size_t>(n));
  Vector rhs(m * m);
  for (int s = 1; s < n; ++s)
    for (int i = 1; i < n; ++i) {
      const std::size_t row = static_cast<std::size_t>((s - 1) * (n - 1) + (i - 1));
      if (s == i) sys(row, 0) = 1;
      for (int mm = 1; mm < n; ++mm) {
        sys(row, static_cast<std::size_t>(mm)) += wl(f, s, mm, i);
        rhs[row] += wl(f, s, mm, n) * cbar.c(mm - 1, i - 1);
      }
    }
  const auto x = solve(sys, rhs);
  if (!x) {
    for (std::size_t r = 1; r <= m * m; ++r) {
      Matrix head(r, sys.cols());
      Vector hr(rhs.begin(), rhs.begin() + static_cast<long>(r));
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < sys.cols(); ++b) head(a, b) = sys(a, b);
      if (!solve(head, hr)) {
        const int s = static_cast<int>((r - 1) / m) + 1, i = static_cast<int>((r - 1) % m) + 1;
        throw Error(ErrorCode::Inconsistent, "lift system has no solution: equation (s=" + std::to_string(s) +
                                                 ", i=" + std::to_string(i) + ") contradicts the preceding ones");
      }
    }
    throw Error(ErrorCode::Inconsistent, "lift system has no solution");
  }

  auto assemble = [&](const Vector& xs, const Matrix& inner, const Rational& nn) {
    Matrix c(d, d);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) c(i + 1, j + 1) = inner(i, j);
    for (int j = 0; j < n; ++j) c(n, j) = c(j, n) = xs[j];
    c(n, n) = nn;
    return f.from_labels(c);
  };
  CasimirLift out;
  out.particular = {assemble(*x, cbar.c, c_nn)};
  require_casimir(f.tensor(), out.particular.c, "lift_casimir");
  const Matrix ker = null_space(sys);
  for (std::size_t t = 0; t < ker.cols(); ++t) {
    out.homogeneous.push_back({assemble(ker.column(t), Matrix(m, m), Rational(0))});
    require_casimir(f.tensor(), out.homogeneous.back().c, "lift_casimir");
  }
  return out;
}

StructureTensor solvable_coextension(const ReductionFrame& f) {
  const int n = f.n();
  const Coextension co = build_coextension(f);
  StructureTensor out(n, "solvable-coextension");
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      out.set(i + 1, j + 1, 1, co.gbar(i - 1, j - 1));
      for (int k = 1; k < n; ++k) out.set(i + 1, j + 1, k + 1, co.abar(i, j, k));
    }
  if (!validate(out).valid())
    throw Error(ErrorCode::Inconsistent, "solvable coextension is not commutative and associative");
  return out;
}

}  // namespace lieext
