#include "lieext/algebra.hpp"

#include <cassert>

#include "lieext/errors.hpp"
#include "lieext/linalg.hpp"

namespace lieext {

namespace {

void require_dim(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::DimensionMismatch, what);
}

}  // namespace

Matrix structure_matrix(const StructureTensor& w, int i) {
  if (i < 1 || i > w.dim())
    throw Error(ErrorCode::IndexOutOfRange, "structure matrix index " + std::to_string(i) +
                                                " outside 1.." + std::to_string(w.dim()));
  const auto n = static_cast<std::size_t>(w.dim());
  Matrix m(n, n);
  auto it = w.entries().lower_bound({i, 1, 1});
  for (; it != w.entries().end() && it->first[0] == i; ++it)
    m(static_cast<std::size_t>(it->first[2] - 1), static_cast<std::size_t>(it->first[1] - 1)) = it->second;
  return m;
}

std::vector<Matrix> structure_matrices(const StructureTensor& w) {
  std::vector<Matrix> out;
  for (int i = 1; i <= w.dim(); ++i) out.push_back(structure_matrix(w, i));
  return out;
}

ValidationReport validate(const StructureTensor& w) {
  ValidationReport report;
  const int n = w.dim();
  for (int i = 1; i <= n && report.symmetric; ++i)
    for (int j = i + 1; j <= n && report.symmetric; ++j)
      for (int k = 1; k <= n; ++k) {
        Rational a = w(i, j, k), b = w(j, i, k);
        if (a != b) {
          report.symmetric = false;
          report.first_violation = Violation{Violation::Kind::Symmetry, {i, j, k}, a, b};
          break;
        }
      }

  // products[s][q] = M_s M_q; its (i,p) entry is sum_k W^{sk}_i W^{qp}_k.
  const auto mats = structure_matrices(w);
  std::vector<std::vector<Matrix>> products(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s)
    for (int q = 0; q < n; ++q) products[s].push_back(mats[s] * mats[q]);
  for (int i = 1; i <= n && report.commuting; ++i)
    for (int s = 1; s <= n && report.commuting; ++s)
      for (int q = s + 1; q <= n && report.commuting; ++q)
        for (int p = 1; p <= n; ++p) {
          const Rational& lhs = products[s - 1][q - 1](i - 1, p - 1);
          const Rational& rhs = products[q - 1][s - 1](i - 1, p - 1);
          if (lhs != rhs) {
            report.commuting = false;
            if (!report.first_violation)
              report.first_violation = Violation{Violation::Kind::Commutation, {i, s, q, p}, lhs, rhs};
            break;
          }
        }
  return report;
}

AlgebraElement multiply(const StructureTensor& w, const AlgebraElement& a, const AlgebraElement& b) {
  const auto n = static_cast<std::size_t>(w.dim());
  require_dim(a.coords.size() == n && b.coords.size() == n, "multiply: element length differs from tensor dimension");
  Vector out(n);
  for (const auto& [idx, v] : w.entries()) {
    const Rational& x = a.coords[idx[0] - 1];
    const Rational& y = b.coords[idx[1] - 1];
    if (x.is_zero() || y.is_zero()) continue;
    out[idx[2] - 1] += v * x * y;
  }
  return {std::move(out)};
}

StructureTensor change_basis(const StructureTensor& w, const BasisChange& bc) {
  const auto n = static_cast<std::size_t>(w.dim());
  require_dim(bc.dim() == n, "change_basis: basis change dimension differs from tensor");
  const Matrix& a = bc.a();
  const Matrix& b = bc.a_inv();
  // Dense accumulation; tensors are small.
  std::vector<Rational> acc(n * n * n);
  for (const auto& [idx, v] : w.entries()) {
    const std::size_t i = idx[0] - 1, j = idx[1] - 1, k = idx[2] - 1;
    for (std::size_t ip = 0; ip < n; ++ip) {
      if (a(ip, i).is_zero()) continue;
      Rational vi = v * a(ip, i);
      for (std::size_t jp = 0; jp < n; ++jp) {
        if (a(jp, j).is_zero()) continue;
        Rational vij = vi * a(jp, j);
        for (std::size_t kp = 0; kp < n; ++kp)
          if (!b(k, kp).is_zero()) acc[(ip * n + jp) * n + kp] += vij * b(k, kp);
      }
    }
  }
  StructureTensor out(w.dim(), w.name());
  for (std::size_t ip = 0; ip < n; ++ip)
    for (std::size_t jp = 0; jp < n; ++jp)
      for (std::size_t kp = 0; kp < n; ++kp) {
        const Rational& v = acc[(ip * n + jp) * n + kp];
        if (!v.is_zero())
          out.set(static_cast<int>(ip + 1), static_cast<int>(jp + 1), static_cast<int>(kp + 1), v);
      }
#ifndef NDEBUG
  assert(structure_matrices(out) == transform_structure_matrices(structure_matrices(w), bc));
#endif
  return out;
}

std::vector<Matrix> transform_structure_matrices(const std::vector<Matrix>& mats, const BasisChange& bc) {
  const std::size_t n = mats.size();
  require_dim(bc.dim() == n, "transform_structure_matrices: dimension mismatch");
  const Matrix p = bc.a().transpose();
  const Matrix p_inv = bc.a_inv().transpose();
  std::vector<Matrix> conj;
  for (const auto& m : mats) conj.push_back(p_inv * m * p);
  std::vector<Matrix> out;
  for (std::size_t ip = 0; ip < n; ++ip) {
    Matrix acc(n, n);
    for (std::size_t i = 0; i < n; ++i)
      if (!bc.a()(ip, i).is_zero()) acc += conj[i] * bc.a()(ip, i);
    out.push_back(std::move(acc));
  }
  return out;
}

Matrix annihilator(const StructureTensor& w) {
  const auto n = static_cast<std::size_t>(w.dim());
  Matrix stacked(0, n);
  for (int j = 1; j <= w.dim(); ++j) stacked = stacked.vstack(structure_matrix(w, j));
  return null_space(stacked);
}

std::optional<AlgebraElement> find_unity(const StructureTensor& w) {
  const auto n = static_cast<std::size_t>(w.dim());
  if (n == 0) return AlgebraElement{};
  // Row (i,k), column j: coefficient W^{ji}_k of u_j in (u * e^i)_k = delta_ik.
  Matrix sys(n * n, n);
  Vector rhs(n * n);
  for (const auto& [idx, v] : w.entries()) {
    const std::size_t j = idx[0] - 1, i = idx[1] - 1, k = idx[2] - 1;
    sys(i * n + k, j) += v;
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i * n + i] = 1;
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  return AlgebraElement{std::move(*sol)};
}

std::vector<JointEigenvector> common_eigenvectors(const StructureTensor& w) {
  const auto n = static_cast<std::size_t>(w.dim());
  const auto mats = structure_matrices(w);
  std::vector<std::vector<std::pair<Rational, int>>> spectra;
  for (std::size_t i = 0; i < n; ++i) {
    auto f = rational_roots(char_poly(mats[i]));
    if (f.remainder.degree() > 0)
      throw Error(ErrorCode::NonRationalSpectrum,
                  "structure matrix " + std::to_string(i + 1) +
                      " has eigenvalues outside the rationals (factor " + f.remainder.str() + ")");
    spectra.push_back(std::move(f.roots));
  }

  struct Space {
    Matrix basis;
    Vector eigenvalues;
  };
  std::vector<Space> spaces{{Matrix::identity(n), {}}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Space> next;
    for (const auto& sp : spaces) {
      for (const auto& [lambda, mult] : spectra[i]) {
        Matrix shifted = mats[i] - Matrix::identity(n) * lambda;
        Matrix coeffs = null_space(shifted * sp.basis);
        if (coeffs.cols() == 0) continue;
        Vector ev = sp.eigenvalues;
        ev.push_back(lambda);
        next.push_back({canonical_basis(sp.basis * coeffs), std::move(ev)});
      }
    }
    spaces = std::move(next);
  }

  std::vector<JointEigenvector> out;
  for (const auto& sp : spaces)
    for (std::size_t c = 0; c < sp.basis.cols(); ++c)
      out.push_back({AlgebraElement{sp.basis.column(c)}, sp.eigenvalues});
  return out;
}

StructureTensor adjoin_unity(const StructureTensor& w) {
  const int n = w.dim() + 1;
  StructureTensor out(n, w.name().empty() ? std::string() : "unital(" + w.name() + ")");
  for (int j = 1; j <= n; ++j) {
    out.set(1, j, j, 1);
    out.set(j, 1, j, 1);
  }
  for (const auto& [idx, v] : w.entries()) out.set(idx[0] + 1, idx[1] + 1, idx[2] + 1, v);
  return out;
}

StructureTensor strip_unity(const StructureTensor& w, int unity_pos) {
  const int n = w.dim();
  if (unity_pos < 1 || unity_pos > n)
    throw Error(ErrorCode::IndexOutOfRange, "unity position " + std::to_string(unity_pos) + " outside 1.." + std::to_string(n));
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      Rational expect = j == k ? 1 : 0;
      if (w(unity_pos, j, k) != expect || w(j, unity_pos, k) != expect)
        throw Error(ErrorCode::NotUnity, "basis element " + std::to_string(unity_pos) +
                                             " does not act as the identity (fails at e^" +
                                             std::to_string(j) + ", component " + std::to_string(k) + ")");
    }
  auto shift = [unity_pos](int x) { return x > unity_pos ? x - 1 : x; };
  StructureTensor out(n - 1, w.name());
  for (const auto& [idx, v] : w.entries()) {
    if (idx[0] == unity_pos || idx[1] == unity_pos || idx[2] == unity_pos) continue;
    out.set(shift(idx[0]), shift(idx[1]), shift(idx[2]), v);
  }
  return out;
}

ProductLaws check_product_laws(const StructureTensor& w) {
  ProductLaws laws;
  const int n = w.dim();
  for (int i = 1; i <= n && laws.commutative; ++i)
    for (int j = i + 1; j <= n && laws.commutative; ++j)
      for (int k = 1; k <= n; ++k)
        if (w(i, j, k) != w(j, i, k)) {
          laws.commutative = false;
          laws.witness = {i, j};
          break;
        }

  // (e^i * e^j) * e^k against e^i * (e^j * e^k), both expanded from W.
  const auto un = static_cast<std::size_t>(n);
  auto basis = [un](int i) { return AlgebraElement{unit_vector(un, static_cast<std::size_t>(i - 1))}; };
  for (int i = 1; i <= n && laws.associative; ++i)
    for (int j = 1; j <= n && laws.associative; ++j)
      for (int k = 1; k <= n; ++k) {
        auto left = multiply(w, multiply(w, basis(i), basis(j)), basis(k));
        auto right = multiply(w, basis(i), multiply(w, basis(j), basis(k)));
        if (left != right) {
          laws.associative = false;
          if (laws.witness.empty()) laws.witness = {i, j, k};
          break;
        }
      }
  return laws;
}

Matrix coordinates_in(const Matrix& basis, const Matrix& vectors) {
  require_dim(basis.rows() == vectors.rows(), "coordinates_in: row mismatch");
  const std::size_t d = basis.cols();
  const auto res = rref(basis.hstack(vectors));
  if (res.rank > d || (d > 0 && res.rank == d && res.pivots[d - 1] != d - 1) ||
      (!res.pivots.empty() && res.pivots.back() >= d))
    throw Error(ErrorCode::Inconsistent, "vector outside the given span");
  Matrix out(d, vectors.cols());
  for (std::size_t t = 0; t < d; ++t)
    for (std::size_t c = 0; c < vectors.cols(); ++c) out(t, c) = res.reduced(t, d + c);
  return out;
}

StructureTensor restrict_to(const StructureTensor& w, const Matrix& basis_columns) {
  const std::size_t d = basis_columns.cols();
  std::vector<Vector> products;
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q)
      products.push_back(multiply(w, {basis_columns.column(p)}, {basis_columns.column(q)}).coords);
  Matrix coords = coordinates_in(basis_columns, Matrix::from_columns(basis_columns.rows(), products));
  StructureTensor out(static_cast<int>(d));
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q)
      for (std::size_t s = 0; s < d; ++s) {
        const Rational& v = coords(s, p * d + q);
        if (!v.is_zero()) out.set(static_cast<int>(p + 1), static_cast<int>(q + 1), static_cast<int>(s + 1), v);
      }
  return out;
}

StructureTensor direct_sum(const std::vector<StructureTensor>& blocks) {
  int n = 0;
  std::string name;
  for (const auto& b : blocks) {
    n += b.dim();
    if (!name.empty()) name += "+";
    name += b.name().empty() ? "?" : b.name();
  }
  StructureTensor out(n, name);
  int offset = 0;
  for (const auto& b : blocks) {
    for (const auto& [idx, v] : b.entries()) out.set(idx[0] + offset, idx[1] + offset, idx[2] + offset, v);
    offset += b.dim();
  }
  return out;
}

StructureTensor symmetric_completion(const StructureTensor& w) {
  StructureTensor out = w;
  for (const auto& [idx, v] : w.entries())
    if (w.entries().find({idx[1], idx[0], idx[2]}) == w.entries().end()) out.set(idx[1], idx[0], idx[2], v);
  return out;
}

Matrix product_span(const StructureTensor& w, const Matrix& left, const Matrix& right) {
  const auto n = static_cast<std::size_t>(w.dim());
  std::vector<Vector> prods;
  for (std::size_t p = 0; p < left.cols(); ++p)
    for (std::size_t q = 0; q < right.cols(); ++q)
      prods.push_back(multiply(w, {left.column(p)}, {right.column(q)}).coords);
  if (prods.empty()) return Matrix(n, 0);
  return canonical_basis(Matrix::from_columns(n, prods));
}

}  // namespace lieext
