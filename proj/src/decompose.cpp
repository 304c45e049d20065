#include "lieext/decompose.hpp"

#include <random>

#include "lieext/algebra.hpp"
#include "lieext/errors.hpp"
#include "lieext/linalg.hpp"

namespace lieext {

namespace {

// Linear maps phi with phi(e^i * e^j) = e^j * phi(e^i). Generalized
// eigenspaces of such a map are ideals that multiply to zero pairwise.
std::vector<Matrix> centroid(const std::vector<Matrix>& mats) {
  const std::size_t n = mats.size();
  Matrix sys(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        const std::size_t row = (i * n + j) * n + r;
        for (std::size_t c = 0; c < n; ++c) {
          sys(row, r * n + c) += mats[i](c, j);
          sys(row, c * n + i) -= mats[j](r, c);
        }
      }
  const Matrix ker = null_space(sys);
  std::vector<Matrix> out;
  for (std::size_t b = 0; b < ker.cols(); ++b) {
    Matrix phi(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) phi(r, c) = ker(r * n + c, b);
    out.push_back(std::move(phi));
  }
  return out;
}

struct Split {
  std::vector<Matrix> parts;  // column bases in the coordinates of the algebra being split
  bool complete = true;
};

Split split_once(const StructureTensor& w, std::mt19937_64& rng, int attempts) {
  const auto n = static_cast<std::size_t>(w.dim());
  const Matrix id = Matrix::identity(n);
  if (n <= 1) return {{id}, true};

  // Annihilator directions outside A^2 split off as one-dimensional zero
  // ideals; the centroid cannot see them when A has several of them.
  const Matrix ann = annihilator(w);
  if (ann.cols() > 0) {
    const Matrix a2 = product_span(w, id, id);
    const Matrix lines = complement_in(intersect_spans(ann, a2), ann);
    if (lines.cols() > 0) {
      const Matrix ext = complement_in(lines.hstack(a2), id);
      const Matrix rest = a2.hstack(ext);
      Split s;
      if (rest.cols() > 0) s.parts.push_back(canonical_basis(rest));
      for (std::size_t c = 0; c < lines.cols(); ++c)
        s.parts.push_back(canonical_basis(Matrix::from_columns(n, {lines.column(c)})));
      return s;
    }
  }

  const auto cent = centroid(structure_matrices(w));
  if (cent.size() <= 1) return {{id}, true};

  std::uniform_int_distribution<long> coeff(-9, 9);
  Split best{{id}, true};
  bool saw_remainder = false;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Matrix phi(n, n);
    for (const auto& c : cent) phi += c * Rational(coeff(rng));
    const auto f = rational_roots(char_poly(phi));
    Split s;
    for (const auto& [lambda, mult] : f.roots) {
      Matrix shifted = phi - id * lambda;
      s.parts.push_back(canonical_basis(null_space(matrix_power(shifted, static_cast<unsigned>(mult)))));
    }
    if (f.remainder.degree() > 0) {
      s.parts.push_back(canonical_basis(null_space(f.remainder(phi))));
      s.complete = false;
      saw_remainder = true;
    }
    if (s.parts.size() >= 2 && s.complete) return s;
    if (s.parts.size() > best.parts.size()) best = std::move(s);
  }
  if (best.parts.size() >= 2) return best;
  return {{id}, !saw_remainder};
}

void decompose_rec(const StructureTensor& w, const Matrix& embed, std::mt19937_64& rng, int attempts,
                   Decomposition& out, std::vector<Vector>& columns) {
  Split s = split_once(w, rng, attempts);
  out.complete = out.complete && s.complete;
  if (s.parts.size() <= 1) {
    for (std::size_t c = 0; c < embed.cols(); ++c) columns.push_back(embed.column(c));
    out.block_dims.push_back(w.dim());
    StructureTensor block = w;
    block.set_name("block" + std::to_string(out.blocks.size() + 1));
    out.blocks.push_back(std::move(block));
    return;
  }
  for (const auto& part : s.parts) decompose_rec(restrict_to(w, part), embed * part, rng, attempts, out, columns);
}

}  // namespace

Decomposition decompose_ideals(const StructureTensor& w, std::uint64_t seed, int attempts) {
  const auto n = static_cast<std::size_t>(w.dim());
  Decomposition out;
  if (n == 0) return out;
  std::mt19937_64 rng(seed);
  std::vector<Vector> columns;
  decompose_rec(w, Matrix::identity(n), rng, attempts, out, columns);
  out.basis_change = BasisChange::from_new_basis_columns(Matrix::from_columns(n, columns));
  if (change_basis(w, out.basis_change) != direct_sum(out.blocks))
    throw Error(ErrorCode::Inconsistent, "decomposition does not reassemble the input tensor");
  return out;
}

bool is_nilpotent_family(const StructureTensor& w) {
  const auto n = static_cast<unsigned>(w.dim());
  for (const auto& m : structure_matrices(w))
    if (!matrix_power(m, n).is_zero()) return false;
  return true;
}

CanonicalForm canonical_solvable_basis(const StructureTensor& w) {
  if (!is_nilpotent_family(w))
    throw Error(ErrorCode::NotNilpotent, "canonical solvable basis needs nilpotent structure matrices");
  const auto n = static_cast<std::size_t>(w.dim());
  const Matrix id = Matrix::identity(n);
  std::vector<Vector> cols;
  Matrix power = id;
  while (power.cols() > 0) {
    Matrix next = product_span(w, id, power);
    const Matrix layer = complement_in(next, canonical_basis(power));
    for (std::size_t c = 0; c < layer.cols(); ++c) cols.push_back(layer.column(c));
    power = std::move(next);
  }
  auto bc = BasisChange::from_new_basis_columns(Matrix::from_columns(n, cols));
  auto t = change_basis(w, bc);
  for (const auto& [idx, v] : t.entries())
    if (idx[2] <= std::max(idx[0], idx[1]))
      throw Error(ErrorCode::Inconsistent, "power filtration basis violates the support condition");
  return {std::move(bc), std::move(t)};
}

std::string BlockKind::str() const {
  return kind == Kind::Solvable ? "solvable" : "semisimple(a=" + scale.str() + ")";
}

BlockKind classify(const StructureTensor& w) {
  if (is_nilpotent_family(w)) return {BlockKind::Kind::Solvable, Rational(0)};
  const auto mats = structure_matrices(w);
  const auto n = static_cast<unsigned>(w.dim());
  std::size_t first = 0;
  while (matrix_power(mats[first], n).is_zero()) ++first;
  const auto f = rational_roots(char_poly(mats[first]));
  if (f.remainder.degree() > 0 || f.roots.size() != 1)
    throw Error(ErrorCode::Unclassifiable,
                "structure matrix " + std::to_string(first + 1) + " of a non-nilpotent block has characteristic polynomial " +
                    char_poly(mats[first]).str() + "; expected a single rational eigenvalue (decompose first)");
  if (!find_unity(w))
    throw Error(ErrorCode::Unclassifiable, "block is neither nilpotent nor unital");
  return {BlockKind::Kind::Semisimple, f.roots.front().first};
}

std::vector<BlockKind> classify(const Decomposition& d) {
  std::vector<BlockKind> out;
  for (const auto& b : d.blocks) out.push_back(classify(b));
  return out;
}

}  // namespace lieext
