#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "lieext/algebra.hpp"
#include "lieext/linalg.hpp"

namespace lieext::testing {

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(rng.integer(lo, hi));
  return m;
}

Matrix random_rational_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.rational();
  return m;
}

Matrix random_invertible(Rng& rng, std::size_t n) {
  Matrix lower = Matrix::identity(n), upper = Matrix::identity(n), perm(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (c < r) lower(r, c) = Rational(rng.integer(-2, 2));
      if (c > r) upper(r, c) = Rational(rng.integer(-2, 2));
    }
  for (std::size_t r = 0; r < n; ++r) upper(r, r) = Rational(rng.coin() ? 1 : -1) * Rational(rng.integer(1, 2));
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng.engine());
  for (std::size_t r = 0; r < n; ++r) perm(r, p[r]) = 1;
  return perm * lower * upper;
}

BasisChange random_basis_change(Rng& rng, std::size_t n) { return BasisChange(random_invertible(rng, n)); }

Matrix random_symmetric(Rng& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) m(r, c) = m(c, r) = Rational(rng.integer(-4, 4));
  return m;
}

Vector random_vector(Rng& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = rng.rational();
  return v;
}

StructureTensor monomial_algebra(Rng& rng, int dim, bool unital) {
  using Cell = std::pair<int, int>;
  std::set<Cell> cells{{0, 0}};
  const std::size_t want = static_cast<std::size_t>(dim) + (unital ? 0 : 1);
  while (cells.size() < want) {
    std::vector<Cell> addable;
    for (const auto& [a, b] : cells)
      for (Cell c : {Cell{a + 1, b}, Cell{a, b + 1}}) {
        if (cells.count(c)) continue;
        const bool left = c.first == 0 || cells.count({c.first - 1, c.second});
        const bool down = c.second == 0 || cells.count({c.first, c.second - 1});
        if (left && down) addable.push_back(c);
      }
    std::sort(addable.begin(), addable.end());
    addable.erase(std::unique(addable.begin(), addable.end()), addable.end());
    cells.insert(addable[static_cast<std::size_t>(rng.integer(0, static_cast<long>(addable.size()) - 1))]);
  }
  std::vector<Cell> basis(cells.begin(), cells.end());
  if (!unital) basis.erase(std::find(basis.begin(), basis.end(), Cell{0, 0}));
  std::stable_sort(basis.begin(), basis.end(),
                   [](const Cell& x, const Cell& y) { return x.first + x.second < y.first + y.second; });
  StructureTensor w(dim, unital ? "monomial-unital" : "monomial");
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Cell prod{basis[i].first + basis[j].first, basis[i].second + basis[j].second};
      auto it = std::find(basis.begin(), basis.end(), prod);
      if (it != basis.end())
        w.set(static_cast<int>(i + 1), static_cast<int>(j + 1), static_cast<int>(it - basis.begin() + 1), 1);
    }
  return w;
}

namespace {

StructureTensor random_valid_of_dim(Rng& rng, int n) {
  StructureTensor w;
  switch (rng.integer(0, 3)) {
    case 0: w = monomial_algebra(rng, n, false); break;
    case 1: w = monomial_algebra(rng, n, true); break;
    case 2: w = StructureTensor(n, "zero"); break;
    default:
      if (n < 2) {
        w = monomial_algebra(rng, n, rng.coin());
      } else {
        const int k = static_cast<int>(rng.integer(1, n - 1));
        w = direct_sum({monomial_algebra(rng, k, rng.coin()), monomial_algebra(rng, n - k, rng.coin())});
      }
  }
  if (rng.coin(0.8)) w = change_basis(w, random_basis_change(rng, static_cast<std::size_t>(n)));
  return w;
}

}  // namespace

StructureTensor random_valid_tensor(Rng& rng, int max_n) {
  return random_valid_of_dim(rng, static_cast<int>(rng.integer(1, max_n)));
}

StructureTensor random_noncommuting(Rng& rng, int min_n, int max_n) {
  while (true) {
    const int n = static_cast<int>(rng.integer(min_n, max_n));
    StructureTensor w(n, "noncommuting");
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          if (rng.coin(0.35)) {
            const Rational v(rng.integer(-2, 2));
            w.set(i, j, k, v);
            w.set(j, i, k, v);
          }
    if (!validate(w).commuting) return w;
  }
}

StructureTensor permute_positions(const StructureTensor& w, const std::vector<int>& perm) {
  StructureTensor out(w.dim(), w.name());
  for (const auto& [idx, v] : w.entries()) out.set(perm[idx[0] - 1], perm[idx[1] - 1], perm[idx[2] - 1], v);
  return out;
}

RandomFrame random_frame(Rng& rng, int max_middle) {
  while (true) {
    const int m = static_cast<int>(rng.integer(1, max_middle));
    const StructureTensor b = random_valid_of_dim(rng, m);
    const auto forms = quadratic_casimirs(b);
    if (forms.empty()) continue;
    std::optional<Matrix> g;
    for (int attempt = 0; attempt < 10 && !g; ++attempt) {
      Matrix c(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
      for (const auto& f : forms) c += f.c * Rational(rng.integer(-3, 3));
      if (rank(c) == static_cast<std::size_t>(m)) g = invert(c);
    }
    if (!g) continue;
    const int dim = m + 2;
    StructureTensor a(dim, "frame");
    for (int j = 1; j <= dim; ++j) {
      a.set(1, j, j, 1);
      a.set(j, 1, j, 1);
    }
    for (const auto& [idx, v] : b.entries()) a.set(idx[0] + 1, idx[1] + 1, idx[2] + 1, v);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) a.set(i + 2, j + 2, dim, (*g)(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    std::vector<int> perm(static_cast<std::size_t>(dim));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    return {permute_positions(a, perm), perm.front(), perm.back()};
  }
}

}  // namespace lieext::testing
