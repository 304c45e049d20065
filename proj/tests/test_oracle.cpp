#include <doctest.h>

#include "generators.hpp"
#include "lieext/algebra.hpp"
#include "lieext/casimir.hpp"
#include "lieext/errors.hpp"
#include "lieext/io.hpp"
#include "lieext/oracle.hpp"
#include "lieext/presets.hpp"

using namespace lieext;
using lieext::testing::Rng;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::Parse;
}

// Variable for xi^i_a over a 3-dimensional Lie algebra.
std::size_t var(int i, int a) { return static_cast<std::size_t>((i - 1) * 3 + (a - 1)); }

PoissonPolynomial random_poly(Rng& rng, std::size_t vars) {
  PoissonPolynomial p(vars);
  const int terms = static_cast<int>(rng.integer(1, 4));
  for (int t = 0; t < terms; ++t) {
    PoissonPolynomial::Monomial m(vars, 0);
    const int deg = static_cast<int>(rng.integer(0, 2));
    for (int k = 0; k < deg; ++k) ++m[static_cast<std::size_t>(rng.integer(0, static_cast<long>(vars) - 1))];
    p.add_term(m, rng.rational());
  }
  return p;
}

const LiePreset& so3() {
  static const LiePreset lie = load_lie(std::string(LIEEXT_TEST_DATA) + "/so3.json");
  return lie;
}

}  // namespace

TEST_CASE("sl2 preset") {
  const LiePreset sl2 = preset_sl2();
  CHECK(sl2.dim == 3);
  CHECK(sl2.killing(0, 0) == Rational(8));
  CHECK(sl2.killing(1, 1) == Rational(0));
  CHECK(sl2.killing(1, 2) == Rational(4));
  CHECK(sl2(1, 2, 2) == Rational(2));
  CHECK(sl2(2, 1, 2) == Rational(-2));
  for (int x = 1; x <= 3; ++x)
    for (int y = 1; y <= 3; ++y)
      for (int z = 1; z <= 3; ++z) {
        const Vector ex = unit_vector(3, static_cast<std::size_t>(x - 1));
        const Vector ey = unit_vector(3, static_cast<std::size_t>(y - 1));
        const Vector ez = unit_vector(3, static_cast<std::size_t>(z - 1));
        const Rational lhs = dot(sl2.bracket(ex, ey), sl2.killing * ez);
        const Rational rhs = dot(ey, sl2.killing * sl2.bracket(ex, ez));
        CHECK(lhs + rhs == Rational(0));
      }
}

TEST_CASE("make_lie rejects bad constants") {
  std::map<Index3, Rational> heis{{{1, 2, 3}, 1}};  // nilpotent: Killing form vanishes
  CHECK(code_of([&] { make_lie("heis", 3, heis); }) == ErrorCode::InvalidLiePreset);
  std::map<Index3, Rational> jac{{{1, 2, 3}, 1}, {{2, 3, 1}, 1}, {{1, 3, 1}, 1}};
  CHECK(code_of([&] { make_lie("bad", 3, jac); }) == ErrorCode::InvalidLiePreset);
  std::map<Index3, Rational> inconsistent{{{1, 2, 3}, 1}, {{2, 1, 3}, 1}};
  CHECK(code_of([&] { make_lie("asym", 3, inconsistent); }) == ErrorCode::InvalidLiePreset);
  CHECK(so3().dim == 3);
  CHECK(so3().killing(0, 0) == Rational(-2));
}

TEST_CASE("extension bracket examples") {
  const LiePreset sl2 = preset_sl2();
  const StructureTensor w = truncpoly_solvable(2);
  const Vector h = unit_vector(3, 0), e = unit_vector(3, 1), z = zero_vector(3);
  ExtElement out = extension_bracket(w, sl2, {e, z}, {e, z});
  CHECK(is_zero(out[0]));
  CHECK(is_zero(out[1]));
  out = extension_bracket(w, sl2, {h, z}, {e, z});
  CHECK(is_zero(out[0]));
  CHECK(out[1] == scale(e, 2));

  Rng rng(61);
  for (int t = 0; t < 10; ++t) {
    const StructureTensor v = random_valid_tensor(rng, 3);
    ExtElement x, y;
    for (int i = 0; i < v.dim(); ++i) {
      x.push_back(random_vector(rng, 3));
      y.push_back(random_vector(rng, 3));
    }
    const ExtElement a = extension_bracket(v, sl2, x, y), b = extension_bracket(v, sl2, y, x);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(add(a[i], b[i]) == zero_vector(3));
  }
}

TEST_CASE("jacobi examples") {
  const LiePreset sl2 = preset_sl2();
  CHECK(jacobi_check(truncpoly_solvable(2), sl2).ok);
  CHECK(jacobi_check(zero_algebra(3), sl2).ok);
  CHECK(jacobi_check(truncpoly(3), sl2).ok);

  // Symmetric, but M_1 and M_2 do not commute.
  StructureTensor w(2);
  w.set(1, 1, 2, 1);
  w.set(2, 2, 2, 1);
  REQUIRE_FALSE(validate(w).commuting);
  const JacobiResult r = jacobi_check(w, sl2);
  CHECK_FALSE(r.ok);
  CHECK(r.witness.size() == 3);

  StructureTensor asym(2);
  asym.set(1, 2, 1, 1);
  const JacobiResult ra = jacobi_check(asym, sl2);
  CHECK_FALSE(ra.ok);
  CHECK(ra.witness.size() == 2);
}

TEST_CASE("property: jacobi agrees with validation") {
  Rng rng(62);
  const LiePreset sl2 = preset_sl2();
  for (int t = 0; t < 12; ++t) {
    const StructureTensor w = t % 2 ? random_valid_tensor(rng, 3) : random_noncommuting(rng, 2, 3);
    CHECK(jacobi_check(w, sl2).ok == validate(w).valid());
    CHECK(jacobi_check(w, so3()).ok == validate(w).valid());
  }
}

TEST_CASE("poisson bracket examples") {
  const LiePreset sl2 = preset_sl2();
  const StructureTensor w = truncpoly_solvable(2);
  const std::size_t vars = 6;
  const auto x = [&](int i, int a) { return PoissonPolynomial::variable(vars, var(i, a)); };
  CHECK(poisson_bracket(w, sl2, x(1, 1), x(1, 2)) == Rational(2) * x(2, 2));
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) CHECK(poisson_bracket(w, sl2, x(2, a), x(2, b)).is_zero());

  Rng rng(63);
  for (int t = 0; t < 10; ++t) {
    const PoissonPolynomial f = random_poly(rng, vars), g = random_poly(rng, vars);
    CHECK(poisson_bracket(w, sl2, f, f).is_zero());
    CHECK(poisson_bracket(w, sl2, f, g) == Rational(-1) * poisson_bracket(w, sl2, g, f));
  }
}

TEST_CASE("Casimir polynomials") {
  const LiePreset sl2 = preset_sl2();
  Vector h = unit_vector(3, 0);
  const PoissonPolynomial lin = casimir_poly_linear(sl2, {{Vector{0, 1}}}, h);
  for (const auto& [mono, c] : lin.terms())
    for (std::size_t v = 0; v < 3; ++v) CHECK(mono[v] == 0);
  CHECK(casimir_poly_linear(sl2, {{Vector{0, 0}}}, h).is_zero());
  const Vector y1{1, 2, 0}, y2{0, -1, 3};
  CHECK(casimir_poly_linear(sl2, {{Vector{1, 1}}}, add(y1, y2)) ==
        casimir_poly_linear(sl2, {{Vector{1, 1}}}, y1) + casimir_poly_linear(sl2, {{Vector{1, 1}}}, y2));

  CHECK(casimir_poly_quadratic(sl2, {Matrix(2, 2)}).is_zero());

  // The sl(2) Casimir itself: h^2/16 + e f / 4 with K = diag-block (8; [[0,4],[4,0]]).
  const PoissonPolynomial c1 = casimir_poly_quadratic(sl2, {Matrix{{1}}});
  PoissonPolynomial expect(3);
  expect.add_term({2, 0, 0}, Rational(1, 16));
  expect.add_term({0, 1, 1}, Rational(1, 4));
  CHECK(c1 == expect);
  CHECK(verify_casimir(truncpoly(0), sl2, c1).ok);

  // Relabelling the two algebra indices gives the same polynomial for the swapped form.
  const Matrix c{{1, 2}, {2, 5}}, swapped{{5, 2}, {2, 1}};
  const PoissonPolynomial a = casimir_poly_quadratic(sl2, {c});
  const PoissonPolynomial b = casimir_poly_quadratic(sl2, {swapped});
  PoissonPolynomial relabelled(6);
  for (const auto& [mono, coef] : b.terms()) {
    PoissonPolynomial::Monomial m(6);
    for (std::size_t v = 0; v < 3; ++v) {
      m[v] = mono[v + 3];
      m[v + 3] = mono[v];
    }
    relabelled.add_term(m, coef);
  }
  CHECK(a == relabelled);
}

TEST_CASE("verify_casimir on solver outputs and non-solutions") {
  const LiePreset sl2 = preset_sl2();
  Rng rng(64);
  for (int t = 0; t < 10; ++t) {
    const StructureTensor w = random_valid_tensor(rng, 3);
    const auto n = static_cast<std::size_t>(w.dim());
    for (const auto& p : linear_casimirs(w))
      for (std::size_t a = 0; a < 3; ++a) CHECK(verify_casimir(w, sl2, casimir_poly_linear(sl2, p, unit_vector(3, a))).ok);
    for (const auto& q : quadratic_casimirs(w)) {
      CHECK(verify_casimir(w, sl2, casimir_poly_quadratic(sl2, q)).ok);
      CHECK(verify_casimir(w, so3(), casimir_poly_quadratic(so3(), q)).ok);
    }
    const Matrix c = random_symmetric(rng, n);
    if (!is_quadratic_casimir(w, c)) {
      const CasimirVerdict v = verify_casimir(w, sl2, casimir_poly_quadratic(sl2, {c}));
      CHECK_FALSE(v.ok);
      CHECK(v.failing.has_value());
      CHECK_FALSE(v.residual.is_zero());
    }
  }
}
