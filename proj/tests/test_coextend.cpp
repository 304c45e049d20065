#include <doctest.h>

#include "generators.hpp"
#include "lieext/algebra.hpp"
#include "lieext/coextend.hpp"
#include "lieext/decompose.hpp"
#include "lieext/errors.hpp"
#include "lieext/linalg.hpp"
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

ReductionFrame frame_of(const StructureTensor& w) {
  auto f = detect_frame(w);
  REQUIRE(f);
  return *f;
}

DualElement d(std::size_t n, std::size_t pos) { return {unit_vector(n, pos - 1)}; }

Matrix form_columns(const std::vector<SymmetricForm>& forms, std::size_t n) { return forms_as_columns(forms, n); }

}  // namespace

TEST_CASE("frame detection examples") {
  const ReductionFrame f = frame_of(truncpoly(3));
  CHECK(f.unity_pos() == 1);
  CHECK(f.pseudo_zero_pos() == 4);
  CHECK(f.n() == 3);
  CHECK_FALSE(detect_frame(truncpoly_solvable(2)));
  const ReductionFrame dual = frame_of(truncpoly(1));
  CHECK(dual.unity_pos() == 1);
  CHECK(dual.pseudo_zero_pos() == 2);
  CHECK(code_of([] { ReductionFrame(truncpoly(3), 2, 4); }) == ErrorCode::Inconsistent);
}

TEST_CASE("reduced algebra examples") {
  StructureTensor nil2(2);
  nil2.set(1, 1, 2, 1);
  CHECK(reduced_algebra(frame_of(truncpoly(3))) == nil2);
  CHECK(reduced_algebra(frame_of(truncpoly(2))) == zero_algebra(1));
  CHECK(reduced_algebra(frame_of(truncpoly(1))).dim() == 0);
}

TEST_CASE("coextension examples") {
  const Coextension c3 = build_coextension(frame_of(truncpoly(3)));
  CHECK(c3.gbar == Matrix{{0, 1}, {1, 0}});
  CHECK(validate(c3.abar).valid());
  // Abar^k_ij = sum_s gbar_is W^{sk}_j: with t*t = t^2 only abar(2,2,1) survives.
  StructureTensor expect(2);
  expect.set(2, 2, 1, 1);
  CHECK(c3.abar == expect);

  const Coextension c2 = build_coextension(frame_of(truncpoly(2)));
  CHECK(c2.gbar == Matrix{{1}});
  CHECK(c2.abar.entries().empty());

  // Unity, a square-zero middle element and a pseudo-zero: the middle block is 0.
  StructureTensor deg(3);
  for (int j = 1; j <= 3; ++j) {
    deg.set(1, j, j, 1);
    deg.set(j, 1, j, 1);
  }
  const ReductionFrame fd(deg, 1, 3);
  CHECK(code_of([&] { build_coextension(fd); }) == ErrorCode::DegenerateCase);
  CHECK(code_of([&] { psi_inverse(fd, d(3, 1)); }) == ErrorCode::DegenerateCase);
}

TEST_CASE("psi examples") {
  const ReductionFrame f = frame_of(truncpoly(3));
  CHECK(psi(f, {unit_vector(4, 0)}) == d(4, 4));
  CHECK(psi(f, {unit_vector(4, 3)}) == d(4, 1));
  CHECK(psi(f, {unit_vector(4, 1)}) == d(4, 3));
  for (std::size_t p = 1; p <= 4; ++p) CHECK(psi(f, psi_inverse(f, d(4, p))) == d(4, p));
}

TEST_CASE("dual product examples") {
  const ReductionFrame f = frame_of(truncpoly(3));
  Rng rng(51);
  for (int t = 0; t < 10; ++t) {
    const DualElement eta{random_vector(rng, 4)};
    // e_0 is the pseudo-zero and e_n the unity of the transported product.
    CHECK(dual_product(f, d(4, 1), eta).coords == scale(unit_vector(4, 0), eta.coords[3]));
    CHECK(dual_product(f, d(4, 4), eta) == eta);
    const DualElement x{random_vector(rng, 4)}, y{random_vector(rng, 4)}, z{random_vector(rng, 4)};
    CHECK(dual_product(f, x, {add(y.coords, z.coords)}).coords ==
          add(dual_product(f, x, y).coords, dual_product(f, x, z).coords));
  }
  CHECK(dual_product(f, d(4, 2), d(4, 3)).coords[0] == Rational(1));
}

TEST_CASE("boundary construction examples") {
  const ReductionFrame f2 = frame_of(truncpoly(2));
  const auto b2 = casimir_from_boundary(f2);
  CHECK(b2.size() >= 1);
  for (int n = 2; n <= 5; ++n) {
    const ReductionFrame f = frame_of(truncpoly(n));
    const auto dim = static_cast<std::size_t>(n + 1);
    const auto forms = casimir_from_boundary(f);
    CHECK(same_form_space(forms, quadratic_casimirs(truncpoly(n)), dim));
    for (const auto& c : forms)
      for (std::size_t j = 0; j + 1 < dim; ++j) CHECK(c.c(0, j).is_zero());
  }
}

TEST_CASE("reduce and lift examples") {
  const ReductionFrame f3 = frame_of(truncpoly(3));
  CHECK(reduce_casimir(f3, {Matrix(4, 4)}).c == Matrix(3 - 1, 3 - 1));
  for (const auto& c : casimir_from_boundary(f3)) {
    const SymmetricForm r = reduce_casimir(f3, c);
    CHECK(is_quadratic_casimir(reduced_algebra(f3), r.c));
    CHECK(lift_casimir(f3, r, c.c(3, 3)).contains(c));
  }

  const ReductionFrame f2 = frame_of(truncpoly(2));
  Matrix enn(3, 3);
  enn(2, 2) = 1;
  CHECK(lift_casimir(f2, {Matrix(1, 1)}, 1).contains({enn}));

  // On the reduced algebra t*t = t^2, C_11 must vanish.
  CHECK(code_of([&] { lift_casimir(f3, {Matrix{{1, 0}, {0, 0}}}, 0); }) == ErrorCode::NotACasimir);
  CHECK(code_of([&] { reduce_casimir(f3, {Matrix::identity(4)}); }) == ErrorCode::NotACasimir);
}

TEST_CASE("solvable coextension examples") {
  const ReductionFrame f = frame_of(truncpoly(3));
  const StructureTensor hat = solvable_coextension(f);
  CHECK(hat.dim() == 3);
  for (int i = 1; i <= 3; ++i) {
    for (int k = 1; k <= 3; ++k) {
      CHECK(hat(i, 1, k).is_zero());
      CHECK(hat(1, i, k).is_zero());
    }
  }
  const Coextension co = build_coextension(f);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k) CHECK(hat(i + 1, j + 1, k + 1) == co.abar(i, j, k));
  CHECK(is_nilpotent_family(hat));
  CHECK(validate(hat).valid());
}

TEST_CASE("property: random frames") {
  Rng rng(52);
  for (int t = 0; t < 25; ++t) {
    const auto rf = random_frame(rng, 4);
    const ReductionFrame f(rf.w, rf.unity_pos, rf.pseudo_zero_pos);
    const auto dim = static_cast<std::size_t>(rf.w.dim());
    REQUIRE(validate(rf.w).valid());
    const auto direct = quadratic_casimirs(rf.w);
    const auto boundary = casimir_from_boundary(f);
    CHECK(same_form_space(direct, boundary, dim));
    CHECK(rank(form_columns(boundary_row_solutions(f), dim)) == direct.size());

    const Coextension co = build_coextension(f);
    CHECK(validate(co.abar).valid());
    CHECK(validate(solvable_coextension(f)).valid());

    for (int p = 0; p < 5; ++p) {
      const DualElement x{random_vector(rng, dim)}, y{random_vector(rng, dim)};
      CHECK(dual_product(f, x, y) == dual_product_via_psi(f, x, y));
      const AlgebraElement a{random_vector(rng, dim)};
      CHECK(psi_inverse(f, psi(f, a)) == a);
    }

    for (const auto& c : direct) {
      const SymmetricForm r = reduce_casimir(f, c);
      const Matrix cl = f.to_labels(c.c);
      CHECK(lift_casimir(f, r, cl(dim - 1, dim - 1)).contains(c));
    }
  }
}

TEST_CASE("label maps are inverse") {
  Rng rng(53);
  const auto rf = random_frame(rng, 3);
  const ReductionFrame f(rf.w, rf.unity_pos, rf.pseudo_zero_pos);
  const auto dim = static_cast<std::size_t>(rf.w.dim());
  const Vector v = random_vector(rng, dim);
  CHECK(f.from_labels(f.to_labels(v)) == v);
  const Matrix m = random_symmetric(rng, dim);
  CHECK(f.from_labels(f.to_labels(m)) == m);
  CHECK(f.position_of(0) == rf.unity_pos);
  CHECK(f.position_of(f.n()) == rf.pseudo_zero_pos);
  CHECK(f.to_labels(unit_vector(dim, static_cast<std::size_t>(rf.unity_pos - 1))) == unit_vector(dim, 0));
}
