#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "lieext/algebra.hpp"
#include "lieext/decompose.hpp"
#include "lieext/errors.hpp"
#include "lieext/presets.hpp"

using namespace lieext;
using lieext::testing::Rng;

namespace {

bool support_condition(const StructureTensor& w) {
  for (const auto& [idx, v] : w.entries())
    if (idx[2] <= std::max(idx[0], idx[1])) return false;
  return true;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("decompose examples") {
  Rng rng(31);
  const StructureTensor sum = direct_sum({truncpoly_solvable(2), truncpoly_solvable(1)});
  const StructureTensor scrambled = change_basis(sum, random_basis_change(rng, 3));
  const Decomposition d = decompose_ideals(scrambled);
  CHECK(d.complete);
  CHECK(sorted(d.block_dims) == std::vector<int>{1, 2});
  CHECK(change_basis(scrambled, d.basis_change) == direct_sum(d.blocks));

  const Decomposition single = decompose_ideals(truncpoly_solvable(3));
  CHECK(single.block_dims == std::vector<int>{3});
  CHECK(single.complete);

  // Zero multiplication splits into lines: every line is an ideal.
  const Decomposition z = decompose_ideals(zero_algebra(2));
  CHECK(z.block_dims == std::vector<int>{1, 1});
}

TEST_CASE("decompose is deterministic for a fixed seed") {
  Rng rng(32);
  const StructureTensor w =
      change_basis(direct_sum({truncpoly(1), truncpoly(2), truncpoly_solvable(2)}), random_basis_change(rng, 7));
  const Decomposition a = decompose_ideals(w, 5);
  const Decomposition b = decompose_ideals(w, 5);
  CHECK(a.basis_change == b.basis_change);
  CHECK(a.block_dims == b.block_dims);
  CHECK(sorted(a.block_dims) == std::vector<int>{2, 2, 3});
}

TEST_CASE("irreducible factor over the rationals is reported") {
  StructureTensor sqrt2(2);
  sqrt2.set(1, 1, 1, 1);
  sqrt2.set(1, 2, 2, 1);
  sqrt2.set(2, 1, 2, 1);
  sqrt2.set(2, 2, 1, 2);
  const Decomposition d = decompose_ideals(sqrt2);
  CHECK_FALSE(d.complete);
  CHECK(d.block_dims == std::vector<int>{2});
}

TEST_CASE("property: scrambled sums of presets are recovered") {
  Rng rng(33);
  const std::vector<StructureTensor> pool = {truncpoly(0), truncpoly(1), truncpoly(2), truncpoly(3),
                                             truncpoly_solvable(2), truncpoly_solvable(3)};
  for (int t = 0; t < 20; ++t) {
    std::vector<StructureTensor> blocks;
    std::vector<int> dims;
    const int k = static_cast<int>(rng.integer(2, 3));
    for (int b = 0; b < k; ++b) {
      blocks.push_back(pool[static_cast<std::size_t>(rng.integer(0, static_cast<long>(pool.size()) - 1))]);
      dims.push_back(blocks.back().dim());
    }
    const StructureTensor sum = direct_sum(blocks);
    const StructureTensor w = change_basis(sum, random_basis_change(rng, static_cast<std::size_t>(sum.dim())));
    const Decomposition d = decompose_ideals(w, static_cast<std::uint64_t>(t));
    CHECK(d.complete);
    CHECK(sorted(d.block_dims) == sorted(dims));
    CHECK(change_basis(w, d.basis_change) == direct_sum(d.blocks));
    for (const auto& b : d.blocks) CHECK(validate(b).valid());
  }
}

TEST_CASE("is_nilpotent_family examples") {
  for (int n = 1; n <= 6; ++n) CHECK(is_nilpotent_family(truncpoly_solvable(n)));
  for (int n = 0; n <= 4; ++n) CHECK_FALSE(is_nilpotent_family(truncpoly(n)));
  CHECK(is_nilpotent_family(zero_algebra(3)));
}

TEST_CASE("canonical basis examples") {
  const CanonicalForm id = canonical_solvable_basis(truncpoly_solvable(3));
  CHECK(id.basis_change == BasisChange::identity(3));
  CHECK(id.tensor == truncpoly_solvable(3));
  CHECK(code_of([] { canonical_solvable_basis(truncpoly(2)); }) == ErrorCode::NotNilpotent);

  Rng rng(34);
  for (int t = 0; t < 20; ++t) {
    const int n = static_cast<int>(rng.integer(1, 6));
    const StructureTensor w = change_basis(truncpoly_solvable(n), random_basis_change(rng, static_cast<std::size_t>(n)));
    const CanonicalForm c = canonical_solvable_basis(w);
    CHECK(support_condition(c.tensor));
    CHECK(structure_matrix(c.tensor, n).is_zero());
    CHECK(change_basis(w, c.basis_change) == c.tensor);
    const CanonicalForm again = canonical_solvable_basis(c.tensor);
    CHECK(again.tensor == c.tensor);
    CHECK(again.basis_change == BasisChange::identity(static_cast<std::size_t>(n)));
  }
}

TEST_CASE("classify examples") {
  const BlockKind t2 = classify(truncpoly(2));
  CHECK(t2.kind == BlockKind::Kind::Semisimple);
  CHECK(t2.scale == Rational(1));
  CHECK(classify(truncpoly_solvable(2)).kind == BlockKind::Kind::Solvable);
  CHECK(classify(zero_algebra(2)).kind == BlockKind::Kind::Solvable);

  // Unity scaled: e*e = 2e gives unity e/2 and scale 2.
  StructureTensor s(1);
  s.set(1, 1, 1, 2);
  const BlockKind k = classify(s);
  CHECK(k.kind == BlockKind::Kind::Semisimple);
  CHECK(k.scale == Rational(2));

  // Q x Q is neither local nor nilpotent.
  CHECK(code_of([] { classify(direct_sum({truncpoly(0), truncpoly(0)})); }) == ErrorCode::Unclassifiable);

  Rng rng(35);
  const StructureTensor w = change_basis(direct_sum({truncpoly(2), truncpoly_solvable(2)}), random_basis_change(rng, 5));
  const auto kinds = classify(decompose_ideals(w));
  REQUIRE(kinds.size() == 2);
  int semisimple = 0;
  for (const auto& kd : kinds) semisimple += kd.kind == BlockKind::Kind::Semisimple ? 1 : 0;
  CHECK(semisimple == 1);
}
