#include <gtest/gtest.h>

#include "hopfforge/linalg.hpp"
#include "support.hpp"

using namespace hopfforge;
using testing_support::dense;
using testing_support::dense_kron;
using testing_support::dense_mul;
using testing_support::dense_rank;
using testing_support::Gen;

namespace {

Space q(std::size_t n) { return Space::numbered(n, "e"); }

}  // namespace

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
}

TEST(Compose, IdentityIsNeutral) {
  Gen gen(1);
  const LinMap f = gen.map(q(3), q(2));
  EXPECT_EQ(compose(identity(q(2)), f), f);
  EXPECT_EQ(compose(f, identity(q(3))), f);
}

TEST(Compose, RowTimesColumnIsZero) {
  const LinMap row = LinMap::from_rows(q(2), Space::unit(), {{1, 1}});
  const LinMap col = LinMap::from_rows(Space::unit(), q(2), {{1}, {-1}});
  EXPECT_EQ(compose(row, col), LinMap::zero(Space::unit(), Space::unit()));
}

TEST(Compose, RejectsMismatchedShapes) {
  EXPECT_THROW(compose(identity(q(2)), identity(q(3))), DimensionMismatch);
}

TEST(Tensor, IdentitiesAndScalars) {
  EXPECT_EQ(tensor_map(identity(q(2)), identity(q(3))), identity(tensor(q(2), q(3))));
  EXPECT_EQ(tensor_map(LinMap::scalar(2), LinMap::scalar(3)), LinMap::scalar(6));
}

TEST(Flip, SmallCases) {
  EXPECT_EQ(flip(Space::unit(), Space::unit()), LinMap::identity(Space::unit()));
  EXPECT_EQ(compose(flip(q(2), q(2)), flip(q(2), q(2))), identity(tensor(q(2), q(2))));
  EXPECT_EQ(compose(flip(q(2), q(3)), flip(q(3), q(2))), identity(tensor(q(3), q(2))));
}

TEST(Flip, ConjugatesTensorProduct) {
  Gen gen(2);
  for (int trial = 0; trial < 20; ++trial) {
    const LinMap f = gen.map(q(2), q(2)), g = gen.map(q(2), q(2));
    EXPECT_EQ(path({Stage{flip(q(2), q(2))}, Stage{f, g}, Stage{flip(q(2), q(2))}}),
              tensor_map(g, f));
  }
}

TEST(Kernel, SmallCases) {
  EXPECT_EQ(kernel_basis(identity(q(4))).dim(), 0u);
  EXPECT_EQ(kernel_basis(LinMap::zero(q(2), q(2))).dim(), 2u);
  const Subspace k = kernel_basis(LinMap::from_rows(q(2), Space::unit(), {{1, 1}}));
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(k.contains(SparseVec{{0, Rational(1)}, {1, Rational(-1)}}));
}

// Property sweeps against the dense oracle.

TEST(Property, ComposeMatchesDenseProduct) {
  Gen gen(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Space a = gen.space(), b = gen.space(), c = gen.space();
    const LinMap f = gen.map(b, c), g = gen.map(a, b);
    EXPECT_EQ(dense(compose(f, g)), dense_mul(dense(f), dense(g)));
  }
}

TEST(Property, TensorMatchesKronecker) {
  Gen gen(12);
  for (int trial = 0; trial < 40; ++trial) {
    const LinMap f = gen.map(gen.space(1, 3), gen.space(1, 3));
    const LinMap g = gen.map(gen.space(1, 3), gen.space(1, 3));
    EXPECT_EQ(dense(tensor_map(f, g)), dense_kron(dense(f), dense(g)));
  }
}

TEST(Property, TensorIsFunctorial) {
  Gen gen(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Space a = gen.space(1, 3), b = gen.space(1, 3), c = gen.space(1, 3);
    const Space x = gen.space(1, 3), y = gen.space(1, 3), z = gen.space(1, 3);
    const LinMap f1 = gen.map(a, b), f2 = gen.map(b, c), g1 = gen.map(x, y), g2 = gen.map(y, z);
    EXPECT_EQ(compose(tensor_map(f2, g2), tensor_map(f1, g1)),
              tensor_map(compose(f2, f1), compose(g2, g1)));
  }
}

TEST(Property, PathEqualsEagerComposition) {
  Gen gen(14);
  for (int trial = 0; trial < 30; ++trial) {
    const Space a = gen.space(1, 3), b = gen.space(1, 3), c = gen.space(1, 3);
    const LinMap f = gen.map(tensor(a, b), c), g = gen.map(c, a), h = gen.map(b, b);
    const LinMap stages = path({Stage{identity(a), h}, Stage{f}, Stage{g}});
    const LinMap eager = compose(g, compose(f, tensor_map(identity(a), h)));
    EXPECT_EQ(stages, eager);
  }
}

TEST(Property, RankNullityAgreesWithOracle) {
  Gen gen(15);
  for (int trial = 0; trial < 60; ++trial) {
    const Space a = gen.space(1, 6), b = gen.space(1, 6);
    const LinMap f = gen.map(a, b, trial % 2 ? 0.7 : 0.3);
    const Subspace k = kernel_basis(f);
    EXPECT_EQ(k.dim() + dense_rank(dense(f)), a.dim());
    EXPECT_EQ(compose(f, k.inclusion()), LinMap::zero(k.space(), b));
  }
}

TEST(Property, InverseIsTwoSided) {
  Gen gen(16);
  int inverted = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Space a = gen.space(1, 5);
    const LinMap f = gen.map(a, a, 0.2);
    if (dense_rank(dense(f)) != a.dim()) {
      EXPECT_FALSE(is_invertible(f));
      EXPECT_THROW(inverse(f), MathError);
      continue;
    }
    ++inverted;
    const LinMap g = inverse(f);
    EXPECT_EQ(compose(f, g), identity(a));
    EXPECT_EQ(compose(g, f), identity(a));
  }
  EXPECT_GT(inverted, 10);
}

TEST(Property, SparseAndDenseStorageAgree) {
  Gen gen(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Space a = gen.space(1, 5), b = gen.space(1, 5);
    const LinMap f = gen.map(a, b);
    const LinMap s = f.with_storage(Storage::Sparse), d = f.with_storage(Storage::Dense);
    EXPECT_EQ(s, d);
    EXPECT_EQ(compose(s, identity(a)), compose(d, identity(a)));
  }
}

TEST(Restriction, SubspaceMembership) {
  // diag(1, 2) preserves span{e0} but not span{e0 + e1}.
  const LinMap f = LinMap::from_rows(q(2), q(2), {{1, 0}, {0, 2}});
  const Subspace e0(q(2), {SparseVec{{0, Rational(1)}}});
  const Subspace diag(q(2), {SparseVec{{0, Rational(1)}, {1, Rational(1)}}});
  EXPECT_TRUE(check_restriction(f, e0, e0).ok);
  const RestrictionResult r = check_restriction(f, diag, diag);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.witness, std::optional<std::size_t>(0));
}
