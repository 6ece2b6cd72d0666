#include <gtest/gtest.h>

#include "hopfforge/fixtures.hpp"
#include "hopfforge/radford.hpp"
#include "support.hpp"

using namespace hopfforge;

namespace {

SparseVec e(std::size_t i, long c = 1) { return SparseVec{{i, Rational(c)}}; }

// G = C_p x C_q split onto one factor; onto_first picks C_p.
HopfProjection product_projection(std::size_t p, std::size_t q, bool onto_first) {
  const GroupTable g = testing_support::product_of_cyclic(p, q);
  const HopfAlgebra big = group_algebra(g, "kG");
  const HopfAlgebra small = group_algebra(cyclic_group(onto_first ? p : q), "kC");
  std::vector<std::size_t> proj(p * q), incl(small.dim());
  for (std::size_t x = 0; x < p * q; ++x) proj[x] = onto_first ? x / q : x % q;
  for (std::size_t y = 0; y < incl.size(); ++y) incl[y] = onto_first ? y * q : y;
  return HopfProjection(big, small, linearize_hom(big, small, proj), linearize_hom(small, big, incl));
}

// Group elements sent to the identity: the oracle for RKer on group algebras.
std::size_t kernel_order(const HopfProjection& p) {
  std::size_t n = 0;
  for (std::size_t a = 0; a < p.big().dim(); ++a)
    if (p.proj().column(a) == e(0)) ++n;
  return n;
}

}  // namespace

TEST(Rker, IdentityLeavesOnlyScalars) {
  for (const char* n : {"c2", "s3", "sweedler"}) {
    const HopfAlgebra h = *builtin(n).hopf;
    const Subspace k = rker(h, h, h.id());
    ASSERT_EQ(k.dim(), 1u) << n;
    EXPECT_TRUE(k.contains(h.unit_vector()));
    EXPECT_TRUE(kernel_sides_agree(h, h, h.id()));
  }
}

TEST(Rker, Sweedler) {
  const HopfProjection p = sweedler_projection();
  const HopfAlgebra& h = p.big();
  const Subspace r = rker(h, p.small(), p.proj());
  EXPECT_EQ(r, Subspace(h.space(), {e(0), e(2)}));
  EXPECT_EQ(rker(h, p.small(), p.proj(), KernelSide::Left), Subspace(h.space(), {e(0), e(3)}));
  EXPECT_EQ(rker(h, p.small(), p.proj(), KernelSide::Categorical).dim(), 1u);
  EXPECT_FALSE(kernel_sides_agree(h, p.small(), p.proj()));
}

TEST(Rker, SignMapGivesAlternatingGroup) {
  const HopfProjection p = sign_projection_s3();
  std::vector<SparseVec> even;
  for (std::size_t a = 0; a < 6; ++a)
    if (s3_sign(a) == 1) even.push_back(e(a));
  EXPECT_EQ(rker(p.big(), p.small(), p.proj()), Subspace(p.big().space(), even));
  EXPECT_TRUE(kernel_sides_agree(p.big(), p.small(), p.proj()));
}

TEST(Generators, SweedlerColumnsByHand) {
  // f(v) = v' i proj S(v''): f(1) = 1, f(g) = g g = 1, f(x) = x + g i proj(-gx) = x,
  // f(gx) = gx g + i proj(x) = -x.
  const KernelGenerators k = kernel_generators(sweedler_projection());
  EXPECT_EQ(k.f.columns(), (std::vector<SparseVec>{e(0), e(0), e(2), e(2, -1)}));
  EXPECT_TRUE(k.report.all_passed());
}

TEST(Generators, IdentitiesOnEveryProjection) {
  std::vector<HopfProjection> ps = {sweedler_projection(), sign_projection_s3(),
                                    HopfProjection::identity_of(sweedler_algebra()),
                                    HopfProjection::trivial_of(sweedler_algebra())};
  for (const auto& p : ps) {
    const KernelGenerators k = kernel_generators(p);
    EXPECT_TRUE(k.report.all_passed()) << p.big().name() << " -> " << p.small().name();
    for (const auto& c : k.report.checks()) EXPECT_EQ(c.status, Status::Pass) << c.name;
  }
}

TEST(InducedBraided, QuantumLinePrimitive) {
  const RKerResult r = induced_braided_hopf(sweedler_projection());
  EXPECT_TRUE(r.report.all_passed());
  const BraidedHopfAlgebra& b = r.braided;
  ASSERT_EQ(b.dim(), 2u);
  // Coordinates 1, x; x (x) 1 at 2, 1 (x) x at 1.
  EXPECT_EQ(b.comul().column(1), (SparseVec{{1, Rational(1)}, {2, Rational(1)}}));
  EXPECT_EQ(b.antipode().column(1), e(1, -1));
}

TEST(InducedBraided, IdentityGivesBaseField) {
  const RKerResult r = induced_braided_hopf(HopfProjection::identity_of(sweedler_algebra()));
  EXPECT_EQ(r.braided.dim(), 1u);
  const HopfAlgebra boson = bosonisation(r.braided);
  EXPECT_EQ(boson.dim(), 4u);
  EXPECT_TRUE(check_hopf(boson).all_passed());
  EXPECT_TRUE(boson.mul().same_entries(sweedler_algebra().mul()));
}

TEST(Bosonisation, QuantumLineIsFourDimensionalHopf) {
  const HopfAlgebra bos = bosonisation(induced_braided_hopf(sweedler_projection()).braided);
  EXPECT_EQ(bos.dim(), 4u);
  EXPECT_TRUE(check_hopf(bos).all_passed());
  EXPECT_FALSE(check_cocommutative(bos));
}

TEST(RadfordIso, Sweedler) {
  const RadfordIso iso = radford_iso(sweedler_projection());
  EXPECT_TRUE(iso.report.all_passed());
  // B (x) kC2 basis 1(x)1, 1(x)g, x(x)1, x(x)g.
  EXPECT_EQ(iso.psi.column(2), e(2));
  EXPECT_EQ(iso.psi.column(1), e(1));
  EXPECT_EQ(compose(iso.psi, iso.phi), iso.boson.id());
  EXPECT_EQ(compose(iso.phi, iso.psi), sweedler_algebra().id());
}

TEST(RadfordIso, SignOnS3) {
  const HopfProjection p = sign_projection_s3();
  const RadfordIso iso = radford_iso(p);
  EXPECT_TRUE(iso.report.all_passed());
  ASSERT_EQ(iso.boson.dim(), 6u);
  // psi(s) = s i(sgn s)^{-1} (x) sgn s on group-likes.
  const GroupTable s3 = symmetric_group_3();
  const Subspace& b = iso.kernel.subspace;
  for (std::size_t a = 0; a < 6; ++a) {
    const std::size_t sg = s3_sign(a) == 1 ? 0 : 1;
    const std::size_t t = s3.mul(a, sg ? 1 : 0);  // (12) is its own inverse
    const SparseVec coords = b.coordinates(e(t));
    ASSERT_EQ(coords.size(), 1u);
    EXPECT_EQ(iso.psi.column(a), e(coords[0].first * 2 + sg, 1)) << s3.label(a);
  }
}

// Sweeps over split surjections of products of cyclic groups.

TEST(Property, ProductProjections) {
  const std::vector<std::pair<std::size_t, std::size_t>> shapes = {{2, 2}, {2, 3}, {3, 2}, {3, 3},
                                                                   {2, 4}, {4, 2}};
  for (const auto& [p, q] : shapes)
    for (bool first : {true, false}) {
      const HopfProjection pr = product_projection(p, q, first);
      const Subspace k = rker(pr.big(), pr.small(), pr.proj());
      EXPECT_EQ(k.dim(), kernel_order(pr)) << p << "x" << q;
      EXPECT_TRUE(kernel_sides_agree(pr.big(), pr.small(), pr.proj()));
      const KernelGenerators g = kernel_generators(pr);
      EXPECT_TRUE(g.report.all_passed());
      const RadfordIso iso = radford_iso(pr);
      EXPECT_TRUE(iso.report.all_passed());
      EXPECT_EQ(iso.boson.dim(), p * q);
    }
}

TEST(Property, TrivialProjectionKernelIsEverything) {
  for (const auto& g : testing_support::small_groups()) {
    const HopfAlgebra h = group_algebra(g);
    const HopfProjection p = HopfProjection::trivial_of(h);
    EXPECT_EQ(rker(h, p.small(), p.proj()).dim(), g.order());
    EXPECT_TRUE(kernel_generators(p).report.all_passed());
  }
}

TEST(Projection, RejectsNonSplitPair) {
  const HopfAlgebra c2 = group_algebra(cyclic_group(2), "kC2");
  EXPECT_THROW(HopfProjection(c2, c2, zero_morphism(c2, c2), c2.id()), NotAProjection);
}
