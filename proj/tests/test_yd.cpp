#include <gtest/gtest.h>

#include "hopfforge/fixtures.hpp"
#include "hopfforge/radford.hpp"
#include "hopfforge/yd.hpp"

using namespace hopfforge;

namespace {

SparseVec e(std::size_t i, long c = 1) { return SparseVec{{i, Rational(c)}}; }

HopfAlgebra hopf(const char* name) { return *builtin(name).hopf; }

BraidedHopfAlgebra quantum_line() { return induced_braided_hopf(sweedler_projection()).braided; }

BraidedHopfAlgebra alternating_kernel() {
  return induced_braided_hopf(sign_projection_s3()).braided;
}

// Every YD module the fixtures produce, grouped by the algebra it lives over.
std::vector<std::vector<YDModule>> fixture_modules() {
  std::vector<std::vector<YDModule>> out;
  for (const char* n : {"c3", "s3", "sweedler"}) out.push_back({regular_yd(hopf(n))});
  const HopfProjection sw = sweedler_projection(), sg = sign_projection_s3();
  out.push_back({regular_yd(sw.small()), projection_yd(sw), quantum_line().object(),
                 projection_yd(sg), alternating_kernel().object()});
  out.push_back({yd_pushforward(sw, quantum_line().object()), regular_yd(sw.big())});
  return out;
}

}  // namespace

TEST(CheckYd, RegularModulesPass) {
  for (const char* n : {"trivial", "c2", "c3", "s3", "sweedler"})
    EXPECT_TRUE(check_yd(regular_yd(hopf(n))).all_passed()) << n;
}

TEST(CheckYd, ProjectionModulesPass) {
  EXPECT_TRUE(check_yd(projection_yd(sweedler_projection())).all_passed());
  EXPECT_TRUE(check_yd(projection_yd(sign_projection_s3())).all_passed());
}

TEST(CheckYd, TrivialCoactionOnSweedlerFails) {
  const HopfAlgebra h = sweedler_algebra();
  const LinMap trivial = tensor_map(h.unit(), h.id());
  const YDModule v = Object::yd(h, h.object(), adjoint_action(h), trivial);
  const Report r = check_yd(v);
  const Check* c = r.find("yd compatibility");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, Status::Fail);
  EXPECT_TRUE(c->witness.has_value());
}

TEST(CheckYd, TrivialCoactionOverC2StillHolds) {
  // Over an abelian group every action preserves the trivial grading.
  const HopfProjection p = sweedler_projection();
  const YDModule w = projection_yd(p);
  const LinMap trivial = tensor_map(p.small().unit(), p.big().id());
  EXPECT_TRUE(check_yd(Object::yd(p.small(), p.big().object(), w.action(), trivial)).all_passed());
}

TEST(ProjectionYd, SweedlerByHand) {
  const YDModule w = projection_yd(sweedler_projection());
  // kC2 (x) H4 has g (x) x at index 1*4+2.
  EXPECT_EQ(w.coaction().column(2), e(6));
  EXPECT_EQ(w.action().column(6), e(2, -1));
  EXPECT_EQ(w.action().column(1 * 4 + 3), e(3, -1));
}

TEST(ProjectionYd, IdentityAndTrivialProjections) {
  const HopfAlgebra h = sweedler_algebra();
  const YDModule id = projection_yd(HopfProjection::identity_of(h));
  EXPECT_EQ(id.action(), adjoint_action(h));
  EXPECT_EQ(id.coaction(), h.comul());
  const YDModule tr = projection_yd(HopfProjection::trivial_of(h));
  // Over the base field k (x) H = H: the action is eps (x) id and the
  // coaction v -> 1 (x) v, both the identity matrix.
  EXPECT_TRUE(tr.action().same_entries(LinMap::identity(h.space())));
  EXPECT_TRUE(tr.coaction().same_entries(LinMap::identity(h.space())));
}

TEST(Braiding, TrivialCoactionIsFlip) {
  const YDModule tr = projection_yd(HopfProjection::trivial_of(sweedler_algebra()));
  EXPECT_TRUE(yd_braiding(tr, tr).same_entries(flip(tr.space(), tr.space())));
}

TEST(Braiding, QuantumLineSign) {
  const YDModule b = quantum_line().object();
  ASSERT_EQ(b.dim(), 2u);
  const LinMap r = yd_braiding(b, b);
  // 1 (x) 1, 1 (x) x, x (x) 1, x (x) x in order.
  EXPECT_EQ(r.column(0), e(0));
  EXPECT_EQ(r.column(1), e(2));
  EXPECT_EQ(r.column(2), e(1));
  EXPECT_EQ(r.column(3), e(3, -1));
}

TEST(Braiding, InvertibleOnAllFixtures) {
  for (const auto& group : fixture_modules())
    for (const auto& v : group)
      for (const auto& w : group) EXPECT_NO_THROW(yd_braiding(v, w)) << v.dim() << " " << w.dim();
}

TEST(Braiding, HexagonsOnFixtureTriples) {
  for (const auto& group : fixture_modules()) {
    std::size_t tried = 0;
    for (const auto& x : group)
      for (const auto& y : group)
        for (const auto& z : group) {
          if (x.dim() * y.dim() * z.dim() > 256) continue;
          ++tried;
          EXPECT_TRUE(check_hexagons(x, y, z).all_passed());
        }
    EXPECT_GT(tried, 0u);
  }
}

TEST(Pushforward, IdentityProjectionChangesNothing) {
  const HopfAlgebra h = sweedler_algebra();
  const YDModule v = regular_yd(h);
  const YDModule w = yd_pushforward(HopfProjection::identity_of(h), v);
  EXPECT_EQ(w.action(), v.action());
  EXPECT_EQ(w.coaction(), v.coaction());
}

TEST(Pushforward, PreservesYdAndBraiding) {
  for (const HopfProjection& p : {sweedler_projection(), sign_projection_s3()}) {
    const BraidedHopfAlgebra b = induced_braided_hopf(p).braided;
    const YDModule pushed = yd_pushforward(p, b.object());
    EXPECT_TRUE(check_yd(pushed).all_passed());
    EXPECT_TRUE(yd_braiding(pushed, pushed).same_entries(yd_braiding(b.object(), b.object())));
  }
}

TEST(Pushforward, RegularModuleIsNotYdOverTheBigAlgebra) {
  // With v = g in kC2: x i(g) (x) g against i(g) x (x) g in H4, and s i(g)
  // against i(g) s for a transposition s not commuting with (12) in S3.
  for (const HopfProjection& p : {sweedler_projection(), sign_projection_s3()}) {
    const Report r = check_yd(yd_pushforward(p, regular_yd(p.small())));
    const Check* c = r.find("yd compatibility");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->status, Status::Fail) << p.big().name();
    EXPECT_TRUE(r.passed("module associativity"));
    EXPECT_TRUE(r.passed("comodule coassociativity"));
  }
}

TEST(Pushforward, RejectsForeignModule) {
  EXPECT_THROW(yd_pushforward(sweedler_projection(), regular_yd(hopf("c3"))), UsageError);
}

TEST(BraidedHopf, KernelsPass) {
  const BraidedHopfAlgebra k = induced_braided_hopf(HopfProjection::identity_of(hopf("c2"))).braided;
  EXPECT_EQ(k.dim(), 1u);
  EXPECT_TRUE(check_braided_hopf(k).all_passed());
  EXPECT_TRUE(check_braided_hopf(quantum_line()).all_passed());
  const BraidedHopfAlgebra a3 = alternating_kernel();
  EXPECT_TRUE(check_braided_hopf(a3).all_passed());
  // The kernel of the sign map is cocommutative, so its braided coproduct is
  // the restriction of the group coproduct.
  const Subspace s = induced_braided_hopf(sign_projection_s3()).subspace;
  const HopfAlgebra ks3 = sign_projection_s3().big();
  EXPECT_EQ(compose(Subspace::tensor(s, s).inclusion(), a3.comul()),
            compose(ks3.comul(), s.inclusion()));
}

TEST(BraidedAdjoint, UnitAndQuantumLine) {
  const BraidedHopfAlgebra q = quantum_line();
  const LinMap bad = braided_adjoint_action(q);
  // x |>_bad 1 = eps(x) 1 for x = 1, x.
  EXPECT_EQ(bad.column(0), e(0));
  EXPECT_TRUE(bad.column(2).empty());
  // x |>_bad x = 0.
  EXPECT_TRUE(bad.column(3).empty());
}

TEST(BraidedAdjoint, TrivialCoactionCollapses) {
  const BraidedHopfAlgebra a3 = alternating_kernel();
  const LinMap plain = adjoint_action(with_object(a3, Object(a3.space()), "A3"));
  EXPECT_TRUE(braided_adjoint_action(a3).same_entries(plain));
}

TEST(Smash, TrivialActionIsTensorAlgebra) {
  const HopfAlgebra c3 = hopf("c3"), c2 = hopf("c2");
  const LinMap triv = tensor_map(c2.counit(), c3.id());
  const SmashProduct s = smash_algebra(c3.space(), c3.mul(), c3.unit(), c2, triv);
  EXPECT_EQ(s.mul, path({Stage{c3.id(), flip(c2.space(), c3.space()), c2.id()},
                         Stage{c3.mul(), c2.mul()}}));
}

TEST(Smash, GroupActionGivesSemidirectProduct) {
  const GroupTable m = cyclic_group(3), n = cyclic_group(2);
  std::vector<std::vector<std::size_t>> inv = {{0, 1, 2}, {0, 2, 1}};
  const HopfAlgebra km = group_algebra(m, "kC3"), kn = group_algebra(n, "kC2");
  std::vector<SparseVec> cols;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t x = 0; x < 3; ++x) cols.push_back(e(inv[a][x]));
  const LinMap act(tensor(kn.space(), km.space()), km.space(), cols);
  const SmashProduct s = smash_product(km, kn, act, true);
  EXPECT_TRUE(s.report.all_passed());
  const HopfAlgebra expect = group_algebra(semidirect_product(m, n, inv));
  EXPECT_TRUE(s.mul.same_entries(expect.mul()));
  EXPECT_TRUE(s.hopf->antipode().same_entries(expect.antipode()));
  EXPECT_TRUE(s.hopf->comul().same_entries(expect.comul()));
}

TEST(Smash, BosonisedQuantumLineProducts) {
  const HopfAlgebra bos = bosonisation(quantum_line());
  // B (x) kC2 with basis 1(x)1, 1(x)g, x(x)1, x(x)g.
  EXPECT_EQ(bos.mul().column(2 * 4 + 1), e(3));
  EXPECT_EQ(bos.mul().column(1 * 4 + 2), e(3, -1));
}
