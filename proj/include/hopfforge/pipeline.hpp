#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hopfforge/radford.hpp"
#include "hopfforge/simplicial.hpp"
#include "hopfforge/yd.hpp"

namespace hopfforge {

inline HopfProjection level_projection(const TruncatedSimplicialHopf& t, std::size_t n,
                                       std::size_t j, std::size_t k) {
  if (n == 0 || n > t.top() || j > n || k >= n)
    throw UsageError("no face d" + std::to_string(j) + " / degeneracy s" + std::to_string(k) +
                     " at level " + std::to_string(n));
  return HopfProjection(t.level(n), t.level(n - 1), t.d(n, j), t.s(n - 1, k));
}

inline std::string level_name(std::size_t n, std::size_t j, std::size_t k) {
  return "A^" + std::to_string(n) + "_" + std::to_string(j) + std::to_string(k);
}

// The right kernel of (d_j, s_k) on H_n as a braided Hopf algebra over H_{n-1}.
inline RKerResult level_rker(const TruncatedSimplicialHopf& t, std::size_t n, std::size_t j,
                             std::size_t k) {
  return induced_braided_hopf(level_projection(t, n, j, k), level_name(n, j, k));
}

// inner is a subspace of outer's coordinate space; the result lives in
// outer's ambient space.
inline Subspace nested_in(const Subspace& inner, const Subspace& outer) {
  return image(compose(outer.inclusion(), inner.inclusion()));
}

// The generators of (d_0, s_0) on levels 1 and 2 against d_2 / s_1, with the
// d_1 squares reported for information.
inline Report check_fg_commutation(const TruncatedSimplicialHopf& t) {
  if (t.top() < 2) throw UsageError("f/g commutation needs levels 0..2");
  Report r("fg-commutation");
  const KernelGenerators k1 = generator_maps(level_projection(t, 1, 0, 0));
  const KernelGenerators k2 = generator_maps(level_projection(t, 2, 0, 0));
  const LinMap& d1 = t.d(2, 1);
  const LinMap& d2 = t.d(2, 2);
  const LinMap& s1 = t.s(1, 1);
  r.add(equality_check("f d2 = d2 f", compose(k1.f, d2), compose(d2, k2.f)));
  r.add(equality_check("f s1 = s1 f", compose(k2.f, s1), compose(s1, k1.f)));
  r.add(equality_check("g d2 = d2 g", compose(k1.g, d2), compose(d2, k2.g)));
  r.add(equality_check("g s1 = s1 g", compose(k2.g, s1), compose(s1, k1.g)));
  r.add(as_info(equality_check("f d1 = d1 f", compose(k1.f, d1), compose(d1, k2.f))));
  r.add(as_info(equality_check("g d1 = d1 g", compose(k1.g, d1), compose(d1, k2.g))));
  return r;
}

struct PipelineResult {
  RKerResult a100, a200;
  BraidedHopfAlgebra a100_pushed;  // A^1_00 moved into YD(H_1)
  std::optional<HopfProjection> projection2;  // (d_2, s_1): A^2_00 -> A^1_00
  RKerResult a221;
  LinMap d2, s1;  // restricted to the kernels, in kernel coordinates
  Subspace a100_in_h1, a200_in_h2, a221_in_h2;
  Report report{"dim2-pipeline"};
};

// The face used to move YD modules over H_{n-1} into YD(H_n). The YD squares
// of the restricted (d_2, s_1) need the face that commutes past s_0 as
// d_2 s_0 = s_0 d_1.
inline constexpr std::size_t default_push_face = 1;

inline PipelineResult dim2_pipeline(const TruncatedSimplicialHopf& t, bool full_checks = true,
                                    std::size_t push_face = default_push_face) {
  if (t.top() < 2) throw UsageError("the pipeline needs levels 0..2");
  PipelineResult out;
  Report& r = out.report;
  out.a100 = level_rker(t, 1, 0, 0);
  out.a200 = level_rker(t, 2, 0, 0);
  out.a100_in_h1 = out.a100.subspace;
  out.a200_in_h2 = out.a200.subspace;
  r.add(out.a100.generators.report, "A^1_00 generators: ");
  r.add(out.a200.generators.report, "A^2_00 generators: ");

  const HopfProjection push = level_projection(t, 1, push_face, 0);
  out.a100_pushed = yd_pushforward(push, out.a100.braided);

  const RestrictionResult rd = check_restriction(t.d(2, 2), out.a200_in_h2, out.a100_in_h1);
  const RestrictionResult rs = check_restriction(t.s(1, 1), out.a100_in_h1, out.a200_in_h2);
  r.add(bool_check("d2 maps A^2_00 into A^1_00", rd.ok, rd.witness_expression));
  r.add(bool_check("s1 maps A^1_00 into A^2_00", rs.ok, rs.witness_expression));
  if (!rd.ok || !rs.ok) throw HypothesisFailed("(d2, s1) does not restrict to the kernels");
  out.d2 = restrict_map(t.d(2, 2), out.a200_in_h2, out.a100_in_h1);
  out.s1 = restrict_map(t.s(1, 1), out.a100_in_h1, out.a200_in_h2);

  const RestrictionResult r1 = check_restriction(t.d(2, 1), out.a200_in_h2, out.a100_in_h1);
  r.add(info_check("d1 maps A^2_00 into A^1_00", r1.ok));

  if (full_checks) {
    r.add(check_braided_hopf(out.a100.braided), "A^1_00: ");
    r.add(check_braided_hopf(out.a200.braided), "A^2_00: ");
    r.add(check_braided_hopf(out.a100_pushed), "A^1_00 in YD(H1): ");
  }
  const LinMap ih1 = t.level(1).id();
  r.add(check_braided_map(out.a200.braided, out.a100_pushed, ih1, out.d2), "d2: ");
  r.add(check_braided_map(out.a100_pushed, out.a200.braided, ih1, out.s1), "s1: ");
  if (r1.ok) {
    const LinMap d1 = restrict_map(t.d(2, 1), out.a200_in_h2, out.a100_in_h1);
    Report m = check_braided_map(out.a200.braided, out.a100_pushed, ih1, d1);
    for (const auto& c : m.checks()) r.add(as_info(c)).name = "d1: " + c.name;
  }

  out.projection2.emplace(out.a200.braided, out.a100_pushed, out.d2, out.s1);
  out.a221 = induced_braided_hopf(*out.projection2, level_name(2, 2, 1));
  out.a221_in_h2 = nested_in(out.a221.subspace, out.a200_in_h2);
  r.add(out.a221.generators.report, "A^2_21 generators: ");
  r.add(out.a221.report, "A^2_21: ");
  if (full_checks) r.add(check_braided_hopf(out.a221.braided), "A^2_21: ");

  r.set("dim A^1_00", static_cast<std::int64_t>(out.a100.subspace.dim()));
  r.set("dim A^2_00", static_cast<std::int64_t>(out.a200.subspace.dim()));
  r.set("dim A^2_21", static_cast<std::int64_t>(out.a221.subspace.dim()));
  r.set("A^2_21 basis", out.a221_in_h2.describe());
  r.set("A^2_21 depth", static_cast<std::int64_t>(out.a221.braided.object().depth()));
  return out;
}

struct Level3Result {
  RKerResult a300;
  BraidedHopfAlgebra a200_pushed;
  std::optional<HopfProjection> projection3;  // (d_2, s_1): A^3_00 -> A^2_00
  RKerResult a321;
  Subspace a321_in_h3;
  RestrictionResult d3, s2;
  Report report{"level3"};
};

// Repeats the nested construction one level up and tests whether d_3 and s_2
// restrict between A^3_21 and A^2_21.
inline Level3Result level3_probe(const TruncatedSimplicialHopf& t, const PipelineResult& p2,
                                 std::size_t push_face = default_push_face) {
  if (t.top() < 3) throw UsageError("the level 3 probe needs levels 0..3");
  Level3Result out;
  Report& r = out.report;
  out.a300 = level_rker(t, 3, 0, 0);
  const Subspace a300_in_h3 = out.a300.subspace;
  out.a200_pushed = yd_pushforward(level_projection(t, 2, push_face, 0), p2.a200.braided);
  const RestrictionResult rd = check_restriction(t.d(3, 2), a300_in_h3, p2.a200_in_h2);
  const RestrictionResult rs = check_restriction(t.s(2, 1), p2.a200_in_h2, a300_in_h3);
  r.add(bool_check("d2 maps A^3_00 into A^2_00", rd.ok, rd.witness_expression));
  r.add(bool_check("s1 maps A^2_00 into A^3_00", rs.ok, rs.witness_expression));
  if (!rd.ok || !rs.ok) throw HypothesisFailed("(d2, s1) does not restrict at level 3");
  const LinMap d2 = restrict_map(t.d(3, 2), a300_in_h3, p2.a200_in_h2);
  const LinMap s1 = restrict_map(t.s(2, 1), p2.a200_in_h2, a300_in_h3);
  const LinMap ih2 = t.level(2).id();
  r.add(check_braided_map(out.a300.braided, out.a200_pushed, ih2, d2), "d2: ");
  r.add(check_braided_map(out.a200_pushed, out.a300.braided, ih2, s1), "s1: ");
  out.projection3.emplace(out.a300.braided, out.a200_pushed, d2, s1);
  out.a321 = induced_braided_hopf(*out.projection3, level_name(3, 2, 1));
  out.a321_in_h3 = nested_in(out.a321.subspace, a300_in_h3);
  r.add(out.a321.report, "A^3_21: ");

  out.d3 = check_restriction(t.d(3, 3), out.a321_in_h3, p2.a221_in_h2);
  out.s2 = check_restriction(t.s(2, 2), p2.a221_in_h2, out.a321_in_h3);
  r.add(bool_check("d3 maps A^3_21 into A^2_21", out.d3.ok, out.d3.witness_expression));
  r.add(info_check("s2 maps A^2_21 into A^3_21", out.s2.ok, std::nullopt,
                   out.s2.ok ? "holds" : "fails at " + out.s2.witness_expression));
  r.set("dim A^3_00", static_cast<std::int64_t>(out.a300.subspace.dim()));
  r.set("dim A^3_21", static_cast<std::int64_t>(out.a321.subspace.dim()));
  r.set("d3 restricts", out.d3.ok);
  r.set("s2 restricts", out.s2.ok);
  return out;
}

// Delta_base del = (nabla (x) del)(del (x) rho) Delta_A, where rho is the
// coaction of A over base.
inline Check twisted_law(const std::string& name, const HopfAlgebra& base,
                         const BraidedHopfAlgebra& a, const LinMap& del) {
  return equality_check(name, compose(base.comul(), del),
                        path({Stage{a.comul()}, Stage{del, a.object().coaction()},
                              Stage{base.mul(), del}}));
}

inline Report check_twisted(const TruncatedSimplicialHopf& t, const PipelineResult& p) {
  Report r("check-twisted");
  const HopfAlgebra& h0 = t.level(0);
  const BraidedHopfAlgebra& a = p.a100.braided;
  const LinMap del = compose(t.d(1, 1), p.a100_in_h1.inclusion());
  r.add(equality_check("d1 multiplicative on A^1_00", compose(del, a.mul()),
                       path({Stage{del, del}, Stage{h0.mul()}})));
  r.add(equality_check("d1 unital on A^1_00", compose(del, a.unit()), h0.unit()));
  r.add(twisted_law("twisted law A^1_00 -> H0", h0, a, del));

  const RestrictionResult rr = check_restriction(t.d(2, 1), p.a221_in_h2, p.a100_in_h1);
  r.add(info_check("d1 maps A^2_21 into A^1_00", rr.ok));
  r.set("A^2_21 twisted law", false);
  if (rr.ok) {
    const LinMap del2 = restrict_map(t.d(2, 1), p.a221_in_h2, p.a100_in_h1);
    const Check c = twisted_law("twisted law A^2_21 -> A^1_00", p.a100_pushed, p.a221.braided, del2);
    r.set("A^2_21 twisted law", c.status == Status::Pass);
    r.add(as_info(c));
  }
  return r;
}

namespace detail {
inline SparseVec kron(const SparseVec& u, const SparseVec& v, std::size_t dim_v) {
  std::vector<std::pair<std::size_t, Rational>> out;
  out.reserve(u.size() * v.size());
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) out.emplace_back(i * dim_v + j, a * b);
  return canonical(std::move(out));
}

inline SparseVec basis_vector(std::size_t i) { return SparseVec{{i, Rational(1)}}; }
}  // namespace detail

enum class PeifferMode { Composite, ClosedForm };

// A^1_00 (x) A^1_00 -> H_2. The composite applies the generators of both
// projections to s_0(x) |>_ad s_1(y); the closed form expands the same value
// in the simplicial maps.
inline LinMap peiffer_pairing(const TruncatedSimplicialHopf& t, const PipelineResult& p,
                              PeifferMode mode) {
  const HopfAlgebra& h1 = t.level(1);
  const HopfAlgebra& h2 = t.level(2);
  const LinMap& inc = p.a100_in_h1.inclusion();
  if (mode == PeifferMode::Composite) {
    const LinMap ad = path({Stage{compose(t.s(1, 0), inc), compose(t.s(1, 1), inc)},
                            Stage{adjoint_action(h2)}});
    const LinMap f200 = corestrict(compose(p.a200.generators.f, ad), p.a200.subspace);
    return compose(p.a200_in_h2.inclusion(), compose(p.a221.generators.f, f200));
  }
  const LinMap& s0 = t.s(1, 0);
  const LinMap& s1 = t.s(1, 1);
  const LinMap& d0 = t.d(2, 0);
  const LinMap& d2 = t.d(2, 2);
  const LinMap& s = h1.antipode();
  // Factor order: x1 y1 y2 x2 x3 y3 y4 x4.
  const std::vector<LinMap> xmaps = {s0, compose(s0, s), compose(s1, compose(d2, s0)),
                                     compose(s1, compose(d2, compose(s0, s)))};
  const std::vector<LinMap> ymaps = {s1, compose(s0, compose(d0, compose(s1, s))),
                                     compose(s1, compose(d0, s1)), compose(s1, s)};
  const LinMap c3 = comul3(h1);
  const std::size_t n1 = h1.dim(), n2 = h2.dim();
  auto split4 = [n1](std::size_t idx) {
    std::array<std::size_t, 4> a{};
    for (std::size_t k = 4; k-- > 0;) {
      a[k] = idx % n1;
      idx /= n1;
    }
    return a;
  };
  const std::size_t da = p.a100_in_h1.dim();
  std::vector<SparseVec> cols(da * da);
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t b = 0; b < da; ++b) {
      const SparseVec xs = apply_map(c3, inc.column(a));
      const SparseVec ys = apply_map(c3, inc.column(b));
      std::vector<std::pair<std::size_t, Rational>> acc;
      for (const auto& [xi, xc] : xs) {
        const auto x = split4(xi);
        for (const auto& [yi, yc] : ys) {
          const auto y = split4(yi);
          const std::array<SparseVec, 8> seq = {
              xmaps[0].column(x[0]), s1.column(y[0]),        ymaps[1].column(y[1]),
              xmaps[1].column(x[1]), xmaps[2].column(x[2]), ymaps[2].column(y[2]),
              ymaps[3].column(y[3]), xmaps[3].column(x[3])};
          SparseVec prod = seq[0];
          for (std::size_t k = 1; k < seq.size(); ++k)
            prod = apply_map(h2.mul(), detail::kron(prod, seq[k], n2));
          for (const auto& [i, c] : prod) acc.emplace_back(i, c * xc * yc);
        }
      }
      cols[a * da + b] = detail::canonical(std::move(acc));
    }
  return LinMap(tensor(p.a100_in_h1.space(), p.a100_in_h1.space()), h2.space(), std::move(cols));
}

inline Report check_peiffer(const TruncatedSimplicialHopf& t, const PipelineResult& p) {
  Report r("peiffer");
  const LinMap comp = peiffer_pairing(t, p, PeifferMode::Composite);
  const LinMap closed = peiffer_pairing(t, p, PeifferMode::ClosedForm);
  r.add(equality_check("composite = closed form", comp, closed));
  r.add(bool_check("lands in A^2_21", p.a221_in_h2.contains(image(comp))));
  if (p.a221_in_h2.dim() == 1) {
    const LinMap& inc = p.a100_in_h1.inclusion();
    const LinMap& e1 = t.level(1).counit();
    const LinMap expect = compose(t.level(2).unit(), tensor_map(compose(e1, inc), compose(e1, inc)));
    r.add(equality_check("pairing is eps (x) eps", comp, expect));
  }
  return r;
}

struct BraidedXMod {
  HopfAlgebra base;
  BraidedHopfAlgebra a;
  LinMap boundary;  // A -> base
  LinMap action;    // base (x) A -> A
  Report report{"extract-xmod"};
};

// When A^2_21 is spanned by the unit, the boundary d_1 on A^1_00 with the
// conjugation action through s_0 satisfies the crossed module laws.
inline BraidedXMod extract_xmod(const TruncatedSimplicialHopf& t, const PipelineResult& p) {
  const HopfAlgebra& h2 = t.level(2);
  if (!(p.a221_in_h2 == Subspace(h2.space(), {h2.unit_vector()})))
    throw HypothesisFailed("A^2_21 is " + p.a221_in_h2.describe() + ", not the span of 1");
  BraidedXMod x;
  x.base = t.level(0);
  x.a = p.a100.braided;
  x.boundary = compose(t.d(1, 1), p.a100_in_h1.inclusion());
  x.action = x.a.object().action();
  Report& r = x.report;
  const LinMap ia = x.a.id(), ih = x.base.id();
  r.add(check_twisted(t, p));
  r.add(equality_check("boundary equivariant", compose(x.boundary, x.action),
                       path({Stage{ih, x.boundary}, Stage{adjoint_action(x.base)}})));
  const LinMap bad = braided_adjoint_action(x.a);
  r.add(equality_check("Peiffer identity", path({Stage{x.boundary, ia}, Stage{x.action}}), bad));
  const Subspace& s = p.a100_in_h1;
  r.add(equality_check("braided adjoint = adjoint",
                       bad, restrict_map(adjoint_action(t.level(1)), Subspace::tensor(s, s), s)));
  return x;
}

}  // namespace hopfforge
