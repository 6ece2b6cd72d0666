#pragma once

#include <string>

#include "hopfforge/axioms.hpp"
#include "hopfforge/hopf.hpp"
#include "hopfforge/linalg.hpp"
#include "hopfforge/projection.hpp"
#include "hopfforge/report.hpp"
#include "hopfforge/yd.hpp"

namespace hopfforge {

enum class KernelSide { Right, Left, Categorical };

inline const char* side_name(KernelSide s) {
  switch (s) {
    case KernelSide::Right: return "right";
    case KernelSide::Left: return "left";
    case KernelSide::Categorical: return "categorical";
  }
  return "?";
}

// Elements v of src with v' (x) om(v'') = v (x) 1 (right), om(v') (x) v'' =
// 1 (x) v (left), or v' (x) om(v'') (x) v''' = v' (x) 1 (x) v'' (categorical).
inline Subspace rker(const HopfAlgebra& src, const HopfAlgebra& dst, const LinMap& om,
                     KernelSide side = KernelSide::Right) {
  if (om.dom() != src.space() || om.cod() != dst.space())
    throw DimensionMismatch("kernel: map does not go " + src.name() + " -> " + dst.name());
  const LinMap ie = compose(dst.unit(), src.counit());
  const LinMap id = src.id();
  LinMap diff;
  switch (side) {
    case KernelSide::Right:
      diff = path({Stage{src.comul()}, Stage{id, om}}) - path({Stage{src.comul()}, Stage{id, ie}});
      break;
    case KernelSide::Left:
      diff = path({Stage{src.comul()}, Stage{om, id}}) - path({Stage{src.comul()}, Stage{ie, id}});
      break;
    case KernelSide::Categorical:
      diff = path({Stage{comul2(src)}, Stage{id, om, id}}) -
             path({Stage{comul2(src)}, Stage{id, ie, id}});
      break;
  }
  return kernel_basis(diff);
}

inline bool kernel_sides_agree(const HopfAlgebra& src, const HopfAlgebra& dst, const LinMap& om) {
  const Subspace r = rker(src, dst, om, KernelSide::Right);
  return r == rker(src, dst, om, KernelSide::Left) &&
         r == rker(src, dst, om, KernelSide::Categorical);
}

struct KernelGenerators {
  LinMap f, g;
  Report report{"kernel-generators"};
};

// f = nabla (id (x) i proj S) Delta and g = nabla (i proj (x) S) Delta.
inline KernelGenerators generator_maps(const HopfProjection& p) {
  const HopfAlgebra& big = p.big();
  const LinMap ret = p.retraction();
  KernelGenerators k;
  k.f = path({Stage{big.comul()}, Stage{big.id(), compose(ret, big.antipode())}, Stage{big.mul()}});
  k.g = path({Stage{big.comul()}, Stage{ret, big.antipode()}, Stage{big.mul()}});
  return k;
}

// The generators with their identities checked against the kernel b.
inline KernelGenerators kernel_generators(const HopfProjection& p, const Subspace& b) {
  const HopfAlgebra& big = p.big();
  const LinMap id = big.id();
  const LinMap ret = p.retraction();
  KernelGenerators k = generator_maps(p);
  Report& r = k.report;
  r.add(equality_check("f idempotent", compose(k.f, k.f), k.f));
  r.add(equality_check("g f = g", compose(k.g, k.f), k.g));
  r.add(bool_check("f lands in kernel", b.contains(image(k.f))));
  r.add(bool_check("g lands in kernel", b.contains(image(k.g))));
  r.add(equality_check("f restricted to kernel is id", compose(k.f, b.inclusion()), b.inclusion()));
  r.add(equality_check("f g convolution", path({Stage{big.comul()}, Stage{k.f, k.g}, Stage{big.mul()}}),
                       compose(big.unit(), big.counit())));
  r.add(equality_check("f (i proj) convolution",
                       path({Stage{big.comul()}, Stage{k.f, ret}, Stage{big.mul()}}), id));
  return k;
}

inline KernelGenerators kernel_generators(const HopfProjection& p) {
  return kernel_generators(p, rker(p.big(), p.small(), p.proj()));
}

struct RKerResult {
  Subspace subspace;
  BraidedHopfAlgebra braided;
  KernelGenerators generators;
  Report report{"rker"};
};

// The braided Hopf algebra on the right kernel of a projection: product and
// YD structure restricted, coproduct (f (x) id) Delta, antipode g.
inline RKerResult induced_braided_hopf(const HopfProjection& p, const std::string& name = "B") {
  const HopfAlgebra& big = p.big();
  RKerResult res;
  res.subspace = rker(big, p.small(), p.proj());
  const Subspace& b = res.subspace;
  res.generators = kernel_generators(p, b);
  const KernelGenerators& k = res.generators;
  Report& r = res.report;

  const SparseVec one = big.unit_vector();
  r.add(bool_check("contains unit", b.contains(one)));
  r.add(bool_check("antipode maps into left kernel",
                   rker(big, p.small(), p.proj(), KernelSide::Left)
                       .contains(image(compose(big.antipode(), b.inclusion())))));

  const Subspace bb = Subspace::tensor(b, b);
  const Object obj = restrict_object(projection_yd(p), b);  // adjoint-invariance
  const LinMap mul = restrict_map(big.mul(), bb, b);
  const LinMap unit = corestrict(big.unit(), b);
  const LinMap comul =
      restrict_map(path({Stage{big.comul()}, Stage{k.f, big.id()}}), b, bb);
  const LinMap counit = compose(big.counit(), b.inclusion());
  const LinMap antipode = restrict_map(k.g, b, b);
  res.braided = HopfAlgebra(name, obj, mul, unit, comul, counit, antipode);
  return res;
}

// A (x)^ H: smash product with the smash coproduct, an ordinary Hopf algebra
// in the category the base H lives in.
inline HopfAlgebra bosonisation(const BraidedHopfAlgebra& a, const std::string& name = "") {
  const Object& o = a.object();
  const HopfAlgebra& h = o.over();
  const Object& au = o.under();
  const Object& ho = h.object();
  const LinMap ia = a.id(), ih = h.id();
  const LinMap mul = path({Stage{ia, h.comul(), ia, ih}, Stage{ia, ih, braiding(ho, au), ih},
                           Stage{ia, o.action(), ih, ih}, Stage{a.mul(), h.mul()}});
  const LinMap unit = tensor_map(a.unit(), h.unit());
  const LinMap comul = path({Stage{a.comul(), h.comul()}, Stage{ia, o.coaction(), ih, ih},
                             Stage{ia, ih, braiding(au, ho), ih}, Stage{ia, h.mul(), ia, ih}});
  const LinMap counit = tensor_map(a.counit(), h.counit());
  // S(a (x) x) = (1 (x) S(a_H x))(S(a_A) (x) 1); the coaction term vanishes
  // only when A is coinvariant.
  const LinMap antipode = path({Stage{o.coaction(), ih}, Stage{ih, braiding(au, ho)},
                                Stage{h.mul(), ia},
                                Stage{a.unit(), h.antipode(), a.antipode(), h.unit()},
                                Stage{mul}});
  const Object obj = au.is_vect() ? Object(tensor(a.space(), h.space())) : tensor_object(au, ho);
  return HopfAlgebra(name.empty() ? a.name() + "#" + h.name() : name, obj, mul, unit, comul,
                     counit, antipode);
}

struct RadfordIso {
  RKerResult kernel;
  HopfAlgebra boson;
  LinMap psi, phi;
  Report report{"radford-iso"};
};

// psi(v) = f(v') (x) proj(v''), phi(a (x) x) = a incl(x).
inline RadfordIso radford_iso(const HopfProjection& p) {
  RadfordIso out;
  out.kernel = induced_braided_hopf(p);
  const Subspace& b = out.kernel.subspace;
  const HopfAlgebra& big = p.big();
  const HopfAlgebra& small = p.small();
  out.boson = bosonisation(out.kernel.braided);
  const Subspace bh = Subspace::tensor(b, Subspace::full(small.space()));
  out.psi = corestrict(path({Stage{big.comul()}, Stage{out.kernel.generators.f, p.proj()}}), bh)
                .relabel(big.space(), out.boson.space());
  out.phi = path({Stage{b.inclusion(), p.incl()}, Stage{big.mul()}});
  Report& r = out.report;
  const Check c1 = equality_check("psi phi = id", compose(out.psi, out.phi), out.boson.id());
  const Check c2 = equality_check("phi psi = id", compose(out.phi, out.psi), big.id());
  for (const Check* c : {&c1, &c2})
    if (c->status == Status::Fail)
      throw IsoFailure(c->name + " fails at (" + c->witness->row + ", " + c->witness->col + "): " +
                       c->witness->lhs + " vs " + c->witness->rhs);
  r.add(c1);
  r.add(c2);
  r.add(check_morphism(big, out.boson, out.psi), "psi ");
  r.add(check_hopf(out.boson), "bosonisation ");
  return out;
}

}  // namespace hopfforge
