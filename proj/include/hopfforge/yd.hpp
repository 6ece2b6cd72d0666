#pragma once

#include <optional>
#include <string>

#include "hopfforge/axioms.hpp"
#include "hopfforge/hopf.hpp"
#include "hopfforge/linalg.hpp"
#include "hopfforge/projection.hpp"
#include "hopfforge/report.hpp"

namespace hopfforge {

// A Yetter-Drinfeld module is an Object with a YD layer; a braided Hopf
// algebra is a HopfAlgebra whose object is one.
using YDModule = Object;
using BraidedHopfAlgebra = HopfAlgebra;

// YD module over a Hopf algebra in Vect on a plain space.
inline YDModule make_yd(const HopfAlgebra& over, const Space& space, const LinMap& action,
                        const LinMap& coaction) {
  return Object::yd(over, Object(space), action, coaction);
}

// Module, comodule and compatibility laws, with the parent braiding inserted
// as in the compatibility square.
inline Report check_yd(const YDModule& v) {
  Report r("check-yd");
  const HopfAlgebra& h = v.over();
  const Object& vu = v.under();
  const Object& ho = h.object();
  const LinMap iv = identity(v.space()), ih = h.id();
  const LinMap& act = v.action();
  const LinMap& coact = v.coaction();

  r.add(equality_check("module associativity", path({Stage{h.mul(), iv}, Stage{act}}),
                       path({Stage{ih, act}, Stage{act}})));
  r.add(equality_check("module unit", path({Stage{h.unit(), iv}, Stage{act}}), iv));
  r.add(equality_check("comodule coassociativity", path({Stage{coact}, Stage{h.comul(), iv}}),
                       path({Stage{coact}, Stage{ih, coact}})));
  r.add(equality_check("comodule counit", path({Stage{coact}, Stage{h.counit(), iv}}), iv));
  const LinMap lhs = path({Stage{h.comul(), iv}, Stage{ih, ih, coact},
                           Stage{ih, braiding(ho, ho), iv}, Stage{h.mul(), act}});
  const LinMap rhs = path({Stage{h.comul(), iv}, Stage{ih, braiding(ho, vu)}, Stage{act, ih},
                           Stage{coact, ih}, Stage{ih, braiding(vu, ho)}, Stage{h.mul(), iv}});
  r.add(equality_check("yd compatibility", lhs, rhs));
  return r;
}

// H over itself with the adjoint action and the regular coaction.
inline YDModule regular_yd(const HopfAlgebra& h) {
  return Object::yd(h, h.object(), adjoint_action(h), h.comul());
}

// Action |>_ad (i (x) id) and coaction (proj (x) id) Delta on the big algebra.
inline YDModule projection_yd(const HopfProjection& p) {
  const HopfAlgebra& big = p.big();
  const LinMap action = path({Stage{p.incl(), big.id()}, Stage{adjoint_action(big)}});
  const LinMap coaction = path({Stage{big.comul()}, Stage{p.proj(), big.id()}});
  return Object::yd(p.small(), big.object(), action, coaction);
}

inline LinMap yd_braiding(const YDModule& v, const YDModule& w) {
  const LinMap r = braiding(v, w);
  if (!is_invertible(r)) throw NonInvertibleBraiding("braiding matrix is singular");
  return r;
}

// Transports a YD module over the small algebra of p to one over the big
// algebra: action rho (proj (x) id), coaction (incl (x) id) phi.
inline YDModule yd_pushforward(const HopfProjection& p, const YDModule& b) {
  if (!b.over().same_as(p.small()))
    throw UsageError("module is not over the small algebra of the projection");
  const LinMap ib = identity(b.space());
  const LinMap action = path({Stage{p.proj(), ib}, Stage{b.action()}});
  const LinMap coaction = path({Stage{b.coaction()}, Stage{p.incl(), ib}});
  return Object::yd(p.big(), b.under(), action, coaction);
}

inline BraidedHopfAlgebra with_object(const HopfAlgebra& a, const Object& obj,
                                      const std::string& name) {
  return HopfAlgebra(name, obj, a.mul(), a.unit(), a.comul(), a.counit(), a.antipode());
}

inline BraidedHopfAlgebra yd_pushforward(const HopfProjection& p, const BraidedHopfAlgebra& a) {
  return with_object(a, yd_pushforward(p, a.object()), a.name());
}

// The product (a (x) b)(c (x) d) = a (b_H |> c) (x) b_A d on A (x) A, built
// from the coaction, parent braiding and action.
inline LinMap twisted_product(const BraidedHopfAlgebra& a) {
  const Object& o = a.object();
  const HopfAlgebra& h = o.over();
  const LinMap ia = a.id(), ih = h.id();
  return path({Stage{ia, o.coaction(), ia, ia}, Stage{ia, ih, braiding(o.under(), o.under()), ia},
               Stage{ia, o.action(), ia, ia}, Stage{a.mul(), a.mul()}});
}

// The YD-module-map laws for the structure maps, then the Hopf axioms with
// the YD braiding.
inline Report check_braided_hopf(const BraidedHopfAlgebra& a) {
  Report r("braided-hopf");
  const Object& o = a.object();
  if (o.is_vect()) throw UsageError(a.name() + " is not an object of a Yetter-Drinfeld category");
  r.add(check_yd(o), "yd: ");
  const HopfAlgebra& h = o.over();
  const Object& au = o.under();
  const Object& ho = h.object();
  const LinMap ia = a.id(), ih = h.id();
  const LinMap& act = o.action();
  const LinMap& coact = o.coaction();
  const LinMap rha = braiding(ho, au), rah = braiding(au, ho);

  r.add(equality_check("module algebra", path({Stage{ih, a.mul()}, Stage{act}}),
                       path({Stage{h.comul(), ia, ia}, Stage{ih, rha, ia}, Stage{act, act},
                             Stage{a.mul()}})));
  r.add(equality_check("module algebra unit", path({Stage{ih, a.unit()}, Stage{act}}),
                       compose(a.unit(), h.counit())));
  r.add(equality_check("comodule algebra", path({Stage{a.mul()}, Stage{coact}}),
                       path({Stage{coact, coact}, Stage{ih, rah, ia}, Stage{h.mul(), a.mul()}})));
  r.add(equality_check("comodule algebra unit", compose(coact, a.unit()),
                       tensor_map(h.unit(), a.unit())));
  r.add(equality_check("module coalgebra", path({Stage{act}, Stage{a.comul()}}),
                       path({Stage{h.comul(), a.comul()}, Stage{ih, rha, ia}, Stage{act, act}})));
  r.add(equality_check("module coalgebra counit", compose(a.counit(), act),
                       tensor_map(h.counit(), a.counit())));
  r.add(equality_check("comodule coalgebra", path({Stage{coact}, Stage{ih, a.comul()}}),
                       path({Stage{a.comul()}, Stage{coact, coact}, Stage{ih, rah, ia},
                             Stage{h.mul(), ia, ia}})));
  r.add(equality_check("comodule coalgebra counit", path({Stage{coact}, Stage{ih, a.counit()}}),
                       compose(h.unit(), a.counit())));
  r.add(equality_check("antipode module map", compose(a.antipode(), act),
                       path({Stage{ih, a.antipode()}, Stage{act}})));
  r.add(equality_check("antipode comodule map", compose(coact, a.antipode()),
                       path({Stage{coact}, Stage{ih, a.antipode()}})));
  r.add(equality_check("comultiplication multiplicative (twisted product)",
                       compose(a.comul(), a.mul()),
                       path({Stage{a.comul(), a.comul()}, Stage{twisted_product(a)}})));
  r.add(check_hopf(a));
  return r;
}

// a |>_bad b = a_(1) (a_(2)H |> b) S(a_(2)A), written with the coaction,
// action and braided antipode.
inline LinMap braided_adjoint_action(const BraidedHopfAlgebra& a) {
  const Object& o = a.object();
  const HopfAlgebra& h = o.over();
  const LinMap ia = a.id(), ih = h.id();
  return path({Stage{a.comul(), ia}, Stage{ia, o.coaction(), ia},
               Stage{ia, ih, braiding(o.under(), o.under())}, Stage{ia, o.action(), a.antipode()},
               Stage{a.mul(), ia}, Stage{a.mul()}});
}

// A braided map t: A -> B over a Hopf algebra map r between the bases.
inline Report check_braided_map(const BraidedHopfAlgebra& a, const BraidedHopfAlgebra& b,
                                const LinMap& r_base, const LinMap& t) {
  Report r("braided-map");
  r.add(check_morphism(a, b, t));
  const Object& oa = a.object();
  const Object& ob = b.object();
  r.add(check_morphism(oa.over(), ob.over(), r_base), "base ");
  r.add(equality_check("action square", path({Stage{r_base, t}, Stage{ob.action()}}),
                       compose(t, oa.action())));
  r.add(equality_check("coaction square", path({Stage{oa.coaction()}, Stage{r_base, t}}),
                       compose(ob.coaction(), t)));
  return r;
}

// Both hexagons in the strict ambient:
// R_{X,Y(x)Z} = (id_Y (x) R_{X,Z})(R_{X,Y} (x) id_Z) and
// R_{X(x)Y,Z} = (R_{X,Z} (x) id_Y)(id_X (x) R_{Y,Z}).
inline Report check_hexagons(const Object& x, const Object& y, const Object& z) {
  Report r("hexagons");
  const LinMap ix = identity(x.space()), iy = identity(y.space()), iz = identity(z.space());
  r.add(equality_check("hexagon X past Y (x) Z", braiding(x, tensor_object(y, z)),
                       path({Stage{braiding(x, y), iz}, Stage{iy, braiding(x, z)}})));
  r.add(equality_check("hexagon X (x) Y past Z", braiding(tensor_object(x, y), z),
                       path({Stage{ix, braiding(y, z)}, Stage{braiding(x, z), iy}})));
  return r;
}

// ---------------------------------------------------------------------------
// Smash products.

struct SmashProduct {
  Space space;
  LinMap mul, unit;       // the algebra on I (x) H
  std::optional<HopfAlgebra> hopf;  // when the Hopf upgrade was requested
  Report report{"smash-product"};
};

// (u (x) x)(v (x) y) = u (x' |> v) (x) x'' y for an H-module algebra I in Vect.
inline SmashProduct smash_algebra(const Space& i_space, const LinMap& i_mul, const LinMap& i_unit,
                                  const HopfAlgebra& h, const LinMap& action) {
  const LinMap ii = identity(i_space), ih = h.id();
  SmashProduct s;
  s.space = tensor(i_space, h.space());
  s.mul = path({Stage{ii, h.comul(), ii, ih}, Stage{ii, ih, flip(h.space(), i_space), ih},
                Stage{ii, action, ih, ih}, Stage{i_mul, h.mul()}});
  s.unit = tensor_map(i_unit, h.unit());
  return s;
}

// Smash product of two Hopf algebras with the tensor coproduct and antipode
// S(u (x) x) = (1 (x) S(x))(S(u) (x) 1). Requires x' (x) x'' |> v = x'' (x) x' |> v.
inline SmashProduct smash_product(const HopfAlgebra& i, const HopfAlgebra& h, const LinMap& action,
                                  bool want_hopf) {
  SmashProduct s = smash_algebra(i.space(), i.mul(), i.unit(), h, action);
  const LinMap ii = i.id(), ih = h.id();
  s.report.add(equality_check("module algebra", path({Stage{ih, i.mul()}, Stage{action}}),
                              path({Stage{h.comul(), ii, ii}, Stage{ih, flip(h.space(), i.space()), ii},
                                    Stage{action, action}, Stage{i.mul()}})));
  if (!want_hopf) return s;
  const Check comp = equality_check("coproduct compatibility",
                                    path({Stage{h.comul(), ii}, Stage{ih, action}}),
                                    path({Stage{h.comul(), ii}, Stage{flip(h.space(), h.space()), ii},
                                          Stage{ih, action}}));
  s.report.add(comp);
  if (comp.status == Status::Fail)
    throw CompatibilityFailed("smash product: coproduct compatibility fails at " +
                              comp.witness->row + ", " + comp.witness->col);
  s.report.add(equality_check("module coalgebra", path({Stage{action}, Stage{i.comul()}}),
                              path({Stage{h.comul(), i.comul()},
                                    Stage{ih, flip(h.space(), i.space()), ii},
                                    Stage{action, action}})));
  const LinMap comul =
      path({Stage{i.comul(), h.comul()}, Stage{ii, flip(i.space(), h.space()), ih}});
  const LinMap counit = tensor_map(i.counit(), h.counit());
  const LinMap antipode = path({Stage{flip(i.space(), h.space())},
                                Stage{i.unit(), h.antipode(), i.antipode(), h.unit()},
                                Stage{s.mul}});
  s.hopf = HopfAlgebra(i.name() + "#" + h.name(), Object(s.space), s.mul, s.unit, comul, counit,
                       antipode);
  s.report.add(check_hopf(*s.hopf));
  return s;
}

}  // namespace hopfforge
