#pragma once

#include <string>

#include "hopfforge/axioms.hpp"
#include "hopfforge/hopf.hpp"
#include "hopfforge/report.hpp"

namespace hopfforge {

// A pair of Hopf algebra maps proj: big -> small and incl: small -> big with
// proj incl = id. Both algebras live in the same ambient category.
class HopfProjection {
 public:
  HopfProjection(HopfAlgebra big, HopfAlgebra small, LinMap proj, LinMap incl)
      : big_(std::move(big)), small_(std::move(small)), proj_(std::move(proj)),
        incl_(std::move(incl)) {
    if (proj_.dom() != big_.space() || proj_.cod() != small_.space())
      throw DimensionMismatch("projection map has the wrong shape");
    if (incl_.dom() != small_.space() || incl_.cod() != big_.space())
      throw DimensionMismatch("inclusion map has the wrong shape");
    if (!same_category(big_.object(), small_.object()))
      throw DimensionMismatch("projection between algebras in different categories");
    if (compose(proj_, incl_) != small_.id())
      throw NotAProjection("proj after incl is not the identity of " + small_.name());
  }

  static HopfProjection identity_of(const HopfAlgebra& h) {
    return HopfProjection(h, h, h.id(), h.id());
  }

  // (eps, eta): the projection onto the base field.
  static HopfProjection trivial_of(const HopfAlgebra& h) {
    const LinMap one = LinMap::identity(Space::unit());
    const HopfAlgebra k("k", unit_object(h.object()), one, one, one, one, one);
    return HopfProjection(h, k, h.counit(), h.unit());
  }

  const HopfAlgebra& big() const { return big_; }
  const HopfAlgebra& small() const { return small_; }
  const LinMap& proj() const { return proj_; }
  const LinMap& incl() const { return incl_; }
  // incl proj, an idempotent on the big algebra.
  LinMap retraction() const { return compose(incl_, proj_); }

 private:
  HopfAlgebra big_, small_;
  LinMap proj_, incl_;
};

inline Report check_projection(const HopfProjection& p) {
  Report r("check-projection");
  r.add(equality_check("proj incl = id", compose(p.proj(), p.incl()), p.small().id()));
  r.add(check_morphism(p.big(), p.small(), p.proj()), "proj ");
  r.add(check_morphism(p.small(), p.big(), p.incl()), "incl ");
  return r;
}

}  // namespace hopfforge
