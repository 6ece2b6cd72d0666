#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopfforge/error.hpp"
#include "hopfforge/linalg.hpp"
#include "hopfforge/linmap.hpp"
#include "hopfforge/space.hpp"

namespace hopfforge {

class HopfAlgebra;
struct YDLayer;

// An object of the ambient category: plain vector spaces, Yetter-Drinfeld
// modules over a Hopf algebra in Vect, or Yetter-Drinfeld modules over a
// braided Hopf algebra that itself lives in such a category.
class Object {
 public:
  static constexpr int max_depth = 2;

  Object() = default;
  explicit Object(Space s) : space_(std::move(s)) {}

  // A YD module over `over` with underlying object `under` (same space, one
  // level down). Validates shapes only; check_yd validates the laws.
  static Object yd(const HopfAlgebra& over, const Object& under, const LinMap& action,
                   const LinMap& coaction);

  const Space& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  int depth() const;
  bool is_vect() const { return !yd_; }

  const HopfAlgebra& over() const;
  const Object& under() const;
  const LinMap& action() const;
  const LinMap& coaction() const;

  // Same object with its space relabelled (dimension must agree).
  Object relabel(const Space& s) const;

 private:
  Space space_;
  std::shared_ptr<const YDLayer> yd_;
};

class HopfAlgebra {
 public:
  HopfAlgebra() : HopfAlgebra(base_field()) {}

  HopfAlgebra(std::string name, Object object, LinMap mul, LinMap unit, LinMap comul,
              LinMap counit, LinMap antipode) {
    const Space& h = object.space();
    const Space hh = tensor(h, h);
    expect(mul, hh, h, "multiplication");
    expect(unit, Space::unit(), h, "unit");
    expect(comul, h, hh, "comultiplication");
    expect(counit, h, Space::unit(), "counit");
    expect(antipode, h, h, "antipode");
    if (!is_invertible(antipode))
      throw NonInvertibleAntipode("antipode of " + name + " is not invertible");
    auto d = std::make_shared<Data>();
    d->name = std::move(name);
    d->object = std::move(object);
    d->mul = std::move(mul);
    d->unit = std::move(unit);
    d->comul = std::move(comul);
    d->counit = std::move(counit);
    d->antipode = std::move(antipode);
    d_ = std::move(d);
  }

  // The base field as a Hopf algebra (the zero object).
  static HopfAlgebra base_field() {
    static const HopfAlgebra k = [] {
      const Space u = Space::unit();
      const LinMap id = LinMap::identity(u);
      return HopfAlgebra("k", Object(u), id, id, id, id, id);
    }();
    return k;
  }

  const std::string& name() const { return d_->name; }
  const Object& object() const { return d_->object; }
  const Space& space() const { return d_->object.space(); }
  std::size_t dim() const { return space().dim(); }
  bool is_braided() const { return !d_->object.is_vect(); }

  const LinMap& mul() const { return d_->mul; }
  const LinMap& unit() const { return d_->unit; }
  const LinMap& comul() const { return d_->comul; }
  const LinMap& counit() const { return d_->counit; }
  const LinMap& antipode() const { return d_->antipode; }
  LinMap id() const { return LinMap::identity(space()); }

  // Index of the unit in the basis when the unit is a basis vector.
  SparseVec unit_vector() const { return d_->unit.column(0); }

  bool same_as(const HopfAlgebra& o) const {
    if (d_ == o.d_) return true;
    return object().depth() == o.object().depth() && space() == o.space() && mul() == o.mul() &&
           comul() == o.comul() && antipode() == o.antipode() && unit() == o.unit() &&
           counit() == o.counit();
  }

  HopfAlgebra renamed(std::string name) const {
    HopfAlgebra h = *this;
    auto d = std::make_shared<Data>(*d_);
    d->name = std::move(name);
    h.d_ = std::move(d);
    return h;
  }

  HopfAlgebra with_mul(LinMap mul) const {
    return HopfAlgebra(name(), object(), std::move(mul), unit(), comul(), counit(), antipode());
  }

 private:
  struct Data {
    std::string name;
    Object object;
    LinMap mul, unit, comul, counit, antipode;
  };

  static void expect(const LinMap& f, const Space& dom, const Space& cod, const char* what) {
    if (f.dom() != dom || f.cod() != cod)
      throw DimensionMismatch(std::string(what) + " has shape " + std::to_string(f.rows()) + "x" +
                              std::to_string(f.cols()) + ", expected " +
                              std::to_string(cod.dim()) + "x" + std::to_string(dom.dim()));
  }

  std::shared_ptr<const Data> d_;
};

struct YDLayer {
  HopfAlgebra over;
  Object under;
  LinMap action, coaction;
};

inline Object Object::yd(const HopfAlgebra& over, const Object& under, const LinMap& action,
                         const LinMap& coaction) {
  const int depth = over.object().depth() + 1;
  if (depth > max_depth)
    throw NestingTooDeep("Yetter-Drinfeld modules nest at most " + std::to_string(max_depth) +
                         " levels deep");
  if (under.depth() != over.object().depth())
    throw DimensionMismatch("underlying object lives in a different category than the algebra");
  const Space& v = under.space();
  if (action.dom() != tensor(over.space(), v) || action.cod() != v)
    throw DimensionMismatch("action has the wrong shape");
  if (coaction.dom() != v || coaction.cod() != tensor(over.space(), v))
    throw DimensionMismatch("coaction has the wrong shape");
  Object o(v);
  o.yd_ = std::make_shared<const YDLayer>(YDLayer{over, under, action, coaction});
  return o;
}

inline int Object::depth() const { return yd_ ? yd_->over.object().depth() + 1 : 0; }

inline const HopfAlgebra& Object::over() const {
  if (!yd_) throw UsageError("object carries no Yetter-Drinfeld structure");
  return yd_->over;
}
inline const Object& Object::under() const {
  if (!yd_) throw UsageError("object carries no Yetter-Drinfeld structure");
  return yd_->under;
}
inline const LinMap& Object::action() const {
  if (!yd_) throw UsageError("object carries no Yetter-Drinfeld structure");
  return yd_->action;
}
inline const LinMap& Object::coaction() const {
  if (!yd_) throw UsageError("object carries no Yetter-Drinfeld structure");
  return yd_->coaction;
}

inline Object Object::relabel(const Space& s) const {
  if (s.dim() != space_.dim()) throw DimensionMismatch("relabel: dimensions differ");
  if (!yd_) return Object(s);
  const HopfAlgebra& h = yd_->over;
  const Object under = yd_->under.relabel(s);
  return yd(h, under, yd_->action.relabel(tensor(h.space(), s), s),
            yd_->coaction.relabel(s, tensor(h.space(), s)));
}

inline bool same_category(const Object& a, const Object& b) {
  if (a.depth() != b.depth()) return false;
  if (a.is_vect()) return true;
  return a.over().same_as(b.over());
}

// ---------------------------------------------------------------------------
// Braiding and monoidal structure of the ambient category.

// Vect: the flip. YD(H): R'(v (x) w) = v_H |> w (x) v_V, assembled from the
// coaction of the first factor, the parent braiding, and the action on the
// second factor.
inline LinMap braiding(const Object& x, const Object& y) {
  if (!same_category(x, y))
    throw DimensionMismatch("braiding between objects of different categories");
  if (x.is_vect()) return flip(x.space(), y.space());
  const HopfAlgebra& h = x.over();
  return path({Stage{x.coaction(), identity(y.space())},
               Stage{h.id(), braiding(x.under(), y.under())},
               Stage{y.action(), identity(x.space())}});
}

inline Object unit_object(const Object& like) {
  if (like.is_vect()) return Object(Space::unit());
  const HopfAlgebra& h = like.over();
  return Object::yd(h, unit_object(like.under()), h.counit(), h.unit());
}

inline Object tensor_object(const Object& x, const Object& y) {
  if (!same_category(x, y)) throw DimensionMismatch("tensor of objects of different categories");
  const Space xy = tensor(x.space(), y.space());
  if (x.is_vect()) return Object(xy);
  const HopfAlgebra& h = x.over();
  const Object under = tensor_object(x.under(), y.under());
  const LinMap ix = identity(x.space()), iy = identity(y.space());
  // h |> (x (x) y) = h' |> x (x) h'' |> y, with h'' braided past x.
  const LinMap action = path({Stage{h.comul(), ix, iy},
                              Stage{h.id(), braiding(h.object(), x.under()), iy},
                              Stage{x.action(), y.action()}});
  const LinMap coaction = path({Stage{x.coaction(), y.coaction()},
                                Stage{h.id(), braiding(x.under(), h.object()), iy},
                                Stage{h.mul(), ix, iy}});
  return Object::yd(h, under, action, coaction);
}

template <typename... Rest>
Object tensor_object(const Object& x, const Object& y, const Object& z, const Rest&... rest) {
  return tensor_object(tensor_object(x, y), z, rest...);
}

// Restricts the structure of `obj` to a subspace that is closed under it.
inline Object restrict_object(const Object& obj, const Subspace& sub) {
  if (sub.ambient() != obj.space()) throw DimensionMismatch("subspace of a different space");
  if (obj.is_vect()) return Object(sub.space());
  const HopfAlgebra& h = obj.over();
  const Object under = restrict_object(obj.under(), sub);
  const Subspace hs = Subspace::tensor(Subspace::full(h.space()), sub);
  const LinMap act = corestrict(
      compose(obj.action(), tensor_map(h.id(), sub.inclusion())), sub);
  const LinMap coact = corestrict(compose(obj.coaction(), sub.inclusion()), hs)
                           .relabel(sub.space(), tensor(h.space(), sub.space()));
  return Object::yd(h, under, act.relabel(tensor(h.space(), sub.space()), sub.space()), coact);
}

}  // namespace hopfforge
