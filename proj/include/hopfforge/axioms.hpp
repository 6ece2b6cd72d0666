#pragma once

#include <string>
#include <vector>

#include "hopfforge/hopf.hpp"
#include "hopfforge/linalg.hpp"
#include "hopfforge/report.hpp"

namespace hopfforge {

// Iterated comultiplication (Delta (x) id) Delta.
inline LinMap comul2(const HopfAlgebra& h) {
  return path({Stage{h.comul()}, Stage{h.comul(), h.id()}});
}

// (Delta (x) id (x) id)(Delta (x) id) Delta.
inline LinMap comul3(const HopfAlgebra& h) {
  return path({Stage{h.comul()}, Stage{h.comul(), h.id()}, Stage{h.comul(), h.id(), h.id()}});
}

inline LinMap self_braiding(const HopfAlgebra& h) { return braiding(h.object(), h.object()); }

// Product on H (x) H in the ambient category: (nabla (x) nabla)(id (x) R (x) id).
inline LinMap tensor_square_mul(const HopfAlgebra& h) {
  return path({Stage{h.id(), self_braiding(h), h.id()}, Stage{h.mul(), h.mul()}});
}

inline LinMap unit_counit(const HopfAlgebra& h) { return compose(h.unit(), h.counit()); }

// Every Hopf axiom as an exact matrix identity, with the ambient braiding
// inserted in the bialgebra and antipode laws.
inline Report check_hopf(const HopfAlgebra& h) {
  Report r("check-hopf");
  const LinMap id = h.id();
  const LinMap& m = h.mul();
  const LinMap& e = h.unit();
  const LinMap& d = h.comul();
  const LinMap& c = h.counit();
  const LinMap& s = h.antipode();
  const LinMap rhh = self_braiding(h);

  r.add(equality_check("associativity", path({Stage{m, id}, Stage{m}}),
                       path({Stage{id, m}, Stage{m}})));
  r.add(equality_check("left unit", path({Stage{e, id}, Stage{m}}), id));
  r.add(equality_check("right unit", path({Stage{id, e}, Stage{m}}), id));
  r.add(equality_check("coassociativity", path({Stage{d}, Stage{d, id}}),
                       path({Stage{d}, Stage{id, d}})));
  r.add(equality_check("left counit", path({Stage{d}, Stage{c, id}}), id));
  r.add(equality_check("right counit", path({Stage{d}, Stage{id, c}}), id));
  r.add(equality_check("bialgebra compatibility", path({Stage{m}, Stage{d}}),
                       path({Stage{d, d}, Stage{id, rhh, id}, Stage{m, m}})));
  r.add(equality_check("comultiplication unital", compose(d, e), tensor_map(e, e)));
  r.add(equality_check("counit multiplicative", compose(c, m), tensor_map(c, c)));
  r.add(equality_check("counit unital", compose(c, e), LinMap::identity(Space::unit())));
  r.add(equality_check("left antipode", path({Stage{d}, Stage{s, id}, Stage{m}}),
                       unit_counit(h)));
  r.add(equality_check("right antipode", path({Stage{d}, Stage{id, s}, Stage{m}}),
                       unit_counit(h)));
  r.add(bool_check("antipode invertible", is_invertible(s)));
  r.add(equality_check("antipode anti-multiplicative", compose(s, m),
                       path({Stage{rhh}, Stage{s, s}, Stage{m}})));
  r.add(equality_check("antipode anti-comultiplicative", compose(d, s),
                       path({Stage{d}, Stage{s, s}, Stage{rhh}})));
  r.add(as_info(equality_check("cocommutative", compose(rhh, d), d)));
  return r;
}

inline bool check_cocommutative(const HopfAlgebra& h) {
  return compose(self_braiding(h), h.comul()) == h.comul();
}

// Compatibility of a linear map with every structure map.
inline Report check_morphism(const HopfAlgebra& src, const HopfAlgebra& dst, const LinMap& f) {
  if (f.dom() != src.space() || f.cod() != dst.space())
    throw DimensionMismatch("morphism " + src.name() + " -> " + dst.name() + " has shape " +
                            std::to_string(f.rows()) + "x" + std::to_string(f.cols()));
  Report r("check-morphism");
  r.add(equality_check("multiplicative", compose(f, src.mul()),
                       path({Stage{f, f}, Stage{dst.mul()}})));
  r.add(equality_check("unital", compose(f, src.unit()), dst.unit()));
  r.add(equality_check("comultiplicative", compose(dst.comul(), f),
                       path({Stage{src.comul()}, Stage{f, f}})));
  r.add(equality_check("counital", compose(dst.counit(), f), src.counit()));
  r.add(equality_check("antipode", compose(dst.antipode(), f), compose(f, src.antipode())));
  return r;
}

// a |> b = a' b S(a''); the right variant is b <| a = S(a') b a''.
inline LinMap adjoint_action(const HopfAlgebra& h, bool right = false) {
  const LinMap id = h.id();
  if (!right)
    return path({Stage{h.comul(), id}, Stage{id, self_braiding(h)}, Stage{id, id, h.antipode()},
                 Stage{h.mul(), id}, Stage{h.mul()}});
  return path({Stage{id, h.comul()}, Stage{self_braiding(h), id}, Stage{h.antipode(), id, id},
               Stage{h.mul(), id}, Stage{h.mul()}});
}

// y -> y' S(y''') (x) y''; the right variant is y -> y'' (x) S(y') y'''.
inline LinMap adjoint_coaction(const HopfAlgebra& h, bool right = false) {
  const LinMap id = h.id();
  if (!right)
    return path({Stage{comul2(h)}, Stage{id, self_braiding(h)}, Stage{id, h.antipode(), id},
                 Stage{h.mul(), id}});
  return path({Stage{comul2(h)}, Stage{self_braiding(h), id}, Stage{id, h.antipode(), id},
               Stage{id, h.mul()}});
}

// Basis vectors v with Delta v = v (x) v and eps(v) = 1.
inline std::vector<std::size_t> grouplike_basis_elements(const HopfAlgebra& h) {
  std::vector<std::size_t> out;
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const SparseVec d = h.comul().column(i);
    const bool g = d.size() == 1 && d[0].first == i * n + i && d[0].second == 1 &&
                   h.counit().at(0, i) == 1;
    if (g) out.push_back(i);
  }
  return out;
}

inline bool is_grouplike(const HopfAlgebra& h, const SparseVec& v) {
  const SparseVec d = apply_map(h.comul(), v);
  std::vector<std::pair<std::size_t, Rational>> vv;
  for (const auto& [i, a] : v)
    for (const auto& [j, b] : v) vv.emplace_back(i * h.dim() + j, a * b);
  return d == detail::canonical(vv) && apply_map(h.counit(), v) == SparseVec{{0, Rational(1)}};
}

}  // namespace hopfforge
