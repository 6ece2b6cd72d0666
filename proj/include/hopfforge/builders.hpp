#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hopfforge/group.hpp"
#include "hopfforge/hopf.hpp"

namespace hopfforge {

// Builds a Hopf algebra in Vect from per-basis-vector descriptions.
struct StructureTables {
  std::vector<std::string> basis;
  std::function<SparseVec(std::size_t, std::size_t)> mul;  // e_a * e_b
  SparseVec unit;
  std::function<SparseVec(std::size_t)> comul;  // indices into basis (x) basis
  std::function<Rational(std::size_t)> counit;
  std::function<SparseVec(std::size_t)> antipode;
};

inline HopfAlgebra from_tables(const std::string& name, const StructureTables& t) {
  const Space h(t.basis);
  const std::size_t n = h.dim();
  const Space hh = tensor(h, h);
  std::vector<SparseVec> mul(n * n), comul(n), counit(n), antipode(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = detail::canonical(t.mul(a, b));
  for (std::size_t a = 0; a < n; ++a) {
    comul[a] = detail::canonical(t.comul(a));
    const Rational c = t.counit(a);
    if (c != 0) counit[a].emplace_back(0, c);
    antipode[a] = detail::canonical(t.antipode(a));
  }
  return HopfAlgebra(name, Object(h), LinMap(hh, h, std::move(mul)),
                     vector_map(h, t.unit), LinMap(h, hh, std::move(comul)),
                     LinMap(h, Space::unit(), std::move(counit)), LinMap(h, h, std::move(antipode)));
}

inline HopfAlgebra group_algebra(const GroupTable& g, const std::string& name = "kG") {
  const std::size_t n = g.order();
  StructureTables t;
  t.basis = g.labels();
  t.mul = [&](std::size_t a, std::size_t b) { return SparseVec{{g.mul(a, b), Rational(1)}}; };
  t.unit = {{g.identity(), Rational(1)}};
  t.comul = [n](std::size_t a) { return SparseVec{{a * n + a, Rational(1)}}; };
  t.counit = [](std::size_t) { return Rational(1); };
  t.antipode = [&](std::size_t a) { return SparseVec{{g.inv(a), Rational(1)}}; };
  return from_tables(name, t);
}

// Sweedler's four-dimensional algebra on 1, g, x, gx with g^2 = 1, x^2 = 0,
// xg = -gx, Delta g = g (x) g, Delta x = x (x) 1 + g (x) x.
inline HopfAlgebra sweedler_algebra() {
  // Basis element g^a x^b has index 2b + a; x g = -g x gives
  // (g^a x^b)(g^c x^d) = (-1)^{bc} g^{a+c} x^{b+d}.
  auto idx = [](int a, int b) { return static_cast<std::size_t>(2 * b + a); };
  StructureTables t;
  t.basis = {"1", "g", "x", "gx"};
  t.mul = [idx](std::size_t i, std::size_t j) {
    const int a = static_cast<int>(i % 2), b = static_cast<int>(i / 2);
    const int c = static_cast<int>(j % 2), d = static_cast<int>(j / 2);
    if (b + d > 1) return SparseVec{};
    const int sign = (b * c) % 2 ? -1 : 1;
    return SparseVec{{idx((a + c) % 2, b + d), Rational(sign)}};
  };
  t.unit = {{0, Rational(1)}};
  t.comul = [](std::size_t i) {
    switch (i) {
      case 0: return SparseVec{{0, Rational(1)}};                      // 1(x)1
      case 1: return SparseVec{{5, Rational(1)}};                      // g(x)g
      case 2: return SparseVec{{6, Rational(1)}, {8, Rational(1)}};    // g(x)x + x(x)1
      default: return SparseVec{{3, Rational(1)}, {13, Rational(1)}};  // 1(x)gx + gx(x)g
    }
  };
  t.counit = [](std::size_t i) { return Rational(i < 2 ? 1 : 0); };
  t.antipode = [](std::size_t i) {
    switch (i) {
      case 0: return SparseVec{{0, Rational(1)}};
      case 1: return SparseVec{{1, Rational(1)}};
      case 2: return SparseVec{{3, Rational(-1)}};
      default: return SparseVec{{2, Rational(1)}};
    }
  };
  return from_tables("H4", t);
}

// The linear extension of a map between basis elements.
inline LinMap linearize_hom(const HopfAlgebra& src, const HopfAlgebra& dst,
                            const std::vector<std::size_t>& images) {
  if (images.size() != src.dim()) throw DimensionMismatch("homomorphism table has wrong length");
  std::vector<SparseVec> cols(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] >= dst.dim()) throw DimensionMismatch("homomorphism image out of range");
    cols[i].emplace_back(images[i], Rational(1));
  }
  return LinMap(src.space(), dst.space(), std::move(cols));
}

// eta_B eps_A, the zero morphism.
inline LinMap zero_morphism(const HopfAlgebra& a, const HopfAlgebra& b) {
  return compose(b.unit(), a.counit());
}

}  // namespace hopfforge
