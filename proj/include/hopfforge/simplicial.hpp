#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfforge/axioms.hpp"
#include "hopfforge/builders.hpp"
#include "hopfforge/group.hpp"
#include "hopfforge/hopf.hpp"
#include "hopfforge/report.hpp"

namespace hopfforge {

inline constexpr std::size_t max_simplicial_level = 3;

// Levels H_0..H_N with faces d_i: H_n -> H_{n-1} and degeneracies
// s_j: H_n -> H_{n+1}.
class TruncatedSimplicialHopf {
 public:
  TruncatedSimplicialHopf() = default;

  // faces[n][i] for n = 1..N (faces[0] unused and empty); degeneracies[n][j]
  // for n = 0..N-1.
  TruncatedSimplicialHopf(std::vector<HopfAlgebra> levels, std::vector<std::vector<LinMap>> faces,
                          std::vector<std::vector<LinMap>> degeneracies)
      : levels_(std::move(levels)), faces_(std::move(faces)), degens_(std::move(degeneracies)) {
    if (levels_.empty()) throw SchemaError("simplicial object without levels");
    if (top() > max_simplicial_level)
      throw SchemaError("simplicial objects are truncated at level " +
                        std::to_string(max_simplicial_level));
    if (faces_.empty()) faces_.emplace_back();
    if (faces_.size() != levels_.size() || degens_.size() != top())
      throw SchemaError("face/degeneracy lists do not match the number of levels");
    if (!faces_[0].empty()) throw SchemaError("level 0 has no faces");
    for (std::size_t n = 1; n <= top(); ++n) {
      if (faces_[n].size() != n + 1)
        throw SchemaError("level " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                          " faces");
      for (std::size_t i = 0; i <= n; ++i)
        if (faces_[n][i].dom() != levels_[n].space() || faces_[n][i].cod() != levels_[n - 1].space())
          throw DimensionMismatch("face d" + std::to_string(i) + " at level " + std::to_string(n) +
                                  " has the wrong shape");
    }
    for (std::size_t n = 0; n < top(); ++n) {
      if (degens_[n].size() != n + 1)
        throw SchemaError("level " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                          " degeneracies");
      for (std::size_t j = 0; j <= n; ++j)
        if (degens_[n][j].dom() != levels_[n].space() ||
            degens_[n][j].cod() != levels_[n + 1].space())
          throw DimensionMismatch("degeneracy s" + std::to_string(j) + " from level " +
                                  std::to_string(n) + " has the wrong shape");
    }
  }

  std::size_t top() const { return levels_.size() - 1; }
  const HopfAlgebra& level(std::size_t n) const { return levels_.at(n); }
  const std::vector<HopfAlgebra>& levels() const { return levels_; }
  // d_i on H_n.
  const LinMap& d(std::size_t n, std::size_t i) const { return faces_.at(n).at(i); }
  // s_j on H_n (into H_{n+1}).
  const LinMap& s(std::size_t n, std::size_t j) const { return degens_.at(n).at(j); }
  const std::vector<std::vector<LinMap>>& faces() const { return faces_; }
  const std::vector<std::vector<LinMap>>& degeneracies() const { return degens_; }

  TruncatedSimplicialHopf with_face(std::size_t n, std::size_t i, const LinMap& f) const {
    auto faces = faces_;
    faces.at(n).at(i) = f;
    return TruncatedSimplicialHopf(levels_, faces, degens_);
  }

  TruncatedSimplicialHopf truncated(std::size_t n) const {
    if (n > top()) return *this;
    std::vector<HopfAlgebra> l(levels_.begin(), levels_.begin() + n + 1);
    std::vector<std::vector<LinMap>> f(faces_.begin(), faces_.begin() + n + 1);
    std::vector<std::vector<LinMap>> s(degens_.begin(), degens_.begin() + n);
    return TruncatedSimplicialHopf(l, f, s);
  }

  static TruncatedSimplicialHopf constant(const HopfAlgebra& h, std::size_t top = 3) {
    std::vector<HopfAlgebra> levels(top + 1, h);
    std::vector<std::vector<LinMap>> faces(top + 1), degens(top);
    for (std::size_t n = 1; n <= top; ++n) faces[n].assign(n + 1, h.id());
    for (std::size_t n = 0; n < top; ++n) degens[n].assign(n + 1, h.id());
    return TruncatedSimplicialHopf(levels, faces, degens);
  }

 private:
  std::vector<HopfAlgebra> levels_;
  std::vector<std::vector<LinMap>> faces_, degens_;
};

namespace detail {
inline std::string idx(std::size_t k) { return std::to_string(k); }
}  // namespace detail

// Every instance of the simplicial identities inside the truncation, the
// morphism laws for each face and degeneracy, and the list of projections
// (d_j, s_k) with d_j s_k = id.
inline Report verify_simplicial(const TruncatedSimplicialHopf& t, bool morphisms = true) {
  using detail::idx;
  Report r("simplicial-check");
  const std::size_t top = t.top();
  // (1) d_i d_j = d_{j-1} d_i on H_n, i < j.
  for (std::size_t n = 2; n <= top; ++n)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        r.add(equality_check("(1) d" + idx(i) + " d" + idx(j) + " = d" + idx(j - 1) + " d" +
                                 idx(i) + " on H" + idx(n),
                             compose(t.d(n - 1, i), t.d(n, j)),
                             compose(t.d(n - 1, j - 1), t.d(n, i))));
  // (2) s_i s_j = s_{j+1} s_i on H_n, i <= j.
  for (std::size_t n = 0; n + 2 <= top; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        r.add(equality_check("(2) s" + idx(i) + " s" + idx(j) + " = s" + idx(j + 1) + " s" +
                                 idx(i) + " on H" + idx(n),
                             compose(t.s(n + 1, i), t.s(n, j)),
                             compose(t.s(n + 1, j + 1), t.s(n, i))));
  // (3a)-(3c): d_i s_j on H_n, with s_j: H_n -> H_{n+1}.
  for (std::size_t n = 0; n < top; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= n + 1; ++i) {
        const LinMap lhs = compose(t.d(n + 1, i), t.s(n, j));
        const std::string base = " d" + idx(i) + " s" + idx(j) + " on H" + idx(n);
        if (i < j)
          r.add(equality_check("(3a)" + base, lhs, compose(t.s(n - 1, j - 1), t.d(n, i))));
        else if (i == j || i == j + 1)
          r.add(equality_check("(3b)" + base, lhs, t.level(n).id()));
        else
          r.add(equality_check("(3c)" + base, lhs, compose(t.s(n - 1, j), t.d(n, i - 1))));
      }
  if (morphisms) {
    for (std::size_t n = 1; n <= top; ++n)
      for (std::size_t i = 0; i <= n; ++i)
        r.add(check_morphism(t.level(n), t.level(n - 1), t.d(n, i)),
              "d" + idx(i) + " on H" + idx(n) + " ");
    for (std::size_t n = 0; n < top; ++n)
      for (std::size_t j = 0; j <= n; ++j)
        r.add(check_morphism(t.level(n), t.level(n + 1), t.s(n, j)),
              "s" + idx(j) + " on H" + idx(n) + " ");
  }
  for (std::size_t n = 1; n <= top; ++n) {
    std::string list;
    std::int64_t count = 0;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j : {k, k + 1})
        if (compose(t.d(n, j), t.s(n - 1, k)) == t.level(n - 1).id()) {
          list += (list.empty() ? "" : " ") + std::string("(d") + idx(j) + ",s" + idx(k) + ")";
          ++count;
        }
    r.set("projections H" + idx(n) + "->H" + idx(n - 1), list);
    r.set("projection count H" + idx(n), count);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Group-level data.

struct GroupCrossedModule {
  GroupTable m, n;
  std::vector<std::size_t> boundary;            // M -> N
  std::vector<std::vector<std::size_t>> action;  // action[n][m] = n |> m

  void validate() const {
    validate_action(n, m, action);
    if (!is_group_hom(m, n, boundary)) throw InvalidCrossedModule("boundary is not a homomorphism");
    for (std::size_t a = 0; a < n.order(); ++a)
      for (std::size_t x = 0; x < m.order(); ++x)
        if (boundary[action[a][x]] != n.mul(n.mul(a, boundary[x]), n.inv(a)))
          throw InvalidCrossedModule("boundary is not equivariant at (" + n.label(a) + ", " +
                                     m.label(x) + ")");
    for (std::size_t x = 0; x < m.order(); ++x)
      for (std::size_t y = 0; y < m.order(); ++y)
        if (action[boundary[x]][y] != m.mul(m.mul(x, y), m.inv(x)))
          throw InvalidCrossedModule("Peiffer identity fails at (" + m.label(x) + ", " +
                                     m.label(y) + ")");
  }
};

// Identity crossed module G -> G with conjugation.
inline GroupCrossedModule identity_crossed_module(const GroupTable& g) {
  std::vector<std::size_t> id(g.order());
  for (std::size_t a = 0; a < id.size(); ++a) id[a] = a;
  return {g, g, id, conjugation_action(g)};
}

// M -> N with trivial boundary and trivial action (M abelian).
inline GroupCrossedModule trivial_crossed_module(const GroupTable& m, const GroupTable& n) {
  return {m, n, std::vector<std::size_t>(m.order(), n.identity()), trivial_action(n, m)};
}

using IndexMap = std::vector<std::size_t>;

struct TruncatedSimplicialGroup {
  std::vector<GroupTable> levels;
  std::vector<std::vector<IndexMap>> faces;  // faces[n][i], n >= 1
  std::vector<std::vector<IndexMap>> degeneracies;  // degeneracies[n][j]: G_n -> G_{n+1}

  std::size_t top() const { return levels.size() - 1; }
};

// The nerve G_0 = N, G_k = M x| G_{k-1}, where G_{k-1} acts on M through the
// target of its composite arrow. Elements of G_k are tuples
// (m_k, ..., m_1, n) with index m_k |G_{k-1}| + index(m_{k-1}, ..., n).
inline TruncatedSimplicialGroup nerve_of_crossed_module(const GroupCrossedModule& x,
                                                        std::size_t top = 3) {
  x.validate();
  if (top > max_simplicial_level) throw UsageError("nerve levels are truncated at 3");
  const GroupTable& m = x.m;
  const GroupTable& n = x.n;
  const std::size_t p = m.order(), q = n.order();
  TruncatedSimplicialGroup g;

  using Tuple = std::vector<std::size_t>;  // (m_k, ..., m_1, n)
  auto size_of = [&](std::size_t k) {
    std::size_t s = q;
    for (std::size_t i = 0; i < k; ++i) s *= p;
    return s;
  };
  auto encode = [&](const Tuple& t) {
    std::size_t v = t.back();
    std::size_t scale = q;
    for (std::size_t i = t.size() - 1; i-- > 0;) {
      v += t[i] * scale;
      scale *= p;
    }
    return v;
  };
  auto decode = [&](std::size_t v, std::size_t k) {
    Tuple t(k + 1);
    t[k] = v % q;
    v /= q;
    for (std::size_t i = k; i-- > 0;) {
      t[i] = v % p;
      v /= p;
    }
    return t;
  };
  // Target of the composite arrow of a tuple: boundary(m_k ... m_1) n.
  auto target = [&](const Tuple& t) {
    std::size_t prod = m.identity();
    for (std::size_t i = 0; i + 1 < t.size(); ++i) prod = m.mul(prod, t[i]);
    return n.mul(x.boundary[prod], t.back());
  };

  g.levels.push_back(n);
  for (std::size_t k = 1; k <= top; ++k) {
    const GroupTable& prev = g.levels.back();
    std::vector<std::vector<std::size_t>> act(prev.order(), std::vector<std::size_t>(p));
    for (std::size_t r = 0; r < prev.order(); ++r) {
      const std::size_t tr = target(decode(r, k - 1));
      for (std::size_t y = 0; y < p; ++y) act[r][y] = x.action[tr][y];
    }
    g.levels.push_back(semidirect_product(m, prev, act));
  }

  g.faces.resize(top + 1);
  g.degeneracies.resize(top);
  for (std::size_t k = 1; k <= top; ++k) {
    const std::size_t count = size_of(k);
    g.faces[k].assign(k + 1, IndexMap(count));
    for (std::size_t v = 0; v < count; ++v) {
      const Tuple t = decode(v, k);  // t[0] = m_k, ..., t[k-1] = m_1, t[k] = n
      for (std::size_t i = 0; i <= k; ++i) {
        Tuple u;
        if (i == 0) {
          u.assign(t.begin() + 1, t.end());  // drop m_k
        } else if (i < k) {
          // merge m_{k-i+1} m_{k-i}: positions i-1 and i
          u = t;
          u[i - 1] = m.mul(t[i - 1], t[i]);
          u.erase(u.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
          // last face: act on n by boundary(m_1)
          u.assign(t.begin(), t.end() - 1);
          u.back() = n.mul(x.boundary[t[k - 1]], t[k]);
        }
        g.faces[k][i][v] = encode(u);
      }
    }
  }
  for (std::size_t k = 0; k < top; ++k) {
    const std::size_t count = size_of(k);
    g.degeneracies[k].assign(k + 1, IndexMap(count));
    for (std::size_t v = 0; v < count; ++v) {
      const Tuple t = decode(v, k);
      for (std::size_t j = 0; j <= k; ++j) {
        Tuple u = t;
        u.insert(u.begin() + static_cast<std::ptrdiff_t>(j), m.identity());
        g.degeneracies[k][j][v] = encode(u);
      }
    }
  }
  return g;
}

inline TruncatedSimplicialHopf linearize(const TruncatedSimplicialGroup& g) {
  std::vector<HopfAlgebra> levels;
  for (std::size_t k = 0; k <= g.top(); ++k)
    levels.push_back(group_algebra(g.levels[k], "H" + std::to_string(k)));
  std::vector<std::vector<LinMap>> faces(g.top() + 1), degens(g.top());
  for (std::size_t k = 1; k <= g.top(); ++k)
    for (const auto& f : g.faces[k]) faces[k].push_back(linearize_hom(levels[k], levels[k - 1], f));
  for (std::size_t k = 0; k < g.top(); ++k)
    for (const auto& s : g.degeneracies[k])
      degens[k].push_back(linearize_hom(levels[k], levels[k + 1], s));
  return TruncatedSimplicialHopf(levels, faces, degens);
}

// ---------------------------------------------------------------------------
// Moore complex by enumeration.

inline std::vector<std::size_t> kernel_elements(const GroupTable& g,
                                                const std::vector<const IndexMap*>& maps,
                                                const std::vector<std::size_t>& identities) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool in = true;
    for (std::size_t k = 0; k < maps.size() && in; ++k) in = (*maps[k])[a] == identities[k];
    if (in) out.push_back(a);
  }
  return out;
}

inline bool is_normal_image(const GroupTable& g, const std::vector<std::size_t>& image) {
  std::vector<bool> in(g.order(), false);
  for (auto a : image) in[a] = true;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (auto a : image)
      if (!in[g.mul(g.mul(x, a), g.inv(x))]) return false;
  return true;
}

inline Report moore_group_oracle(const TruncatedSimplicialGroup& g,
                                 const std::optional<GroupCrossedModule>& expected = std::nullopt) {
  Report r("moore-oracle");
  if (g.top() < 2) throw UsageError("the Moore oracle needs levels 0..2");
  const GroupTable& g0 = g.levels[0];
  const GroupTable& g1 = g.levels[1];
  const GroupTable& g2 = g.levels[2];
  const auto n1 = kernel_elements(g1, {&g.faces[1][0]}, {g0.identity()});
  const auto n2 = kernel_elements(g2, {&g.faces[2][0], &g.faces[2][1]},
                                  {g1.identity(), g1.identity()});
  const auto n2p = kernel_elements(g2, {&g.faces[2][0], &g.faces[2][2]},
                                   {g1.identity(), g1.identity()});
  r.set("|N1|", static_cast<std::int64_t>(n1.size()));
  r.set("|N2|", static_cast<std::int64_t>(n2.size()));
  r.set("|N2'|", static_cast<std::int64_t>(n2p.size()));

  std::vector<std::size_t> b1;
  for (auto a : n1) b1.push_back(g.faces[1][1][a]);
  r.add(bool_check("boundary image of N1 normal in G0", is_normal_image(g0, b1)));
  std::vector<std::size_t> b2;
  for (auto a : n2) b2.push_back(g.faces[2][2][a]);
  r.add(bool_check("boundary image of N2 normal in G1", is_normal_image(g1, b2)));

  if (expected) {
    r.add(bool_check("N2 trivial", n2.size() == 1));
    r.add(bool_check("N2' trivial", n2p.size() == 1));
    const GroupCrossedModule& x = *expected;
    // N1 = {(m, 1)}; identify (m, 1) with m.
    const std::size_t q = x.n.order();
    bool shape = n1.size() == x.m.order() && g0.order() == x.n.order();
    bool boundary = shape, act = shape, product = shape;
    if (shape) {
      for (std::size_t k = 0; k < n1.size(); ++k) {
        const std::size_t e = n1[k];
        const std::size_t mk = e / q;
        if (e % q != x.n.identity() || mk != k) shape = false;
      }
    }
    if (shape) {
      for (std::size_t k = 0; k < n1.size(); ++k) {
        if (g.faces[1][1][n1[k]] != x.boundary[k]) boundary = false;
        for (std::size_t h = 0; h < g0.order(); ++h) {
          const std::size_t s = g.degeneracies[0][0][h];
          const std::size_t c = g1.mul(g1.mul(s, n1[k]), g1.inv(s));
          if (c / q != x.action[h][k] || c % q != x.n.identity()) act = false;
        }
        for (std::size_t l = 0; l < n1.size(); ++l)
          if (g1.mul(n1[k], n1[l]) / q != x.m.mul(k, l)) product = false;
      }
    }
    r.add(bool_check("N1 matches M", shape && product));
    r.add(bool_check("boundary matches", shape && boundary));
    r.add(bool_check("action matches", shape && act));
  }
  return r;
}

}  // namespace hopfforge
