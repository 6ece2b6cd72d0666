#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hopfforge/error.hpp"
#include "hopfforge/linmap.hpp"
#include "hopfforge/rational.hpp"
#include "hopfforge/space.hpp"

namespace hopfforge {

namespace elim {

// Sparse integer vector, sorted by index, no zeros.
using IntVec = std::vector<std::pair<std::size_t, Integer>>;

inline IntVec to_integer(const SparseVec& v) {
  Integer den = 1;
  for (const auto& [i, q] : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  IntVec out;
  out.reserve(v.size());
  for (const auto& [i, q] : v) out.emplace_back(i, Integer(q.get_num() * (den / q.get_den())));
  return out;
}

// Divides by the gcd of the entries and makes the lead positive.
inline void normalize(IntVec& v) {
  if (v.empty()) return;
  Integer g = 0;
  for (const auto& [i, a] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  if (v.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [i, a] : v) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
}

inline const Integer* entry(const IntVec& v, std::size_t idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx,
                             [](const auto& t, std::size_t i) { return t.first < i; });
  return (it != v.end() && it->first == idx) ? &it->second : nullptr;
}

// v <- p_lead * v - v[at] * p, which clears position `at` (the lead of p).
inline IntVec cross_eliminate(const IntVec& v, const IntVec& p, std::size_t at) {
  const Integer* vc = entry(v, at);
  if (!vc) return v;
  const Integer a = p.front().second;
  const Integer b = *vc;
  IntVec out;
  out.reserve(v.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < p.size()) {
    if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
      out.emplace_back(v[i].first, a * v[i].second);
      ++i;
    } else if (i == v.size() || p[j].first < v[i].first) {
      out.emplace_back(p[j].first, -b * p[j].second);
      ++j;
    } else {
      Integer c = a * v[i].second - b * p[j].second;
      if (c != 0) out.emplace_back(v[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  normalize(out);
  return out;
}

// Integer echelon form: pivots keyed by lead index.
class Echelon {
 public:
  // Reduces v against the existing pivots at its successive leads. Returns the
  // remainder (empty when v lies in the span).
  IntVec reduce_leads(IntVec v) const {
    while (!v.empty()) {
      auto it = pivots_.find(v.front().first);
      if (it == pivots_.end()) break;
      v = cross_eliminate(v, it->second, it->first);
    }
    return v;
  }

  // Adds v if independent; returns whether it was.
  bool insert(IntVec v) {
    v = reduce_leads(std::move(v));
    if (v.empty()) return false;
    normalize(v);
    const std::size_t lead = v.front().first;
    pivots_.emplace(lead, std::move(v));
    return true;
  }

  std::size_t size() const { return pivots_.size(); }

  // Reduced echelon rows with rational entries, lead coefficient 1, zero at
  // every other lead, ordered by lead.
  std::vector<SparseVec> reduced() const {
    std::map<std::size_t, IntVec> rows = pivots_;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
      IntVec& p = it->second;
      for (auto jt = rows.upper_bound(it->first); jt != rows.end(); ++jt)
        if (entry(p, jt->first)) p = cross_eliminate(p, jt->second, jt->first);
    }
    std::vector<SparseVec> out;
    out.reserve(rows.size());
    for (const auto& [lead, p] : rows) {
      SparseVec r;
      r.reserve(p.size());
      const Integer& a = p.front().second;
      for (const auto& [i, c] : p) {
        Rational q(c, a);
        q.canonicalize();
        r.emplace_back(i, std::move(q));
      }
      out.push_back(std::move(r));
    }
    return out;
  }

 private:
  std::map<std::size_t, IntVec> pivots_;
};

}  // namespace elim

// Canonical basis of the span of `vecs`: reduced row echelon form with leads
// at the smallest index.
inline std::vector<SparseVec> span_basis(const std::vector<SparseVec>& vecs) {
  elim::Echelon e;
  for (const auto& v : vecs) e.insert(elim::to_integer(v));
  return e.reduced();
}

// Kernel vectors of f (not yet canonical). Columns are pushed one at a time
// with a tag block recording the combination, so only the image part is
// eliminated.
inline std::vector<SparseVec> kernel_vectors(const LinMap& f) {
  const std::size_t m = f.rows(), n = f.cols();
  elim::Echelon image;
  std::vector<SparseVec> kernel;
  for (std::size_t j = 0; j < n; ++j) {
    SparseVec col = f.column(j);
    col.emplace_back(m + j, Rational(1));
    elim::IntVec v = image.reduce_leads(elim::to_integer(col));
    if (v.empty()) continue;
    if (v.front().first >= m) {
      SparseVec k;
      k.reserve(v.size());
      for (const auto& [i, c] : v) k.emplace_back(i - m, Rational(c));
      kernel.push_back(std::move(k));
    } else {
      image.insert(std::move(v));
    }
  }
  return kernel;
}

inline std::size_t rank(const LinMap& f) { return f.cols() - kernel_vectors(f).size(); }

inline bool is_invertible(const LinMap& f) {
  return f.rows() == f.cols() && kernel_vectors(f).empty();
}

// Exact inverse by solving against the identity; throws if singular.
inline LinMap inverse(const LinMap& f) {
  if (!is_invertible(f)) throw MathError("matrix is not invertible");
  const std::size_t n = f.cols();
  // Row-reduce [f^T | I]: rows of the reduced form hold the inverse transposed.
  std::vector<SparseVec> rows(n);
  for (std::size_t j = 0; j < n; ++j) {
    rows[j] = f.column(j);
    rows[j].emplace_back(n + j, Rational(1));
  }
  const auto red = span_basis(rows);
  // Row k of the reduced form is e_k followed by column k of the inverse.
  std::vector<SparseVec> cols(n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [i, q] : red[k])
      if (i >= n) cols[k].emplace_back(i - n, q);
  return LinMap(f.cod(), f.dom(), std::move(cols));
}

namespace detail {

inline std::string format_coefficient(const Rational& q, bool first) {
  std::string s;
  if (q < 0)
    s = "-";
  else if (!first)
    s = "+";
  const Rational a = abs(q);
  if (a != 1) s += to_string(a) + "*";
  return s;
}

inline std::string vector_expression(const Space& ambient, const SparseVec& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k)
    out += format_coefficient(v[k].second, k == 0) + ambient.label(v[k].first);
  return out.empty() ? "0" : out;
}

}  // namespace detail

// A subspace of an ambient space, given by a canonical basis. The subspace's
// own coordinate space has one basis vector per basis element, labelled by
// its expression in the ambient basis where that is short and unambiguous.
class Subspace {
 public:
  Subspace() = default;

  Subspace(Space ambient, const std::vector<SparseVec>& spanning)
      : ambient_(std::move(ambient)), basis_(span_basis(spanning)) {
    leads_.reserve(basis_.size());
    for (const auto& b : basis_) leads_.push_back(b.front().first);
    std::vector<std::string> labels;
    std::unordered_set<std::string> seen;
    bool ok = true;
    for (const auto& b : basis_) {
      std::string l = detail::vector_expression(ambient_, b);
      if (l.size() > 48 || !seen.insert(l).second) ok = false;
      labels.push_back(std::move(l));
    }
    if (!ok)
      for (std::size_t k = 0; k < labels.size(); ++k) labels[k] = "v" + std::to_string(k);
    // A one-dimensional span of the unit keeps its plain label.
    space_ = basis_.empty() ? Space(std::vector<std::string>{}) : Space(std::move(labels));
    std::vector<SparseVec> cols = basis_;
    inclusion_ = LinMap(space_, ambient_, std::move(cols));
  }

  static Subspace full(const Space& ambient) {
    std::vector<SparseVec> e(ambient.dim());
    for (std::size_t i = 0; i < e.size(); ++i) e[i].emplace_back(i, Rational(1));
    return Subspace(ambient, e);
  }

  // Products of basis vectors form the canonical basis of the tensor product.
  static Subspace tensor(const Subspace& a, const Subspace& b) {
    const std::size_t db = b.ambient_.dim();
    std::vector<SparseVec> vecs;
    vecs.reserve(a.dim() * b.dim());
    for (const auto& x : a.basis_)
      for (const auto& y : b.basis_) {
        SparseVec v;
        for (const auto& [i, p] : x)
          for (const auto& [j, q] : y) v.emplace_back(i * db + j, p * q);
        vecs.push_back(std::move(v));
      }
    Subspace s;
    s.ambient_ = hopfforge::tensor(a.ambient_, b.ambient_);
    s.basis_ = std::move(vecs);
    for (const auto& v : s.basis_) s.leads_.push_back(v.front().first);
    s.space_ = hopfforge::tensor(a.space_, b.space_);
    std::vector<SparseVec> cols = s.basis_;
    s.inclusion_ = LinMap(s.space_, s.ambient_, std::move(cols));
    return s;
  }

  const Space& ambient() const { return ambient_; }
  const Space& space() const { return space_; }
  const LinMap& inclusion() const { return inclusion_; }
  const std::vector<SparseVec>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  // Coordinates of an ambient vector lying in the subspace. Throws
  // ClosureFailure when it does not.
  SparseVec coordinates(const SparseVec& v) const {
    SparseVec c;
    for (std::size_t k = 0; k < leads_.size(); ++k) {
      auto it = std::lower_bound(v.begin(), v.end(), leads_[k],
                                 [](const auto& t, std::size_t i) { return t.first < i; });
      if (it != v.end() && it->first == leads_[k]) c.emplace_back(k, it->second);
    }
    if (apply_map(inclusion_, c) != v)
      throw ClosureFailure("vector " + detail::vector_expression(ambient_, v) +
                           " does not lie in the subspace");
    return c;
  }

  bool contains(const SparseVec& v) const {
    try {
      coordinates(v);
      return true;
    } catch (const ClosureFailure&) {
      return false;
    }
  }

  bool contains(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw DimensionMismatch("subspaces of different spaces");
    for (const auto& b : o.basis_)
      if (!contains(b)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  std::string describe() const {
    std::string out = "span{";
    for (std::size_t k = 0; k < basis_.size(); ++k)
      out += (k ? ", " : "") + detail::vector_expression(ambient_, basis_[k]);
    return out + "}";
  }

 private:
  Space ambient_;
  std::vector<SparseVec> basis_;
  std::vector<std::size_t> leads_;
  Space space_;
  LinMap inclusion_;
};

inline Subspace kernel_basis(const LinMap& f) { return Subspace(f.dom(), kernel_vectors(f)); }

inline Subspace image(const LinMap& f) { return Subspace(f.cod(), f.columns()); }

// f with its codomain cut down to `sub`. Throws ClosureFailure if some image
// leaves the subspace.
inline LinMap corestrict(const LinMap& f, const Subspace& sub) {
  if (f.cod() != sub.ambient()) throw DimensionMismatch("corestrict: codomain is not the ambient");
  std::vector<SparseVec> cols(f.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    try {
      cols[j] = sub.coordinates(f.column(j));
    } catch (const ClosureFailure&) {
      throw ClosureFailure("image of " + f.dom().label(j) + " leaves the subspace " +
                           sub.describe());
    }
  }
  return LinMap(f.dom(), sub.space(), std::move(cols));
}

// f restricted to `src` and corestricted to `dst`.
inline LinMap restrict_map(const LinMap& f, const Subspace& src, const Subspace& dst) {
  return corestrict(compose(f, src.inclusion()), dst);
}

// Whether f(src) lies in dst, with the first offending basis vector.
struct RestrictionResult {
  bool ok = true;
  std::optional<std::size_t> witness;  // index into src.basis()
  std::string witness_expression;
};

inline RestrictionResult check_restriction(const LinMap& f, const Subspace& src,
                                           const Subspace& dst) {
  if (f.dom() != src.ambient() || f.cod() != dst.ambient())
    throw DimensionMismatch("check_restriction: subspaces do not match the map");
  for (std::size_t k = 0; k < src.dim(); ++k) {
    const SparseVec img = apply_map(f, src.basis()[k]);
    if (!dst.contains(img))
      return {false, k, detail::vector_expression(dst.ambient(), img)};
  }
  return {};
}

}  // namespace hopfforge
