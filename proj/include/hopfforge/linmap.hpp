#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfforge/error.hpp"
#include "hopfforge/rational.hpp"
#include "hopfforge/space.hpp"

namespace hopfforge {

// Sorted by index, no explicit zeros.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

enum class Storage { Auto, Dense, Sparse };

namespace detail {

// Sorts and merges (index, value) terms into a canonical SparseVec.
inline SparseVec canonical(std::vector<std::pair<std::size_t, Rational>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  out.reserve(terms.size());
  for (auto& [i, v] : terms) {
    if (!out.empty() && out.back().first == i)
      out.back().second += v;
    else
      out.emplace_back(i, std::move(v));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& t) { return t.second == 0; }),
            out.end());
  return out;
}

inline bool prefer_sparse(std::size_t rows, std::size_t cols, std::size_t nnz) {
  const std::size_t big = std::max(rows, cols);
  if (big <= 32) return false;
  const double cells = static_cast<double>(rows) * static_cast<double>(cols);
  return cells == 0 || static_cast<double>(nnz) < 0.1 * cells;
}

}  // namespace detail

// A linear map between labelled spaces, stored column by column: column j is
// the image of basis vector j of the domain. Values are immutable and share
// their payload on copy.
class LinMap {
 public:
  LinMap() : LinMap(Space::unit(), Space::unit(), {SparseVec{}}) {}

  LinMap(Space dom, Space cod, std::vector<SparseVec> cols, Storage storage = Storage::Auto) {
    if (cols.size() != dom.dim())
      throw DimensionMismatch("column count " + std::to_string(cols.size()) +
                              " does not match domain dimension " + std::to_string(dom.dim()));
    const std::size_t rows = cod.dim();
    std::size_t nnz = 0;
    for (const auto& c : cols) {
      for (const auto& [r, v] : c)
        if (r >= rows) throw DimensionMismatch("row index out of range");
      nnz += c.size();
    }
    auto d = std::make_shared<Data>();
    d->dom = std::move(dom);
    d->cod = std::move(cod);
    d->storage = resolve(storage, rows, d->dom.dim(), nnz);
    if (d->storage == Storage::Dense) {
      d->dense.assign(rows * d->dom.dim(), Rational(0));
      for (std::size_t j = 0; j < cols.size(); ++j)
        for (auto& [r, v] : cols[j]) d->dense[j * rows + r] = std::move(v);
    } else {
      d->cols = std::move(cols);
    }
    d->nnz = nnz;
    d_ = std::move(d);
  }

  // Rows are indexed by the codomain, columns by the domain.
  static LinMap from_rows(Space dom, Space cod, const std::vector<std::vector<Rational>>& rows,
                          Storage storage = Storage::Auto) {
    if (rows.size() != cod.dim())
      throw DimensionMismatch("row count " + std::to_string(rows.size()) +
                              " does not match codomain dimension " + std::to_string(cod.dim()));
    std::vector<SparseVec> cols(dom.dim());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != dom.dim())
        throw DimensionMismatch("row " + std::to_string(r) + " has " +
                                std::to_string(rows[r].size()) + " entries, expected " +
                                std::to_string(dom.dim()));
      for (std::size_t c = 0; c < rows[r].size(); ++c)
        if (rows[r][c] != 0) cols[c].emplace_back(r, rows[r][c]);
    }
    return LinMap(std::move(dom), std::move(cod), std::move(cols), storage);
  }

  static LinMap identity(const Space& s) {
    std::vector<SparseVec> cols(s.dim());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i].emplace_back(i, Rational(1));
    LinMap m(s, s, std::move(cols));
    std::const_pointer_cast<Data>(m.d_)->identity = true;
    return m;
  }

  static LinMap zero(const Space& dom, const Space& cod) {
    return LinMap(dom, cod, std::vector<SparseVec>(dom.dim()));
  }

  // Multiplication by q on the unit space.
  static LinMap scalar(const Rational& q) {
    return LinMap(Space::unit(), Space::unit(), {q == 0 ? SparseVec{} : SparseVec{{0, q}}});
  }

  const Space& dom() const { return d_->dom; }
  const Space& cod() const { return d_->cod; }
  std::size_t rows() const { return d_->cod.dim(); }
  std::size_t cols() const { return d_->dom.dim(); }
  Storage storage() const { return d_->storage; }
  std::size_t nnz() const { return d_->nnz; }
  bool is_identity_tagged() const { return d_->identity; }

  Rational at(std::size_t r, std::size_t c) const {
    if (d_->storage == Storage::Dense) return d_->dense[c * rows() + r];
    const auto& col = d_->cols[c];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& t, std::size_t i) { return t.first < i; });
    return (it != col.end() && it->first == r) ? it->second : Rational(0);
  }

  SparseVec column(std::size_t c) const {
    if (d_->storage == Storage::Sparse) return d_->cols[c];
    SparseVec out;
    const std::size_t n = rows();
    for (std::size_t r = 0; r < n; ++r) {
      const auto& v = d_->dense[c * n + r];
      if (v != 0) out.emplace_back(r, v);
    }
    return out;
  }

  // Visits the nonzero entries of column c without copying sparse storage.
  template <typename Fn>
  void for_column(std::size_t c, Fn&& fn) const {
    if (d_->storage == Storage::Sparse) {
      for (const auto& [r, v] : d_->cols[c]) fn(r, v);
    } else {
      const std::size_t n = rows();
      for (std::size_t r = 0; r < n; ++r) {
        const auto& v = d_->dense[c * n + r];
        if (v != 0) fn(r, v);
      }
    }
  }

  std::vector<SparseVec> columns() const {
    std::vector<SparseVec> out(cols());
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = column(c);
    return out;
  }

  std::vector<std::vector<Rational>> to_rows() const {
    std::vector<std::vector<Rational>> out(rows(), std::vector<Rational>(cols(), Rational(0)));
    for (std::size_t c = 0; c < cols(); ++c)
      for_column(c, [&](std::size_t r, const Rational& v) { out[r][c] = v; });
    return out;
  }

  LinMap with_storage(Storage s) const { return LinMap(dom(), cod(), columns(), s); }

  // Same matrix, different (equal-dimensional) spaces.
  LinMap relabel(const Space& dom, const Space& cod) const {
    if (dom.dim() != cols() || cod.dim() != rows())
      throw DimensionMismatch("relabel: dimensions differ");
    return LinMap(dom, cod, columns(), storage());
  }

  bool same_entries(const LinMap& o) const {
    if (rows() != o.rows() || cols() != o.cols()) return false;
    for (std::size_t c = 0; c < cols(); ++c)
      if (column(c) != o.column(c)) return false;
    return true;
  }

  friend bool operator==(const LinMap& a, const LinMap& b) {
    return a.dom() == b.dom() && a.cod() == b.cod() && a.same_entries(b);
  }
  friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }

 private:
  struct Data {
    Space dom, cod;
    Storage storage = Storage::Sparse;
    std::vector<Rational> dense;  // column-major
    std::vector<SparseVec> cols;
    std::size_t nnz = 0;
    bool identity = false;
  };

  static Storage resolve(Storage s, std::size_t rows, std::size_t cols, std::size_t nnz) {
    if (s != Storage::Auto) return s;
    return detail::prefer_sparse(rows, cols, nnz) ? Storage::Sparse : Storage::Dense;
  }

  std::shared_ptr<const Data> d_;
};

inline LinMap identity(const Space& s) { return LinMap::identity(s); }

// ---------------------------------------------------------------------------
// Vector-level evaluation.

inline SparseVec apply_map(const LinMap& f, const SparseVec& v) {
  if (f.is_identity_tagged()) return v;
  std::vector<std::pair<std::size_t, Rational>> terms;
  for (const auto& [j, a] : v)
    f.for_column(j, [&](std::size_t r, const Rational& b) { terms.emplace_back(r, a * b); });
  return detail::canonical(std::move(terms));
}

// A tensor product of maps applied as one step of a composite.
class Stage {
 public:
  Stage(LinMap f) : factors_{std::move(f)} {}  // NOLINT: implicit by intent
  Stage(std::initializer_list<LinMap> fs) : factors_(fs) {}
  explicit Stage(std::vector<LinMap> fs) : factors_(std::move(fs)) {}

  Space dom() const {
    Space s;
    for (const auto& f : factors_) s = tensor(s, f.dom());
    return s;
  }
  Space cod() const {
    Space s;
    for (const auto& f : factors_) s = tensor(s, f.cod());
    return s;
  }
  const std::vector<LinMap>& factors() const { return factors_; }

  SparseVec apply(const SparseVec& v) const {
    if (factors_.size() == 1) return apply_map(factors_[0], v);
    const std::size_t k = factors_.size();
    std::vector<std::size_t> in_dims(k), out_dims(k);
    for (std::size_t t = 0; t < k; ++t) {
      in_dims[t] = factors_[t].cols();
      out_dims[t] = factors_[t].rows();
    }
    std::vector<std::pair<std::size_t, Rational>> terms;
    std::vector<std::size_t> digits(k);
    std::vector<std::pair<std::size_t, Rational>> partial, next;
    for (const auto& [idx, coeff] : v) {
      std::size_t rest = idx;
      for (std::size_t t = k; t-- > 0;) {
        digits[t] = rest % in_dims[t];
        rest /= in_dims[t];
      }
      partial.clear();
      partial.emplace_back(0, coeff);
      for (std::size_t t = 0; t < k && !partial.empty(); ++t) {
        next.clear();
        const auto& f = factors_[t];
        if (f.is_identity_tagged()) {
          for (auto& [p, c] : partial) next.emplace_back(p * out_dims[t] + digits[t], std::move(c));
        } else {
          for (const auto& [p, c] : partial)
            f.for_column(digits[t], [&](std::size_t r, const Rational& b) {
              next.emplace_back(p * out_dims[t] + r, c * b);
            });
        }
        std::swap(partial, next);
      }
      for (auto& t : partial) terms.push_back(std::move(t));
    }
    return detail::canonical(std::move(terms));
  }

 private:
  std::vector<LinMap> factors_;
};

// Evaluates the composite of `stages` (listed in application order) on every
// basis vector of the first stage's domain. Intermediate spaces are never
// materialized, only the sparse images of individual basis vectors.
inline LinMap path(const std::vector<Stage>& stages) {
  if (stages.empty()) throw DimensionMismatch("empty composite");
  for (std::size_t s = 1; s < stages.size(); ++s)
    if (stages[s].dom() != stages[s - 1].cod())
      throw DimensionMismatch("composite: stage " + std::to_string(s) + " expects " +
                              stages[s].dom().describe() + " but receives " +
                              stages[s - 1].cod().describe());
  const Space dom = stages.front().dom();
  const Space cod = stages.back().cod();
  std::vector<SparseVec> cols(dom.dim());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    SparseVec v{{j, Rational(1)}};
    for (const auto& st : stages) {
      v = st.apply(v);
      if (v.empty()) break;
    }
    cols[j] = std::move(v);
  }
  return LinMap(dom, cod, std::move(cols));
}

inline LinMap path(std::initializer_list<Stage> stages) {
  return path(std::vector<Stage>(stages));
}

// ---------------------------------------------------------------------------
// Matrix-level operations.

// f after g.
inline LinMap compose(const LinMap& f, const LinMap& g) {
  if (g.cod() != f.dom())
    throw DimensionMismatch("compose: inner spaces differ (" + g.cod().describe() + " vs " +
                            f.dom().describe() + ")");
  if (f.storage() == Storage::Dense && g.storage() == Storage::Dense) {
    const std::size_t n = f.rows(), m = f.cols(), p = g.cols();
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(p, Rational(0)));
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < p; ++j) {
        const Rational b = g.at(k, j);
        if (b == 0) continue;
        for (std::size_t i = 0; i < n; ++i) {
          const Rational a = f.at(i, k);
          if (a != 0) rows[i][j] += a * b;
        }
      }
    return LinMap::from_rows(g.dom(), f.cod(), rows);
  }
  std::vector<SparseVec> cols(g.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = apply_map(f, g.column(j));
  return LinMap(g.dom(), f.cod(), std::move(cols));
}

// Kronecker product: basis e_i (x) e_j maps to index i * dim(second) + j.
inline LinMap tensor_map(const LinMap& f, const LinMap& g) {
  const Space dom = tensor(f.dom(), g.dom());
  const Space cod = tensor(f.cod(), g.cod());
  std::vector<SparseVec> cols(dom.dim());
  const std::size_t gc = g.cols(), gr = g.rows();
  for (std::size_t i = 0; i < f.cols(); ++i) {
    const SparseVec fi = f.column(i);
    for (std::size_t j = 0; j < gc; ++j) {
      const SparseVec gj = g.column(j);
      SparseVec col;
      col.reserve(fi.size() * gj.size());
      for (const auto& [r, a] : fi)
        for (const auto& [s, b] : gj) col.emplace_back(r * gr + s, a * b);
      cols[i * gc + j] = std::move(col);  // already sorted
    }
  }
  const bool dense = f.storage() == Storage::Dense && g.storage() == Storage::Dense;
  LinMap out(dom, cod, std::move(cols));
  if (dense && detail::prefer_sparse(cod.dim(), dom.dim(), out.nnz()) == false)
    return out.with_storage(Storage::Dense);
  return out;
}

template <typename... Rest>
LinMap tensor_map(const LinMap& f, const LinMap& g, const LinMap& h, const Rest&... rest) {
  return tensor_map(tensor_map(f, g), h, rest...);
}

// The symmetric braiding of vector spaces, v (x) w -> w (x) v.
inline LinMap flip(const Space& v, const Space& w) {
  const std::size_t dv = v.dim(), dw = w.dim();
  std::vector<SparseVec> cols(dv * dw);
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t j = 0; j < dw; ++j) cols[i * dw + j].emplace_back(j * dv + i, Rational(1));
  return LinMap(tensor(v, w), tensor(w, v), std::move(cols));
}

inline LinMap linear_combination(const Rational& a, const LinMap& f, const Rational& b,
                                 const LinMap& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    throw DimensionMismatch("linear combination of maps between different spaces");
  std::vector<SparseVec> cols(f.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::vector<std::pair<std::size_t, Rational>> terms;
    f.for_column(j, [&](std::size_t r, const Rational& v) { terms.emplace_back(r, a * v); });
    g.for_column(j, [&](std::size_t r, const Rational& v) { terms.emplace_back(r, b * v); });
    cols[j] = detail::canonical(std::move(terms));
  }
  return LinMap(f.dom(), f.cod(), std::move(cols));
}

inline LinMap operator-(const LinMap& f, const LinMap& g) {
  return linear_combination(1, f, -1, g);
}
inline LinMap operator+(const LinMap& f, const LinMap& g) {
  return linear_combination(1, f, 1, g);
}

// Map from the unit space picking out a vector.
inline LinMap vector_map(const Space& cod, SparseVec v) {
  return LinMap(Space::unit(), cod, {detail::canonical(std::move(v))});
}

// The first differing entry, scanning columns then rows.
struct EntryDiff {
  std::size_t row, col;
  Rational lhs, rhs;
};

inline std::optional<EntryDiff> first_difference(const LinMap& a, const LinMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("comparing maps of different shapes");
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const SparseVec x = a.column(c), y = b.column(c);
    if (x == y) continue;
    std::size_t i = 0, j = 0;
    while (true) {
      const std::size_t rx = i < x.size() ? x[i].first : SIZE_MAX;
      const std::size_t ry = j < y.size() ? y[j].first : SIZE_MAX;
      const std::size_t r = std::min(rx, ry);
      const Rational vx = rx == r ? x[i].second : Rational(0);
      const Rational vy = ry == r ? y[j].second : Rational(0);
      if (vx != vy) return EntryDiff{r, c, vx, vy};
      if (rx == r) ++i;
      if (ry == r) ++j;
    }
  }
  return std::nullopt;
}

}  // namespace hopfforge
