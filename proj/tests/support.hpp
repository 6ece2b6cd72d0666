#pragma once

// Test-only helpers: seeded generators and a plain dense-matrix oracle that
// shares no code with the sparse/lazy evaluator in the library.

#include <random>
#include <string>
#include <vector>

#include "hopfforge/builders.hpp"
#include "hopfforge/group.hpp"
#include "hopfforge/linmap.hpp"

namespace testing_support {

using hopfforge::LinMap;
using hopfforge::Rational;
using hopfforge::Space;

using Dense = std::vector<std::vector<Rational>>;

inline Dense dense(const LinMap& f) {
  Dense m(f.rows(), std::vector<Rational>(f.cols()));
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) m[r][c] = f.at(r, c);
  return m;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Dense out(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

// Row-major Kronecker product: (A (x) B)[i p + k][j q + l] = A[i][j] B[k][l].
inline Dense dense_kron(const Dense& a, const Dense& b) {
  const std::size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
  Dense out(ar * br, std::vector<Rational>(ac * bc));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
  return out;
}

// Textbook Gauss-Jordan over Q.
inline std::size_t dense_rank(Dense m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational t = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= t * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

class Gen {
 public:
  explicit Gen(unsigned seed) : eng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }

  // Small numerators and denominators, zero with probability `zero`.
  Rational rational(double zero = 0.4) {
    if (coin(zero)) return 0;
    Rational q(integer(-5, 5), integer(1, 4));
    q.canonicalize();
    return q;
  }

  LinMap map(const Space& dom, const Space& cod, double zero = 0.4) {
    std::vector<std::vector<Rational>> rows(cod.dim(), std::vector<Rational>(dom.dim()));
    for (auto& row : rows)
      for (auto& v : row) v = rational(zero);
    return LinMap::from_rows(dom, cod, rows);
  }

  Space space(int lo = 1, int hi = 4, const std::string& prefix = "e") {
    return Space::numbered(static_cast<std::size_t>(integer(lo, hi)), prefix);
  }

 private:
  std::mt19937 eng_;
};

// C_p x C_q as its own Cayley table, labelled "a^i b^j".
inline hopfforge::GroupTable product_of_cyclic(std::size_t p, std::size_t q) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j)
      labels.push_back("a" + std::to_string(i) + "b" + std::to_string(j));
  std::vector<std::vector<std::size_t>> t(p * q, std::vector<std::size_t>(p * q));
  for (std::size_t x = 0; x < p * q; ++x)
    for (std::size_t y = 0; y < p * q; ++y)
      t[x][y] = ((x / q + y / q) % p) * q + (x % q + y % q) % q;
  return hopfforge::GroupTable(labels, t);
}

// A handful of small groups for property sweeps.
inline std::vector<hopfforge::GroupTable> small_groups() {
  using namespace hopfforge;
  return {trivial_group(),        cyclic_group(2), cyclic_group(3), cyclic_group(4),
          cyclic_group(5),        product_of_cyclic(2, 2), product_of_cyclic(2, 3),
          symmetric_group_3()};
}

}  // namespace testing_support
