#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hopfforge/error.hpp"

namespace hopfforge {

// A finite group given by its Cayley table. Validated on construction.
class GroupTable {
 public:
  GroupTable() : GroupTable({"1"}, {{0}}) {}

  GroupTable(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table)
      : labels_(std::move(labels)), table_(std::move(table)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw InvalidGroup("group of order 0");
    if (table_.size() != n) throw InvalidGroup("Cayley table has the wrong number of rows");
    for (const auto& row : table_) {
      if (row.size() != n) throw InvalidGroup("Cayley table row of the wrong length");
      for (auto v : row)
        if (v >= n) throw InvalidGroup("Cayley table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw InvalidGroup("not associative at (" + labels_[a] + ", " + labels_[b] + ", " +
                               labels_[c] + ")");
    identity_ = n;
    for (std::size_t e = 0; e < n && identity_ == n; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
      if (ok) identity_ = e;
    }
    if (identity_ == n) throw InvalidGroup("no identity element");
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    for (std::size_t a = 0; a < n; ++a)
      if (inverse_[a] == n) throw InvalidGroup("element " + labels_[a] + " has no inverse");
  }

  std::size_t order() const { return labels_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t identity() const { return identity_; }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

inline GroupTable trivial_group(const std::string& label = "1") {
  return GroupTable({label}, {{0}});
}

// Z/n written multiplicatively with generator `gen`: 1, g, g^2, ...
inline GroupTable cyclic_group(std::size_t n, const std::string& gen = "g") {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k)
    labels.push_back(k == 0 ? "1" : k == 1 ? gen : gen + "^" + std::to_string(k));
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return GroupTable(std::move(labels), std::move(t));
}

// S3 as permutations of {0,1,2} in one-line notation, composed right to left
// ((ab)(x) = a(b(x))). Element 0 is the identity.
inline const std::vector<std::vector<int>>& s3_permutations() {
  static const std::vector<std::vector<int>> p = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                                  {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  return p;
}

inline GroupTable symmetric_group_3() {
  const auto& p = s3_permutations();
  const std::vector<std::string> labels = {"1", "(12)", "(23)", "(13)", "(123)", "(132)"};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<int> ab(3);
      for (int x = 0; x < 3; ++x) ab[x] = p[a][p[b][x]];
      for (std::size_t c = 0; c < 6; ++c)
        if (p[c] == ab) t[a][b] = c;
    }
  return GroupTable(labels, std::move(t));
}

inline int s3_sign(std::size_t a) {
  const auto& p = s3_permutations()[a];
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

inline bool is_group_hom(const GroupTable& g, const GroupTable& h,
                         const std::vector<std::size_t>& f) {
  if (f.size() != g.order()) return false;
  for (auto v : f)
    if (v >= h.order()) return false;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (f[g.mul(a, b)] != h.mul(f[a], f[b])) return false;
  return true;
}

// action[n][m] = n |> m. Validates that each n acts by an automorphism and
// that the assignment is a homomorphism N -> Aut(M).
inline void validate_action(const GroupTable& n, const GroupTable& m,
                            const std::vector<std::vector<std::size_t>>& action) {
  if (action.size() != n.order()) throw InvalidCrossedModule("action table has wrong row count");
  for (std::size_t a = 0; a < n.order(); ++a) {
    if (action[a].size() != m.order() || !is_group_hom(m, m, action[a]))
      throw InvalidCrossedModule("element " + n.label(a) + " does not act by an endomorphism");
    std::vector<bool> hit(m.order(), false);
    for (auto v : action[a]) hit[v] = true;
    for (bool h : hit)
      if (!h) throw InvalidCrossedModule("element " + n.label(a) + " does not act bijectively");
  }
  for (std::size_t x = 0; x < m.order(); ++x)
    if (action[n.identity()][x] != x) throw InvalidCrossedModule("identity acts non-trivially");
  for (std::size_t a = 0; a < n.order(); ++a)
    for (std::size_t b = 0; b < n.order(); ++b)
      for (std::size_t x = 0; x < m.order(); ++x)
        if (action[n.mul(a, b)][x] != action[a][action[b][x]])
          throw InvalidCrossedModule("action is not compatible with the product of N");
}

// M x| N with (m, n)(m', n') = (m (n |> m'), n n'); element (m, n) has index
// m * |N| + n and label "(m,n)" (outer parentheses of nested labels dropped).
inline std::string pair_label(const std::string& a, const std::string& b) {
  auto strip = [](const std::string& s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')' &&
        s.find(',') != std::string::npos)
      return s.substr(1, s.size() - 2);
    return s;
  };
  return "(" + a + "," + strip(b) + ")";
}

inline GroupTable semidirect_product(const GroupTable& m, const GroupTable& n,
                                     const std::vector<std::vector<std::size_t>>& action) {
  validate_action(n, m, action);
  const std::size_t p = m.order(), q = n.order();
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < q; ++b) labels.push_back(pair_label(m.label(a), n.label(b)));
  std::vector<std::vector<std::size_t>> t(p * q, std::vector<std::size_t>(p * q));
  for (std::size_t i = 0; i < p * q; ++i)
    for (std::size_t j = 0; j < p * q; ++j) {
      const std::size_t m1 = i / q, n1 = i % q, m2 = j / q, n2 = j % q;
      t[i][j] = m.mul(m1, action[n1][m2]) * q + n.mul(n1, n2);
    }
  return GroupTable(std::move(labels), std::move(t));
}

inline std::vector<std::vector<std::size_t>> trivial_action(const GroupTable& n,
                                                            const GroupTable& m) {
  std::vector<std::vector<std::size_t>> a(n.order(), std::vector<std::size_t>(m.order()));
  for (auto& row : a)
    for (std::size_t x = 0; x < row.size(); ++x) row[x] = x;
  return a;
}

inline std::vector<std::vector<std::size_t>> conjugation_action(const GroupTable& g) {
  std::vector<std::vector<std::size_t>> a(g.order(), std::vector<std::size_t>(g.order()));
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) a[x][y] = g.mul(g.mul(x, y), g.inv(x));
  return a;
}

}  // namespace hopfforge
