#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hopfforge/error.hpp"

namespace hopfforge {

// A finite-dimensional space with labelled basis.
//
// Tensor products are kept strict and flat: a space is an ordered list of
// atomic factors, the unit space is the empty list, and basis index
// (i_1, ..., i_k) of a product is flattened row-major (last factor fastest).
// Labels of product spaces are generated on demand, so large intermediate
// products never allocate label tables.
class Space {
 public:
  // The unit object (the base field), dimension 1.
  Space() = default;

  explicit Space(std::vector<std::string> labels) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second)
        throw SchemaError("duplicate basis label \"" + l + "\"");
    atoms_.push_back(std::make_shared<const Atom>(Atom{std::move(labels)}));
  }

  static Space unit() { return Space(); }

  static Space numbered(std::size_t dim, const std::string& prefix = "e") {
    std::vector<std::string> labels;
    labels.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i));
    return Space(std::move(labels));
  }

  std::size_t dim() const {
    std::size_t d = 1;
    for (const auto& a : atoms_) d *= a->labels.size();
    return d;
  }

  bool is_unit() const { return atoms_.empty(); }
  std::size_t factor_count() const { return atoms_.size(); }

  Space factor(std::size_t k) const {
    Space s;
    s.atoms_.push_back(atoms_.at(k));
    return s;
  }

  std::string label(std::size_t index) const {
    if (atoms_.empty()) return "1";
    std::vector<std::size_t> digits(atoms_.size());
    for (std::size_t k = atoms_.size(); k-- > 0;) {
      const std::size_t n = atoms_[k]->labels.size();
      digits[k] = index % n;
      index /= n;
    }
    std::string out;
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
      if (k) out += "\xE2\x8A\x97";  // U+2297 tensor sign
      out += atoms_[k]->labels[digits[k]];
    }
    return out;
  }

  // Labels of an atomic space (or the single label of the unit).
  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    const std::size_t n = dim();
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(label(i));
    return out;
  }

  friend Space tensor(const Space& a, const Space& b) {
    Space s;
    s.atoms_.reserve(a.atoms_.size() + b.atoms_.size());
    s.atoms_.insert(s.atoms_.end(), a.atoms_.begin(), a.atoms_.end());
    s.atoms_.insert(s.atoms_.end(), b.atoms_.begin(), b.atoms_.end());
    return s;
  }

  friend bool operator==(const Space& a, const Space& b) {
    if (a.atoms_.size() != b.atoms_.size()) return false;
    for (std::size_t k = 0; k < a.atoms_.size(); ++k) {
      if (a.atoms_[k] == b.atoms_[k]) continue;
      if (a.atoms_[k]->labels != b.atoms_[k]->labels) return false;
    }
    return true;
  }
  friend bool operator!=(const Space& a, const Space& b) { return !(a == b); }

  std::string describe() const {
    if (atoms_.empty()) return "k";
    std::string out;
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
      if (k) out += "(x)";
      out += "Q^" + std::to_string(atoms_[k]->labels.size());
    }
    return out;
  }

 private:
  struct Atom {
    std::vector<std::string> labels;
  };
  std::vector<std::shared_ptr<const Atom>> atoms_;
};

template <typename... Rest>
Space tensor(const Space& a, const Space& b, const Rest&... rest) {
  if constexpr (sizeof...(rest) == 0)
    return tensor(a, b);
  else
    return tensor(tensor(a, b), rest...);
}

}  // namespace hopfforge
