#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hopfforge/linmap.hpp"

namespace hopfforge {

enum class Status { Pass, Fail, Info };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "?";
}

struct Witness {
  std::string row, col;  // basis labels of codomain row and domain column
  std::string lhs, rhs;
};

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::optional<Witness> witness;
  std::string detail;

  bool passed() const { return status != Status::Fail; }
};

using Matrix = std::vector<std::vector<std::string>>;
using Value = std::variant<std::int64_t, bool, std::string, Matrix>;

inline Matrix to_matrix(const LinMap& f) {
  Matrix m(f.rows(), std::vector<std::string>(f.cols(), "0"));
  for (std::size_t c = 0; c < f.cols(); ++c)
    f.for_column(c, [&](std::size_t r, const Rational& v) { m[r][c] = to_string(v); });
  return m;
}

class Report {
 public:
  Report() = default;
  explicit Report(std::string command) : command_(std::move(command)) {}

  const std::string& command() const { return command_; }
  void set_command(std::string c) { command_ = std::move(c); }

  Check& add(Check c) {
    checks_.push_back(std::move(c));
    return checks_.back();
  }

  void add(const Report& other, const std::string& prefix = "") {
    for (auto c : other.checks_) {
      if (!prefix.empty()) c.name = prefix + c.name;
      checks_.push_back(std::move(c));
    }
  }

  void set(const std::string& key, Value v) {
    for (auto& [k, old] : derived_)
      if (k == key) {
        old = std::move(v);
        return;
      }
    derived_.emplace_back(key, std::move(v));
  }

  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::pair<std::string, Value>>& derived() const { return derived_; }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.name == name) return &c;
    return nullptr;
  }

  bool passed(const std::string& name) const {
    const Check* c = find(name);
    return c && c->status == Status::Pass;
  }

  bool all_passed() const {
    for (const auto& c : checks_)
      if (c.status == Status::Fail) return false;
    return true;
  }

  int exit_code() const { return all_passed() ? 0 : 1; }

 private:
  std::string command_;
  std::vector<Check> checks_;
  std::vector<std::pair<std::string, Value>> derived_;
};

// Compares two maps entrywise; on mismatch the witness is the first differing
// entry in column-then-row order.
inline Check equality_check(std::string name, const LinMap& lhs, const LinMap& rhs) {
  Check c{std::move(name), Status::Pass, std::nullopt, {}};
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    c.status = Status::Fail;
    c.detail = "shapes differ";
    return c;
  }
  if (auto d = first_difference(lhs, rhs)) {
    c.status = Status::Fail;
    c.witness = Witness{lhs.cod().label(d->row), lhs.dom().label(d->col), to_string(d->lhs),
                        to_string(d->rhs)};
  }
  return c;
}

inline Check bool_check(std::string name, bool ok, std::string detail = {}) {
  return Check{std::move(name), ok ? Status::Pass : Status::Fail, std::nullopt, std::move(detail)};
}

inline Check info_check(std::string name, bool holds, std::optional<Witness> w = std::nullopt,
                        std::string detail = {}) {
  if (detail.empty()) detail = holds ? "holds" : "does not hold";
  return Check{std::move(name), Status::Info, std::move(w), std::move(detail)};
}

// Turns a failed equality into an informational entry (for laws that are
// reported rather than required).
inline Check as_info(Check c) {
  const bool held = c.status == Status::Pass;
  c.status = Status::Info;
  if (c.detail.empty()) c.detail = held ? "holds" : "does not hold";
  return c;
}

}  // namespace hopfforge
