#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "surjvcsp/errors.hpp"
#include "surjvcsp/relation.hpp"
#include "surjvcsp/value.hpp"

namespace surjvcsp {

/// A Boolean assignment to variables 1..n, stored 0-based.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t n, int label = 0) : bits_(n, static_cast<std::uint8_t>(label)) {}
  explicit Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

  /// Parses a string of '0'/'1' characters.
  static Assignment from_string(std::string_view s) {
    Assignment a(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '0' && s[i] != '1') throw ArgumentError("Assignment: expected 0/1 characters");
      a.bits_[i] = s[i] == '1';
    }
    return a;
  }

  /// Variable i (1-based) receives bit (i-1) of mask.
  static Assignment from_mask(std::uint64_t mask, std::size_t n) {
    Assignment a(n);
    for (std::size_t i = 0; i < n; ++i) a.bits_[i] = (mask >> i) & 1U;
    return a;
  }

  /// The k-th assignment in lexicographic order of x_1..x_n (x_1 most
  /// significant).
  static Assignment from_index(std::uint64_t k, std::size_t n) {
    Assignment a(n);
    for (std::size_t i = 0; i < n; ++i) a.bits_[i] = (k >> (n - 1 - i)) & 1U;
    return a;
  }

  std::size_t size() const { return bits_.size(); }
  /// Label of variable i (1-based).
  int operator[](std::size_t i) const { return bits_.at(i - 1); }
  void set(std::size_t i, int label) { bits_.at(i - 1) = static_cast<std::uint8_t>(label & 1); }

  /// X = { i : x_i = 1 } as a bitmask; requires n <= 64.
  std::uint64_t mask() const {
    if (bits_.size() > 64) throw ResourceError("Assignment: more than 64 variables");
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) m |= std::uint64_t{1} << i;
    return m;
  }

  bool is_surjective() const {
    bool zero = false, one = false;
    for (auto b : bits_) (b ? one : zero) = true;
    return zero && one;
  }

  Assignment flipped() const {
    Assignment a = *this;
    for (auto& b : a.bits_) b ^= 1U;
    return a;
  }

  const std::vector<std::uint8_t>& bits() const { return bits_; }

  std::string to_string() const {
    std::string s;
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct Constraint {
  Value weight;
  WeightedRelation relation;
  std::vector<int> scope;  // 1-based, repeats allowed
  std::string name;        // relation name, informational
};

class Instance {
 public:
  Instance() = default;
  explicit Instance(int num_vars) : n_(num_vars) {
    if (num_vars < 1) throw ArgumentError("Instance: at least one variable required");
  }

  int num_vars() const { return n_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  void add(Value weight, WeightedRelation relation, std::vector<int> scope, std::string name = {}) {
    if (weight.is_infinite() || weight < Value(0))
      throw ArgumentError("Instance: weights must be finite and non-negative");
    if (static_cast<int>(scope.size()) != relation.arity())
      throw ArgumentError("Instance: scope length must equal relation arity");
    for (int v : scope)
      if (v < 1 || v > n_) throw ArgumentError("Instance: scope index out of range");
    constraints_.push_back({weight, std::move(relation), std::move(scope), std::move(name)});
  }

  /// Grows the variable set; new variables are unconstrained.
  int add_variables(int count) {
    const int first = n_ + 1;
    n_ += count;
    return first;
  }

  /// Tuple index of the scope under s.
  static Tuple scope_tuple(const Constraint& c, const Assignment& s) {
    Tuple t = 0;
    for (int v : c.scope) t = (t << 1) | static_cast<Tuple>(s[v]);
    return t;
  }

 private:
  int n_ = 1;
  std::vector<Constraint> constraints_;
};

inline Value evaluate(const Instance& inst, const Assignment& s) {
  if (static_cast<int>(s.size()) != inst.num_vars())
    throw ArgumentError("evaluate: assignment length differs from variable count");
  Value total(0);
  for (const auto& c : inst.constraints()) {
    total += c.weight * c.relation(Instance::scope_tuple(c, s));
    if (total.is_infinite()) return total;
  }
  return total;
}

/// Exchanges labels in every constraint relation.
inline Instance negate(const Instance& inst) {
  Instance out(inst.num_vars());
  for (const auto& c : inst.constraints()) out.add(c.weight, negate(c.relation), c.scope, c.name);
  return out;
}

/// The language of distinct relations used by an instance, named by constraint.
inline Language language_of(const Instance& inst) {
  Language lang;
  int anon = 0;
  for (const auto& c : inst.constraints()) {
    bool seen = false;
    for (const auto& [n, r] : lang.entries())
      if (r == c.relation) seen = true;
    if (seen) continue;
    std::string name = c.name.empty() ? "r" + std::to_string(++anon) : c.name;
    while (lang.find(name)) name += "'";
    lang.add(name, c.relation);
  }
  return lang;
}

}  // namespace surjvcsp
