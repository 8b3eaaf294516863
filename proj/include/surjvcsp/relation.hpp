#pragma once

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "surjvcsp/errors.hpp"
#include "surjvcsp/value.hpp"

namespace surjvcsp {

/// Maximum supported relation arity.
inline constexpr int kMaxArity = 8;

/// An r-tuple over {0,1}, encoded as the table index k = sum x_i * 2^(r-i)
/// (x_1 is the most significant bit). Index order is lexicographic order.
using Tuple = std::uint32_t;

inline constexpr Tuple table_size(int arity) { return Tuple{1} << arity; }

/// Label of 1-based coordinate i of an arity-r tuple.
inline constexpr int coord(Tuple t, int i, int arity) { return (t >> (arity - i)) & 1U; }

inline constexpr Tuple with_coord(Tuple t, int i, int arity, int label) {
  const Tuple bit = Tuple{1} << (arity - i);
  return label ? (t | bit) : (t & ~bit);
}

/// Builds a tuple from labels x_1..x_r.
inline Tuple make_tuple(std::initializer_list<int> labels) {
  Tuple t = 0;
  for (int x : labels) t = (t << 1) | static_cast<Tuple>(x & 1);
  return t;
}

inline std::string tuple_string(Tuple t, int arity) {
  std::string s;
  for (int i = 1; i <= arity; ++i) s.push_back(coord(t, i, arity) ? '1' : '0');
  return s;
}

inline void check_arity(int arity) {
  if (arity < 1 || arity > kMaxArity)
    throw ArgumentError("arity " + std::to_string(arity) + " outside [1, 8]");
}

/// A crisp relation: a set of r-tuples.
class Relation {
 public:
  Relation() : arity_(1) {}
  explicit Relation(int arity) : arity_(arity) { check_arity(arity); }
  Relation(int arity, std::initializer_list<Tuple> members) : Relation(arity) {
    for (Tuple t : members) insert(t);
  }

  static Relation full(int arity) {
    Relation r(arity);
    for (Tuple t = 0; t < table_size(arity); ++t) r.insert(t);
    return r;
  }

  int arity() const { return arity_; }
  bool contains(Tuple t) const { return t < table_size(arity_) && bits_[t]; }
  void insert(Tuple t) {
    if (t >= table_size(arity_)) throw ArgumentError("Relation: tuple out of range");
    bits_.set(t);
  }
  void erase(Tuple t) { bits_.reset(t); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  /// Members in lexicographic order.
  std::vector<Tuple> members() const {
    std::vector<Tuple> out;
    for (Tuple t = 0; t < table_size(arity_); ++t)
      if (bits_[t]) out.push_back(t);
    return out;
  }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.arity_ == b.arity_ && a.bits_ == b.bits_;
  }

 private:
  int arity_;
  std::bitset<256> bits_;
};

/// A function {0,1}^r -> Q u {inf}, stored as a full table.
class WeightedRelation {
 public:
  WeightedRelation() : arity_(1), table_(2, Value(0)) {}
  WeightedRelation(int arity, std::vector<Value> table) : arity_(arity), table_(std::move(table)) {
    check_arity(arity);
    if (table_.size() != table_size(arity))
      throw ArgumentError("WeightedRelation: table length must be 2^arity");
  }

  /// The crisp weighted relation with value 0 on members and infinity elsewhere.
  static WeightedRelation crisp(const Relation& rho) {
    std::vector<Value> table(table_size(rho.arity()), Value::infinity());
    for (Tuple t : rho.members()) table[t] = Value(0);
    return WeightedRelation(rho.arity(), std::move(table));
  }

  int arity() const { return arity_; }
  const Value& operator()(Tuple t) const { return table_.at(t); }
  const std::vector<Value>& table() const { return table_; }

  /// Minimum finite value; nullopt when nothing is feasible.
  std::optional<Value> min_value() const {
    std::optional<Value> best;
    for (const Value& v : table_)
      if (v.is_finite() && (!best || v < *best)) best = v;
    return best;
  }

  /// Maximum finite value; nullopt when nothing is feasible.
  std::optional<Value> max_finite_value() const {
    std::optional<Value> best;
    for (const Value& v : table_)
      if (v.is_finite() && (!best || v > *best)) best = v;
    return best;
  }

  friend bool operator==(const WeightedRelation& a, const WeightedRelation& b) {
    return a.arity_ == b.arity_ && a.table_ == b.table_;
  }

 private:
  int arity_;
  std::vector<Value> table_;
};

inline Relation feas(const WeightedRelation& g) {
  Relation r(g.arity());
  for (Tuple t = 0; t < table_size(g.arity()); ++t)
    if (g(t).is_finite()) r.insert(t);
  return r;
}

inline Relation opt(const WeightedRelation& g) {
  Relation r(g.arity());
  const auto lo = g.min_value();
  if (!lo) return r;
  for (Tuple t = 0; t < table_size(g.arity()); ++t)
    if (g(t) == *lo) r.insert(t);
  return r;
}

inline bool is_crisp(const WeightedRelation& g) { return feas(g) == opt(g); }

/// 0 on members of rho, 1 elsewhere.
inline WeightedRelation soft(const Relation& rho) {
  std::vector<Value> table(table_size(rho.arity()), Value(1));
  for (Tuple t : rho.members()) table[t] = Value(0);
  return WeightedRelation(rho.arity(), std::move(table));
}

/// Exchanges the labels 0 and 1 in every coordinate.
inline WeightedRelation negate(const WeightedRelation& g) {
  const Tuple all = table_size(g.arity()) - 1;
  std::vector<Value> table(g.table().size());
  for (Tuple t = 0; t <= all; ++t) table[t] = g(t ^ all);
  return WeightedRelation(g.arity(), std::move(table));
}

inline Relation negate(const Relation& rho) {
  const Tuple all = table_size(rho.arity()) - 1;
  Relation out(rho.arity());
  for (Tuple t : rho.members()) out.insert(t ^ all);
  return out;
}

// Closure operations.

inline WeightedRelation add_constant(const WeightedRelation& g, const Value& c) {
  if (c.is_infinite()) throw ArgumentError("add_constant: constant must be finite");
  std::vector<Value> table = g.table();
  for (Value& v : table) v += c;
  return WeightedRelation(g.arity(), std::move(table));
}

/// c * g for c >= 0; scaling by 0 yields the 0/inf table of Feas(g).
inline WeightedRelation scale(const WeightedRelation& g, const Value& c) {
  if (c < Value(0)) throw ArgumentError("scale: factor must be non-negative");
  std::vector<Value> table = g.table();
  for (Value& v : table) v = c * v;
  return WeightedRelation(g.arity(), std::move(table));
}

/// g'(x_1..x_r') = g(x_f(1), ..., x_f(r)) for f : [r] -> [r'] given 1-based.
inline WeightedRelation coord_map(const WeightedRelation& g, std::span<const int> f,
                                  int new_arity) {
  check_arity(new_arity);
  if (static_cast<int>(f.size()) != g.arity())
    throw ArgumentError("coord_map: mapping length must equal arity");
  for (int j : f)
    if (j < 1 || j > new_arity) throw ArgumentError("coord_map: image outside [r']");
  std::vector<Value> table(table_size(new_arity));
  for (Tuple t = 0; t < table_size(new_arity); ++t) {
    Tuple src = 0;
    for (int i = 1; i <= g.arity(); ++i)
      src = with_coord(src, i, g.arity(), coord(t, f[i - 1], new_arity));
    table[t] = g(src);
  }
  return WeightedRelation(new_arity, std::move(table));
}

namespace detail {

/// Removes coordinate i from t (arity r), yielding an (r-1)-tuple.
inline Tuple drop_coord(Tuple t, int i, int arity) {
  Tuple out = 0;
  for (int j = 1; j <= arity; ++j)
    if (j != i) out = (out << 1) | static_cast<Tuple>(coord(t, j, arity));
  return out;
}

}  // namespace detail

/// Minimum over coordinate i. Arity-1 inputs are rejected.
inline WeightedRelation minimise(const WeightedRelation& g, int i) {
  if (g.arity() < 2) throw ArgumentError("minimise: nullary relations unsupported");
  if (i < 1 || i > g.arity()) throw ArgumentError("minimise: coordinate out of range");
  std::vector<Value> table(table_size(g.arity() - 1), Value::infinity());
  for (Tuple t = 0; t < table_size(g.arity()); ++t) {
    Value& slot = table[detail::drop_coord(t, i, g.arity())];
    slot = min(slot, g(t));
  }
  return WeightedRelation(g.arity() - 1, std::move(table));
}

/// Fixes coordinate i to label d. Arity-1 inputs are rejected.
inline WeightedRelation pin(const WeightedRelation& g, int i, int d) {
  if (g.arity() < 2) throw ArgumentError("pin: nullary relations unsupported");
  if (i < 1 || i > g.arity()) throw ArgumentError("pin: coordinate out of range");
  if (d != 0 && d != 1) throw ArgumentError("pin: label must be 0 or 1");
  std::vector<Value> table(table_size(g.arity() - 1));
  for (Tuple t = 0; t < table_size(g.arity()); ++t)
    if (coord(t, i, g.arity()) == d) table[detail::drop_coord(t, i, g.arity())] = g(t);
  return WeightedRelation(g.arity() - 1, std::move(table));
}

inline WeightedRelation add(const WeightedRelation& a, const WeightedRelation& b) {
  if (a.arity() != b.arity()) throw ArgumentError("add: arities differ");
  std::vector<Value> table(a.table().size());
  for (Tuple t = 0; t < table.size(); ++t) table[t] = a(t) + b(t);
  return WeightedRelation(a.arity(), std::move(table));
}

/// True when a and b differ by a finite additive constant (same Feas and a
/// constant difference on it).
inline bool equivalent_mod_constant(const WeightedRelation& a, const WeightedRelation& b) {
  if (a.arity() != b.arity()) return false;
  std::optional<Value> shift;
  for (Tuple t = 0; t < table_size(a.arity()); ++t) {
    if (a(t).is_infinite() != b(t).is_infinite()) return false;
    if (a(t).is_infinite()) continue;
    const Value d = a(t) - b(t);
    if (shift && *shift != d) return false;
    shift = d;
  }
  return true;
}

/// A finite, named collection of weighted relations, in insertion order.
class Language {
 public:
  using Entry = std::pair<std::string, WeightedRelation>;

  Language() = default;
  Language(std::initializer_list<Entry> entries) {
    for (const auto& [name, rel] : entries) add(name, rel);
  }

  void add(std::string name, WeightedRelation rel) {
    if (find(name)) throw ArgumentError("Language: duplicate relation name '" + name + "'");
    entries_.emplace_back(std::move(name), std::move(rel));
  }

  const WeightedRelation* find(std::string_view name) const {
    for (const auto& [n, r] : entries_)
      if (n == name) return &r;
    return nullptr;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Entry> entries_;
};

inline Language negate(const Language& lang) {
  Language out;
  for (const auto& [name, rel] : lang.entries()) out.add(name, negate(rel));
  return out;
}

}  // namespace surjvcsp
