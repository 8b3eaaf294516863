#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "surjvcsp/errors.hpp"
#include "surjvcsp/value.hpp"
#include "surjvcsp/vertex_set.hpp"

namespace surjvcsp {

/// Oracle for a set function on the ground set {1..n} with value(empty) = 0.
class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual int n() const = 0;
  virtual Value value(VertexSet x) const = 0;
  Value operator()(VertexSet x) const { return value(x); }
};

using SetFunctionPtr = std::shared_ptr<const SetFunction>;

/// Largest ground set stored as an explicit table.
inline constexpr int kDenseTableLimit = 20;

class DenseTable final : public SetFunction {
 public:
  DenseTable(int n, std::vector<Value> table) : n_(n), table_(std::move(table)) {
    if (n < 0 || n > kDenseTableLimit) throw ResourceError("DenseTable: n exceeds 20");
    if (table_.size() != (std::size_t{1} << n))
      throw ArgumentError("DenseTable: table length must be 2^n");
    if (!table_[0].is_zero()) throw ArgumentError("DenseTable: value of the empty set must be 0");
  }
  /// All-zero table.
  explicit DenseTable(int n) : DenseTable(n, std::vector<Value>(std::size_t{1} << n, Value(0))) {}

  int n() const override { return n_; }
  Value value(VertexSet x) const override { return table_.at(x); }
  const std::vector<Value>& table() const { return table_; }

 private:
  int n_;
  std::vector<Value> table_;
};

class ScaledFunction final : public SetFunction {
 public:
  ScaledFunction(Value c, SetFunctionPtr inner) : c_(c), inner_(std::move(inner)) {
    if (c_ < Value(0) || c_.is_infinite())
      throw ArgumentError("ScaledFunction: factor must be finite and non-negative");
  }
  int n() const override { return inner_->n(); }
  Value value(VertexSet x) const override {
    if (x == 0) return Value(0);
    return c_ * inner_->value(x);
  }

 private:
  Value c_;
  SetFunctionPtr inner_;
};

class SumFunction final : public SetFunction {
 public:
  SumFunction(int n, std::vector<SetFunctionPtr> parts) : n_(n), parts_(std::move(parts)) {
    for (const auto& p : parts_)
      if (p->n() != n_) throw ArgumentError("SumFunction: ground sets differ");
  }
  int n() const override { return n_; }
  Value value(VertexSet x) const override {
    Value total(0);
    for (const auto& p : parts_) {
      total += p->value(x);
      if (total.is_infinite()) break;
    }
    return total;
  }

 private:
  int n_;
  std::vector<SetFunctionPtr> parts_;
};

/// f'(X) = f(X) + sum_{u in X} absorbed[u] on the ground set V' of the inner
/// function, renumbered 1..|V'| in increasing order.
class RestrictedFunction final : public SetFunction {
 public:
  RestrictedFunction(SetFunctionPtr inner, VertexSet subset, std::vector<Value> absorbed)
      : inner_(std::move(inner)), vertices_(members_of(subset)), absorbed_(std::move(absorbed)) {
    if (absorbed_.size() != vertices_.size())
      throw ArgumentError("RestrictedFunction: one absorbed weight per vertex required");
  }
  int n() const override { return static_cast<int>(vertices_.size()); }
  Value value(VertexSet x) const override {
    VertexSet up = 0;
    Value extra(0);
    for (int i : members_of(x)) {
      up |= vertex_bit(vertices_[i - 1]);
      extra += absorbed_[i - 1];
    }
    return inner_->value(up) + extra;
  }

 private:
  SetFunctionPtr inner_;
  std::vector<int> vertices_;
  std::vector<Value> absorbed_;
};

/// Pullback along a map from the inner ground set to {1..n}:
/// f'(X) = f({ i : map[i] in X }). Covers scope relabelling and vertex
/// identification; superadditivity is preserved because disjoint sets have
/// disjoint preimages.
class RelabelledFunction final : public SetFunction {
 public:
  /// map[i-1] is the image of inner vertex i.
  RelabelledFunction(SetFunctionPtr inner, std::vector<int> map, int n)
      : inner_(std::move(inner)), map_(std::move(map)), n_(n) {
    if (static_cast<int>(map_.size()) != inner_->n())
      throw ArgumentError("RelabelledFunction: map length must equal inner ground set size");
    for (int v : map_)
      if (v < 1 || v > n_) throw ArgumentError("RelabelledFunction: image out of range");
  }
  int n() const override { return n_; }
  Value value(VertexSet x) const override {
    VertexSet pre = 0;
    for (std::size_t i = 0; i < map_.size(); ++i)
      if (contains(x, map_[i])) pre |= vertex_bit(static_cast<int>(i) + 1);
    return inner_->value(pre);
  }

 private:
  SetFunctionPtr inner_;
  std::vector<int> map_;
  int n_;
};

inline SetFunctionPtr make_table(int n, std::vector<Value> table) {
  return std::make_shared<DenseTable>(n, std::move(table));
}
inline SetFunctionPtr make_zero(int n) { return std::make_shared<DenseTable>(n); }
inline SetFunctionPtr make_scaled(Value c, SetFunctionPtr inner) {
  return std::make_shared<ScaledFunction>(c, std::move(inner));
}
inline SetFunctionPtr make_sum(int n, std::vector<SetFunctionPtr> parts) {
  return std::make_shared<SumFunction>(n, std::move(parts));
}

/// Evaluates f on every subset into a DenseTable.
inline SetFunctionPtr tabulate(const SetFunction& f) {
  if (f.n() > kDenseTableLimit) throw ResourceError("tabulate: n exceeds 20");
  std::vector<Value> t(std::size_t{1} << f.n());
  for (VertexSet x = 1; x < t.size(); ++x) t[x] = f.value(x);
  return make_table(f.n(), std::move(t));
}

/// Largest n accepted by the exhaustive superadditivity check.
inline constexpr int kSuperadditivityCheckLimit = 16;

/// A violating disjoint pair (X, Y), or nullopt if f is superadditive and
/// non-negative with f(empty) = 0. Runs over all 3^n disjoint pairs.
inline std::optional<std::pair<VertexSet, VertexSet>> superadditivity_violation(
    const SetFunction& f) {
  const int n = f.n();
  if (n > kSuperadditivityCheckLimit)
    throw ResourceError("superadditivity check limited to n <= 16");
  const std::size_t size = std::size_t{1} << n;
  std::vector<Value> t(size);
  for (VertexSet x = 0; x < size; ++x) t[x] = f.value(x);
  if (!t[0].is_zero()) return std::make_pair(VertexSet{0}, VertexSet{0});
  for (VertexSet x = 1; x < size; ++x)
    if (t[x] < Value(0)) return std::make_pair(x, VertexSet{0});
  const VertexSet all = size - 1;
  for (VertexSet u = 1; u < size; ++u) {
    // Disjoint X, Y with X | Y = u and X < Y (numeric) to skip symmetric pairs.
    for (VertexSet x = (u - 1) & u; x != 0; x = (x - 1) & u) {
      const VertexSet y = u & ~x & all;
      if (x > y) continue;
      if (t[x] + t[y] > t[u]) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

inline bool is_superadditive(const SetFunction& f) { return !superadditivity_violation(f); }

/// Throws DataError when f fails the superadditivity check.
inline void validate_superadditive(const SetFunction& f) {
  if (auto v = superadditivity_violation(f))
    throw DataError("set function is not superadditive at X=" + set_string(v->first) +
                    ", Y=" + set_string(v->second));
}

}  // namespace surjvcsp
