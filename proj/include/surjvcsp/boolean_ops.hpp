#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "surjvcsp/errors.hpp"
#include "surjvcsp/relation.hpp"

namespace surjvcsp {

/// A k-ary operation on {0,1} (k in 1..3) given by its truth table:
/// bit j of `table` is h(a_1..a_k) where j = sum a_i * 2^(k-i).
struct BooleanOp {
  std::string name;
  int arity = 1;
  std::uint8_t table = 0;

  int operator()(std::span<const int> args) const {
    unsigned j = 0;
    for (int a : args) j = (j << 1) | static_cast<unsigned>(a & 1);
    return (table >> j) & 1U;
  }
  int operator()(int a) const { return (table >> (a & 1)) & 1U; }
  int operator()(int a, int b) const { return (table >> (((a & 1) << 1) | (b & 1))) & 1U; }
  int operator()(int a, int b, int c) const {
    return (table >> (((a & 1) << 2) | ((b & 1) << 1) | (c & 1))) & 1U;
  }

  friend bool operator==(const BooleanOp& a, const BooleanOp& b) {
    return a.arity == b.arity && a.table == b.table;
  }
};

namespace detail {

template <typename F>
BooleanOp make_op(std::string name, int arity, F f) {
  BooleanOp op{std::move(name), arity, 0};
  for (unsigned j = 0; j < (1U << arity); ++j) {
    int a[3] = {0, 0, 0};
    for (int i = 0; i < arity; ++i) a[i] = (j >> (arity - 1 - i)) & 1U;
    if (f(a[0], a[1], a[2])) op.table |= static_cast<std::uint8_t>(1U << j);
  }
  return op;
}

}  // namespace detail

namespace ops {

inline const BooleanOp& c0() {
  static const BooleanOp op = detail::make_op("c0", 1, [](int, int, int) { return 0; });
  return op;
}
inline const BooleanOp& c1() {
  static const BooleanOp op = detail::make_op("c1", 1, [](int, int, int) { return 1; });
  return op;
}
inline const BooleanOp& neg() {
  static const BooleanOp op = detail::make_op("neg", 1, [](int a, int, int) { return !a; });
  return op;
}
inline const BooleanOp& min() {
  static const BooleanOp op = detail::make_op("min", 2, [](int a, int b, int) { return a & b; });
  return op;
}
inline const BooleanOp& max() {
  static const BooleanOp op = detail::make_op("max", 2, [](int a, int b, int) { return a | b; });
  return op;
}
/// sub(x, y) = min(x, not y).
inline const BooleanOp& sub() {
  static const BooleanOp op = detail::make_op("sub", 2, [](int a, int b, int) { return a & !b; });
  return op;
}
inline const BooleanOp& mnrt() {
  static const BooleanOp op =
      detail::make_op("mnrt", 3, [](int a, int b, int c) { return a ^ b ^ c; });
  return op;
}
inline const BooleanOp& mjrt() {
  static const BooleanOp op =
      detail::make_op("mjrt", 3, [](int a, int b, int c) { return (a + b + c) >= 2; });
  return op;
}

}  // namespace ops

/// Applies h coordinatewise to k tuples of the given arity.
inline Tuple apply_componentwise(const BooleanOp& h, std::span<const Tuple> xs, int arity) {
  if (static_cast<int>(xs.size()) != h.arity)
    throw ArgumentError("apply_componentwise: operand count must equal operation arity");
  // Bit-parallel: OR over the true rows of the table of the matching minterm.
  const Tuple full = table_size(arity) - 1;
  Tuple out = 0;
  for (unsigned j = 0; j < (1U << h.arity); ++j) {
    if (!((h.table >> j) & 1U)) continue;
    Tuple term = full;
    for (int i = 0; i < h.arity; ++i) {
      const bool bit = (j >> (h.arity - 1 - i)) & 1U;
      term &= bit ? xs[i] : (~xs[i] & full);
    }
    out |= term;
  }
  return out;
}

inline Tuple apply_componentwise(const BooleanOp& h, std::initializer_list<Tuple> xs, int arity) {
  return apply_componentwise(h, std::span<const Tuple>(xs.begin(), xs.size()), arity);
}

}  // namespace surjvcsp
