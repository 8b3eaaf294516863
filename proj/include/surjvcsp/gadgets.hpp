#pragma once

// Instance transformers and problem encoders. Fresh variables are appended
// after the existing ones in construction order.

#include <utility>
#include <vector>

#include "surjvcsp/errors.hpp"
#include "surjvcsp/instance.hpp"
#include "surjvcsp/named_relations.hpp"
#include "surjvcsp/oracle.hpp"
#include "surjvcsp/relation.hpp"
#include "surjvcsp/value.hpp"

namespace surjvcsp {

/// Weighted sum of the largest finite value of each constraint; an upper
/// bound on the value of any feasible assignment of a non-negative instance.
inline Value feasible_upper_bound(const Instance& inst) {
  Value m(0);
  for (const auto& c : inst.constraints())
    if (auto hi = c.relation.max_finite_value()) m += c.weight * *hi;
  return m;
}

/// Two fresh unconstrained variables.
inline Instance pad_surjective(const Instance& inst) {
  Instance out = inst;
  out.add_variables(2);
  return out;
}

/// One instance per injective map {0,1} -> V, pinning f(0) to 0 and f(1) to 1.
/// Ordered by f(0), then f(1).
inline std::vector<Instance> to_vcsp_with_constants(const Instance& inst) {
  const int n = inst.num_vars();
  if (n < 2) throw ArgumentError("to_vcsp_with_constants: fewer than two variables");
  std::vector<Instance> out;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      Instance pinned = inst;
      pinned.add(Value(1), named::crisp(named::rho0()), {a}, "rho0");
      pinned.add(Value(1), named::crisp(named::rho1()), {b}, "rho1");
      out.push_back(std::move(pinned));
    }
  return out;
}

/// Rewrites rho0 / rho1 constraints with rho_leq against two fresh variables
/// y0, y1 bounding every original variable.
inline Instance simulate_constants_with_leq(const Instance& inst) {
  const int n = inst.num_vars();
  Instance out(n + 2);
  const int y0 = n + 1, y1 = n + 2;
  const auto leq = named::crisp(named::rho_leq());
  const auto r0 = named::crisp(named::rho0()), r1 = named::crisp(named::rho1());
  for (const auto& c : inst.constraints()) {
    // Any non-negative weight of a crisp relation is the same relation.
    const auto rel = scale(c.relation, c.weight);
    if (rel == r0)
      out.add(Value(1), leq, {c.scope[0], y0}, "rho_leq");
    else if (rel == r1)
      out.add(Value(1), leq, {y1, c.scope[0]}, "rho_leq");
    else
      out.add(c.weight, c.relation, c.scope, c.name);
  }
  for (int x = 1; x <= n; ++x) {
    out.add(Value(1), leq, {y0, x}, "rho_leq");
    out.add(Value(1), leq, {x, y1}, "rho_leq");
  }
  return out;
}

/// Parity-check matrix rows over GF(2).
using ParityCheckMatrix = BitMatrix;

inline void check_matrix(const ParityCheckMatrix& h) {
  if (h.empty() || h.front().empty()) throw ArgumentError("parity-check matrix: empty");
  for (const auto& row : h) {
    if (row.size() != h.front().size()) throw ArgumentError("parity-check matrix: ragged rows");
    for (int b : row)
      if (b != 0 && b != 1) throw ArgumentError("parity-check matrix: entries must be 0 or 1");
  }
}

/// Variables 1..n are the codeword; each non-zero row gets a prefix-sum chain
/// y_0..y_k with rho0(y_0), A3(y_{i-1}, x_{a_i}, y_i), rho0(y_k). gamma0 on
/// every x_j comes last.
inline Instance encode_min_distance(const ParityCheckMatrix& h) {
  check_matrix(h);
  const int n = static_cast<int>(h.front().size());
  bool nonzero = false;
  for (const auto& row : h)
    for (int b : row) nonzero |= b != 0;
  if (!nonzero) throw ArgumentError("encode_min_distance: matrix is all zero");
  Instance inst(n);
  const auto r0 = named::crisp(named::rho0());
  const auto a3 = named::crisp(named::a3());
  for (const auto& row : h) {
    std::vector<int> support;
    for (int j = 0; j < n; ++j)
      if (row[j]) support.push_back(j + 1);
    if (support.empty()) continue;
    int prev = inst.add_variables(1);
    inst.add(Value(1), r0, {prev}, "rho0");
    for (int a : support) {
      const int next = inst.add_variables(1);
      inst.add(Value(1), a3, {prev, a, next}, "A3");
      prev = next;
    }
    inst.add(Value(1), r0, {prev}, "rho0");
  }
  for (int j = 1; j <= n; ++j) inst.add(Value(1), named::gamma0(), {j}, "gamma0");
  return inst;
}

/// A3(x,y,z) -> A4(x,y,z,w), gamma0(x) -> gamma_eq(x,w) for a fresh w.
/// rho0(y) becomes gamma_eq(y,w) with weight 2M+1, M the feasible upper bound
/// of the input, so no crisp constant survives. An infeasible input maps to an
/// instance whose optimum exceeds M.
inline Instance a3_to_a4(const Instance& inst) {
  const int n = inst.num_vars();
  const Value big = Value(2) * feasible_upper_bound(inst) + Value(1);
  Instance out(n + 1);
  const int w = n + 1;
  const auto a3 = named::crisp(named::a3()), a4 = named::crisp(named::a4());
  const auto r0 = named::crisp(named::rho0()), g0 = named::gamma0(), geq = named::gamma_eq();
  for (const auto& c : inst.constraints()) {
    const auto& s = c.scope;
    if (c.relation == a3)
      out.add(Value(1), a4, {s[0], s[1], s[2], w}, "A4");
    else if (c.relation == g0)
      out.add(c.weight, geq, {s[0], w}, "gamma_eq");
    else if (c.relation == r0)
      out.add(big, geq, {s[0], w}, "gamma_eq");
    else
      throw ArgumentError("a3_to_a4: constraint outside {A3, gamma0, rho0}");
  }
  return out;
}

/// One variable per vertex plus z = n+1; mu_w(u, v, z) per edge. Surjective
/// optimum 2|E| - maxcut.
inline Instance encode_maxcut(int n, const std::vector<std::pair<int, int>>& edges, std::int64_t w) {
  if (n < 1) throw ArgumentError("encode_maxcut: no vertices");
  const auto m = static_cast<std::int64_t>(edges.size());
  if (w < 2 * m + 1) throw ArgumentError("encode_maxcut: w must be at least 2|E|+1");
  std::vector<int> deg(n + 1, 0);
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n || u == v) throw ArgumentError("encode_maxcut: bad edge");
    ++deg[u];
    ++deg[v];
  }
  for (int v = 1; v <= n; ++v)
    if (deg[v] == 0) throw ArgumentError("encode_maxcut: isolated vertex");
  Instance inst(n + 1);
  const auto mu = named::mu(Value(w));
  for (auto [u, v] : edges) inst.add(Value(1), mu, {u, v, n + 1}, "mu");
  return inst;
}

/// Members are the tuples valued in [0,1]; values in (1, alpha] are rejected.
inline Relation round_alpha(const WeightedRelation& g, const Value& alpha) {
  if (alpha.is_infinite() || alpha < Value(1)) throw ArgumentError("round_alpha: alpha must be >= 1");
  Relation out(g.arity());
  for (Tuple t = 0; t < table_size(g.arity()); ++t) {
    const Value& v = g(t);
    if (v < Value(0)) throw ArgumentError("round_alpha: negative value");
    if (v <= Value(1))
      out.insert(t);
    else if (v <= alpha)
      throw ArgumentError("round_alpha: relation is not alpha-crisp");
  }
  return out;
}

namespace detail {

inline void require_integral_nonnegative(const Constraint& c, const char* who) {
  if (!c.weight.is_integer()) throw ArgumentError(std::string(who) + ": weights must be integers");
  for (const Value& v : c.relation.table())
    if (v.is_finite() && (v < Value(0) || !v.is_integer()))
      throw ArgumentError(std::string(who) + ": values must be non-negative integers");
}

}  // namespace detail

/// Replaces every constraint on crisp rho by gamma with weight 1/(k+1).
/// Needs Round_{M(k+1)}(gamma) = rho and integral values elsewhere.
inline Instance replace_crisp(const Instance& inst, const Relation& rho, const WeightedRelation& gamma) {
  const auto target = WeightedRelation::crisp(rho);
  int k = 0;
  Instance rest(inst.num_vars());
  for (const auto& c : inst.constraints()) {
    if (scale(c.relation, c.weight) == target) {
      ++k;
    } else {
      detail::require_integral_nonnegative(c, "replace_crisp");
      rest.add(c.weight, c.relation, c.scope, c.name);
    }
  }
  if (k == 0) return inst;
  const Value alpha = max(Value(1), feasible_upper_bound(rest) * Value(k + 1));
  if (round_alpha(gamma, alpha) != rho) throw ArgumentError("replace_crisp: Round(gamma) differs from rho");
  Instance out(inst.num_vars());
  for (const auto& c : inst.constraints()) {
    if (scale(c.relation, c.weight) == target)
      out.add(Value(1, k + 1), gamma, c.scope, c.name);
    else
      out.add(c.weight, c.relation, c.scope, c.name);
  }
  return out;
}

/// Replaces w * Opt(gamma) constraints by (M/m + 1) * gamma.
inline Instance replace_opt_constraint(const Instance& inst, const WeightedRelation& gamma) {
  if (is_crisp(gamma)) throw ArgumentError("replace_opt_constraint: gamma is crisp");
  const auto lo = gamma.min_value();
  if (!lo || !lo->is_zero()) throw ArgumentError("replace_opt_constraint: gamma must have minimum 0");
  Value m = Value::infinity();
  for (const Value& v : gamma.table())
    if (v > Value(0)) m = min(m, v);
  const auto target = WeightedRelation::crisp(opt(gamma));
  for (const auto& c : inst.constraints())
    for (const Value& v : c.relation.table())
      if (v < Value(0)) throw ArgumentError("replace_opt_constraint: negative value");
  const Value weight = feasible_upper_bound(inst) / m + Value(1);
  Instance out(inst.num_vars());
  for (const auto& c : inst.constraints()) {
    if (scale(c.relation, c.weight) == target)
      out.add(weight, gamma, c.scope, c.name);
    else
      out.add(c.weight, c.relation, c.scope, c.name);
  }
  return out;
}

}  // namespace surjvcsp
