#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "surjvcsp/errors.hpp"
#include "surjvcsp/graph.hpp"
#include "surjvcsp/mincut.hpp"
#include "surjvcsp/set_function.hpp"
#include "surjvcsp/value.hpp"
#include "surjvcsp/vertex_set.hpp"

namespace surjvcsp {

/// Generalised Min-Cut instance: J(X) = f(X) + g(X).
///
/// Built from raw edges over vertices 1..n and f over the same vertices.
/// Infinite edges are contracted; graph() and f() live on the merged vertex
/// set and objective_original() evaluates sets of original vertices.
class GmcInstance {
 public:
  GmcInstance() = default;

  GmcInstance(int n, const std::vector<Edge>& raw, SetFunctionPtr f) : graph_(n, raw) {
    if (f->n() != n) throw ArgumentError("GmcInstance: set function ground set differs from n");
    if (graph_.contracted()) {
      std::vector<int> map(graph_.merge_map().begin() + 1, graph_.merge_map().end());
      f_ = std::make_shared<RelabelledFunction>(std::move(f), std::move(map), graph_.n());
    } else {
      f_ = std::move(f);
    }
  }

  /// Already-contracted graph and f on its vertices.
  GmcInstance(Graph g, SetFunctionPtr f) : graph_(std::move(g)), f_(std::move(f)) {
    if (graph_.contracted())
      throw ArgumentError("GmcInstance: use the raw-edge constructor for contracted graphs");
    if (f_->n() != graph_.n()) throw ArgumentError("GmcInstance: ground sets differ");
  }

  int n() const { return graph_.n(); }
  const Graph& graph() const { return graph_; }
  const SetFunctionPtr& f() const { return f_; }

  Value objective(VertexSet x) const { return f_->value(x) + cut_value(graph_, x); }

  /// J on a set of original vertices; infinity if X separates merged vertices.
  Value objective_original(VertexSet x) const {
    const auto m = graph_.compress(x);
    if (!m) return Value::infinity();
    return objective(*m);
  }

 private:
  Graph graph_;
  SetFunctionPtr f_;
};

struct LambdaZero {
  VertexSet witness = 0;
};
struct LambdaFinite {
  Value lambda;
};
struct LambdaInfinite {};

using LambdaClass = std::variant<LambdaZero, LambdaFinite, LambdaInfinite>;

/// Induced instance on V' with crossing weights absorbed into f.
inline GmcInstance restrict(const GmcInstance& j, VertexSet subset) {
  if (subset == 0 || !is_subset(subset, full_set(j.n())))
    throw ArgumentError("restrict: subset must be non-empty and inside V");
  if (subset == full_set(j.n())) return j;
  const VertexSet outside = full_set(j.n()) & ~subset;
  std::vector<Value> absorbed;
  for (int u : members_of(subset)) absorbed.push_back(j.graph().weight_to(u, outside));
  SetFunctionPtr f = std::make_shared<RestrictedFunction>(j.f(), subset, std::move(absorbed));
  // Small ground sets are cheaper to keep as explicit tables.
  if (set_size(subset) <= 10) f = tabulate(*f);
  return GmcInstance(j.graph().induced(subset), std::move(f));
}

namespace detail {

/// Maps a set of the instance restricted to `subset` back to the parent.
inline VertexSet lift(VertexSet x, VertexSet subset) {
  const auto vs = members_of(subset);
  VertexSet out = 0;
  for (int i : members_of(x)) out |= vertex_bit(vs[i - 1]);
  return out;
}

inline std::vector<VertexSet> lift_all(const std::vector<VertexSet>& xs, VertexSet subset) {
  std::vector<VertexSet> out;
  out.reserve(xs.size());
  for (VertexSet x : xs) out.push_back(lift(x, subset));
  return out;
}

/// Optimal solutions of j when its optimum is finite; empty otherwise.
inline std::pair<Value, std::vector<VertexSet>> optimal_rec(const GmcInstance& j) {
  const int n = j.n();
  if (n < 2) return {Value::infinity(), {}};
  const Graph& g = j.graph();
  std::vector<VertexSet> cand;
  auto recurse_into = [&](VertexSet part) {
    if (set_size(part) < 2) return;
    auto sub = optimal_rec(restrict(j, part)).second;
    for (VertexSet x : lift_all(sub, part)) cand.push_back(x);
  };
  if (!g.connected()) {
    for (VertexSet c : g.components()) {
      cand.push_back(c);
      recurse_into(c);
    }
  } else {
    const auto optimal = optimal_cuts(g);
    cand = optimal;
    VertexSet covered = 0;
    for (VertexSet y : minimal_optimal_solutions(g)) {
      covered |= y;
      recurse_into(y);
    }
    const VertexSet z = full_set(n) & ~covered;
    if (z != 0) {
      cand.push_back(z);
      recurse_into(z);
    }
  }
  Value best = Value::infinity();
  std::vector<VertexSet> out;
  for (VertexSet x : cand) {
    const Value v = j.objective(x);
    if (v < best) {
      best = v;
      out.clear();
    }
    if (v == best) out.push_back(x);
  }
  if (best.is_infinite()) return {best, {}};
  canonical_sort(out);
  return {best, std::move(out)};
}

inline constexpr int kBeta = 4;

/// All solutions with J(X) <= budget, given that every solution of j has
/// J >= floor > 0.
inline std::vector<VertexSet> budget_rec(const GmcInstance& j, const Value& budget,
                                         const Value& floor) {
  const int n = j.n();
  std::vector<VertexSet> out;
  if (n < 2 || budget < floor) return out;
  const Graph& g = j.graph();
  const VertexSet all = full_set(n);

  VertexSet y = 0;
  if (!g.connected()) {
    for (VertexSet c : g.components())
      if (y == 0 || canonical_less(c, y)) y = c;
  } else {
    for (VertexSet c : optimal_cuts(g))
      if (2 * set_size(c) <= n) {
        y = c;
        break;
      }
  }
  const Value c = cut_value(g, y);

  auto keep = [&](VertexSet x) {
    if (j.objective(x) <= budget) out.push_back(x);
  };

  if (c * Value(kBeta) >= floor) {
    for (VertexSet x : enumerate_cuts_below(g, budget)) keep(x);
    canonical_sort(out);
    return out;
  }

  const VertexSet ny = all & ~y;
  const GmcInstance jy = restrict(j, y);
  const GmcInstance jn = restrict(j, ny);
  const Value two_c = c + c;

  // X strictly inside Y or strictly inside V \ Y.
  for (VertexSet x : lift_all(budget_rec(jy, budget, floor), y)) keep(x);
  for (VertexSet x : lift_all(budget_rec(jn, budget, floor), ny)) keep(x);
  keep(y);
  keep(ny);

  // Y strictly inside X: X \ Y is a proper subset of V \ Y.
  const Value jyv = j.objective(y), jnv = j.objective(ny);
  if (jyv.is_finite())
    for (VertexSet q : lift_all(budget_rec(jn, budget + two_c - jyv, floor), ny)) keep(y | q);
  if (jnv.is_finite())
    for (VertexSet p : lift_all(budget_rec(jy, budget + two_c - jnv, floor), y)) keep(ny | p);

  // X crosses Y: J(X /\ Y) + J(X \ Y) <= J(X) + 2c.
  const Value pair_budget = budget + two_c;
  const Value part_budget = pair_budget - floor;
  const auto ps = budget_rec(jy, part_budget, floor);
  const auto qs = budget_rec(jn, part_budget, floor);
  if (!ps.empty() && !qs.empty()) {
    std::vector<Value> qv;
    qv.reserve(qs.size());
    for (VertexSet q : qs) qv.push_back(jn.objective(q));
    for (VertexSet p : ps) {
      const Value pv = jy.objective(p);
      const VertexSet lp = lift(p, y);
      for (std::size_t i = 0; i < qs.size(); ++i)
        if (pv + qv[i] <= pair_budget) keep(lp | lift(qs[i], ny));
    }
  }
  canonical_sort(out);
  return out;
}

}  // namespace detail

inline LambdaClass classify_lambda(const GmcInstance& j) {
  if (j.n() < 2) throw ArgumentError("classify_lambda: fewer than two vertices, no solutions");
  const Graph& g = j.graph();
  if (!g.connected())
    for (VertexSet c : g.components())
      if (j.objective(c).is_zero()) return LambdaZero{c};
  bool all_infinite = true;
  for (int v = 1; v <= j.n() && all_infinite; ++v)
    if (j.f()->value(vertex_bit(v)).is_finite()) all_infinite = false;
  if (all_infinite) return LambdaInfinite{};
  return LambdaFinite{detail::optimal_rec(j).first};
}

/// lambda and all optimal solutions; requires 0 < lambda < infinity.
inline std::pair<Value, std::vector<VertexSet>> enumerate_optimal(const GmcInstance& j) {
  const auto cls = classify_lambda(j);
  if (!std::holds_alternative<LambdaFinite>(cls))
    throw StateError("enumerate_optimal: lambda is zero or infinite");
  return detail::optimal_rec(j);
}

/// All X with J(X) <= alpha * lambda; requires 0 < lambda < infinity.
inline std::vector<VertexSet> enumerate_alpha_optimal(const GmcInstance& j, const Value& alpha) {
  if (alpha.is_infinite() || alpha < Value(1))
    throw ArgumentError("enumerate_alpha_optimal: alpha must be finite and >= 1");
  const auto [lambda, optimal] = enumerate_optimal(j);
  if (alpha == Value(1)) return optimal;
  return detail::budget_rec(j, alpha * lambda, lambda);
}

/// Same as enumerate_alpha_optimal with a known lambda.
inline std::vector<VertexSet> enumerate_below(const GmcInstance& j, const Value& budget,
                                              const Value& lambda) {
  if (!(lambda > Value(0)) || lambda.is_infinite())
    throw StateError("enumerate_below: lambda must be positive and finite");
  return detail::budget_rec(j, budget, lambda);
}

}  // namespace surjvcsp
