#pragma once

#include <utility>
#include <vector>

#include "surjvcsp/errors.hpp"
#include "surjvcsp/graph.hpp"
#include "surjvcsp/value.hpp"
#include "surjvcsp/vertex_set.hpp"

namespace surjvcsp {

/// Largest n for which cut enumeration falls back to exhaustive search on
/// disconnected graphs.
inline constexpr int kDisconnectedBruteLimit = 20;

inline Value cut_value(const Graph& g, VertexSet x) {
  Value total(0);
  for (const auto& e : g.edges())
    if (contains(x, e.u) != contains(x, e.v)) total += e.weight;
  return total;
}

struct CutSolution {
  VertexSet set = 0;
  Value value;
};

namespace detail {

/// Stoer-Wagner minimum cut value of a connected graph with n >= 2.
inline Value stoer_wagner_value(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<Value>> w(n, std::vector<Value>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) w[u][v] = u == v ? Value(0) : g.weight(u + 1, v + 1);
  std::vector<int> alive(n);
  for (int i = 0; i < n; ++i) alive[i] = i;
  std::optional<Value> best;
  while (alive.size() > 1) {
    const std::size_t m = alive.size();
    std::vector<Value> key(m, Value(0));
    std::vector<bool> added(m, false);
    std::size_t prev = 0, last = 0;
    for (std::size_t step = 0; step < m; ++step) {
      std::size_t pick = m;
      for (std::size_t i = 0; i < m; ++i)
        if (!added[i] && (pick == m || key[i] > key[pick])) pick = i;
      added[pick] = true;
      prev = last;
      last = pick;
      if (step + 1 == m) {
        if (!best || key[pick] < *best) best = key[pick];
        break;
      }
      for (std::size_t i = 0; i < m; ++i)
        if (!added[i]) key[i] += w[alive[pick]][alive[i]];
    }
    const int s = alive[prev], t = alive[last];
    for (int v : alive) {
      w[s][v] += w[t][v];
      w[v][s] = w[s][v];
    }
    w[s][s] = Value(0);
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(last));
  }
  return *best;
}

/// Branch and bound over side assignments. Vertex 1 is fixed to side A;
/// the lower bound adds, for each unassigned vertex, the cheaper of its
/// weights into A and B.
class CutEnumerator {
 public:
  CutEnumerator(const Graph& g, const Value& budget) : g_(g), budget_(budget) {
    const int n = g.n();
    to_a_.assign(n + 1, Value(0));
    to_b_.assign(n + 1, Value(0));
  }

  std::vector<VertexSet> run() {
    const int n = g_.n();
    for (int u = 2; u <= n; ++u) to_a_[u] = g_.weight(1, u);
    recurse(2, Value(0), 0);
    return std::move(out_);
  }

 private:
  Value lower_bound(int next, const Value& cross) const {
    Value lb = cross;
    for (int u = next; u <= g_.n(); ++u) lb += min(to_a_[u], to_b_[u]);
    return lb;
  }

  void recurse(int v, const Value& cross, VertexSet b) {
    const int n = g_.n();
    if (v > n) {
      if (b != 0) {
        out_.push_back(b);
        out_.push_back(full_set(n) & ~b);
      }
      return;
    }
    for (int side = 0; side < 2; ++side) {
      const Value add = side == 0 ? to_b_[v] : to_a_[v];
      const Value next_cross = cross + add;
      std::vector<Value>& acc = side == 0 ? to_a_ : to_b_;
      for (int u = v + 1; u <= n; ++u) acc[u] += g_.weight(v, u);
      if (lower_bound(v + 1, next_cross) <= budget_)
        recurse(v + 1, next_cross, side == 0 ? b : (b | vertex_bit(v)));
      for (int u = v + 1; u <= n; ++u) acc[u] -= g_.weight(v, u);
    }
  }

  const Graph& g_;
  Value budget_;
  std::vector<Value> to_a_, to_b_;
  std::vector<VertexSet> out_;
};

}  // namespace detail

/// All X with 0 < |X| < n and g(X) <= budget, canonically sorted.
inline std::vector<VertexSet> enumerate_cuts_below(const Graph& g, const Value& budget) {
  if (budget.is_infinite()) throw ArgumentError("enumerate_cuts_below: budget must be finite");
  const int n = g.n();
  std::vector<VertexSet> out;
  if (n < 2 || budget < Value(0)) return out;
  if (!g.connected()) {
    if (n > kDisconnectedBruteLimit)
      throw ExponentialOutputError(
          "enumerate_cuts_below: disconnected graph with more than 20 vertices");
    for (VertexSet x = 1; x < full_set(n); ++x)
      if (cut_value(g, x) <= budget) out.push_back(x);
  } else {
    out = detail::CutEnumerator(g, budget).run();
  }
  canonical_sort(out);
  return out;
}

/// Minimum cut value and the canonically first optimal X.
inline std::pair<Value, CutSolution> global_min_cut(const Graph& g) {
  if (g.n() < 2) throw ArgumentError("global_min_cut: at least two vertices required");
  if (!g.connected()) {
    const auto comps = g.components();
    VertexSet best = comps.front();
    for (VertexSet c : comps)
      if (canonical_less(c, best)) best = c;
    return {Value(0), {best, Value(0)}};
  }
  const Value value = detail::stoer_wagner_value(g);
  const auto cuts = enumerate_cuts_below(g, value);
  return {value, {cuts.front(), value}};
}

/// All optimal X, canonically sorted.
inline std::vector<VertexSet> optimal_cuts(const Graph& g) {
  return enumerate_cuts_below(g, global_min_cut(g).first);
}

/// Inclusion-minimal optimal solutions; the components when disconnected.
inline std::vector<VertexSet> minimal_optimal_solutions(const Graph& g) {
  if (g.n() < 2) throw ArgumentError("minimal_optimal_solutions: at least two vertices required");
  if (!g.connected()) return g.components();
  const auto all = optimal_cuts(g);
  std::vector<VertexSet> out;
  for (VertexSet x : all) {
    bool minimal = true;
    for (VertexSet y : all)
      if (y != x && is_subset(y, x)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(x);
  }
  canonical_sort(out);
  return out;
}

}  // namespace surjvcsp
