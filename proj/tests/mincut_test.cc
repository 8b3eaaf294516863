#include <gtest/gtest.h>

#include <cmath>

#include "support/random.hpp"
#include "surjvcsp/surjvcsp.hpp"

namespace surjvcsp {
namespace {

Graph cycle(int n) {
  std::vector<Edge> es;
  for (int i = 1; i <= n; ++i) es.push_back({i, i % n + 1, Value(1)});
  return Graph(n, es);
}

Graph path(int n) {
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.push_back({i, i + 1, Value(1)});
  return Graph(n, es);
}

std::vector<VertexSet> brute_cuts(const Graph& g, const Value& budget) {
  std::vector<VertexSet> out;
  for (VertexSet x = 1; x < full_set(g.n()); ++x)
    if (cut_value(g, x) <= budget) out.push_back(x);
  canonical_sort(out);
  return out;
}

Value brute_min(const Graph& g) {
  Value best = Value::infinity();
  for (VertexSet x = 1; x < full_set(g.n()); ++x) best = min(best, cut_value(g, x));
  return best;
}

TEST(GraphTest, NormalisesEdges) {
  const Graph g(3, {{1, 2, Value(1)}, {2, 1, Value(2)}, {2, 3, Value(0)}});
  EXPECT_EQ(g.weight(1, 2), Value(3));
  EXPECT_EQ(g.edges().size(), 1u);
  EXPECT_THROW(Graph(2, {{1, 1, Value(1)}}), ArgumentError);
  EXPECT_THROW(Graph(2, {{1, 3, Value(1)}}), ArgumentError);
}

TEST(GraphTest, ContractsInfiniteEdges) {
  const Graph g(4, {{2, 3, Value::infinity()}, {1, 2, Value(1)}, {1, 3, Value(2)}, {3, 4, Value(1)}});
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.merged(2), 2);
  EXPECT_EQ(g.merged(3), 2);
  EXPECT_EQ(g.merged(4), 3);
  EXPECT_EQ(g.weight(1, 2), Value(3));
  EXPECT_EQ(g.expand(set_of({2})), set_of({2, 3}));
  EXPECT_EQ(g.compress(set_of({2, 3})), set_of({2}));
  EXPECT_FALSE(g.compress(set_of({2})));
}

TEST(CutValueTest, Examples) {
  const Graph tri = cycle(3);
  EXPECT_EQ(cut_value(tri, set_of({1})), Value(2));
  EXPECT_EQ(cut_value(cycle(4), set_of({1, 2})), Value(2));
  EXPECT_EQ(cut_value(tri, 0), Value(0));
  EXPECT_EQ(cut_value(tri, full_set(3)), Value(0));
}

TEST(GlobalMinCutTest, Examples) {
  auto [v, c] = global_min_cut(cycle(3));
  EXPECT_EQ(v, Value(2));
  EXPECT_EQ(c.set, set_of({1}));
  auto [v2, c2] = global_min_cut(Graph(2, {}));
  EXPECT_EQ(v2, Value(0));
  EXPECT_EQ(c2.set, set_of({1}));
  auto [v3, c3] = global_min_cut(Graph(2, {{1, 2, Value(5)}}));
  EXPECT_EQ(v3, Value(5));
  EXPECT_EQ(c3.set, set_of({1}));
  EXPECT_THROW(global_min_cut(Graph(1, {})), ArgumentError);
}

TEST(GlobalMinCutTest, MatchesBruteForce) {
  testing::Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform(2, 10);
    const Graph g(n, rng.coin(0.8) ? rng.connected_graph(n, 0.3) : rng.any_graph(n, 0.3));
    const auto [v, c] = global_min_cut(g);
    EXPECT_EQ(v, brute_min(g));
    EXPECT_EQ(cut_value(g, c.set), v);
    EXPECT_EQ(c.set, brute_cuts(g, v).front());
  }
}

TEST(EnumerateCutsTest, Examples) {
  EXPECT_EQ(enumerate_cuts_below(cycle(4), Value(2)).size(), 12u);
  EXPECT_EQ(enumerate_cuts_below(cycle(4), Value(4)).size(), 14u);
  EXPECT_EQ(enumerate_cuts_below(Graph(2, {{1, 2, Value(1)}}), Value(1)),
            (std::vector<VertexSet>{set_of({1}), set_of({2})}));
  EXPECT_THROW(enumerate_cuts_below(cycle(4), Value::infinity()), ArgumentError);
}

TEST(EnumerateCutsTest, MatchesBruteForceOnBudgetGrid) {
  testing::Rng rng(43);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = rng.uniform(2, 12);
    const Graph g(n, rng.coin(0.85) ? rng.connected_graph(n, 0.25) : rng.any_graph(n, 0.3));
    const Value lo = brute_min(g);
    for (int step = 0; step <= 6; ++step) {
      const Value budget = lo + Value(step, 2);
      ASSERT_EQ(enumerate_cuts_below(g, budget), brute_cuts(g, budget));
    }
  }
}

TEST(EnumerateCutsTest, NearMinimumCountBound) {
  testing::Rng rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.uniform(4, 12);
    const Graph g(n, rng.connected_graph(n, 0.3));
    const Value lo = global_min_cut(g).first;
    for (int t = 1; t <= 2; ++t) {
      const auto cuts = enumerate_cuts_below(g, lo * Value(t));
      // 2^{2t} C(n, 2t) with t = budget / mincut.
      double bound = std::pow(2.0, 2 * t);
      for (int i = 0; i < 2 * t; ++i) bound *= static_cast<double>(n - i) / (i + 1);
      EXPECT_LE(static_cast<double>(cuts.size()), bound);
    }
  }
}

TEST(EnumerateCutsTest, DisconnectedGuard) {
  std::vector<Edge> es;
  for (int i = 1; i < 21; ++i) es.push_back({i, i + 1, Value(1)});
  const Graph g(22, es);
  EXPECT_THROW(enumerate_cuts_below(g, Value(0)), ExponentialOutputError);
  EXPECT_EQ(enumerate_cuts_below(Graph(3, {{1, 2, Value(1)}}), Value(0)).size(), 2u);
}

TEST(MinimalOptimalTest, Examples) {
  EXPECT_EQ(minimal_optimal_solutions(path(3)), (std::vector<VertexSet>{set_of({1}), set_of({3})}));
  EXPECT_EQ(minimal_optimal_solutions(cycle(4)),
            (std::vector<VertexSet>{set_of({1}), set_of({2}), set_of({3}), set_of({4})}));
  EXPECT_EQ(minimal_optimal_solutions(Graph(3, {{1, 2, Value(1)}})),
            (std::vector<VertexSet>{set_of({1, 2}), set_of({3})}));
}

TEST(CutPropertiesTest, SymmetricPosimodularSubmodular) {
  testing::Rng rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform(2, 7);
    const Graph g(n, rng.any_graph(n, 0.5));
    const VertexSet all = full_set(n);
    std::vector<Value> c(all + 1);
    for (VertexSet x = 0; x <= all; ++x) c[x] = cut_value(g, x);
    for (VertexSet x = 0; x <= all; ++x) {
      EXPECT_EQ(c[x], c[all & ~x]);
      for (VertexSet y = 0; y <= all; ++y) {
        EXPECT_GE(c[x] + c[y], c[x & ~y] + c[y & ~x]);
        EXPECT_GE(c[x] + c[y], c[x & y] + c[x | y]);
      }
    }
  }
}

TEST(StructureTest, OptimalCountBound) {
  testing::Rng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform(2, 9);
    const Graph g(n, rng.connected_graph(n, 0.2, 2));
    const auto opt = optimal_cuts(g);
    const auto mins = minimal_optimal_solutions(g);
    const int p = static_cast<int>(mins.size());
    EXPECT_LE(static_cast<int>(opt.size()), p * (p - 1) + 2 * (n - p));
    for (std::size_t i = 0; i < mins.size(); ++i)
      for (std::size_t j = i + 1; j < mins.size(); ++j) EXPECT_EQ(mins[i] & mins[j], 0u);
  }
}

TEST(StructureTest, TightOnPathsAndCycles) {
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : {path(n), cycle(n)}) {
      const int p = static_cast<int>(minimal_optimal_solutions(g).size());
      EXPECT_EQ(static_cast<int>(optimal_cuts(g).size()), p * (p - 1) + 2 * (n - p));
    }
    EXPECT_EQ(static_cast<int>(optimal_cuts(cycle(n)).size()), n * (n - 1));
  }
}

}  // namespace
}  // namespace surjvcsp
