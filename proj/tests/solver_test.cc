#include <gtest/gtest.h>

#include <set>

#include "support/random.hpp"
#include "surjvcsp/surjvcsp.hpp"

namespace surjvcsp {
namespace {

using named::crisp;

Instance mincut_cycle(int n) {
  Instance inst(n);
  for (int i = 1; i <= n; ++i) inst.add(Value(1), soft(named::rho_eq()), {i, i % n + 1}, "eq");
  return inst;
}

std::vector<WeightedRelation> eds_pool(testing::Rng& rng, int size, int max_arity) {
  std::vector<WeightedRelation> pool;
  while (static_cast<int>(pool.size()) < size) pool.push_back(rng.eds_relation(rng.uniform(1, max_arity)));
  return pool;
}

TEST(SolveTest, Examples) {
  const auto c4 = solve_surjective(mincut_cycle(4));
  ASSERT_TRUE(c4.optimal());
  EXPECT_EQ(c4.value, Value(2));
  EXPECT_TRUE(c4.assignment.is_surjective());
  EXPECT_EQ(evaluate(mincut_cycle(4), c4.assignment), Value(2));
  EXPECT_EQ(c4.path, SolvePath::EdsLambdaFinite);

  Instance pin(2);
  pin.add(Value(1), crisp(named::rho0()), {1});
  const auto p = solve_surjective(pin);
  ASSERT_TRUE(p.optimal());
  EXPECT_EQ(p.value, Value(0));
  EXPECT_EQ(p.assignment.to_string(), "01");
  EXPECT_EQ(p.path, SolvePath::EdsLambdaZero);

  EXPECT_FALSE(solve_surjective(Instance(1)).optimal());

  const auto mc = encode_maxcut(3, {{1, 2}, {2, 3}, {1, 3}}, 7);
  const auto m = solve_surjective(mc);
  ASSERT_TRUE(m.optimal());
  EXPECT_EQ(m.value, Value(4));
}

TEST(SolveTest, ModesAndErrors) {
  Instance a3(3);
  a3.add(Value(1), crisp(named::a3()), {1, 2, 3});
  EXPECT_THROW(solve_surjective(a3, SolveMode::Eds), ArgumentError);
  EXPECT_EQ(solve_surjective(a3, SolveMode::Auto).path, SolvePath::BruteForce);
  EXPECT_EQ(solve_surjective(a3).value, Value(0));
  EXPECT_EQ(solve_surjective(a3, SolveMode::BranchAndBound).value, Value(0));
  EXPECT_THROW(solve_surjective(Instance(25), SolveMode::Brute), ResourceError);

  Instance neg(3);
  neg.add(Value(1), named::gamma1(), {1});
  neg.add(Value(1), negate(named::gamma_eq()), {2, 3});
  const auto r = solve_surjective(neg);
  EXPECT_EQ(r.path, SolvePath::NegEds);
  EXPECT_EQ(r.value, brute_vcsp_surjective(neg).value);
}

TEST(SolveTest, InfeasibleInstances) {
  Instance both(2);
  both.add(Value(1), crisp(named::rho0()), {1});
  both.add(Value(1), crisp(named::rho0()), {2});
  EXPECT_FALSE(solve_surjective(both).optimal());

  Instance merged(3);
  merged.add(Value(1), crisp(named::rho_eq()), {1, 2});
  merged.add(Value(1), crisp(named::rho_eq()), {2, 3});
  EXPECT_FALSE(solve_surjective(merged).optimal());

  Instance empty(2);
  empty.add(Value(1), WeightedRelation(2, std::vector<Value>(4, Value::infinity())), {1, 2});
  EXPECT_FALSE(solve_surjective(empty).optimal());
}

TEST(SolveTest, MatchesBruteForceOnEds) {
  testing::Rng rng(131);
  int infeasible = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto pool = eds_pool(rng, 3, 3);
    const bool flip = trial % 3 == 0;
    Instance inst = rng.instance(rng.uniform(2, 9), rng.uniform(1, 8), pool);
    if (flip) inst = negate(inst);
    const auto got = solve_surjective(inst);
    const auto want = brute_vcsp_surjective(inst);
    ASSERT_EQ(got.status, want.status) << write_instance(inst);
    if (!flip) EXPECT_NE(got.path, SolvePath::NegEds);
    if (!want.optimal()) {
      ++infeasible;
      continue;
    }
    EXPECT_EQ(got.value, want.value);
    EXPECT_TRUE(got.assignment.is_surjective());
    EXPECT_EQ(evaluate(inst, got.assignment), got.value);
  }
  EXPECT_GT(infeasible, 0);
}

TEST(SolveTest, NegationDuality) {
  testing::Rng rng(137);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = rng.instance(rng.uniform(2, 8), rng.uniform(1, 6), eds_pool(rng, 3, 3));
    const auto a = solve_surjective(inst), b = solve_surjective(negate(inst));
    EXPECT_EQ(a.status, b.status);
    if (a.optimal()) EXPECT_EQ(a.value, b.value);
  }
}

TEST(BranchAndBoundTest, MatchesBruteForce) {
  testing::Rng rng(139);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<WeightedRelation> pool;
    for (int k = 0; k < 3; ++k) pool.push_back(rng.weighted_relation(rng.uniform(1, 3), 0.3));
    const Instance inst = rng.instance(rng.uniform(1, 10), rng.uniform(0, 10), pool);
    const auto got = branch_and_bound_surjective(inst);
    const auto want = brute_vcsp_surjective(inst);
    ASSERT_EQ(got.status, want.status);
    if (!want.optimal()) continue;
    EXPECT_EQ(got.value, want.value);
    EXPECT_TRUE(got.assignment.is_surjective());
    EXPECT_EQ(evaluate(inst, got.assignment), got.value);
  }
}

TEST(MinClosedEnumerateTest, Examples) {
  Instance leq(2);
  leq.add(Value(1), crisp(named::rho_leq()), {1, 2});
  const auto sols = min_closed_enumerate(leq);
  ASSERT_EQ(sols.size(), 3u);
  EXPECT_EQ(sols[0].to_string(), "00");
  EXPECT_EQ(sols[1].to_string(), "01");
  EXPECT_EQ(sols[2].to_string(), "11");

  Instance a3(3);
  a3.add(Value(1), crisp(named::a3()), {1, 2, 3});
  EXPECT_THROW(min_closed_enumerate(a3), ArgumentError);
  EXPECT_EQ(min_closed_enumerate(Instance(2)).size(), 4u);
}

TEST(MinClosedEnumerateTest, MatchesBruteForce) {
  testing::Rng rng(149);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<WeightedRelation> pool;
    while (pool.size() < 3) {
      const Relation r = rng.relation(rng.uniform(1, 3), 0.6);
      if (admits_polymorphism(r, ops::min()).holds) pool.push_back(crisp(r));
    }
    Instance inst = rng.instance(rng.uniform(1, 8), rng.uniform(0, 6), pool);
    std::vector<Assignment> want;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << inst.num_vars()); ++k) {
      const auto s = Assignment::from_index(k, inst.num_vars());
      if (evaluate(inst, s).is_finite()) want.push_back(s);
    }
    EXPECT_EQ(min_closed_enumerate(inst), want);
  }
}

TEST(EnumerateSurjectiveTest, Examples) {
  const auto c4 = enumerate_optimal_surjective(mincut_cycle(4));
  EXPECT_EQ(c4.size(), 12u);
  EXPECT_EQ(c4, brute_vcsp_surjective_all(mincut_cycle(4)));

  Instance leq(2);
  leq.add(Value(1), crisp(named::rho_leq()), {1, 2});
  const auto l = enumerate_optimal_surjective(leq);
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(l[0].to_string(), "01");

  Instance both(2);
  both.add(Value(1), crisp(named::rho0()), {1});
  both.add(Value(1), crisp(named::rho0()), {2});
  EXPECT_TRUE(enumerate_optimal_surjective(both).empty());
}

TEST(EnumerateSurjectiveTest, MatchesBruteForce) {
  testing::Rng rng(151);
  int zero_path = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const bool flip = trial % 3 == 0;
    Instance inst = rng.instance(rng.uniform(2, 9), rng.uniform(1, 8), eds_pool(rng, 3, 3));
    if (flip) inst = negate(inst);
    std::vector<Assignment> got;
    const auto summary = enumerate_optimal_surjective(inst, [&](const Assignment& s) { got.push_back(s); });
    EXPECT_EQ(got, brute_vcsp_surjective_all(inst));
    EXPECT_EQ(summary.emitted, got.size());
    if (!flip && summary.path == SolvePath::EdsLambdaZero) {
      ++zero_path;
      // Every emitted assignment attains the sum of the constraint minima.
      Value floor(0);
      for (const auto& c : inst.constraints()) floor += c.weight * *c.relation.min_value();
      for (const auto& s : got) EXPECT_EQ(evaluate(inst, s), floor);
    }
  }
  EXPECT_GT(zero_path, 5);
}

TEST(FixupTest, Examples) {
  const WeightedRelation reward(2, {Value(1), Value(0), Value(0), Value(1)});
  Instance chain(4);
  for (int i = 1; i < 4; ++i) chain.add(Value(1), reward, {i, i + 1});
  const auto s = fixup_surjective(chain, Assignment(4), Value(1), Value(1, 2));
  EXPECT_TRUE(s.is_surjective());
  EXPECT_EQ(evaluate(chain, s), Value(2));
  EXPECT_THROW(fixup_surjective(chain, Assignment(3), Value(1), Value(1, 2)), ArgumentError);
  EXPECT_THROW(fixup_surjective(chain, Assignment(4), Value(1), Value(0)), ArgumentError);

  // A star on 10 vertices is large enough to skip brute force at eps = 1.
  Instance star(10);
  for (int v = 2; v <= 10; ++v) star.add(Value(1), reward, {1, v});
  const auto t = fixup_surjective(star, Assignment(10), Value(1), Value(1));
  EXPECT_TRUE(t.is_surjective());
  EXPECT_EQ(evaluate(star, t), Value(8));
  EXPECT_EQ(t.to_string(), "0010000000");
}

TEST(FixupTest, GuaranteeOnRandomInstances) {
  testing::Rng rng(157);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<WeightedRelation> pool;
    for (int k = 0; k < 3; ++k) pool.push_back(rng.weighted_relation(rng.uniform(1, 3), 0.0));
    const Instance inst = rng.instance(rng.uniform(2, 12), rng.uniform(1, 10), pool);
    Assignment best(inst.num_vars());
    Value top(-1);
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << inst.num_vars()); ++k) {
      const auto s = Assignment::from_index(k, inst.num_vars());
      if (evaluate(inst, s) > top) {
        top = evaluate(inst, s);
        best = s;
      }
    }
    const Value sopt = brute_max_surjective(inst).first;
    for (const Value eps : {Value(1, 4), Value(1, 2)}) {
      const auto s = fixup_surjective(inst, best, Value(1), eps);
      EXPECT_TRUE(s.is_surjective());
      EXPECT_GE(evaluate(inst, s), (Value(1) - eps) * sopt);
    }
  }
}

}  // namespace
}  // namespace surjvcsp
