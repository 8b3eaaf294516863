#include <gtest/gtest.h>

#include "support/random.hpp"
#include "surjvcsp/surjvcsp.hpp"

namespace surjvcsp {
namespace {

using named::gamma0;
using named::gamma_eq;

const Value kInf = Value::infinity();

// J(X) straight from the certificate's raw edges and f, no contraction.
Value direct_objective(const ApproxCertificate& c, VertexSet x) {
  Value j = c.f->value(x);
  for (const Edge& e : c.edges)
    if (contains(x, e.u) != contains(x, e.v)) j += e.weight;
  return j;
}

void expect_sandwich(const ApproxCertificate& c, const SetFunction& gamma) {
  for (VertexSet x = 0; x < (VertexSet{1} << gamma.n()); ++x) {
    const Value j = direct_objective(c, x);
    EXPECT_LE(j, gamma.value(x)) << set_string(x);
    EXPECT_LE(gamma.value(x), c.factor * j) << set_string(x);
  }
}

TEST(SetFunctionOfTest, Examples) {
  const auto g0 = set_function_of(gamma0());
  EXPECT_EQ(g0->value(0), Value(0));
  EXPECT_EQ(g0->value(1), Value(1));

  // mu_6(1,0,0) = 6 and mu_6(0,0,1) = 2.
  const auto mu = set_function_of(named::mu(Value(6)));
  EXPECT_EQ(mu->value(set_of({1})), Value(6));
  EXPECT_EQ(mu->value(set_of({3})), Value(2));
  EXPECT_EQ(mu->value(set_of({1, 3})), Value(1));

  const auto eq = set_function_of(gamma_eq());
  EXPECT_EQ(eq->value(set_of({1})), Value(1));
  EXPECT_EQ(eq->value(set_of({2})), Value(1));
  EXPECT_EQ(eq->value(set_of({1, 2})), Value(0));

  // Shift by the value at the zero tuple.
  const auto shifted = set_function_of(add_constant(gamma_eq(), Value(5)));
  EXPECT_EQ(shifted->value(set_of({1})), Value(1));
  EXPECT_THROW(set_function_of(named::gamma1()), ArgumentError);
  EXPECT_THROW(set_function_of(named::crisp(named::rho1())), ArgumentError);
}

TEST(ApproxFactorTest, Examples) {
  EXPECT_EQ(approx_factor(2, Value(1)), Value(12));
  EXPECT_EQ(approx_factor(1, Value(1)), Value(3));
  EXPECT_EQ(approx_factor(3, Value(3)), Value(8019));
  EXPECT_EQ(approx_factor(1, Value(3, 2)), Value(81, 8));
  EXPECT_THROW(approx_factor(0, Value(1)), ArgumentError);
  EXPECT_THROW(approx_factor(2, Value(1, 2)), ArgumentError);
}

TEST(ApproxStrongTest, Examples) {
  const auto eq = approx_strong(*set_function_of(gamma_eq()), Value(1));
  ASSERT_EQ(eq.edges.size(), 1u);
  EXPECT_EQ(eq.edges[0].weight, Value(1, 12));
  for (VertexSet x = 1; x < 4; ++x) EXPECT_EQ(eq.f->value(x), Value(0));
  EXPECT_EQ(eq.objective(set_of({1})), Value(1, 12));
  EXPECT_EQ(eq.factor, Value(12));

  const auto g0 = approx_strong(*set_function_of(gamma0()), Value(1));
  EXPECT_TRUE(g0.edges.empty());
  EXPECT_EQ(g0.f->value(1), Value(1));
  EXPECT_EQ(g0.factor, Value(3));

  const auto zero = approx_strong(*make_zero(3), Value(1));
  EXPECT_TRUE(zero.edges.empty());
  for (VertexSet x = 0; x < 8; ++x) EXPECT_EQ(zero.objective(x), Value(0));
}

TEST(ApproxStrongTest, RejectsNonEds) {
  // gamma(2) = 1 but gamma({1,2} \ {1}) is large relative to alpha = 1.
  const auto t = make_table(2, {Value(0), Value(0), Value(5), Value(0)});
  EXPECT_THROW(approx_strong(*t, Value(1)), ArgumentError);
  EXPECT_NO_THROW(approx_strong(*make_table(2, {Value(0), Value(1), Value(5), Value(1)}), Value(5, 2)));
  EXPECT_THROW(approx_strong(named::crisp(named::rho_neq())), ArgumentError);
}

TEST(ApproxStrongTest, SandwichOnRandomEds) {
  testing::Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = rng.eds_relation(rng.uniform(1, 4));
    if (feas(g).empty()) continue;
    const auto alpha = min_alpha_eds(g);
    ASSERT_TRUE(alpha);
    const auto gamma = set_function_of(g);
    const auto c = approx_strong(*gamma, *alpha);
    EXPECT_EQ(c.factor, approx_factor(g.arity(), *alpha));
    EXPECT_TRUE(is_superadditive(*c.f));
    expect_sandwich(c, *gamma);
  }
}

// Lower bound behind the edge weights, for random separating sets.
TEST(ApproxStrongTest, CutLowerBound) {
  testing::Rng rng(103);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.uniform(2, 4);
    const auto g = rng.eds_relation(n);
    if (feas(g).empty()) continue;
    const Value alpha = *min_alpha_eds(g);
    const auto gamma = set_function_of(g);
    const VertexSet all = full_set(n);
    // T[u][v]: a random set containing exactly one of u, v.
    std::vector<std::vector<VertexSet>> tuv(n + 1, std::vector<VertexSet>(n + 1));
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) {
        VertexSet z;
        do z = static_cast<VertexSet>(rng.engine()()) & all;
        while (contains(z, u) == contains(z, v));
        tuv[u][v] = z;
      }
    Value pow(1);
    for (VertexSet s = 0; s <= all; ++s)
      for (VertexSet r = s;; r = (r - 1) & s) {
        Value sum(0);
        for (int u = 1; u <= n; ++u)
          for (int v = u + 1; v <= n; ++v)
            if (contains(r, u) != contains(r, v)) sum += gamma->value(tuv[u][v]);
        Value p(1);
        for (int i = 0; i < set_size(s) + 2; ++i) p *= alpha;
        const Value lhs = p * (Value(set_size(s) * set_size(s) + 2) * gamma->value(s) + sum);
        EXPECT_GE(lhs, gamma->value(r));
        if (r == 0) break;
      }
  }
}

TEST(ApproxSimpleTest, Examples) {
  const auto eq = approx_simple(gamma_eq());
  EXPECT_EQ(eq.factor, Value(2));
  ASSERT_EQ(eq.edges.size(), 1u);
  EXPECT_EQ(eq.edges[0].weight, Value(1, 2));
  EXPECT_EQ(eq.objective(set_of({1})), Value(1, 2));

  EXPECT_EQ(approx_simple(gamma0()).factor, Value(1));
  EXPECT_EQ(approx_simple(gamma0()).objective(1), Value(1));

  const auto nand = approx_simple(named::crisp(Relation(2, {0b00, 0b01, 0b10})));
  EXPECT_EQ(nand.factor, Value(1));
  EXPECT_EQ(nand.objective(set_of({1, 2})), kInf);
  EXPECT_EQ(nand.objective(set_of({1})), Value(0));
  EXPECT_THROW(approx_simple(named::crisp(named::rho_leq())), ArgumentError);
  EXPECT_THROW(approx_simple(named::crisp(named::rho_neq())), ArgumentError);
}

TEST(ApproxSimpleTest, SandwichOnRandomEds) {
  testing::Rng rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = rng.eds_relation(rng.uniform(1, 4));
    if (feas(g).empty()) continue;
    const auto c = approx_simple(g);
    EXPECT_TRUE(is_superadditive(*c.f));
    expect_sandwich(c, *set_function_of(g));
  }
}

// phi(X) - phi(0) for an instance of c_0 relations.
Value shifted_phi(const Instance& inst, VertexSet x) {
  const int n = inst.num_vars();
  return evaluate(inst, Assignment::from_mask(x, n)) - evaluate(inst, Assignment(n));
}

TEST(InstanceGmcTest, Examples) {
  Instance one(2);
  one.add(Value(2), gamma_eq(), {1, 2});
  const auto [j, alpha] = instance_gmc(one);
  EXPECT_EQ(alpha, Value(12));
  EXPECT_EQ(j.objective(set_of({1})), Value(1, 6));
  EXPECT_EQ(j.graph().weight(1, 2), Value(1, 6));

  Instance loop(1);
  loop.add(Value(1), gamma_eq(), {1, 1});
  const auto [jl, al] = instance_gmc(loop);
  EXPECT_EQ(jl.n(), 1);
  EXPECT_TRUE(jl.graph().edges().empty());
  EXPECT_EQ(jl.objective(1), Value(0));

  Instance bad(2);
  bad.add(Value(1), named::crisp(named::rho_neq()), {1, 2});
  EXPECT_THROW(instance_gmc(bad), ArgumentError);
}

TEST(InstanceGmcTest, SharedVariableSums) {
  Instance inst(3);
  inst.add(Value(1), gamma_eq(), {1, 2});
  inst.add(Value(3), gamma0(), {2});
  inst.add(Value(1), gamma_eq(), {2, 3});
  const auto [j, alpha] = instance_gmc(inst);
  EXPECT_EQ(j.graph().weight(1, 2), Value(1, 12));
  EXPECT_EQ(j.graph().weight(2, 3), Value(1, 12));
  EXPECT_EQ(j.f()->value(set_of({2})), Value(3));
  for (VertexSet x = 0; x < 8; ++x) {
    EXPECT_LE(j.objective(x), shifted_phi(inst, x));
    EXPECT_LE(shifted_phi(inst, x), alpha * j.objective(x));
  }
}

TEST(InstanceGmcTest, SandwichOnRandomInstances) {
  testing::Rng rng(109);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<WeightedRelation> pool;
    while (pool.size() < 3) {
      auto g = rng.eds_relation(rng.uniform(1, 3));
      if (!feas(g).empty()) pool.push_back(g);
    }
    const int n = rng.uniform(2, 8);
    const Instance inst = rng.instance(n, rng.uniform(1, 6), pool);
    const auto [j, alpha] = instance_gmc(inst);
    EXPECT_TRUE(is_superadditive(*j.f()));
    for (VertexSet x = 0; x <= full_set(n); ++x) {
      const Value jx = j.objective_original(x);
      const Value phi = shifted_phi(inst, x);
      EXPECT_LE(jx, phi);
      EXPECT_LE(phi, alpha * jx);
    }
  }
}

}  // namespace
}  // namespace surjvcsp
