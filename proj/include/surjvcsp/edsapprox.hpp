#pragma once

// GMC instances that approximate EDS weighted relations and EDS instances.

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surjvcsp/classify.hpp"
#include "surjvcsp/errors.hpp"
#include "surjvcsp/gmc.hpp"
#include "surjvcsp/instance.hpp"
#include "surjvcsp/relation.hpp"
#include "surjvcsp/set_function.hpp"
#include "surjvcsp/value.hpp"

namespace surjvcsp {

/// Tuple with x_i = 1 exactly for i in X.
inline Tuple tuple_of_set(VertexSet x, int arity) {
  Tuple t = 0;
  for (int i = 1; i <= arity; ++i)
    if (contains(x, i)) t |= Tuple{1} << (arity - i);
  return t;
}

inline VertexSet set_of_tuple(Tuple t, int arity) {
  VertexSet x = 0;
  for (int i = 1; i <= arity; ++i)
    if (coord(t, i, arity)) x |= vertex_bit(i);
  return x;
}

/// gamma'(X) = gamma(x) - gamma(0), x the indicator tuple of X.
inline SetFunctionPtr set_function_of(const WeightedRelation& g) {
  const Value g0 = g(0);
  if (g0.is_infinite()) throw ArgumentError("set_function_of: value of the zero tuple is infinite");
  const int r = g.arity();
  std::vector<Value> t(table_size(r));
  for (Tuple k = 0; k < table_size(r); ++k) {
    if (g(k) < g0) throw ArgumentError("set_function_of: minimum not attained at the zero tuple");
    t[set_of_tuple(k, r)] = g(k) - g0;
  }
  return make_table(r, std::move(t));
}

/// alpha^{r+2} (r^3 + 2r).
inline Value approx_factor(int r, const Value& alpha) {
  if (r < 1) throw ArgumentError("approx_factor: r must be positive");
  if (alpha.is_infinite() || alpha < Value(1)) throw ArgumentError("approx_factor: alpha must be >= 1");
  Value p(1);
  for (int i = 0; i < r + 2; ++i) p *= alpha;
  return p * Value(std::int64_t{r} * r * r + 2 * r);
}

struct ApproxCertificate {
  int arity = 0;
  std::vector<Edge> edges;  // on 1..arity, before contraction
  SetFunctionPtr f;         // on 1..arity
  Value factor;
  GmcInstance gmc;

  Value objective(VertexSet x) const { return gmc.objective_original(x); }
};

/// Largest ground set accepted by the certificate constructions.
inline constexpr int kApproxLimit = 12;

namespace detail {

inline std::vector<Value> table_of(const SetFunction& f) {
  std::vector<Value> t(std::size_t{1} << f.n());
  for (VertexSet x = 0; x < t.size(); ++x) t[x] = f.value(x);
  return t;
}

/// Exhaustive J <= gamma <= factor * J and superadditivity of f.
inline void check_certificate(const ApproxCertificate& c, const std::vector<Value>& gamma,
                              const char* who) {
  if (!is_superadditive(*c.f)) throw StateError(std::string(who) + ": f is not superadditive");
  for (VertexSet x = 0; x < gamma.size(); ++x) {
    const Value j = c.objective(x);
    if (!(j <= gamma[x]) || !(gamma[x] <= c.factor * j))
      throw StateError(std::string(who) + ": sandwich fails at " + set_string(x));
  }
}

}  // namespace detail

/// Edges w(u,v) = min{gamma(Z) : Z separates u, v} / (n^3+2n) and
/// f(X) = |X| min{(|Z|^2+2) gamma(Z) : Z contains X} / (n^3+2n).
inline ApproxCertificate approx_strong(const SetFunction& gamma, const Value& alpha) {
  const int n = gamma.n();
  if (n < 1 || n > kApproxLimit) throw ArgumentError("approx_strong: ground set size must be 1..12");
  if (alpha.is_infinite() || alpha < Value(1)) throw ArgumentError("approx_strong: alpha must be >= 1");
  const auto t = detail::table_of(gamma);
  if (!t[0].is_zero()) throw ArgumentError("approx_strong: gamma(empty) must be 0");
  const VertexSet all = full_set(n);
  for (VertexSet x = 0; x <= all; ++x)
    for (VertexSet y = 0; y <= all; ++y)
      if (alpha * (t[x] + t[y]) < t[x & ~y])
        throw ArgumentError("approx_strong: set function is not alpha-EDS");

  const Value d(std::int64_t{n} * n * n + 2 * n);
  ApproxCertificate c;
  c.arity = n;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      Value m = Value::infinity();
      for (VertexSet z = 0; z <= all; ++z)
        if (contains(z, u) != contains(z, v)) m = min(m, t[z]);
      if (!m.is_zero()) c.edges.push_back({u, v, m / d});
    }
  // Superset minima of (|Z|^2+2) gamma(Z).
  std::vector<Value> h(t.size());
  for (VertexSet z = 0; z <= all; ++z) h[z] = Value(set_size(z) * set_size(z) + 2) * t[z];
  for (int i = 1; i <= n; ++i)
    for (VertexSet x = 0; x <= all; ++x)
      if (!contains(x, i)) h[x] = min(h[x], h[x | vertex_bit(i)]);
  std::vector<Value> f(t.size(), Value(0));
  for (VertexSet x = 1; x <= all; ++x) f[x] = Value(set_size(x)) * h[x] / d;
  c.f = make_table(n, std::move(f));
  c.factor = approx_factor(n, alpha);
  c.gmc = GmcInstance(n, c.edges, c.f);
  detail::check_certificate(c, t, "approx_strong");
  return c;
}

inline ApproxCertificate approx_strong(const WeightedRelation& g) {
  const auto alpha = min_alpha_eds(g);
  if (!alpha) throw ArgumentError("approx_strong: relation is not EDS");
  return approx_strong(*set_function_of(g), *alpha);
}

/// Downset indicator plus equality edges, scaled by b_min / n.
inline ApproxCertificate approx_simple(const WeightedRelation& g) {
  if (!is_eds_relation(g)) throw ArgumentError("approx_simple: relation is not EDS");
  const auto gamma = set_function_of(g);
  const int n = g.arity();
  const auto t = detail::table_of(*gamma);
  std::vector<Value> tf(t.size());
  for (Tuple k = 0; k < table_size(n); ++k) tf[k] = t[set_of_tuple(k, n)];
  const WeightedRelation norm(n, std::move(tf));
  const auto df = essentially_downset(feas(norm));
  const auto dopt = essentially_downset(opt(norm));

  // Residual tuple of X on the representatives of d.
  auto residual_tuple = [](const DownsetDecomposition& d, VertexSet x) {
    const int q = static_cast<int>(d.representatives.size());
    Tuple p = 0;
    for (int j = 0; j < q; ++j)
      if (contains(x, d.representatives[j])) p = with_coord(p, j + 1, q, 1);
    return p;
  };
  auto class_edges = [](const DownsetDecomposition& d, const Value& w, std::vector<Edge>& out) {
    for (const auto& cls : d.classes)
      for (std::size_t k = 1; k < cls.size(); ++k) out.push_back({cls.front(), cls[k], w});
  };

  std::vector<Value> b;
  for (const Value& v : t)
    if (v.is_finite() && v > Value(0)) b.push_back(v);
  Value scale(1), factor(1);
  if (!b.empty()) {
    const Value lo = *std::min_element(b.begin(), b.end());
    const Value hi = *std::max_element(b.begin(), b.end());
    scale = lo / Value(n);
    factor = Value(n) * hi / lo;
  }

  ApproxCertificate c;
  c.arity = n;
  std::vector<Edge> raw;
  class_edges(*df, Value::infinity(), raw);
  class_edges(*dopt, Value(1), raw);
  for (const Edge& e : raw) c.edges.push_back({e.u, e.v, e.weight * scale});
  std::vector<Value> f(t.size(), Value(0));
  for (VertexSet x = 1; x < f.size(); ++x) {
    Value v(0);
    if (!df->residual.contains(residual_tuple(*df, x))) v = Value::infinity();
    if (!dopt->residual.contains(residual_tuple(*dopt, x))) {
      VertexSet a = 0;
      for (int rep : dopt->representatives) a |= vertex_bit(rep);
      v += Value(set_size(x & a));
    }
    f[x] = v * scale;
  }
  c.f = make_table(n, std::move(f));
  c.factor = factor;
  c.gmc = GmcInstance(n, c.edges, c.f);
  detail::check_certificate(c, t, "approx_simple");
  return c;
}

/// Sum of the per-constraint certificates relabelled onto the scopes and
/// scaled by the weights. certs[i] belongs to constraint i. The factor is the
/// largest certificate factor.
inline std::pair<GmcInstance, Value> instance_gmc(const Instance& inst,
                                                  const std::vector<ApproxCertificate>& certs) {
  const auto& cons = inst.constraints();
  if (certs.size() != cons.size()) throw ArgumentError("instance_gmc: one certificate per constraint");
  const int n = inst.num_vars();
  std::vector<Edge> edges;
  std::vector<SetFunctionPtr> parts;
  Value alpha(1);
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const auto& c = cons[i];
    const auto& cert = certs[i];
    if (!is_eds_relation(c.relation)) throw ArgumentError("instance_gmc: constraint is not EDS");
    if (cert.arity != c.relation.arity()) throw ArgumentError("instance_gmc: certificate arity differs");
    for (const Edge& e : cert.edges) {
      const int u = c.scope[e.u - 1], v = c.scope[e.v - 1];
      if (u != v) edges.push_back({u, v, c.weight * e.weight});
    }
    parts.push_back(make_scaled(c.weight, std::make_shared<RelabelledFunction>(cert.f, c.scope, n)));
    alpha = max(alpha, cert.factor);
  }
  SetFunctionPtr f = make_sum(n, std::move(parts));
  if (n <= 16) f = tabulate(*f);
  return {GmcInstance(n, edges, std::move(f)), alpha};
}

/// approx_strong for every constraint, sharing certificates between equal
/// relations.
inline std::vector<ApproxCertificate> strong_certificates(const Instance& inst) {
  std::vector<std::pair<const WeightedRelation*, std::size_t>> seen;
  std::vector<ApproxCertificate> out;
  for (const auto& c : inst.constraints()) {
    std::optional<std::size_t> hit;
    for (const auto& [rel, idx] : seen)
      if (*rel == c.relation) hit = idx;
    if (hit) {
      out.push_back(out[*hit]);
      continue;
    }
    if (!is_eds_relation(c.relation)) throw ArgumentError("strong_certificates: constraint is not EDS");
    seen.emplace_back(&c.relation, out.size());
    out.push_back(approx_strong(c.relation));
  }
  return out;
}

inline std::pair<GmcInstance, Value> instance_gmc(const Instance& inst) {
  return instance_gmc(inst, strong_certificates(inst));
}

}  // namespace surjvcsp
