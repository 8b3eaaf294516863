#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "surjvcsp/boolean_ops.hpp"
#include "surjvcsp/classify.hpp"
#include "surjvcsp/edsapprox.hpp"
#include "surjvcsp/errors.hpp"
#include "surjvcsp/gmc.hpp"
#include "surjvcsp/instance.hpp"
#include "surjvcsp/oracle.hpp"
#include "surjvcsp/result.hpp"
#include "surjvcsp/value.hpp"

namespace surjvcsp {

enum class SolveMode { Auto, Eds, Brute, BranchAndBound };

/// Above this many variables auto mode prefers branch and bound to brute force.
inline constexpr int kAutoBruteLimit = 16;

using AssignmentSink = std::function<void(const Assignment&)>;

namespace detail {

/// Domain bits per variable: bit 0 allows label 0, bit 1 allows label 1.
using Domains = std::vector<std::uint8_t>;

inline std::uint8_t label_bit(int label) { return static_cast<std::uint8_t>(1U << label); }

/// Generalised arc consistency over the finite tuples of each constraint,
/// and a per-constraint lower bound on the weighted value.
class Propagator {
 public:
  explicit Propagator(const Instance& inst) : inst_(inst), watch_(inst.num_vars() + 1) {
    const auto& cons = inst.constraints();
    for (std::size_t c = 0; c < cons.size(); ++c) {
      const auto& con = cons[c];
      const int r = con.relation.arity();
      std::vector<Tuple> all, finite;
      for (Tuple t = 0; t < table_size(r); ++t) {
        if (!self_consistent(con.scope, t)) continue;
        all.push_back(t);
        if ((con.weight * con.relation(t)).is_finite()) finite.push_back(t);
      }
      tuples_.push_back(std::move(all));
      finite_.push_back(std::move(finite));
      std::vector<int> vars = con.scope;
      std::sort(vars.begin(), vars.end());
      vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
      for (int v : vars) watch_[v].push_back(c);
    }
  }

  /// Shrinks dom to arc consistency; false on a wipe-out.
  bool propagate(Domains& dom) const {
    const auto& cons = inst_.constraints();
    std::vector<char> queued(cons.size(), 1);
    std::vector<std::size_t> queue(cons.size());
    std::iota(queue.begin(), queue.end(), 0);
    while (!queue.empty()) {
      const std::size_t c = queue.back();
      queue.pop_back();
      queued[c] = 0;
      const auto& scope = cons[c].scope;
      const int r = static_cast<int>(scope.size());
      std::vector<std::uint8_t> support(r, 0);
      for (Tuple t : finite_[c]) {
        if (!consistent(scope, t, dom)) continue;
        for (int p = 0; p < r; ++p) support[p] |= label_bit(coord(t, p + 1, r));
      }
      for (int p = 0; p < r; ++p) {
        const int v = scope[p];
        const std::uint8_t nd = dom[v] & support[p];
        if (nd == dom[v]) continue;
        if (nd == 0) return false;
        dom[v] = nd;
        for (std::size_t d : watch_[v])
          if (!queued[d]) {
            queued[d] = 1;
            queue.push_back(d);
          }
      }
    }
    return true;
  }

  /// Sum over constraints of the least weighted value consistent with dom.
  Value lower_bound(const Domains& dom, const Value& cutoff) const {
    const auto& cons = inst_.constraints();
    Value total(0);
    for (std::size_t c = 0; c < cons.size(); ++c) {
      Value best = Value::infinity();
      for (Tuple t : tuples_[c])
        if (consistent(cons[c].scope, t, dom)) best = min(best, cons[c].relation(t));
      total += cons[c].weight * best;
      if (total >= cutoff) return total;
    }
    return total;
  }

 private:
  static bool self_consistent(const std::vector<int>& scope, Tuple t) {
    const int r = static_cast<int>(scope.size());
    for (int p = 0; p < r; ++p)
      for (int q = p + 1; q < r; ++q)
        if (scope[p] == scope[q] && coord(t, p + 1, r) != coord(t, q + 1, r)) return false;
    return true;
  }
  static bool consistent(const std::vector<int>& scope, Tuple t, const Domains& dom) {
    const int r = static_cast<int>(scope.size());
    for (int p = 0; p < r; ++p)
      if (!(dom[scope[p]] & label_bit(coord(t, p + 1, r)))) return false;
    return true;
  }

  const Instance& inst_;
  std::vector<std::vector<Tuple>> tuples_;
  std::vector<std::vector<Tuple>> finite_;
  std::vector<std::vector<std::size_t>> watch_;
};

inline Assignment assignment_of(const Domains& dom) {
  Assignment a(dom.size() - 1);
  for (std::size_t v = 1; v < dom.size(); ++v) a.set(v, dom[v] == label_bit(1) ? 1 : 0);
  return a;
}

/// Some variable can still take label 0 and some can take label 1.
inline bool can_be_surjective(const Domains& dom) {
  bool zero = false, one = false;
  for (std::size_t v = 1; v < dom.size(); ++v) {
    zero |= (dom[v] & 1U) != 0;
    one |= (dom[v] & 2U) != 0;
  }
  return zero && one;
}

inline bool all_eds(const Instance& inst) {
  return std::all_of(inst.constraints().begin(), inst.constraints().end(),
                     [](const Constraint& c) { return is_eds_relation(c.relation); });
}

inline Instance relabel(const Instance& inst) { return negate(inst); }

/// The GMC reduction of an EDS instance together with its lambda class.
struct EdsReduction {
  GmcInstance gmc;
  Value alpha;
  std::optional<LambdaClass> lambda;  // nullopt when every variable is merged
};

/// Some constraint has no finite tuple.
inline bool has_empty_constraint(const Instance& inst) {
  for (const auto& c : inst.constraints())
    if (!c.relation.min_value()) return true;
  return false;
}

inline EdsReduction reduce_eds(const Instance& inst) {
  auto [j, alpha] = instance_gmc(inst);
  EdsReduction red{std::move(j), alpha, std::nullopt};
  if (red.gmc.n() >= 2) red.lambda = classify_lambda(red.gmc);
  return red;
}

inline bool lambda_infinite(const EdsReduction& red) {
  return !red.lambda || std::holds_alternative<LambdaInfinite>(*red.lambda);
}

/// alpha-optimal GMC solutions as assignments of the original variables.
inline std::vector<Assignment> eds_candidates(const Instance& inst, const EdsReduction& red) {
  std::vector<Assignment> out;
  for (VertexSet x : enumerate_alpha_optimal(red.gmc, red.alpha))
    out.push_back(Assignment::from_mask(red.gmc.graph().expand(x), inst.num_vars()));
  return out;
}

/// Solves an EDS instance.
inline SolveResult solve_eds(const Instance& inst) {
  SolveResult res;
  res.path = SolvePath::EdsLambdaFinite;
  if (inst.num_vars() < 2 || has_empty_constraint(inst)) return res;
  const auto red = reduce_eds(inst);
  if (lambda_infinite(red)) return res;
  if (const auto* z = std::get_if<LambdaZero>(&*red.lambda)) {
    res.path = SolvePath::EdsLambdaZero;
    res.assignment = Assignment::from_mask(red.gmc.graph().expand(z->witness), inst.num_vars());
    res.value = evaluate(inst, res.assignment);
    res.status = SolveStatus::Optimal;
    res.candidates_examined = 1;
    return res;
  }
  for (const Assignment& s : eds_candidates(inst, red)) {
    ++res.candidates_examined;
    const Value v = evaluate(inst, s);
    if (v.is_infinite()) continue;
    if (!res.optimal() || v < res.value || (v == res.value && s < res.assignment)) {
      res.status = SolveStatus::Optimal;
      res.value = v;
      res.assignment = s;
    }
  }
  return res;
}

inline SolveResult solve_neg_eds(const Instance& inst) {
  SolveResult res = solve_eds(relabel(inst));
  res.path = SolvePath::NegEds;
  if (res.optimal()) res.assignment = res.assignment.flipped();
  return res;
}

/// Depth-first search over labels with propagation; yields every solution of
/// a crisp instance in the order induced by `first` (label tried first).
inline void propagate_enumerate(const Instance& inst, const Propagator& prop, int first,
                                const AssignmentSink& sink) {
  const int n = inst.num_vars();
  Domains dom(n + 1, 3);
  dom[0] = 0;
  if (!prop.propagate(dom)) return;
  std::function<void(int, const Domains&)> rec = [&](int v, const Domains& d) {
    if (v > n) {
      sink(assignment_of(d));
      return;
    }
    for (int label : {first, 1 - first}) {
      if (!(d[v] & label_bit(label))) continue;
      Domains next = d;
      next[v] = label_bit(label);
      if (prop.propagate(next)) rec(v + 1, next);
    }
  };
  rec(1, dom);
}

inline void check_min_closed(const Instance& inst) {
  for (const auto& c : inst.constraints()) {
    if (!is_crisp(c.relation)) throw ArgumentError("min_closed_enumerate: relation is not crisp");
    if (!admits_polymorphism(feas(c.relation), ops::min()).holds)
      throw ArgumentError("min_closed_enumerate: relation does not admit min");
  }
}

/// Replaces each constraint by the crisp relation of its optimal tuples.
inline Instance opt_rewrite(const Instance& inst) {
  Instance out(inst.num_vars());
  for (const auto& c : inst.constraints())
    out.add(Value(1), WeightedRelation::crisp(opt(scale(c.relation, c.weight))), c.scope, c.name);
  return out;
}

/// All optimal surjective assignments of an EDS instance, lexicographic
/// (descending when `reversed`, for the relabelled path).
inline void enumerate_eds(const Instance& inst, bool reversed, const AssignmentSink& sink,
                          SolvePath& path) {
  path = SolvePath::EdsLambdaFinite;
  if (inst.num_vars() < 2 || has_empty_constraint(inst)) return;
  const auto red = reduce_eds(inst);
  if (lambda_infinite(red)) return;
  if (std::holds_alternative<LambdaZero>(*red.lambda)) {
    path = SolvePath::EdsLambdaZero;
    const Instance csp = opt_rewrite(inst);
    check_min_closed(csp);
    const Propagator prop(csp);
    propagate_enumerate(csp, prop, reversed ? 1 : 0, [&](const Assignment& s) {
      if (s.is_surjective()) sink(s);
    });
    return;
  }
  std::vector<std::pair<Value, Assignment>> scored;
  Value best = Value::infinity();
  for (Assignment& s : eds_candidates(inst, red)) {
    const Value v = evaluate(inst, s);
    best = min(best, v);
    scored.emplace_back(v, std::move(s));
  }
  std::vector<Assignment> opt;
  for (auto& [v, s] : scored)
    if (v == best && v.is_finite()) opt.push_back(std::move(s));
  std::sort(opt.begin(), opt.end());
  if (reversed) std::reverse(opt.begin(), opt.end());
  for (const auto& s : opt) sink(s);
}

}  // namespace detail

/// Every satisfying assignment of a crisp min-closed instance, in
/// lexicographic order, by self-reduction with arc consistency.
inline void min_closed_enumerate(const Instance& inst, const AssignmentSink& sink) {
  detail::check_min_closed(inst);
  const detail::Propagator prop(inst);
  detail::propagate_enumerate(inst, prop, 0, sink);
}

inline std::vector<Assignment> min_closed_enumerate(const Instance& inst) {
  std::vector<Assignment> out;
  min_closed_enumerate(inst, [&](const Assignment& s) { out.push_back(s); });
  return out;
}

/// Exact surjective minimum by depth-first branch and bound. Variables are
/// branched in order of decreasing occurrence count, label 0 first.
inline SolveResult branch_and_bound_surjective(const Instance& inst) {
  SolveResult res;
  res.path = SolvePath::BranchAndBound;
  const int n = inst.num_vars();
  if (n < 2) return res;
  std::vector<int> degree(n + 1, 0);
  for (const auto& c : inst.constraints())
    for (int v : c.scope) ++degree[v];
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degree[a] > degree[b]; });

  const detail::Propagator prop(inst);
  detail::Domains dom(n + 1, 3);
  dom[0] = 0;
  if (!prop.propagate(dom)) return res;
  std::function<void(int, const detail::Domains&)> rec = [&](int k, const detail::Domains& d) {
    ++res.candidates_examined;
    if (!detail::can_be_surjective(d)) return;
    const Value lb = prop.lower_bound(d, res.value);
    if (lb >= res.value) return;
    if (k == n) {
      res.status = SolveStatus::Optimal;
      res.value = lb;
      res.assignment = detail::assignment_of(d);
      return;
    }
    const int v = order[k];
    for (int label : {0, 1}) {
      if (!(d[v] & detail::label_bit(label))) continue;
      detail::Domains next = d;
      next[v] = detail::label_bit(label);
      if (prop.propagate(next)) rec(k + 1, next);
    }
  };
  rec(0, dom);
  return res;
}

inline SolveResult solve_surjective(const Instance& inst, SolveMode mode = SolveMode::Auto) {
  switch (mode) {
    case SolveMode::Brute:
      return brute_vcsp_surjective(inst);
    case SolveMode::BranchAndBound:
      return branch_and_bound_surjective(inst);
    case SolveMode::Eds:
      if (detail::all_eds(inst)) return detail::solve_eds(inst);
      if (detail::all_eds(detail::relabel(inst))) return detail::solve_neg_eds(inst);
      throw ArgumentError("solve_surjective: language is neither EDS nor negated EDS");
    case SolveMode::Auto:
      break;
  }
  if (inst.num_vars() < 2) {
    SolveResult res;
    res.path = SolvePath::BruteForce;
    return res;
  }
  const Verdict verdict = classify_language(language_of(inst));
  if (verdict.tractable() && verdict.reason == Reason::EDS) return detail::solve_eds(inst);
  if (verdict.tractable() && verdict.reason == Reason::NegEDS) return detail::solve_neg_eds(inst);
  if (inst.num_vars() <= kAutoBruteLimit) return brute_vcsp_surjective(inst);
  return branch_and_bound_surjective(inst);
}

struct EnumerationSummary {
  SolvePath path = SolvePath::BruteForce;
  std::uint64_t emitted = 0;
};

/// Streams every optimal surjective assignment in lexicographic order.
inline EnumerationSummary enumerate_optimal_surjective(const Instance& inst, const AssignmentSink& sink) {
  EnumerationSummary sum;
  auto counted = [&](const Assignment& s) {
    ++sum.emitted;
    sink(s);
  };
  if (inst.num_vars() < 2) return sum;
  if (detail::all_eds(inst)) {
    detail::enumerate_eds(inst, false, counted, sum.path);
    return sum;
  }
  const Instance neg = detail::relabel(inst);
  if (detail::all_eds(neg)) {
    SolvePath inner{};
    detail::enumerate_eds(neg, true, [&](const Assignment& s) { counted(s.flipped()); }, inner);
    sum.path = SolvePath::NegEds;
    return sum;
  }
  sum.path = SolvePath::BruteForce;
  for (const auto& s : brute_vcsp_surjective_all(inst)) counted(s);
  return sum;
}

inline std::vector<Assignment> enumerate_optimal_surjective(const Instance& inst) {
  std::vector<Assignment> out;
  enumerate_optimal_surjective(inst, [&](const Assignment& s) { out.push_back(s); });
  return out;
}

/// Turns an r-approximate assignment of a Max-VCSP instance into an
/// (r - eps)-approximate surjective one.
inline Assignment fixup_surjective(const Instance& inst, const Assignment& s, const Value& r,
                                   const Value& eps) {
  const int n = inst.num_vars();
  if (static_cast<int>(s.size()) != n) throw ArgumentError("fixup_surjective: assignment length differs");
  if (!(Value(0) < eps) || !(eps <= r) || !(r <= Value(1)))
    throw ArgumentError("fixup_surjective: need 0 < eps <= r <= 1");
  if (n < 2) throw ArgumentError("fixup_surjective: fewer than two variables");
  int amax = 0;
  for (const auto& c : inst.constraints()) {
    for (const Value& v : c.relation.table())
      if (v.is_infinite() || v < Value(0))
        throw ArgumentError("fixup_surjective: values must be finite and non-negative");
    amax = std::max(amax, c.relation.arity());
  }
  if (Value(n) < r * Value(2 * amax) / eps) return brute_max_surjective(inst).second;

  std::vector<Value> contrib(n + 1, Value(0));
  for (const auto& c : inst.constraints()) {
    const Value v = c.weight * c.relation(Instance::scope_tuple(c, s));
    std::vector<int> vars = c.scope;
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    for (int x : vars) contrib[x] += v;
  }
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 1);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return contrib[a] < contrib[b]; });
  Assignment best;
  std::optional<Value> best_value;
  for (int label : {0, 1}) {
    Assignment t = s;
    t.set(idx[0], label);
    t.set(idx[1], 1 - label);
    const Value v = evaluate(inst, t);
    if (!best_value || v > *best_value) {
      best_value = v;
      best = std::move(t);
    }
  }
  return best;
}

}  // namespace surjvcsp
