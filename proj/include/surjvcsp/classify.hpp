#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surjvcsp/boolean_ops.hpp"
#include "surjvcsp/relation.hpp"
#include "surjvcsp/value.hpp"

namespace surjvcsp {

/// Outcome of a closure test. On failure `witness` holds the lexicographically
/// first violating family of tuples (first operand varies slowest).
struct ClosureCheck {
  bool holds = true;
  std::vector<Tuple> witness;
  explicit operator bool() const { return holds; }
};

inline ClosureCheck admits_polymorphism(const Relation& rho, const BooleanOp& h) {
  const auto members = rho.members();
  const int k = h.arity;
  const int r = rho.arity();
  std::vector<std::size_t> idx(k, 0);
  std::vector<Tuple> xs(k);
  if (members.empty()) return {};
  while (true) {
    for (int i = 0; i < k; ++i) xs[i] = members[idx[i]];
    if (!rho.contains(apply_componentwise(h, xs, r))) return {false, xs};
    int pos = k - 1;
    while (pos >= 0 && ++idx[pos] == members.size()) idx[pos--] = 0;
    if (pos < 0) return {};
  }
}

/// Checks the multimorphism <h_1..h_k>; all h_i must share arity k in 1..3.
inline ClosureCheck admits_multimorphism(const WeightedRelation& g,
                                         const std::vector<BooleanOp>& hs) {
  if (hs.empty()) throw ArgumentError("admits_multimorphism: empty operation list");
  const int k = hs.front().arity;
  if (k < 1 || k > 3 || static_cast<int>(hs.size()) != k)
    throw ArgumentError("admits_multimorphism: expected k operations of arity k, k in 1..3");
  for (const auto& h : hs)
    if (h.arity != k) throw ArgumentError("admits_multimorphism: mixed arities");
  const auto members = feas(g).members();
  if (members.empty()) return {};
  const int r = g.arity();
  std::vector<std::size_t> idx(k, 0);
  std::vector<Tuple> xs(k);
  while (true) {
    Value rhs(0);
    for (int i = 0; i < k; ++i) {
      xs[i] = members[idx[i]];
      rhs += g(xs[i]);
    }
    Value lhs(0);
    for (const auto& h : hs) lhs += g(apply_componentwise(h, xs, r));
    if (lhs > rhs) return {false, xs};
    int pos = k - 1;
    while (pos >= 0 && ++idx[pos] == members.size()) idx[pos--] = 0;
    if (pos < 0) return {};
  }
}

/// Closed downward under the componentwise order.
inline bool is_downset(const Relation& rho) {
  for (Tuple t : rho.members())
    for (Tuple rest = t; rest != 0; rest &= rest - 1) {
      const Tuple low = rest & (~rest + 1);
      if (!rho.contains(t & ~low)) return false;
    }
  return true;
}

/// A relation written as a residual relation on representative coordinates
/// conjoined with equalities inside each duplicate class.
struct DownsetDecomposition {
  int arity = 0;
  std::vector<int> representatives;          // 1-based, ascending
  std::vector<std::vector<int>> classes;     // classes[j] contains representatives[j]
  Relation residual;                         // over the representatives, in order

  /// Re-expands the residual along the duplicate classes.
  Relation reconstruct() const {
    Relation out(arity);
    const int q = static_cast<int>(representatives.size());
    for (Tuple t : residual.members()) {
      Tuple full = 0;
      for (int j = 0; j < q; ++j)
        for (int c : classes[j]) full = with_coord(full, c, arity, coord(t, j + 1, q));
      out.insert(full);
    }
    return out;
  }

  /// Class index of 1-based coordinate i.
  int class_of(int i) const {
    for (std::size_t j = 0; j < classes.size(); ++j)
      for (int c : classes[j])
        if (c == i) return static_cast<int>(j);
    throw ArgumentError("DownsetDecomposition: coordinate out of range");
  }
};

/// Identifies duplicate coordinates (equal on every member) and projects onto
/// the smallest coordinate of each class. Some iff that residual is a downset.
/// The empty relation has a single class and an empty residual.
inline std::optional<DownsetDecomposition> essentially_downset(const Relation& rho) {
  const int r = rho.arity();
  const auto members = rho.members();
  DownsetDecomposition d;
  d.arity = r;
  std::vector<int> cls(r + 1, -1);
  for (int i = 1; i <= r; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = static_cast<int>(d.classes.size());
    d.representatives.push_back(i);
    d.classes.push_back({i});
    for (int j = i + 1; j <= r; ++j) {
      if (cls[j] >= 0) continue;
      bool same = true;
      for (Tuple t : members)
        if (coord(t, i, r) != coord(t, j, r)) {
          same = false;
          break;
        }
      if (same) {
        cls[j] = cls[i];
        d.classes.back().push_back(j);
      }
    }
  }
  const int q = static_cast<int>(d.representatives.size());
  d.residual = Relation(q);
  for (Tuple t : members) {
    Tuple p = 0;
    for (int j = 0; j < q; ++j) p = with_coord(p, j + 1, q, coord(t, d.representatives[j], r));
    d.residual.insert(p);
  }
  if (!is_downset(d.residual)) return std::nullopt;
  return d;
}

inline bool is_eds_relation(const WeightedRelation& g) {
  return essentially_downset(feas(g)).has_value() && essentially_downset(opt(g)).has_value();
}

/// Least alpha >= 1 with alpha*(g(x)+g(y)-2g(0)) >= g(sub(x,y))-g(0) for all
/// feasible x, y; nullopt when no alpha works. Vacuously 1 for empty Feas.
inline std::optional<Value> min_alpha_eds(const WeightedRelation& g) {
  const auto members = feas(g).members();
  if (members.empty()) return Value(1);
  const Value g0 = g(0);
  if (g0.is_infinite()) return std::nullopt;
  const int r = g.arity();
  Value alpha(1);
  for (Tuple x : members)
    for (Tuple y : members) {
      const Value s = g(apply_componentwise(ops::sub(), {x, y}, r));
      if (s.is_infinite()) return std::nullopt;
      const Value num = s - g0;
      const Value den = g(x) + g(y) - g0 - g0;
      if (den < Value(0)) return std::nullopt;
      if (den.is_zero()) {
        if (num > Value(0)) return std::nullopt;
        continue;
      }
      alpha = max(alpha, num / den);
    }
  return alpha;
}

enum class Tractability { GloballySTractable, GloballySIntractable };

enum class Reason { EDS, NegEDS, MinMin, MaxMax, MinMax, MnrtTriple, MjrtTriple, MjrtMjrtMnrt };

inline const char* reason_name(Reason r) {
  switch (r) {
    case Reason::EDS: return "EDS";
    case Reason::NegEDS: return "NegEDS";
    case Reason::MinMin: return "MinMin";
    case Reason::MaxMax: return "MaxMax";
    case Reason::MinMax: return "MinMax";
    case Reason::MnrtTriple: return "MnrtTriple";
    case Reason::MjrtTriple: return "MjrtTriple";
    case Reason::MjrtMjrtMnrt: return "MjrtMjrtMnrt";
  }
  return "?";
}

/// One failed test of an intractable verdict.
struct FailedTest {
  Reason test;
  std::string relation;        // name of the first failing relation
  int arity = 0;
  std::vector<Tuple> witness;  // violating tuple family
};

struct Verdict {
  Tractability status = Tractability::GloballySTractable;
  std::optional<Reason> reason;
  std::vector<FailedTest> failures;

  bool tractable() const { return status == Tractability::GloballySTractable; }
};

/// The six multimorphisms in test order.
inline std::vector<std::pair<Reason, std::vector<BooleanOp>>> multimorphism_tests() {
  return {
      {Reason::MinMin, {ops::min(), ops::min()}},
      {Reason::MaxMax, {ops::max(), ops::max()}},
      {Reason::MinMax, {ops::min(), ops::max()}},
      {Reason::MnrtTriple, {ops::mnrt(), ops::mnrt(), ops::mnrt()}},
      {Reason::MjrtTriple, {ops::mjrt(), ops::mjrt(), ops::mjrt()}},
      {Reason::MjrtMjrtMnrt, {ops::mjrt(), ops::mjrt(), ops::mnrt()}},
  };
}

namespace detail {

/// Sub-closure failure of Feas or Opt, which certifies a relation is not EDS.
inline std::optional<std::vector<Tuple>> non_eds_witness(const WeightedRelation& g) {
  if (auto c = admits_polymorphism(feas(g), ops::sub()); !c) return c.witness;
  if (auto c = admits_polymorphism(opt(g), ops::sub()); !c) return c.witness;
  return std::nullopt;
}

inline std::optional<FailedTest> eds_failure(const Language& lang, Reason reason) {
  for (const auto& [name, rel] : lang.entries()) {
    if (is_eds_relation(rel)) continue;
    FailedTest f{reason, name, rel.arity(), {}};
    if (auto w = non_eds_witness(rel)) f.witness = *w;
    return f;
  }
  return std::nullopt;
}

}  // namespace detail

inline Verdict classify_language(const Language& lang) {
  Verdict v;
  std::vector<FailedTest> failures;

  if (auto f = detail::eds_failure(lang, Reason::EDS); !f) {
    v.reason = Reason::EDS;
    return v;
  } else {
    failures.push_back(*f);
  }
  const Language neg = negate(lang);
  if (auto f = detail::eds_failure(neg, Reason::NegEDS); !f) {
    v.reason = Reason::NegEDS;
    return v;
  } else {
    // Report the witness in the original labelling.
    const Tuple all = table_size(f->arity) - 1;
    for (Tuple& t : f->witness) t ^= all;
    failures.push_back(*f);
  }
  for (const auto& [reason, hs] : multimorphism_tests()) {
    std::optional<FailedTest> fail;
    for (const auto& [name, rel] : lang.entries()) {
      if (auto c = admits_multimorphism(rel, hs); !c) {
        fail = FailedTest{reason, name, rel.arity(), c.witness};
        break;
      }
    }
    if (!fail) {
      v.reason = reason;
      return v;
    }
    failures.push_back(*fail);
  }
  v.status = Tractability::GloballySIntractable;
  v.failures = std::move(failures);
  return v;
}

}  // namespace surjvcsp
