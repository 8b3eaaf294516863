#pragma once

// Exhaustive reference implementations. No pruning.

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surjvcsp/errors.hpp"
#include "surjvcsp/gmc.hpp"
#include "surjvcsp/instance.hpp"
#include "surjvcsp/result.hpp"
#include "surjvcsp/value.hpp"

namespace surjvcsp {

inline constexpr int kBruteVcspLimit = 24;
inline constexpr int kBruteGmcLimit = 20;

namespace detail {

inline void guard(int n, int limit, const char* what) {
  if (n > limit)
    throw ResourceError(std::string(what) + ": " + std::to_string(n) + " variables exceed guard " +
                        std::to_string(limit));
}

/// Calls fn(assignment, value) for every assignment in lexicographic order.
template <typename Fn>
void for_each_assignment(const Instance& inst, Fn&& fn) {
  const int n = inst.num_vars();
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
    const Assignment s = Assignment::from_index(k, n);
    fn(s, evaluate(inst, s));
  }
}

}  // namespace detail

/// Plain minimum and the lexicographically first minimiser.
inline std::pair<Value, Assignment> brute_vcsp(const Instance& inst) {
  detail::guard(inst.num_vars(), kBruteVcspLimit, "brute_vcsp");
  Value best = Value::infinity();
  Assignment arg(inst.num_vars());
  bool found = false;
  detail::for_each_assignment(inst, [&](const Assignment& s, const Value& v) {
    if (!found || v < best) {
      best = v;
      arg = s;
      found = true;
    }
  });
  return {best, arg};
}

inline SolveResult brute_vcsp_surjective(const Instance& inst) {
  detail::guard(inst.num_vars(), kBruteVcspLimit, "brute_vcsp_surjective");
  SolveResult r;
  r.path = SolvePath::BruteForce;
  detail::for_each_assignment(inst, [&](const Assignment& s, const Value& v) {
    if (!s.is_surjective()) return;
    ++r.candidates_examined;
    if (v.is_finite() && (!r.optimal() || v < r.value)) {
      r.status = SolveStatus::Optimal;
      r.value = v;
      r.assignment = s;
    }
  });
  return r;
}

/// Every optimal surjective assignment, lexicographically ordered.
inline std::vector<Assignment> brute_vcsp_surjective_all(const Instance& inst) {
  detail::guard(inst.num_vars(), kBruteVcspLimit, "brute_vcsp_surjective_all");
  std::vector<Assignment> out;
  Value best = Value::infinity();
  detail::for_each_assignment(inst, [&](const Assignment& s, const Value& v) {
    if (!s.is_surjective() || v.is_infinite()) return;
    if (v < best) {
      best = v;
      out.clear();
    }
    if (v == best) out.push_back(s);
  });
  return out;
}

/// Surjective maximum; all constraint values must be finite.
inline std::pair<Value, Assignment> brute_max_surjective(const Instance& inst) {
  detail::guard(inst.num_vars(), kBruteVcspLimit, "brute_max_surjective");
  if (inst.num_vars() < 2) throw ArgumentError("brute_max_surjective: no surjective assignment");
  std::optional<Value> best;
  Assignment arg;
  detail::for_each_assignment(inst, [&](const Assignment& s, const Value& v) {
    if (!s.is_surjective()) return;
    if (v.is_infinite()) throw ArgumentError("brute_max_surjective: infinite value");
    if (!best || v > *best) {
      best = v;
      arg = s;
    }
  });
  return {*best, arg};
}

struct BruteGmcResult {
  Value lambda;                     // 0, finite positive, or infinity
  std::vector<VertexSet> optimal;   // canonical order; empty when lambda is infinite
};

inline BruteGmcResult brute_gmc(const GmcInstance& j) {
  detail::guard(j.n(), kBruteGmcLimit, "brute_gmc");
  if (j.n() < 2) throw ArgumentError("brute_gmc: fewer than two vertices");
  BruteGmcResult r{Value::infinity(), {}};
  for (VertexSet x = 1; x < full_set(j.n()); ++x) {
    const Value v = j.objective(x);
    if (v < r.lambda) {
      r.lambda = v;
      r.optimal.clear();
    }
    if (v == r.lambda && v.is_finite()) r.optimal.push_back(x);
  }
  canonical_sort(r.optimal);
  return r;
}

/// All solutions with J(X) <= alpha * lambda, for finite lambda.
inline std::vector<VertexSet> brute_gmc_alpha(const GmcInstance& j, const Value& alpha) {
  const Value lambda = brute_gmc(j).lambda;
  if (lambda.is_infinite()) throw StateError("brute_gmc_alpha: lambda is infinite");
  const Value budget = alpha * lambda;
  std::vector<VertexSet> out;
  for (VertexSet x = 1; x < full_set(j.n()); ++x)
    if (j.objective(x) <= budget) out.push_back(x);
  canonical_sort(out);
  return out;
}

/// Rows of a parity-check matrix over GF(2).
using BitMatrix = std::vector<std::vector<int>>;

/// Minimum Hamming weight of a nonzero x with Hx = 0.
inline std::optional<int> brute_min_distance(const BitMatrix& h) {
  if (h.empty()) throw ArgumentError("brute_min_distance: empty matrix");
  const int n = static_cast<int>(h.front().size());
  detail::guard(n, kBruteGmcLimit, "brute_min_distance");
  std::optional<int> best;
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x) {
    bool codeword = true;
    for (const auto& row : h) {
      int parity = 0;
      for (int j = 0; j < n; ++j) parity ^= row[j] & static_cast<int>((x >> j) & 1U);
      if (parity) {
        codeword = false;
        break;
      }
    }
    const int w = std::popcount(x);
    if (codeword && (!best || w < *best)) best = w;
  }
  return best;
}

/// Maximum number of edges cut, counting each listed edge once.
inline int brute_maxcut(int n, const std::vector<std::pair<int, int>>& edges) {
  detail::guard(n, kBruteGmcLimit, "brute_maxcut");
  int best = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    int cut = 0;
    for (auto [u, v] : edges) cut += ((x >> (u - 1)) & 1U) != ((x >> (v - 1)) & 1U);
    best = std::max(best, cut);
  }
  return best;
}

}  // namespace surjvcsp
