#pragma once

#include <cstdint>
#include <string>

#include "surjvcsp/instance.hpp"
#include "surjvcsp/value.hpp"

namespace surjvcsp {

enum class SolveStatus { Optimal, Infeasible };

enum class SolvePath { EdsLambdaZero, EdsLambdaFinite, NegEds, BruteForce, BranchAndBound };

inline const char* status_name(SolveStatus s) {
  return s == SolveStatus::Optimal ? "optimal" : "infeasible";
}

inline const char* path_name(SolvePath p) {
  switch (p) {
    case SolvePath::EdsLambdaZero: return "eds-lambda-zero";
    case SolvePath::EdsLambdaFinite: return "eds-lambda-finite";
    case SolvePath::NegEds: return "neg-eds";
    case SolvePath::BruteForce: return "brute-force";
    case SolvePath::BranchAndBound: return "branch-and-bound";
  }
  return "?";
}

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  Value value = Value::infinity();
  Assignment assignment;  // meaningful when status == Optimal
  SolvePath path = SolvePath::BruteForce;
  std::uint64_t candidates_examined = 0;

  bool optimal() const { return status == SolveStatus::Optimal; }
};

}  // namespace surjvcsp
