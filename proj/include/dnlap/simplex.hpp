#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dnlap {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct LinearConstraint {
  std::vector<double> coefficients;
  Relation relation = Relation::LessEqual;
  double rhs = 0.0;
};

/// minimize objective . x  subject to the constraints and x >= 0.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<LinearConstraint> constraints;

  std::size_t variable_count() const { return objective.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double value = 0.0;
  std::vector<double> x;
};

class LpIterationLimit : public std::runtime_error {
 public:
  LpIterationLimit() : std::runtime_error("simplex iteration limit reached") {}
};

/// Dense two-phase tableau simplex with Bland's rule (no cycling).
/// Pivot and feasibility tolerance 1e-10.
LpSolution solve_simplex(const LinearProgram& lp);

}  // namespace dnlap
