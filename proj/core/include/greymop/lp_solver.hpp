#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace greymop {

enum class Sense { maximize, minimize };
enum class Relation { less_equal, greater_equal, equal };

std::string_view to_string(Sense sense) noexcept;
std::string_view to_string(Relation relation) noexcept;

struct LinearConstraint {
  std::vector<double> coefficients;
  Relation relation = Relation::less_equal;
  double rhs = 0.0;
};

/// Deterministic LP over x >= 0.
struct LpProblem {
  Sense sense = Sense::maximize;
  std::vector<double> objective;
  std::vector<LinearConstraint> constraints;
  std::size_t variable_count = 0;
};

enum class LpStatus { optimal, infeasible, unbounded };

std::string_view to_string(LpStatus status) noexcept;

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<double> point;                    ///< empty unless optimal
  double value = 0.0;                           ///< objective at point, unless not optimal
  std::vector<std::size_t> tight_constraints;   ///< ascending constraint indices

  bool optimal() const noexcept { return status == LpStatus::optimal; }
};

/// Absolute tolerance for feasibility and optimality tests.
inline constexpr double kLpTolerance = 1e-9;

/// Two-phase primal simplex with Bland's rule. >= and = rows get phase-1
/// artificials. Throws Error(MalformedProblem) on row length mismatch or
/// non-finite data.
LpSolution solve_lp(const LpProblem& problem);

/// Objective value c.x (no tolerance games; used for re-evaluation checks).
double evaluate(std::span<const double> coefficients, std::span<const double> point);

/// True when x >= -tol and every constraint holds within tol.
bool is_feasible(const LpProblem& problem, std::span<const double> point,
                 double tol = kLpTolerance);

}  // namespace greymop
