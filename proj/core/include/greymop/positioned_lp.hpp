#pragma once

#include <cstddef>
#include <vector>

#include "greymop/grey_number.hpp"
#include "greymop/lp_solver.hpp"

namespace greymop {

/// LP with grey price vector, grey consumption matrix and grey resource vector.
struct GreyLinearProgram {
  Sense sense = Sense::maximize;
  std::vector<GreyNumber> price;                     ///< one per variable
  std::vector<std::vector<GreyNumber>> consumption;  ///< rows x variables
  std::vector<GreyNumber> resources;                 ///< one per row
  std::vector<Relation> relations;                   ///< one per row

  std::size_t variable_count() const noexcept { return price.size(); }
  std::size_t row_count() const noexcept { return resources.size(); }

  /// Throws Error(DimensionMismatch) when the shapes disagree.
  void validate() const;

  bool operator==(const GreyLinearProgram&) const = default;
};

/// Per-entry whitening positions: rho for prices, beta for resources,
/// delta for consumption cells. All entries lie in [0,1].
struct PositionedCoefficients {
  std::vector<double> rho;
  std::vector<double> beta;
  std::vector<std::vector<double>> delta;

  /// Same (rho, beta, delta) for every entry of a program of the given shape.
  static PositionedCoefficients uniform(const GreyLinearProgram& program, double rho,
                                        double beta, double delta);
  /// rho = beta = delta = theta.
  static PositionedCoefficients theta(const GreyLinearProgram& program, double theta);
  /// LP(1,1,0): optimistic prices and resources, lightest consumption.
  static PositionedCoefficients ideal(const GreyLinearProgram& program);
  /// LP(0,0,1): the pessimistic counterpart.
  static PositionedCoefficients critical(const GreyLinearProgram& program);
};

/// Replaces every grey entry by its positioned white value; sense and relations kept.
LpProblem whiten_program(const GreyLinearProgram& program, const PositionedCoefficients& pc);

LpSolution solve_positioned(const GreyLinearProgram& program, const PositionedCoefficients& pc);

/// Throws Error(ThetaOutOfRange) unless theta is in [0,1].
LpSolution theta_solve(const GreyLinearProgram& program, double theta);

struct PleasedAssessment {
  double ideal_value = 0.0;       ///< max over LP(1,1,0)
  double critical_value = 0.0;    ///< max over LP(0,0,1)
  double positioned_value = 0.0;  ///< max over LP(rho, beta, delta)
  double degree = 0.0;
  double target_floor = 0.0;      ///< mu0; the grey target is [mu0, 1]
  bool pleased = false;
  LpSolution positioned;          ///< solution behind positioned_value
};

/// 1/2 (1 - critical/positioned) + 1/2 (positioned/ideal). Requires all three > 0.
double pleased_degree(double critical_value, double positioned_value, double ideal_value);

/// Solves the ideal, critical and positioned programs and scores the positioned
/// optimum. Throws Error(DegenerateAssessment) for minimize-sense programs, for
/// any non-optimal solve, or when a value is not strictly positive.
PleasedAssessment assess_pleased(const GreyLinearProgram& program,
                                 const PositionedCoefficients& pc, double mu0);

}  // namespace greymop
