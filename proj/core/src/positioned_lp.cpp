#include "greymop/positioned_lp.hpp"

#include <sstream>
#include <string>

#include "greymop/error.hpp"

namespace greymop {

namespace {

void check_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream msg;
    msg << what << " position " << v << " outside [0, 1]";
    throw Error(ErrorCode::TOutOfRange, msg.str());
  }
}

std::string dims(std::size_t a, std::size_t b) {
  return std::to_string(a) + " vs " + std::to_string(b);
}

void check_shape(const GreyLinearProgram& g, const PositionedCoefficients& pc) {
  if (pc.rho.size() != g.variable_count()) {
    throw Error(ErrorCode::DimensionMismatch,
                "rho length mismatch: " + dims(pc.rho.size(), g.variable_count()));
  }
  if (pc.beta.size() != g.row_count()) {
    throw Error(ErrorCode::DimensionMismatch,
                "beta length mismatch: " + dims(pc.beta.size(), g.row_count()));
  }
  if (pc.delta.size() != g.row_count()) {
    throw Error(ErrorCode::DimensionMismatch,
                "delta row count mismatch: " + dims(pc.delta.size(), g.row_count()));
  }
  for (const auto& row : pc.delta) {
    if (row.size() != g.variable_count()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "delta row length mismatch: " + dims(row.size(), g.variable_count()));
    }
  }
}

LpSolution require_optimal(const LpSolution& s, const char* which) {
  if (!s.optimal()) {
    throw Error(ErrorCode::DegenerateAssessment,
                std::string(which) + " program is " + std::string(to_string(s.status)) +
                    "; pleased degree undefined");
  }
  return s;
}

}  // namespace

void GreyLinearProgram::validate() const {
  const std::size_t n = price.size();
  const std::size_t m = resources.size();
  if (consumption.size() != m) {
    throw Error(ErrorCode::DimensionMismatch,
                "consumption has " + std::to_string(consumption.size()) + " rows, resources " +
                    std::to_string(m));
  }
  if (relations.size() != m) {
    throw Error(ErrorCode::DimensionMismatch,
                "relations has " + std::to_string(relations.size()) + " entries, resources " +
                    std::to_string(m));
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (consumption[i].size() != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "consumption row " + std::to_string(i) + " has " +
                      std::to_string(consumption[i].size()) + " entries, expected " +
                      std::to_string(n));
    }
  }
}

PositionedCoefficients PositionedCoefficients::uniform(const GreyLinearProgram& program,
                                                       double rho, double beta, double delta) {
  check_unit(rho, "rho");
  check_unit(beta, "beta");
  check_unit(delta, "delta");
  PositionedCoefficients pc;
  pc.rho.assign(program.variable_count(), rho);
  pc.beta.assign(program.row_count(), beta);
  pc.delta.assign(program.row_count(), std::vector<double>(program.variable_count(), delta));
  return pc;
}

PositionedCoefficients PositionedCoefficients::theta(const GreyLinearProgram& program,
                                                     double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    std::ostringstream msg;
    msg << "theta " << theta << " outside [0, 1]";
    throw Error(ErrorCode::ThetaOutOfRange, msg.str());
  }
  return uniform(program, theta, theta, theta);
}

PositionedCoefficients PositionedCoefficients::ideal(const GreyLinearProgram& program) {
  return uniform(program, 1.0, 1.0, 0.0);
}

PositionedCoefficients PositionedCoefficients::critical(const GreyLinearProgram& program) {
  return uniform(program, 0.0, 0.0, 1.0);
}

LpProblem whiten_program(const GreyLinearProgram& program, const PositionedCoefficients& pc) {
  program.validate();
  check_shape(program, pc);

  const std::size_t n = program.variable_count();
  LpProblem lp;
  lp.sense = program.sense;
  lp.variable_count = n;
  lp.objective.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    check_unit(pc.rho[j], "rho");
    lp.objective[j] = program.price[j].whiten(pc.rho[j]);
  }
  lp.constraints.resize(program.row_count());
  for (std::size_t i = 0; i < program.row_count(); ++i) {
    auto& row = lp.constraints[i];
    check_unit(pc.beta[i], "beta");
    row.relation = program.relations[i];
    row.rhs = program.resources[i].whiten(pc.beta[i]);
    row.coefficients.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      check_unit(pc.delta[i][j], "delta");
      row.coefficients[j] = program.consumption[i][j].whiten(pc.delta[i][j]);
    }
  }
  return lp;
}

LpSolution solve_positioned(const GreyLinearProgram& program, const PositionedCoefficients& pc) {
  return solve_lp(whiten_program(program, pc));
}

LpSolution theta_solve(const GreyLinearProgram& program, double theta) {
  return solve_positioned(program, PositionedCoefficients::theta(program, theta));
}

double pleased_degree(double critical_value, double positioned_value, double ideal_value) {
  if (!(critical_value > 0.0 && positioned_value > 0.0 && ideal_value > 0.0)) {
    std::ostringstream msg;
    msg << "pleased degree needs strictly positive optima (critical " << critical_value
        << ", positioned " << positioned_value << ", ideal " << ideal_value << ")";
    throw Error(ErrorCode::DegenerateAssessment, msg.str());
  }
  return 0.5 * (1.0 - critical_value / positioned_value) + 0.5 * (positioned_value / ideal_value);
}

PleasedAssessment assess_pleased(const GreyLinearProgram& program,
                                 const PositionedCoefficients& pc, double mu0) {
  if (!(mu0 >= 0.0 && mu0 <= 1.0)) {
    std::ostringstream msg;
    msg << "target floor mu0 = " << mu0 << " outside [0, 1]";
    throw Error(ErrorCode::ParameterError, msg.str());
  }
  if (program.sense != Sense::maximize) {
    throw Error(ErrorCode::DegenerateAssessment,
                "pleased degree is defined for maximize-sense programs only");
  }
  const LpSolution ideal =
      require_optimal(solve_positioned(program, PositionedCoefficients::ideal(program)), "ideal");
  const LpSolution critical = require_optimal(
      solve_positioned(program, PositionedCoefficients::critical(program)), "critical");
  const LpSolution positioned = require_optimal(solve_positioned(program, pc), "positioned");

  PleasedAssessment a;
  a.ideal_value = ideal.value;
  a.critical_value = critical.value;
  a.positioned_value = positioned.value;
  a.degree = pleased_degree(critical.value, positioned.value, ideal.value);
  a.target_floor = mu0;
  a.pleased = a.degree >= mu0;
  a.positioned = positioned;
  return a;
}

}  // namespace greymop
