#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "greymop/gmop.hpp"
#include "greymop/grey_number.hpp"
#include "greymop/positioned_lp.hpp"

namespace greymop {

struct Asset {
  std::string name;
  GreyNumber profit_rate;       ///< r_i per period
  GreyNumber risk_rate;         ///< q_i
  GreyNumber transaction_rate;  ///< p_i
  GreyNumber purchase_floor;    ///< u_i, money

  bool operator==(const Asset&) const = default;
};

/// Funds M split over bank savings (index 0, riskless and fee-free) and
/// assets 1..n. Allocations are fractions of M.
struct PortfolioSpec {
  double total_funds = 0.0;
  GreyNumber bank_rate;
  std::vector<Asset> assets;

  std::size_t asset_count() const noexcept { return assets.size(); }
  /// Throws Error(InvariantViolation) on M <= 0 or negative risk/fee/floor bounds.
  void validate() const;

  /// Grey parameters for index i in 0..n (0 is the bank).
  GreyNumber profit_rate(std::size_t i) const;
  GreyNumber risk_rate(std::size_t i) const;
  GreyNumber transaction_rate(std::size_t i) const;
  GreyNumber purchase_floor(std::size_t i) const;

  bool operator==(const PortfolioSpec&) const = default;
};

/// Fee for holding fraction x_i of asset i: p_i * max(M x_i, u_i) when
/// x_i > 0, zero otherwise. Parameters are whitened at theta.
double transaction_cost(const PortfolioSpec& spec, std::size_t i, double x_i, double theta);

/// Profit objective, minimax risk annotation and proportional budget row.
struct BiObjectiveModel {
  GmopModel linear;               ///< objective 0 = sum (r_i + 1) M x_i, constraint 0 = budget
  double profit_constant = 0.0;   ///< -M
  std::vector<GreyNumber> risk_terms;  ///< Z2 = max_i risk_terms[i] * x_i

  double profit(std::span<const double> x, double theta) const;
  double risk(std::span<const double> x, double theta) const;
};

BiObjectiveModel build_biobjective(const PortfolioSpec& spec);

/// Weighted single-objective grey LP over x_0..x_n and the risk level x_{n+1}:
///   max (1 - l)(sum (r_i + 1) x_i - 1) - l x_{n+1}
///   s.t. sum (1 + p_i) x_i = 1,  q_i x_i - x_{n+1} <= 0,  x >= 0
/// where l is the risk weight whitened at theta_lambda. The constant -(1 - l)
/// is kept aside in objective_constant.
struct ScalarizedModel {
  GreyNumber risk_weight;
  double theta_lambda = 0.5;
  double lambda = 0.0;
  double objective_constant = 0.0;
  GreyLinearProgram program;
};

ScalarizedModel scalarize(const PortfolioSpec& spec, const GreyNumber& risk_weight,
                          double theta_lambda, bool purchase_cap = false);

/// proportional: fee p_i M x_i (linear budget row).
/// exact: fee p_i max(M x_i, u_i) on held assets, solved by regime enumeration.
enum class CostMode { proportional, exact };

inline constexpr std::size_t kMaxExactAssets = 12;

struct PortfolioSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<double> allocation;  ///< x_0..x_n
  double risk_level = 0.0;         ///< x_{n+1}
  double value = 0.0;              ///< scalarized objective including its constant
  double profit = 0.0;             ///< Z1, money
  double risk = 0.0;               ///< Z2, money
};

struct PortfolioOptions {
  double theta = 0.5;
  CostMode mode = CostMode::proportional;
  bool purchase_cap = false;
};

/// Solves the scalarized model with every grey parameter whitened at options.theta.
PortfolioSolution optimize_portfolio(const PortfolioSpec& spec, const GreyNumber& risk_weight,
                                     double theta_lambda, const PortfolioOptions& options = {});

/// Reads a positioned solution of a scalarized program back into portfolio terms.
PortfolioSolution interpret_solution(const PortfolioSpec& spec, const ScalarizedModel& model,
                                     const LpSolution& solution, double theta);

struct AllocationCheck {
  double profit = 0.0;               ///< Z1
  double risk = 0.0;                 ///< Z2
  double proportional_budget = 0.0;  ///< sum (1 + p_i) x_i
  double exact_budget = 0.0;         ///< (sum M x_i + A_i) / M
};

AllocationCheck check_allocation(const PortfolioSpec& spec, std::span<const double> allocation,
                                 double theta);

struct FrontierPoint {
  double epsilon = 0.0;
  double profit = 0.0;
  double risk = 0.0;
  std::vector<double> allocation;
  /// -dZ1/dZ2 against the previous point; negative means profit gained per
  /// unit of extra risk. Empty on the first point.
  std::optional<double> tradeoff;
};

/// Epsilon-constraint sweep: for each e2, maximize Z1 with q_i x_i M <= e2,
/// then minimize Z2 at that profit. Only nondominated points are returned.
std::vector<FrontierPoint> pareto_frontier(const PortfolioSpec& spec, double theta,
                                           std::span<const double> epsilons,
                                           const PortfolioOptions& options = {});

struct Compromise {
  FrontierPoint point;
  std::size_t index = 0;
  double ideal_profit = 0.0;
  double ideal_risk = 0.0;
  double distance = 0.0;  ///< in min-max normalized coordinates
};

/// Frontier point closest to the ideal (best Z1, best Z2); ties go to lower risk.
Compromise compromise_solution(std::span<const FrontierPoint> frontier);

}  // namespace greymop
