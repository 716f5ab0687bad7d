#include "greymop/portfolio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "greymop/error.hpp"

namespace greymop {

namespace {

void check_unit(double v, ErrorCode code, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream msg;
    msg << what << " " << v << " outside [0, 1]";
    throw Error(code, msg.str());
  }
}

bool close(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

// All grey parameters whitened at one position; index 0 is the bank.
struct WhitePortfolio {
  double funds = 0.0;
  std::vector<double> r, q, p, u;

  WhitePortfolio(const PortfolioSpec& spec, double theta) : funds(spec.total_funds) {
    for (std::size_t i = 0; i <= spec.asset_count(); ++i) {
      r.push_back(spec.profit_rate(i).whiten(theta));
      q.push_back(spec.risk_rate(i).whiten(theta));
      p.push_back(spec.transaction_rate(i).whiten(theta));
      u.push_back(spec.purchase_floor(i).whiten(theta));
    }
  }
  std::size_t holdings() const { return r.size(); }
};

enum class Regime { inactive, proportional, floor };

LinearConstraint row_of(std::size_t vars, Relation rel, double rhs) {
  LinearConstraint row;
  row.coefficients.assign(vars, 0.0);
  row.relation = rel;
  row.rhs = rhs;
  return row;
}

// LP over x_0..x_n, x_{n+1} with zero objective for one fee regime per
// asset. Returns nullopt when the floor fees alone exceed the budget.
std::optional<LpProblem> regime_lp(const WhitePortfolio& w, std::span<const Regime> regimes,
                                   bool purchase_cap) {
  const std::size_t h = w.holdings();
  const std::size_t vars = h + 1;
  LpProblem lp;
  lp.sense = Sense::maximize;
  lp.variable_count = vars;
  lp.objective.assign(vars, 0.0);

  LinearConstraint budget = row_of(vars, Relation::equal, 1.0);
  for (std::size_t i = 0; i < h; ++i) {
    switch (regimes[i]) {
      case Regime::inactive:
        break;
      case Regime::proportional:
        budget.coefficients[i] = 1.0 + w.p[i];
        break;
      case Regime::floor:
        budget.coefficients[i] = 1.0;
        budget.rhs -= w.p[i] * w.u[i] / w.funds;
        break;
    }
  }
  if (budget.rhs < 0.0) return std::nullopt;
  lp.constraints.push_back(std::move(budget));

  for (std::size_t i = 0; i < h; ++i) {
    LinearConstraint risk = row_of(vars, Relation::less_equal, 0.0);
    risk.coefficients[i] = w.q[i];
    risk.coefficients[h] = -1.0;
    lp.constraints.push_back(std::move(risk));
  }
  for (std::size_t i = 1; i < h; ++i) {
    switch (regimes[i]) {
      case Regime::inactive: {
        LinearConstraint off = row_of(vars, Relation::equal, 0.0);
        off.coefficients[i] = 1.0;
        lp.constraints.push_back(std::move(off));
        break;
      }
      case Regime::proportional:
        break;
      case Regime::floor: {
        LinearConstraint below = row_of(vars, Relation::less_equal, w.u[i]);
        below.coefficients[i] = w.funds;
        lp.constraints.push_back(std::move(below));
        break;
      }
    }
    if (purchase_cap && regimes[i] != Regime::inactive) {
      LinearConstraint cap = row_of(vars, Relation::less_equal, w.u[i]);
      cap.coefficients[i] = w.funds;
      lp.constraints.push_back(std::move(cap));
    }
  }
  return lp;
}

// Regime assignments to try: one all-proportional assignment without floor
// rows in proportional mode, every inactive/proportional/floor combination
// (with M x_i >= u_i rows for the proportional branch) in exact mode.
class RegimeEnumerator {
 public:
  RegimeEnumerator(std::size_t holdings, CostMode mode)
      : mode_(mode), regimes_(holdings, Regime::proportional) {
    if (mode == CostMode::exact) {
      if (holdings - 1 > kMaxExactAssets) {
        throw Error(ErrorCode::ParameterError,
                    "exact cost mode supports at most " + std::to_string(kMaxExactAssets) +
                        " assets");
      }
      std::fill(regimes_.begin() + 1, regimes_.end(), Regime::inactive);
    }
  }

  std::span<const Regime> current() const { return regimes_; }
  bool exact() const { return mode_ == CostMode::exact; }

  bool next() {
    if (mode_ == CostMode::proportional) return false;
    for (std::size_t i = 1; i < regimes_.size(); ++i) {
      if (regimes_[i] == Regime::inactive) {
        regimes_[i] = Regime::proportional;
        return true;
      }
      if (regimes_[i] == Regime::proportional) {
        regimes_[i] = Regime::floor;
        return true;
      }
      regimes_[i] = Regime::inactive;
    }
    return false;
  }

 private:
  CostMode mode_;
  std::vector<Regime> regimes_;
};

std::optional<LpProblem> build_for(const WhitePortfolio& w, const RegimeEnumerator& regimes,
                                   bool purchase_cap) {
  auto lp = regime_lp(w, regimes.current(), purchase_cap);
  if (lp && regimes.exact()) {
    const std::size_t vars = lp->variable_count;
    for (std::size_t i = 1; i < w.holdings(); ++i) {
      if (regimes.current()[i] != Regime::proportional) continue;
      LinearConstraint above = row_of(vars, Relation::greater_equal, w.u[i]);
      above.coefficients[i] = w.funds;
      lp->constraints.push_back(std::move(above));
    }
  }
  return lp;
}

std::vector<double> scalarized_objective(const WhitePortfolio& w, double lambda) {
  std::vector<double> c(w.holdings() + 1, 0.0);
  for (std::size_t i = 0; i < w.holdings(); ++i) c[i] = (1.0 - lambda) * (w.r[i] + 1.0);
  c[w.holdings()] = -lambda;
  return c;
}

double white_profit(const WhitePortfolio& w, std::span<const double> x) {
  double z = -w.funds;
  for (std::size_t i = 0; i < w.holdings(); ++i) z += (w.r[i] + 1.0) * w.funds * x[i];
  return z;
}

double white_risk(const WhitePortfolio& w, std::span<const double> x) {
  double z = 0.0;
  for (std::size_t i = 0; i < w.holdings(); ++i) z = std::max(z, w.q[i] * x[i] * w.funds);
  return z;
}

}  // namespace

void PortfolioSpec::validate() const {
  if (!(total_funds > 0.0) || !std::isfinite(total_funds)) {
    throw Error(ErrorCode::InvariantViolation, "total funds must be positive");
  }
  if (bank_rate.lower() < -1.0) {
    throw Error(ErrorCode::InvariantViolation, "bank rate below -100%");
  }
  for (std::size_t k = 0; k < assets.size(); ++k) {
    const Asset& a = assets[k];
    const std::string who = "asset " + std::to_string(k + 1) +
                            (a.name.empty() ? std::string() : " (" + a.name + ")");
    if (a.profit_rate.lower() < -1.0) {
      throw Error(ErrorCode::InvariantViolation, who + ": profit rate below -100%");
    }
    if (a.risk_rate.lower() < 0.0) {
      throw Error(ErrorCode::InvariantViolation, who + ": negative risk rate");
    }
    if (a.transaction_rate.lower() < 0.0) {
      throw Error(ErrorCode::InvariantViolation, who + ": negative transaction rate");
    }
    if (a.purchase_floor.lower() < 0.0) {
      throw Error(ErrorCode::InvariantViolation, who + ": negative purchase bound");
    }
  }
}

GreyNumber PortfolioSpec::profit_rate(std::size_t i) const {
  return i == 0 ? bank_rate : assets.at(i - 1).profit_rate;
}
GreyNumber PortfolioSpec::risk_rate(std::size_t i) const {
  return i == 0 ? GreyNumber() : assets.at(i - 1).risk_rate;
}
GreyNumber PortfolioSpec::transaction_rate(std::size_t i) const {
  return i == 0 ? GreyNumber() : assets.at(i - 1).transaction_rate;
}
GreyNumber PortfolioSpec::purchase_floor(std::size_t i) const {
  return i == 0 ? GreyNumber() : assets.at(i - 1).purchase_floor;
}

double transaction_cost(const PortfolioSpec& spec, std::size_t i, double x_i, double theta) {
  if (i > spec.asset_count()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "holding index " + std::to_string(i) + " beyond " +
                    std::to_string(spec.asset_count()) + " assets");
  }
  if (x_i < 0.0) throw Error(ErrorCode::ParameterError, "negative holding");
  if (x_i == 0.0) return 0.0;
  const double p = spec.transaction_rate(i).whiten(theta);
  const double u = spec.purchase_floor(i).whiten(theta);
  return p * std::max(spec.total_funds * x_i, u);
}

BiObjectiveModel build_biobjective(const PortfolioSpec& spec) {
  spec.validate();
  const std::size_t h = spec.asset_count() + 1;
  const double m = spec.total_funds;
  BiObjectiveModel out;
  out.profit_constant = -m;
  out.linear.variable_count = h;

  Objective profit;
  profit.name = "profit";
  profit.sense = Sense::maximize;
  profit.orientation = Orientation::benefit;
  GreyConstraint budget;
  budget.relation = Relation::equal;
  budget.rhs = GreyNumber::white(1.0);
  for (std::size_t i = 0; i < h; ++i) {
    const GreyNumber r = spec.profit_rate(i);
    profit.coefficients.emplace_back((r.lower() + 1.0) * m, (r.upper() + 1.0) * m);
    const GreyNumber p = spec.transaction_rate(i);
    budget.coefficients.emplace_back(1.0 + p.lower(), 1.0 + p.upper());
    const GreyNumber q = spec.risk_rate(i);
    out.risk_terms.emplace_back(q.lower() * m, q.upper() * m);
  }
  out.linear.objectives.push_back(std::move(profit));
  out.linear.constraints.push_back(std::move(budget));
  return out;
}

double BiObjectiveModel::profit(std::span<const double> x, double theta) const {
  return evaluate(whitened_objective(linear, 0, theta), x) + profit_constant;
}

double BiObjectiveModel::risk(std::span<const double> x, double theta) const {
  double z = 0.0;
  for (std::size_t i = 0; i < risk_terms.size() && i < x.size(); ++i) {
    z = std::max(z, risk_terms[i].whiten(theta) * x[i]);
  }
  return z;
}

ScalarizedModel scalarize(const PortfolioSpec& spec, const GreyNumber& risk_weight,
                          double theta_lambda, bool purchase_cap) {
  spec.validate();
  if (risk_weight.lower() < 0.0 || risk_weight.upper() > 1.0) {
    std::ostringstream msg;
    msg << "risk weight [" << risk_weight.lower() << ", " << risk_weight.upper()
        << "] not inside [0, 1]";
    throw Error(ErrorCode::RiskWeightOutOfRange, msg.str());
  }
  check_unit(theta_lambda, ErrorCode::ThetaOutOfRange, "risk-weight position");

  ScalarizedModel out;
  out.risk_weight = risk_weight;
  out.theta_lambda = theta_lambda;
  out.lambda = risk_weight.whiten(theta_lambda);
  out.objective_constant = -(1.0 - out.lambda);

  const std::size_t h = spec.asset_count() + 1;
  const std::size_t vars = h + 1;
  GreyLinearProgram& g = out.program;
  g.sense = Sense::maximize;
  const double keep = 1.0 - out.lambda;
  for (std::size_t i = 0; i < h; ++i) {
    const GreyNumber r = spec.profit_rate(i);
    const GreyNumber gross(r.lower() + 1.0, r.upper() + 1.0);
    g.price.push_back(lin_comb(std::span<const double>(&keep, 1), std::span(&gross, 1)));
  }
  g.price.push_back(GreyNumber::white(-out.lambda));

  std::vector<GreyNumber> budget(vars, GreyNumber());
  for (std::size_t i = 0; i < h; ++i) {
    const GreyNumber p = spec.transaction_rate(i);
    budget[i] = GreyNumber(1.0 + p.lower(), 1.0 + p.upper());
  }
  g.consumption.push_back(std::move(budget));
  g.resources.push_back(GreyNumber::white(1.0));
  g.relations.push_back(Relation::equal);

  for (std::size_t i = 0; i < h; ++i) {
    std::vector<GreyNumber> risk(vars, GreyNumber());
    risk[i] = spec.risk_rate(i);
    risk[h] = GreyNumber::white(-1.0);
    g.consumption.push_back(std::move(risk));
    g.resources.push_back(GreyNumber());
    g.relations.push_back(Relation::less_equal);
  }
  if (purchase_cap) {
    for (std::size_t i = 1; i < h; ++i) {
      std::vector<GreyNumber> cap(vars, GreyNumber());
      cap[i] = GreyNumber::white(spec.total_funds);
      g.consumption.push_back(std::move(cap));
      g.resources.push_back(spec.purchase_floor(i));
      g.relations.push_back(Relation::less_equal);
    }
  }
  g.validate();
  return out;
}

PortfolioSolution interpret_solution(const PortfolioSpec& spec, const ScalarizedModel& model,
                                     const LpSolution& solution, double theta) {
  PortfolioSolution out;
  out.status = solution.status;
  if (!solution.optimal()) return out;
  const std::size_t h = spec.asset_count() + 1;
  out.allocation.assign(solution.point.begin(), solution.point.begin() + static_cast<long>(h));
  out.risk_level = solution.point[h];
  out.value = solution.value + model.objective_constant;
  const WhitePortfolio w(spec, theta);
  out.profit = white_profit(w, out.allocation);
  out.risk = white_risk(w, out.allocation);
  return out;
}

PortfolioSolution optimize_portfolio(const PortfolioSpec& spec, const GreyNumber& risk_weight,
                                     double theta_lambda, const PortfolioOptions& options) {
  const ScalarizedModel model = scalarize(spec, risk_weight, theta_lambda, options.purchase_cap);
  check_unit(options.theta, ErrorCode::ThetaOutOfRange, "theta");
  if (options.mode == CostMode::proportional) {
    return interpret_solution(spec, model, theta_solve(model.program, options.theta),
                              options.theta);
  }

  const WhitePortfolio w(spec, options.theta);
  const std::vector<double> objective = scalarized_objective(w, model.lambda);
  RegimeEnumerator regimes(w.holdings(), CostMode::exact);
  LpSolution best;
  bool any_unbounded = false;
  do {
    auto lp = build_for(w, regimes, options.purchase_cap);
    if (!lp) continue;
    lp->objective = objective;
    LpSolution s = solve_lp(*lp);
    if (s.status == LpStatus::unbounded) any_unbounded = true;
    if (s.optimal() && (!best.optimal() || s.value > best.value + 1e-12)) best = std::move(s);
  } while (regimes.next());

  if (!best.optimal() && any_unbounded) best.status = LpStatus::unbounded;
  return interpret_solution(spec, model, best, options.theta);
}

AllocationCheck check_allocation(const PortfolioSpec& spec, std::span<const double> allocation,
                                 double theta) {
  const std::size_t h = spec.asset_count() + 1;
  if (allocation.size() != h) {
    throw Error(ErrorCode::DimensionMismatch,
                "allocation has " + std::to_string(allocation.size()) + " entries, expected " +
                    std::to_string(h));
  }
  const WhitePortfolio w(spec, theta);
  AllocationCheck c;
  c.profit = white_profit(w, allocation);
  c.risk = white_risk(w, allocation);
  double spent = 0.0;
  for (std::size_t i = 0; i < h; ++i) {
    c.proportional_budget += (1.0 + w.p[i]) * allocation[i];
    spent += w.funds * allocation[i] + transaction_cost(spec, i, allocation[i], theta);
  }
  c.exact_budget = spent / w.funds;
  return c;
}

std::vector<FrontierPoint> pareto_frontier(const PortfolioSpec& spec, double theta,
                                           std::span<const double> epsilons,
                                           const PortfolioOptions& options) {
  spec.validate();
  check_unit(theta, ErrorCode::ThetaOutOfRange, "theta");
  if (epsilons.empty()) throw Error(ErrorCode::ParameterError, "epsilon list is empty");
  for (std::size_t k = 0; k < epsilons.size(); ++k) {
    if (!(epsilons[k] >= 0.0) || !std::isfinite(epsilons[k])) {
      throw Error(ErrorCode::ParameterError, "epsilons must be finite and nonnegative");
    }
    if (k > 0 && epsilons[k] < epsilons[k - 1]) {
      throw Error(ErrorCode::ParameterError, "epsilons must be sorted ascending");
    }
  }

  const WhitePortfolio w(spec, theta);
  const std::size_t h = w.holdings();
  std::vector<double> profit_c(h + 1, 0.0);
  for (std::size_t i = 0; i < h; ++i) profit_c[i] = (w.r[i] + 1.0) * w.funds;

  std::vector<FrontierPoint> raw;
  for (double eps : epsilons) {
    RegimeEnumerator regimes(h, options.mode);
    std::optional<LpProblem> best_lp;
    LpSolution best;
    do {
      auto lp = build_for(w, regimes, options.purchase_cap);
      if (!lp) continue;
      LinearConstraint bound = row_of(h + 1, Relation::less_equal, eps / w.funds);
      bound.coefficients[h] = 1.0;
      lp->constraints.push_back(std::move(bound));
      lp->objective = profit_c;
      LpSolution s = solve_lp(*lp);
      if (s.optimal() && (!best.optimal() || s.value > best.value + 1e-12)) {
        best = std::move(s);
        best_lp = std::move(lp);
      }
    } while (regimes.next());
    if (!best.optimal()) continue;

    // Second stage: least risk among the profit-maximal allocations.
    LinearConstraint keep = row_of(h + 1, Relation::greater_equal,
                                   best.value - 1e-12 * std::max(1.0, std::abs(best.value)));
    keep.coefficients = profit_c;
    best_lp->constraints.push_back(std::move(keep));
    best_lp->objective.assign(h + 1, 0.0);
    best_lp->objective[h] = 1.0;
    best_lp->sense = Sense::minimize;
    LpSolution refined = solve_lp(*best_lp);
    const LpSolution& use = refined.optimal() ? refined : best;

    FrontierPoint pt;
    pt.epsilon = eps;
    pt.allocation.assign(use.point.begin(), use.point.begin() + static_cast<long>(h));
    pt.profit = white_profit(w, pt.allocation);
    pt.risk = white_risk(w, pt.allocation);
    raw.push_back(std::move(pt));
  }
  if (raw.empty()) throw Error(ErrorCode::EmptyFrontier, "every epsilon subproblem is infeasible");

  std::vector<FrontierPoint> out;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    bool dominated = false;
    for (std::size_t j = 0; j < raw.size() && !dominated; ++j) {
      if (j == k) continue;
      const bool same = close(raw[j].profit, raw[k].profit) && close(raw[j].risk, raw[k].risk);
      if (same) {
        dominated = j < k;  // keep the first of equal points
        continue;
      }
      const bool no_worse = (raw[j].profit >= raw[k].profit || close(raw[j].profit, raw[k].profit)) &&
                            (raw[j].risk <= raw[k].risk || close(raw[j].risk, raw[k].risk));
      dominated = no_worse;
    }
    if (!dominated) out.push_back(raw[k]);
  }
  for (std::size_t k = 1; k < out.size(); ++k) {
    const double d_risk = out[k].risk - out[k - 1].risk;
    if (d_risk != 0.0) out[k].tradeoff = -(out[k].profit - out[k - 1].profit) / d_risk;
  }
  return out;
}

Compromise compromise_solution(std::span<const FrontierPoint> frontier) {
  if (frontier.empty()) throw Error(ErrorCode::EmptyFrontier, "frontier is empty");
  double best_profit = -std::numeric_limits<double>::infinity();
  double worst_profit = std::numeric_limits<double>::infinity();
  double best_risk = std::numeric_limits<double>::infinity();
  double worst_risk = -std::numeric_limits<double>::infinity();
  for (const auto& p : frontier) {
    best_profit = std::max(best_profit, p.profit);
    worst_profit = std::min(worst_profit, p.profit);
    best_risk = std::min(best_risk, p.risk);
    worst_risk = std::max(worst_risk, p.risk);
  }
  const double profit_span = best_profit - worst_profit;
  const double risk_span = worst_risk - best_risk;

  Compromise c;
  c.ideal_profit = best_profit;
  c.ideal_risk = best_risk;
  c.distance = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < frontier.size(); ++k) {
    const auto& p = frontier[k];
    const double a = profit_span > 0.0 ? (best_profit - p.profit) / profit_span : 0.0;
    const double b = risk_span > 0.0 ? (p.risk - best_risk) / risk_span : 0.0;
    const double d = std::hypot(a, b);
    const bool better = d < c.distance - 1e-12;
    const bool tie_lower_risk = std::abs(d - c.distance) <= 1e-12 && p.risk < frontier[c.index].risk;
    if (better || tie_lower_risk) {
      c.distance = d;
      c.index = k;
    }
  }
  c.point = frontier[c.index];
  return c;
}

}  // namespace greymop
