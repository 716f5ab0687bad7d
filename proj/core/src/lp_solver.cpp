#include "greymop/lp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "greymop/error.hpp"

namespace greymop {

std::string_view to_string(Sense sense) noexcept {
  return sense == Sense::maximize ? "maximize" : "minimize";
}

std::string_view to_string(Relation relation) noexcept {
  switch (relation) {
    case Relation::less_equal: return "<=";
    case Relation::greater_equal: return ">=";
    case Relation::equal: return "=";
  }
  return "?";
}

std::string_view to_string(LpStatus status) noexcept {
  switch (status) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "?";
}

double evaluate(std::span<const double> coefficients, std::span<const double> point) {
  double sum = 0.0;
  const std::size_t n = std::min(coefficients.size(), point.size());
  for (std::size_t j = 0; j < n; ++j) sum += coefficients[j] * point[j];
  return sum;
}

bool is_feasible(const LpProblem& problem, std::span<const double> point, double tol) {
  if (point.size() != problem.variable_count) return false;
  for (double x : point) {
    if (x < -tol) return false;
  }
  for (const auto& row : problem.constraints) {
    const double lhs = evaluate(row.coefficients, point);
    switch (row.relation) {
      case Relation::less_equal:
        if (lhs > row.rhs + tol) return false;
        break;
      case Relation::greater_equal:
        if (lhs < row.rhs - tol) return false;
        break;
      case Relation::equal:
        if (std::abs(lhs - row.rhs) > tol) return false;
        break;
    }
  }
  return true;
}

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kZeroClean = 1e-13;
constexpr std::size_t kMaxIterations = 100000;

void validate(const LpProblem& p) {
  if (p.objective.size() != p.variable_count) {
    throw Error(ErrorCode::MalformedProblem,
                "objective has " + std::to_string(p.objective.size()) +
                    " coefficients, expected " + std::to_string(p.variable_count));
  }
  for (double c : p.objective) {
    if (!std::isfinite(c)) throw Error(ErrorCode::MalformedProblem, "non-finite objective");
  }
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    const auto& row = p.constraints[i];
    if (row.coefficients.size() != p.variable_count) {
      throw Error(ErrorCode::MalformedProblem,
                  "constraint " + std::to_string(i) + " has " +
                      std::to_string(row.coefficients.size()) + " coefficients, expected " +
                      std::to_string(p.variable_count));
    }
    if (!std::isfinite(row.rhs)) {
      throw Error(ErrorCode::MalformedProblem,
                  "constraint " + std::to_string(i) + " has a non-finite rhs");
    }
    for (double a : row.coefficients) {
      if (!std::isfinite(a)) {
        throw Error(ErrorCode::MalformedProblem,
                    "constraint " + std::to_string(i) + " has a non-finite coefficient");
      }
    }
  }
}

// Dense simplex tableau B^-1 [A | b]. Columns are ordered structural, then
// slack/surplus, then artificial; Bland's rule uses that order.
class Tableau {
 public:
  explicit Tableau(const LpProblem& p) : structural_(p.variable_count) {
    const std::size_t m = p.constraints.size();
    std::size_t slacks = 0;
    std::size_t artificials = 0;
    for (const auto& row : p.constraints) {
      const Relation rel = normalized_relation(row);
      if (rel != Relation::equal) ++slacks;
      if (rel != Relation::less_equal) ++artificials;
    }
    first_artificial_ = structural_ + slacks;
    cols_ = first_artificial_ + artificials;
    rows_ = m;
    cells_.assign(rows_ * (cols_ + 1), 0.0);
    basis_.assign(rows_, 0);

    std::size_t next_slack = structural_;
    std::size_t next_art = first_artificial_;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& row = p.constraints[i];
      const double sign = row.rhs < 0.0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < structural_; ++j) at(i, j) = sign * row.coefficients[j];
      rhs(i) = sign * row.rhs;
      switch (normalized_relation(row)) {
        case Relation::less_equal:
          at(i, next_slack) = 1.0;
          basis_[i] = next_slack++;
          break;
        case Relation::greater_equal:
          at(i, next_slack++) = -1.0;
          at(i, next_art) = 1.0;
          basis_[i] = next_art++;
          break;
        case Relation::equal:
          at(i, next_art) = 1.0;
          basis_[i] = next_art++;
          break;
      }
    }
  }

  bool has_artificials() const { return first_artificial_ < cols_; }

  // Phase 1: maximize -(sum of artificials). Returns the remaining infeasibility.
  double phase_one() {
    std::vector<double> cost(cols_, 0.0);
    for (std::size_t j = first_artificial_; j < cols_; ++j) cost[j] = -1.0;
    optimize(cost, cols_);
    double infeas = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (is_artificial(basis_[i])) infeas += rhs(i);
    }
    return infeas;
  }

  // Pivots degenerate artificials out of the basis; rows that cannot be
  // cleared are redundant and removed.
  void expel_artificials() {
    for (std::size_t i = 0; i < rows_;) {
      if (!is_artificial(basis_[i])) {
        ++i;
        continue;
      }
      std::size_t entering = cols_;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (std::abs(at(i, j)) > kPivotTol) {
          entering = j;
          break;
        }
      }
      if (entering < cols_) {
        pivot(i, entering);
        ++i;
      } else {
        remove_row(i);
      }
    }
  }

  // Phase 2 on the structural objective (already in maximize form).
  bool phase_two(const std::vector<double>& objective) {
    std::vector<double> cost(cols_, 0.0);
    std::copy(objective.begin(), objective.end(), cost.begin());
    return optimize(cost, first_artificial_);
  }

  std::vector<double> structural_point() const {
    std::vector<double> x(structural_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      // Basic values sit at >= 0 up to roundoff; do not report -1e-12.
      if (basis_[i] < structural_) x[basis_[i]] = std::max(rhs(i), 0.0);
    }
    return x;
  }

 private:
  static Relation normalized_relation(const LinearConstraint& row) {
    if (row.rhs >= 0.0 || row.relation == Relation::equal) return row.relation;
    return row.relation == Relation::less_equal ? Relation::greater_equal
                                                : Relation::less_equal;
  }

  bool is_artificial(std::size_t col) const { return col >= first_artificial_; }

  double& at(std::size_t i, std::size_t j) { return cells_[i * (cols_ + 1) + j]; }
  double at(std::size_t i, std::size_t j) const { return cells_[i * (cols_ + 1) + j]; }
  double& rhs(std::size_t i) { return at(i, cols_); }
  double rhs(std::size_t i) const { return at(i, cols_); }

  double reduced_cost(const std::vector<double>& cost, std::size_t j) const {
    double d = cost[j];
    for (std::size_t i = 0; i < rows_; ++i) d -= cost[basis_[i]] * at(i, j);
    return d;
  }

  // Maximizes cost over columns [0, allowed). Returns false when unbounded.
  bool optimize(const std::vector<double>& cost, std::size_t allowed) {
    for (std::size_t iter = 0; iter < kMaxIterations; ++iter) {
      std::size_t entering = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (is_basic(j)) continue;
        if (reduced_cost(cost, j) > kPivotTol) {
          entering = j;
          break;
        }
      }
      if (entering == allowed) return true;

      std::size_t leaving = rows_;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < rows_; ++i) {
        const double a = at(i, entering);
        if (a <= kPivotTol) continue;
        const double ratio = rhs(i) / a;
        if (leaving == rows_) {
          best_ratio = ratio;
          leaving = i;
          continue;
        }
        const double slack = kPivotTol * std::max(1.0, std::abs(best_ratio));
        if (ratio < best_ratio - slack) {
          best_ratio = ratio;
          leaving = i;
        } else if (ratio <= best_ratio + slack && basis_[i] < basis_[leaving]) {
          best_ratio = std::min(best_ratio, ratio);
          leaving = i;
        }
      }
      if (leaving == rows_) return false;
      pivot(leaving, entering);
    }
    throw Error(ErrorCode::IterationLimit, "simplex iteration limit reached");
  }

  bool is_basic(std::size_t col) const {
    return std::find(basis_.begin(), basis_.end(), col) != basis_.end();
  }

  void pivot(std::size_t r, std::size_t c) {
    const std::size_t width = cols_ + 1;
    const double inv = 1.0 / at(r, c);
    for (std::size_t j = 0; j < width; ++j) at(r, j) *= inv;
    at(r, c) = 1.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const double factor = at(i, c);
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) {
        double v = at(i, j) - factor * at(r, j);
        if (std::abs(v) < kZeroClean) v = 0.0;
        at(i, j) = v;
      }
      at(i, c) = 0.0;
    }
    basis_[r] = c;
  }

  void remove_row(std::size_t r) {
    const std::size_t width = cols_ + 1;
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r * width),
                 cells_.begin() + static_cast<std::ptrdiff_t>((r + 1) * width));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

  std::size_t structural_ = 0;
  std::size_t first_artificial_ = 0;
  std::size_t cols_ = 0;
  std::size_t rows_ = 0;
  std::vector<double> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  validate(problem);

  LpSolution out;
  Tableau tableau(problem);
  if (tableau.has_artificials()) {
    double scale = 1.0;
    for (const auto& row : problem.constraints) scale = std::max(scale, std::abs(row.rhs));
    if (tableau.phase_one() > kLpTolerance * scale) {
      out.status = LpStatus::infeasible;
      return out;
    }
    tableau.expel_artificials();
  }

  std::vector<double> objective = problem.objective;
  if (problem.sense == Sense::minimize) {
    for (double& c : objective) c = -c;
  }
  if (!tableau.phase_two(objective)) {
    out.status = LpStatus::unbounded;
    return out;
  }

  out.status = LpStatus::optimal;
  out.point = tableau.structural_point();
  out.value = evaluate(problem.objective, out.point);
  for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
    const auto& row = problem.constraints[i];
    const double lhs = evaluate(row.coefficients, out.point);
    if (std::abs(lhs - row.rhs) <= kLpTolerance * std::max(1.0, std::abs(row.rhs))) {
      out.tight_constraints.push_back(i);
    }
  }
  return out;
}

}  // namespace greymop
