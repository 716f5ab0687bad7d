#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "greymop/grey_number.hpp"
#include "greymop/lp_solver.hpp"
#include "greymop/positioned_lp.hpp"

namespace greymop {

using Point = std::vector<double>;

/// Linear grey objective f_i(x) = sum_j c_ij x_j.
struct Objective {
  std::string name;
  Sense sense = Sense::maximize;
  Orientation orientation = Orientation::benefit;
  std::vector<GreyNumber> coefficients;

  bool operator==(const Objective&) const = default;
};

struct GreyConstraint {
  std::vector<GreyNumber> coefficients;
  Relation relation = Relation::less_equal;
  GreyNumber rhs;

  bool operator==(const GreyConstraint&) const = default;
};

/// Grey multi-objective program with linear objectives and constraints, x >= 0.
struct GmopModel {
  std::vector<Objective> objectives;
  std::vector<GreyConstraint> constraints;
  std::size_t variable_count = 0;

  /// Throws Error(DimensionMismatch) on inconsistent shapes or m = 0.
  void validate() const;
  /// Grey program with the given price vector over this model's constraints.
  GreyLinearProgram with_price(std::vector<GreyNumber> price, Sense sense) const;

  bool operator==(const GmopModel&) const = default;
};

/// Paper-faithful rounding of intermediate quantities (weights to one decimal,
/// max-min row coefficients to two significant digits) versus exact arithmetic.
enum class Rounding { exact, coarse };

/// Half-to-even rounding at `digits` significant digits, applied after
/// trimming binary noise at 12 digits (so 4.05 rounds to 4.0).
double round_significant(double value, int digits);

/// Rounds weights to one decimal place and renormalizes them to sum to 1.
std::vector<double> round_weights_coarse(std::span<const double> weights);

/// The theta-whitened constraint set as an LP with zero objective.
LpProblem whitened_region(const GmopModel& model, double theta);

/// Objective i's theta-whitened coefficients.
std::vector<double> whitened_objective(const GmopModel& model, std::size_t i, double theta);

inline constexpr std::uint64_t kDefaultSampleSeed = 20140519;

/// Admissible points for the entropy weighting. Supplied points are checked
/// against the theta-whitened constraints and returned verbatim; otherwise
/// vertices of the region are taken first and topped up with seeded convex
/// combinations. Count 0 selects 2m.
std::vector<Point> sample_admissible(const GmopModel& model, double theta, std::size_t count,
                                     const std::optional<std::vector<Point>>& supplied,
                                     std::uint64_t seed = kDefaultSampleSeed);

/// F(x): entry (i, t) is the interval of objective i at point t.
GreyIntervalMatrix objective_matrix(const GmopModel& model, std::span<const Point> points);

struct EntropyBreakdown {
  std::vector<std::vector<double>> deviations;  ///< D_it
  std::vector<double> deviation_sums;           ///< D_i
  std::vector<double> entropies;                ///< E_i in [0,1]
  std::vector<double> weights;                  ///< w_i, sum to 1
};

/// Entropy weights from a normalized matrix. 0 ln 0 terms count as 0.
/// Throws Error(DegenerateObjective) when a row has zero total deviation.
EntropyBreakdown entropy_weights(const GreyIntervalMatrix& normalized);

struct WeightingWorkspace {
  std::vector<Point> sample_points;
  GreyIntervalMatrix objective_matrix;
  GreyIntervalMatrix normalized_matrix;
  EntropyBreakdown entropy;
  std::optional<std::vector<double>> preferences;
  std::optional<std::vector<double>> modified_weights;

  const std::vector<double>& weights() const {
    return modified_weights ? *modified_weights : entropy.weights;
  }
};

/// Runs F -> R -> D -> E -> w on the given points, then applies preferences if any.
WeightingWorkspace build_weighting(const GmopModel& model, std::vector<Point> points,
                                   std::optional<std::vector<double>> preferences = std::nullopt);

/// lambda_i = w_i mu_i / sum_k w_k mu_k.
std::vector<double> modify_weights(std::span<const double> weights,
                                   std::span<const double> preferences);

/// Single maximize-sense grey objective sum_i w_i f_i over the model's
/// constraints. Minimize-sense objectives enter with a negated weight.
GreyLinearProgram combine_objectives(const GmopModel& model, std::span<const double> weights);

struct Algorithm1Options {
  double theta = 0.5;
  std::size_t sample_count = 0;
  std::optional<std::vector<Point>> points;
  std::optional<std::vector<double>> preferences;
  std::uint64_t seed = kDefaultSampleSeed;
  Rounding rounding = Rounding::exact;
};

struct Algorithm1Result {
  WeightingWorkspace workspace;
  std::vector<double> weights;  ///< weights actually combined
  GreyLinearProgram combined;
  LpSolution solution;
  std::vector<double> objective_values;  ///< each f_i at the point, theta-whitened
};

/// Entropy-weight scalarization followed by a theta-positioned solve.
Algorithm1Result algorithm1(const GmopModel& model, const Algorithm1Options& options = {});

/// Individual optima and bracket data for the max-min method. Values are in
/// canonical maximize form (minimize-sense objectives are negated).
struct MaxMinWorkspace {
  std::vector<Point> optima;                       ///< x(i)
  std::vector<std::vector<double>> cross_values;   ///< f_is = f_i(x(s))
  std::vector<double> lower;                       ///< min_s f_is
  std::vector<double> upper;                       ///< max_s f_is = f_ii
  std::vector<double> mid;                         ///< (upper + lower) / 2
  std::vector<double> halfwidth;                   ///< (upper - lower) / 2
  std::vector<double> centered_weights;            ///< w_i - 1/m
  std::vector<std::size_t> at_or_above_mean;      ///< I1: centered weight >= 0
  std::vector<std::size_t> below_mean;            ///< I2: centered weight < 0
  double satisfaction = 0.0;                       ///< lambda
};

MaxMinWorkspace individual_optima(const GmopModel& model, double theta);

/// Piecewise-linear membership of an objective value. The ramp runs from
/// mid + (2w'-1)v (w' >= 0) or mid - v (w' < 0) up to mid + w'v.
/// Throws Error(ZeroWidth) when halfwidth <= 0.
double whitening_weight(double value, double mid, double halfwidth, double w_centered);

struct Algorithm2Options {
  double theta = 0.5;
  Rounding rounding = Rounding::exact;
};

struct Algorithm2Result {
  MaxMinWorkspace workspace;
  std::vector<double> weights;
  LpProblem program;                         ///< variables (x, lambda)
  LpSolution solution;
  Point point;
  double satisfaction = 0.0;
  std::vector<double> objective_values;      ///< original sign, theta-whitened
  std::vector<std::size_t> dropped_objectives;  ///< constant over the optima
};

/// Max-min satisfaction program over theta-whitened objectives, lambda in [0,1].
Algorithm2Result algorithm2(const GmopModel& model, std::span<const double> weights,
                            const Algorithm2Options& options = {});

}  // namespace greymop
