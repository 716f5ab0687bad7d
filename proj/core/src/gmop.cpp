#include "greymop/gmop.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>

#include "greymop/error.hpp"

namespace greymop {

namespace {

constexpr double kWeightSumTol = 1e-9;
constexpr std::size_t kMaxVertexSubsets = 200000;

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    std::ostringstream msg;
    msg << "theta " << theta << " outside [0, 1]";
    throw Error(ErrorCode::ThetaOutOfRange, msg.str());
  }
}

double trim_noise(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

double sign_of(Sense s) { return s == Sense::maximize ? 1.0 : -1.0; }

std::string objective_label(const GmopModel& model, std::size_t i) {
  const auto& name = model.objectives[i].name;
  return name.empty() ? "objective " + std::to_string(i) : "objective '" + name + "'";
}

// Binomial coefficient, saturating at `cap` + 1.
std::size_t choose_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
    if (c > static_cast<double>(cap)) return cap + 1;
  }
  return static_cast<std::size_t>(std::llround(c));
}

// Solves the square system in place; false when (numerically) singular.
bool solve_square(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& x) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-12) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return true;
}

bool same_point(const Point& a, const Point& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (std::abs(a[j] - b[j]) > 1e-9 * std::max(1.0, std::abs(a[j]))) return false;
  }
  return true;
}

void push_unique(std::vector<Point>& pts, Point p) {
  for (double& v : p) {
    if (std::abs(v) < 1e-12) v = 0.0;
  }
  for (const auto& q : pts) {
    if (same_point(q, p)) return;
  }
  pts.push_back(std::move(p));
}

double region_tolerance(const LpProblem& region) {
  double scale = 1.0;
  for (const auto& row : region.constraints) scale = std::max(scale, std::abs(row.rhs));
  return kLpTolerance * scale;
}

// Vertices as intersections of n of the (rows + axes) hyperplanes.
std::vector<Point> enumerate_vertices(const LpProblem& region) {
  const std::size_t n = region.variable_count;
  const std::size_t rows = region.constraints.size();
  const std::size_t planes = rows + n;
  const double tol = region_tolerance(region);
  std::vector<Point> out;

  std::vector<std::size_t> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  std::vector<double> b(n);
  Point x;
  while (true) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t h = pick[k];
      if (h < rows) {
        a[k] = region.constraints[h].coefficients;
        b[k] = region.constraints[h].rhs;
      } else {
        std::fill(a[k].begin(), a[k].end(), 0.0);
        a[k][h - rows] = 1.0;
        b[k] = 0.0;
      }
    }
    if (solve_square(a, b, x) && is_feasible(region, x, tol)) push_unique(out, x);

    // next n-combination of [0, planes)
    std::size_t k = n;
    while (k > 0 && pick[k - 1] == planes - n + (k - 1)) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t r = k; r < n; ++r) pick[r] = pick[r - 1] + 1;
  }
  return out;
}

// Vertex discovery by optimizing seeded directions when enumeration is too large.
std::vector<Point> directional_vertices(const LpProblem& region, std::size_t wanted,
                                        std::mt19937_64& rng) {
  const std::size_t n = region.variable_count;
  std::vector<Point> out;
  LpProblem lp = region;
  auto try_direction = [&](const std::vector<double>& c) {
    lp.objective = c;
    const LpSolution s = solve_lp(lp);
    if (s.optimal()) push_unique(out, s.point);
  };
  std::vector<double> c(n, 0.0);
  try_direction(c);
  for (std::size_t j = 0; j < n && out.size() < wanted; ++j) {
    for (double sgn : {1.0, -1.0}) {
      std::fill(c.begin(), c.end(), 0.0);
      c[j] = sgn;
      try_direction(c);
    }
  }
  for (std::size_t attempt = 0; attempt < 8 * wanted && out.size() < wanted; ++attempt) {
    for (double& v : c) v = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    try_direction(c);
  }
  return out;
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

double round_significant(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value) || digits <= 0) return value;
  const double clean = trim_noise(value);
  const int exponent = static_cast<int>(std::floor(std::log10(std::abs(clean))));
  const double scale = std::pow(10.0, exponent - digits + 1);
  const double mantissa = trim_noise(clean / scale);
  // nearbyint honours the default round-half-to-even mode.
  return trim_noise(std::nearbyint(mantissa) * scale);
}

std::vector<double> round_weights_coarse(std::span<const double> weights) {
  std::vector<double> out(weights.begin(), weights.end());
  double sum = 0.0;
  for (double& w : out) {
    w = std::round(trim_noise(w) * 10.0) / 10.0;
    sum += w;
  }
  if (sum <= 0.0) {
    throw Error(ErrorCode::WeightDimensionMismatch, "weights vanish after rounding");
  }
  for (double& w : out) w = trim_noise(w / sum);
  return out;
}

void GmopModel::validate() const {
  if (objectives.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "model needs at least one objective");
  }
  for (std::size_t i = 0; i < objectives.size(); ++i) {
    if (objectives[i].coefficients.size() != variable_count) {
      throw Error(ErrorCode::DimensionMismatch,
                  objective_label(*this, i) + " has " +
                      std::to_string(objectives[i].coefficients.size()) +
                      " coefficients, expected " + std::to_string(variable_count));
    }
  }
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    if (constraints[k].coefficients.size() != variable_count) {
      throw Error(ErrorCode::DimensionMismatch,
                  "constraint " + std::to_string(k) + " has " +
                      std::to_string(constraints[k].coefficients.size()) +
                      " coefficients, expected " + std::to_string(variable_count));
    }
  }
}

GreyLinearProgram GmopModel::with_price(std::vector<GreyNumber> price, Sense sense) const {
  GreyLinearProgram g;
  g.sense = sense;
  g.price = std::move(price);
  for (const auto& c : constraints) {
    g.consumption.push_back(c.coefficients);
    g.resources.push_back(c.rhs);
    g.relations.push_back(c.relation);
  }
  g.validate();
  return g;
}

LpProblem whitened_region(const GmopModel& model, double theta) {
  model.validate();
  check_theta(theta);
  LpProblem lp;
  lp.sense = Sense::maximize;
  lp.variable_count = model.variable_count;
  lp.objective.assign(model.variable_count, 0.0);
  for (const auto& c : model.constraints) {
    LinearConstraint row;
    row.relation = c.relation;
    row.rhs = c.rhs.whiten(theta);
    row.coefficients.reserve(c.coefficients.size());
    for (const auto& a : c.coefficients) row.coefficients.push_back(a.whiten(theta));
    lp.constraints.push_back(std::move(row));
  }
  return lp;
}

std::vector<double> whitened_objective(const GmopModel& model, std::size_t i, double theta) {
  check_theta(theta);
  std::vector<double> c;
  c.reserve(model.variable_count);
  for (const auto& g : model.objectives.at(i).coefficients) c.push_back(g.whiten(theta));
  return c;
}

std::vector<Point> sample_admissible(const GmopModel& model, double theta, std::size_t count,
                                     const std::optional<std::vector<Point>>& supplied,
                                     std::uint64_t seed) {
  const LpProblem region = whitened_region(model, theta);
  const double tol = region_tolerance(region);

  if (supplied) {
    for (std::size_t t = 0; t < supplied->size(); ++t) {
      const Point& p = (*supplied)[t];
      if (p.size() != model.variable_count) {
        throw Error(ErrorCode::DimensionMismatch,
                    "sample point " + std::to_string(t) + " has " + std::to_string(p.size()) +
                        " coordinates, expected " + std::to_string(model.variable_count));
      }
      if (!is_feasible(region, p, tol)) {
        throw Error(ErrorCode::InfeasibleSample,
                    "sample point " + std::to_string(t) +
                        " violates the whitened constraints");
      }
    }
    return *supplied;
  }

  const std::size_t m = model.objectives.size();
  const std::size_t lo = std::max<std::size_t>(2, m);
  const std::size_t hi = std::max<std::size_t>(2, 2 * m);
  if (count == 0) count = hi;
  if (count < lo || count > hi) {
    throw Error(ErrorCode::ParameterError,
                "sample count " + std::to_string(count) + " outside [" + std::to_string(lo) +
                    ", " + std::to_string(hi) + "]");
  }

  std::mt19937_64 rng(seed);
  const std::size_t n = model.variable_count;
  std::vector<Point> vertices;
  if (choose_capped(region.constraints.size() + n, n, kMaxVertexSubsets) <= kMaxVertexSubsets) {
    vertices = enumerate_vertices(region);
  } else {
    vertices = directional_vertices(region, count, rng);
  }
  if (vertices.empty()) {
    throw Error(ErrorCode::EmptyRegion, "whitened constraint region is empty");
  }
  std::sort(vertices.begin(), vertices.end());

  std::vector<Point> out;
  if (vertices.size() >= count) {
    for (std::size_t k = 0; k < count; ++k) out.push_back(vertices[k * vertices.size() / count]);
    return out;
  }

  out = vertices;
  if (vertices.size() == 1) {
    // A lone vertex can still sit on unbounded edges along the axes.
    for (std::size_t j = 0; j < n && out.size() < count; ++j) {
      Point p = vertices.front();
      p[j] += 1.0;
      if (is_feasible(region, p, tol)) push_unique(out, p);
    }
  }
  for (std::size_t attempt = 0; attempt < 64 * count && out.size() < count; ++attempt) {
    std::vector<double> lambda(vertices.size());
    double total = 0.0;
    for (double& l : lambda) {
      l = -std::log(1.0 - unit_uniform(rng));
      total += l;
    }
    Point p(n, 0.0);
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      for (std::size_t j = 0; j < n; ++j) p[j] += lambda[v] / total * vertices[v][j];
    }
    if (is_feasible(region, p, tol)) push_unique(out, p);
  }
  if (out.size() < count) {
    throw Error(ErrorCode::EmptyRegion, "whitened region holds fewer than " +
                                            std::to_string(count) + " distinct points");
  }
  return out;
}

GreyIntervalMatrix objective_matrix(const GmopModel& model, std::span<const Point> points) {
  model.validate();
  GreyIntervalMatrix f(model.objectives.size(), points.size());
  for (std::size_t t = 0; t < points.size(); ++t) {
    if (points[t].size() != model.variable_count) {
      throw Error(ErrorCode::DimensionMismatch,
                  "point " + std::to_string(t) + " has " + std::to_string(points[t].size()) +
                      " coordinates, expected " + std::to_string(model.variable_count));
    }
    for (std::size_t i = 0; i < model.objectives.size(); ++i) {
      f.at(i, t) = lin_comb(points[t], model.objectives[i].coefficients);
    }
  }
  return f;
}

EntropyBreakdown entropy_weights(const GreyIntervalMatrix& normalized) {
  const std::size_t m = normalized.rows();
  const std::size_t l = normalized.cols();
  if (l < 2) {
    throw Error(ErrorCode::ParameterError, "entropy weighting needs at least two sample points");
  }
  EntropyBreakdown out;
  out.deviations.assign(m, std::vector<double>(l, 0.0));
  out.deviation_sums.assign(m, 0.0);
  out.entropies.assign(m, 0.0);
  const double inv_log_l = 1.0 / std::log(static_cast<double>(l));

  for (std::size_t i = 0; i < m; ++i) {
    const auto row = normalized.row(i);
    double total = 0.0;
    for (std::size_t t = 0; t < l; ++t) {
      double d = 0.0;
      for (std::size_t s = 0; s < l; ++s) d += grey_distance(row[t], row[s]);
      out.deviations[i][t] = d;
      total += d;
    }
    out.deviation_sums[i] = total;
    if (!(total > 0.0)) {
      throw Error(ErrorCode::DegenerateObjective,
                  "objective " + std::to_string(i) + " has identical values at every sample");
    }
    double h = 0.0;
    for (double d : out.deviations[i]) {
      if (d <= 0.0) continue;
      const double p = d / total;
      h -= p * std::log(p);
    }
    out.entropies[i] = std::clamp(h * inv_log_l, 0.0, 1.0);
  }

  double spread = 0.0;
  for (double e : out.entropies) spread += 1.0 - e;
  out.weights.assign(m, 0.0);
  if (spread <= 1e-15) {
    // Every row is maximally uniform (always the case for l = 2): no objective
    // discriminates, so fall back to equal weights.
    std::fill(out.weights.begin(), out.weights.end(), 1.0 / static_cast<double>(m));
  } else {
    for (std::size_t i = 0; i < m; ++i) out.weights[i] = (1.0 - out.entropies[i]) / spread;
  }
  return out;
}

WeightingWorkspace build_weighting(const GmopModel& model, std::vector<Point> points,
                                   std::optional<std::vector<double>> preferences) {
  WeightingWorkspace ws;
  ws.objective_matrix = objective_matrix(model, points);
  ws.sample_points = std::move(points);
  const std::size_t m = model.objectives.size();
  ws.normalized_matrix = GreyIntervalMatrix(m, ws.sample_points.size());
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<GreyNumber> r;
    try {
      r = normalize_column_set(ws.objective_matrix.row(i), model.objectives[i].orientation);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateColumn) throw;
      throw Error(ErrorCode::DegenerateObjective,
                  objective_label(model, i) + " is constant over the samples: " + e.what());
    }
    std::copy(r.begin(), r.end(), ws.normalized_matrix.row(i).begin());
  }
  ws.entropy = entropy_weights(ws.normalized_matrix);
  if (preferences) {
    ws.modified_weights = modify_weights(ws.entropy.weights, *preferences);
    ws.preferences = std::move(preferences);
  }
  return ws;
}

std::vector<double> modify_weights(std::span<const double> weights,
                                   std::span<const double> preferences) {
  if (weights.size() != preferences.size()) {
    throw Error(ErrorCode::WeightDimensionMismatch,
                std::to_string(preferences.size()) + " preferences for " +
                    std::to_string(weights.size()) + " weights");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(preferences[i] >= 0.0)) {
      throw Error(ErrorCode::ParameterError, "preferences must be nonnegative");
    }
    total += weights[i] * preferences[i];
  }
  if (!(total > 0.0)) {
    throw Error(ErrorCode::AllZeroPreferences, "weighted preferences sum to zero");
  }
  std::vector<double> out(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) out[i] = weights[i] * preferences[i] / total;
  return out;
}

GreyLinearProgram combine_objectives(const GmopModel& model, std::span<const double> weights) {
  model.validate();
  const std::size_t m = model.objectives.size();
  if (weights.size() != m) {
    throw Error(ErrorCode::WeightDimensionMismatch,
                std::to_string(weights.size()) + " weights for " + std::to_string(m) +
                    " objectives");
  }
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(sum - 1.0) > kWeightSumTol) {
    std::ostringstream msg;
    msg << "weights sum to " << sum << ", expected 1";
    throw Error(ErrorCode::WeightDimensionMismatch, msg.str());
  }

  std::vector<double> signed_w(m);
  for (std::size_t i = 0; i < m; ++i) signed_w[i] = weights[i] * sign_of(model.objectives[i].sense);

  std::vector<GreyNumber> price;
  std::vector<GreyNumber> column(m);
  for (std::size_t j = 0; j < model.variable_count; ++j) {
    for (std::size_t i = 0; i < m; ++i) column[i] = model.objectives[i].coefficients[j];
    price.push_back(lin_comb(signed_w, column));
  }
  return model.with_price(std::move(price), Sense::maximize);
}

Algorithm1Result algorithm1(const GmopModel& model, const Algorithm1Options& options) {
  Algorithm1Result r;
  auto points =
      sample_admissible(model, options.theta, options.sample_count, options.points, options.seed);
  r.workspace = build_weighting(model, std::move(points), options.preferences);
  r.weights = r.workspace.weights();
  if (options.rounding == Rounding::coarse) r.weights = round_weights_coarse(r.weights);
  r.combined = combine_objectives(model, r.weights);
  r.solution = theta_solve(r.combined, options.theta);
  if (r.solution.status == LpStatus::infeasible) {
    throw Error(ErrorCode::InfeasibleModel, "combined program is infeasible");
  }
  if (r.solution.status == LpStatus::unbounded) {
    throw Error(ErrorCode::UnboundedObjective, "combined program is unbounded");
  }
  for (std::size_t i = 0; i < model.objectives.size(); ++i) {
    r.objective_values.push_back(
        evaluate(whitened_objective(model, i, options.theta), r.solution.point));
  }
  return r;
}

MaxMinWorkspace individual_optima(const GmopModel& model, double theta) {
  LpProblem lp = whitened_region(model, theta);
  const std::size_t m = model.objectives.size();
  MaxMinWorkspace ws;
  std::vector<std::vector<double>> canonical(m);
  for (std::size_t i = 0; i < m; ++i) {
    canonical[i] = whitened_objective(model, i, theta);
    const double s = sign_of(model.objectives[i].sense);
    for (double& c : canonical[i]) c *= s;
    lp.objective = canonical[i];
    const LpSolution sol = solve_lp(lp);
    if (sol.status == LpStatus::infeasible) {
      throw Error(ErrorCode::InfeasibleModel, "whitened constraint region is empty");
    }
    if (sol.status == LpStatus::unbounded) {
      throw Error(ErrorCode::UnboundedObjective, objective_label(model, i) + " is unbounded");
    }
    ws.optima.push_back(sol.point);
  }
  ws.cross_values.assign(m, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t s = 0; s < m; ++s) ws.cross_values[i][s] = evaluate(canonical[i], ws.optima[s]);
    // x(i) maximizes f_i, so f_ii is the upper bound.
    const auto& row = ws.cross_values[i];
    ws.lower.push_back(std::min(row[i], *std::min_element(row.begin(), row.end())));
    ws.upper.push_back(row[i]);
    ws.mid.push_back(0.5 * (ws.upper.back() + ws.lower.back()));
    ws.halfwidth.push_back(0.5 * (ws.upper.back() - ws.lower.back()));
  }
  return ws;
}

double whitening_weight(double value, double mid, double halfwidth, double w_centered) {
  if (!(halfwidth > 0.0)) {
    throw Error(ErrorCode::ZeroWidth, "whitening weight needs a positive half-width");
  }
  const double full = mid + w_centered * halfwidth;
  const double start = w_centered >= 0.0 ? mid + (2.0 * w_centered - 1.0) * halfwidth
                                         : mid - halfwidth;
  if (value >= full) return 1.0;
  if (value < start) return 0.0;
  const double span = w_centered >= 0.0 ? halfwidth * (1.0 - w_centered)
                                        : halfwidth * (1.0 + w_centered);
  return std::clamp(1.0 - (full - value) / span, 0.0, 1.0);
}

Algorithm2Result algorithm2(const GmopModel& model, std::span<const double> weights,
                            const Algorithm2Options& options) {
  model.validate();
  const std::size_t m = model.objectives.size();
  const std::size_t n = model.variable_count;
  if (weights.size() != m) {
    throw Error(ErrorCode::WeightDimensionMismatch,
                std::to_string(weights.size()) + " weights for " + std::to_string(m) +
                    " objectives");
  }

  Algorithm2Result r;
  r.weights.assign(weights.begin(), weights.end());
  if (options.rounding == Rounding::coarse) r.weights = round_weights_coarse(r.weights);

  r.workspace = individual_optima(model, options.theta);
  MaxMinWorkspace& ws = r.workspace;
  const double mean = 1.0 / static_cast<double>(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double wc = r.weights[i] - mean;
    ws.centered_weights.push_back(wc);
    (wc >= 0.0 ? ws.at_or_above_mean : ws.below_mean).push_back(i);
  }

  const LpProblem region = whitened_region(model, options.theta);
  r.program.sense = Sense::maximize;
  r.program.variable_count = n + 1;
  r.program.objective.assign(n + 1, 0.0);
  r.program.objective[n] = 1.0;

  auto maybe_round = [&](double v) {
    return options.rounding == Rounding::coarse ? round_significant(v, 2) : v;
  };
  for (std::size_t i = 0; i < m; ++i) {
    const double v = ws.halfwidth[i];
    if (v <= 1e-12 * std::max(1.0, std::abs(ws.mid[i]))) {
      r.dropped_objectives.push_back(i);
      continue;
    }
    const double wc = ws.centered_weights[i];
    std::vector<double> c = whitened_objective(model, i, options.theta);
    const double s = sign_of(model.objectives[i].sense);
    for (double& x : c) x *= s;
    LinearConstraint row;
    row.coefficients = std::move(c);
    if (wc >= 0.0) {
      row.coefficients.push_back(-maybe_round((1.0 - wc) * v));
      row.rhs = maybe_round(ws.mid[i] + (2.0 * wc - 1.0) * v);
    } else {
      row.coefficients.push_back(-maybe_round((1.0 + wc) * v));
      row.rhs = maybe_round(ws.mid[i] - v);
    }
    row.relation = Relation::greater_equal;
    r.program.constraints.push_back(std::move(row));
  }
  for (const auto& c : region.constraints) {
    LinearConstraint row = c;
    row.coefficients.push_back(0.0);
    r.program.constraints.push_back(std::move(row));
  }
  {
    LinearConstraint cap;
    cap.coefficients.assign(n + 1, 0.0);
    cap.coefficients[n] = 1.0;
    cap.relation = Relation::less_equal;
    cap.rhs = 1.0;
    r.program.constraints.push_back(std::move(cap));
  }

  if (r.dropped_objectives.size() == m) {
    // Every objective is constant across the individual optima, so x(1)
    // already attains each of them.
    r.point = ws.optima.front();
    r.satisfaction = 1.0;
    r.solution.status = LpStatus::optimal;
    r.solution.point = r.point;
    r.solution.point.push_back(1.0);
    r.solution.value = 1.0;
  } else {
    r.solution = solve_lp(r.program);
    if (r.solution.status == LpStatus::infeasible) {
      throw Error(ErrorCode::InfeasibleMaxMin,
                  "max-min program is infeasible even at satisfaction level 0");
    }
    if (r.solution.status == LpStatus::unbounded) {
      throw Error(ErrorCode::UnboundedObjective, "max-min program is unbounded");
    }
    r.point.assign(r.solution.point.begin(), r.solution.point.begin() + static_cast<long>(n));
    r.satisfaction = r.solution.point[n];
  }
  ws.satisfaction = r.satisfaction;
  for (std::size_t i = 0; i < m; ++i) {
    r.objective_values.push_back(evaluate(whitened_objective(model, i, options.theta), r.point));
  }
  return r;
}

}  // namespace greymop
