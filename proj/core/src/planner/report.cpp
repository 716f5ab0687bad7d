#include "greymop/planner/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "greymop/error.hpp"

namespace greymop::planner {

namespace {

const Json& params_or_empty(const Json& p) {
  static const Json empty = Json::object();
  return p.is_null() ? empty : p;
}

double number_param(const Json& p, const char* key, double fallback) {
  if (!p.contains(key) || p[key].is_null()) return fallback;
  if (!p[key].is_number()) {
    throw Error(ErrorCode::ParameterError, std::string(key) + " must be a number");
  }
  return p[key].get<double>();
}

bool bool_param(const Json& p, const char* key) {
  if (!p.contains(key) || p[key].is_null()) return false;
  if (!p[key].is_boolean()) {
    throw Error(ErrorCode::ParameterError, std::string(key) + " must be true or false");
  }
  return p[key].get<bool>();
}

std::optional<std::vector<double>> vector_param(const Json& p, const char* key) {
  if (!p.contains(key) || p[key].is_null()) return std::nullopt;
  const Json& v = p[key];
  if (!v.is_array()) throw Error(ErrorCode::ParameterError, std::string(key) + " must be an array");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) {
      throw Error(ErrorCode::ParameterError, std::string(key) + " must hold numbers");
    }
    out.push_back(x.get<double>());
  }
  return out;
}

std::optional<std::vector<Point>> points_param(const Json& p) {
  if (!p.contains("points") || p["points"].is_null()) return std::nullopt;
  const Json& pts = p["points"];
  if (!pts.is_array()) throw Error(ErrorCode::ParameterError, "points must be an array of points");
  std::vector<Point> out;
  for (const auto& row : pts) {
    if (!row.is_array()) {
      throw Error(ErrorCode::ParameterError, "points must be an array of points");
    }
    Point x;
    for (const auto& v : row) {
      if (!v.is_number()) throw Error(ErrorCode::ParameterError, "point entries must be numbers");
      x.push_back(v.get<double>());
    }
    out.push_back(std::move(x));
  }
  return out;
}

Json matrix_json(const GreyIntervalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& g : m.row(r)) row.push_back(output_grey(g));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json weighting_json(const WeightingWorkspace& w) {
  Json j;
  j["sample_points"] = Json::array();
  for (const auto& x : w.sample_points) j["sample_points"].push_back(output_vector(x));
  j["objective_matrix"] = matrix_json(w.objective_matrix);
  j["normalized_matrix"] = matrix_json(w.normalized_matrix);
  j["deviation_sums"] = output_vector(w.entropy.deviation_sums);
  j["entropies"] = output_vector(w.entropy.entropies);
  j["entropy_weights"] = output_vector(w.entropy.weights);
  if (w.preferences) j["preferences"] = output_vector(*w.preferences);
  if (w.modified_weights) j["modified_weights"] = output_vector(*w.modified_weights);
  return j;
}

Json objective_values_json(const GmopModel& model, const std::vector<double>& values) {
  Json j = Json::array();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string& name = model.objectives[i].name;
    j.push_back({{"name", name.empty() ? "f" + std::to_string(i + 1) : name},
                 {"value", output_number(values[i])}});
  }
  return j;
}

Algorithm1Options algorithm1_options(const Json& p, const ModelDocument& doc) {
  Algorithm1Options o;
  o.theta = number_param(p, "theta", 0.5);
  const double count = number_param(p, "sample_count", 0.0);
  if (count < 0.0 || count != std::floor(count)) {
    throw Error(ErrorCode::ParameterError, "sample_count must be a nonnegative integer");
  }
  o.sample_count = static_cast<std::size_t>(count);
  o.points = points_param(p);
  if (!o.points && doc.sample_points) o.points = doc.sample_points;
  o.preferences = vector_param(p, "preferences");
  if (p.contains("seed")) {
    if (!p["seed"].is_number_unsigned()) {
      throw Error(ErrorCode::ParameterError, "seed must be a nonnegative integer");
    }
    o.seed = p["seed"].get<std::uint64_t>();
  }
  o.rounding = bool_param(p, "reproduce_paper_rounding") ? Rounding::coarse : Rounding::exact;
  return o;
}

const GmopModel& require_gmop(const ModelDocument& doc, ReportMode mode) {
  if (const auto* m = std::get_if<GmopModel>(&doc.model)) return *m;
  throw Error(ErrorCode::ParameterError,
              std::string(to_string(mode)) + " needs a multi-objective model");
}

/// Scalar or per-entry positions for a program of the given shape.
PositionedCoefficients positions_param(const Json& p, const GreyLinearProgram& g) {
  if (p.contains("theta") && !p["theta"].is_null()) {
    return PositionedCoefficients::theta(g, number_param(p, "theta", 0.5));
  }
  PositionedCoefficients pc = PositionedCoefficients::uniform(g, 0.5, 0.5, 0.5);
  auto fill = [&](const char* key, std::vector<double>& slot) {
    if (!p.contains(key) || p[key].is_null()) return;
    if (p[key].is_number()) {
      slot.assign(slot.size(), p[key].get<double>());
      return;
    }
    auto v = vector_param(p, key);
    if (v->size() != slot.size()) {
      throw Error(ErrorCode::DimensionMismatch, std::string(key) + " has the wrong length");
    }
    slot = *v;
  };
  fill("rho", pc.rho);
  fill("beta", pc.beta);
  if (p.contains("delta") && !p["delta"].is_null()) {
    const Json& d = p["delta"];
    if (d.is_number()) {
      for (auto& row : pc.delta) row.assign(row.size(), d.get<double>());
    } else if (d.is_array() && d.size() == pc.delta.size()) {
      for (std::size_t i = 0; i < d.size(); ++i) {
        Json wrap = {{"row", d[i]}};
        auto v = vector_param(wrap, "row");
        if (v->size() != pc.delta[i].size()) {
          throw Error(ErrorCode::DimensionMismatch, "delta has the wrong shape");
        }
        pc.delta[i] = *v;
      }
    } else {
      throw Error(ErrorCode::DimensionMismatch, "delta has the wrong shape");
    }
  }
  return pc;
}

Json positions_json(const PositionedCoefficients& pc) {
  Json d = Json::array();
  for (const auto& row : pc.delta) d.push_back(output_vector(row));
  return {{"rho", output_vector(pc.rho)}, {"beta", output_vector(pc.beta)}, {"delta", d}};
}

CostMode cost_mode_param(const Json& p) {
  if (!p.contains("mode") || p["mode"].is_null()) return CostMode::proportional;
  const std::string s = p["mode"].is_string() ? p["mode"].get<std::string>() : "";
  if (s == "proportional") return CostMode::proportional;
  if (s == "exact") return CostMode::exact;
  throw Error(ErrorCode::ParameterError, "mode must be \"proportional\" or \"exact\"");
}

Json portfolio_solution_json(const PortfolioSolution& s) {
  Json j;
  j["status"] = std::string(to_string(s.status));
  if (s.status == LpStatus::optimal) {
    j["allocation"] = output_vector(s.allocation);
    j["risk_level"] = output_number(s.risk_level);
    j["value"] = output_number(s.value);
    j["profit"] = output_number(s.profit);
    j["risk"] = output_number(s.risk);
  }
  return j;
}

Json run_positioned(const ModelDocument& doc, const Json& p) {
  Json out;
  if (const auto* g = std::get_if<GreyLinearProgram>(&doc.model)) {
    const PositionedCoefficients pc = positions_param(p, *g);
    out["positions"] = positions_json(pc);
    out["solution"] = to_json(solve_positioned(*g, pc));
    if (p.contains("mu0") && !p["mu0"].is_null()) {
      out["assessment"] = to_json(assess_pleased(*g, pc, number_param(p, "mu0", 0.0)));
    }
    return out;
  }
  if (const auto* spec = std::get_if<PortfolioSpec>(&doc.model)) {
    if (!p.contains("risk_weight")) {
      throw Error(ErrorCode::ParameterError, "portfolio solves need risk_weight");
    }
    const GreyNumber rw = grey_from_json(p["risk_weight"], "risk_weight");
    PortfolioOptions o;
    o.theta = number_param(p, "theta", 0.5);
    o.mode = cost_mode_param(p);
    o.purchase_cap = bool_param(p, "purchase_cap");
    const double theta_lambda = number_param(p, "theta_lambda", 0.5);
    out["solution"] = portfolio_solution_json(optimize_portfolio(*spec, rw, theta_lambda, o));
    if (p.contains("mu0") && !p["mu0"].is_null()) {
      const ScalarizedModel sm = scalarize(*spec, rw, theta_lambda, o.purchase_cap);
      out["assessment"] = to_json(
          assess_pleased(sm.program, positions_param(p, sm.program), number_param(p, "mu0", 0)));
    }
    return out;
  }
  throw Error(ErrorCode::ParameterError,
              "positioned solves need a program or portfolio model; use algorithm1 or algorithm2");
}

}  // namespace

ReportMode report_mode_from_string(std::string_view name) {
  if (name == "positioned" || name == "solve") return ReportMode::positioned;
  if (name == "weights") return ReportMode::weights;
  if (name == "algorithm1") return ReportMode::algorithm1;
  if (name == "algorithm2") return ReportMode::algorithm2;
  if (name == "frontier") return ReportMode::frontier;
  throw Error(ErrorCode::ParameterError, "unknown report mode '" + std::string(name) + "'");
}

std::string_view to_string(ReportMode mode) noexcept {
  switch (mode) {
    case ReportMode::positioned: return "positioned";
    case ReportMode::weights: return "weights";
    case ReportMode::algorithm1: return "algorithm1";
    case ReportMode::algorithm2: return "algorithm2";
    case ReportMode::frontier: return "frontier";
  }
  return "?";
}

std::string frontier_csv(std::span<const FrontierPoint> frontier, std::size_t asset_count) {
  std::ostringstream out;
  out << "e2,Z1,Z2,tradeoff";
  for (std::size_t i = 0; i <= asset_count; ++i) out << ",x_" << i;
  out << '\n';
  auto cell = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
  };
  for (const auto& fp : frontier) {
    out << cell(fp.epsilon) << ',' << cell(fp.profit) << ',' << cell(fp.risk) << ','
        << (fp.tradeoff ? cell(*fp.tradeoff) : std::string());
    for (double x : fp.allocation) out << ',' << cell(x);
    out << '\n';
  }
  return out.str();
}

Report run_report(const ModelStore& store, const std::string& handle, ReportMode mode,
                  const Json& parameters) {
  const Json& p = params_or_empty(parameters);
  if (!p.is_object()) throw Error(ErrorCode::ParameterError, "parameters must be an object");
  const ModelDocument doc = store.get(handle);
  const auto started = std::chrono::steady_clock::now();

  Report report;
  Json& out = report.document;
  out["model"] = handle;
  out["mode"] = std::string(to_string(mode));
  out["parameters"] = p;

  switch (mode) {
    case ReportMode::positioned:
      out["result"] = run_positioned(doc, p);
      break;
    case ReportMode::weights: {
      const GmopModel& model = require_gmop(doc, mode);
      const Algorithm1Options o = algorithm1_options(p, doc);
      auto points = sample_admissible(model, o.theta, o.sample_count, o.points, o.seed);
      const WeightingWorkspace w = build_weighting(model, std::move(points), o.preferences);
      out["result"] = weighting_json(w);
      out["result"]["weights"] = output_vector(w.weights());
      break;
    }
    case ReportMode::algorithm1: {
      const GmopModel& model = require_gmop(doc, mode);
      const Algorithm1Result r = algorithm1(model, algorithm1_options(p, doc));
      Json res = weighting_json(r.workspace);
      res["weights"] = output_vector(r.weights);
      res["solution"] = to_json(r.solution);
      res["objective_values"] = objective_values_json(model, r.objective_values);
      out["result"] = std::move(res);
      break;
    }
    case ReportMode::algorithm2: {
      const GmopModel& model = require_gmop(doc, mode);
      Algorithm2Options o;
      o.theta = number_param(p, "theta", 0.5);
      o.rounding = bool_param(p, "reproduce_paper_rounding") ? Rounding::coarse : Rounding::exact;
      std::vector<double> weights;
      Json res;
      if (auto w = vector_param(p, "weights")) {
        weights = *w;
      } else {
        const Algorithm1Options a1 = algorithm1_options(p, doc);
        auto points = sample_admissible(model, a1.theta, a1.sample_count, a1.points, a1.seed);
        const WeightingWorkspace ws = build_weighting(model, std::move(points), a1.preferences);
        res["weighting"] = weighting_json(ws);
        weights = ws.weights();
      }
      const Algorithm2Result r = algorithm2(model, weights, o);
      res["weights"] = output_vector(r.weights);
      res["individual_optima"] = Json::array();
      for (const auto& x : r.workspace.optima) res["individual_optima"].push_back(output_vector(x));
      res["lower"] = output_vector(r.workspace.lower);
      res["upper"] = output_vector(r.workspace.upper);
      res["mid"] = output_vector(r.workspace.mid);
      res["halfwidth"] = output_vector(r.workspace.halfwidth);
      res["centered_weights"] = output_vector(r.workspace.centered_weights);
      res["point"] = output_vector(r.point);
      res["satisfaction"] = output_number(r.satisfaction);
      res["solution"] = to_json(r.solution);
      res["objective_values"] = objective_values_json(model, r.objective_values);
      res["dropped_objectives"] = r.dropped_objectives;
      out["result"] = std::move(res);
      break;
    }
    case ReportMode::frontier: {
      const auto* spec = std::get_if<PortfolioSpec>(&doc.model);
      if (!spec) throw Error(ErrorCode::ParameterError, "frontier needs a portfolio model");
      auto eps = vector_param(p, "epsilons");
      if (!eps || eps->empty()) {
        throw Error(ErrorCode::ParameterError, "frontier needs a nonempty epsilons list");
      }
      PortfolioOptions o;
      o.theta = number_param(p, "theta", 0.5);
      o.mode = cost_mode_param(p);
      o.purchase_cap = bool_param(p, "purchase_cap");
      const auto frontier = pareto_frontier(*spec, o.theta, *eps, o);
      Json pts = Json::array();
      for (const auto& fp : frontier) {
        Json j = {{"epsilon", output_number(fp.epsilon)},
                  {"profit", output_number(fp.profit)},
                  {"risk", output_number(fp.risk)},
                  {"allocation", output_vector(fp.allocation)}};
        j["tradeoff"] = fp.tradeoff ? Json(output_number(*fp.tradeoff)) : Json();
        pts.push_back(std::move(j));
      }
      const Compromise c = compromise_solution(frontier);
      out["result"] = {{"frontier", pts},
                       {"compromise",
                        {{"index", c.index},
                         {"epsilon", output_number(c.point.epsilon)},
                         {"profit", output_number(c.point.profit)},
                         {"risk", output_number(c.point.risk)},
                         {"allocation", output_vector(c.point.allocation)},
                         {"ideal_profit", output_number(c.ideal_profit)},
                         {"ideal_risk", output_number(c.ideal_risk)},
                         {"distance", output_number(c.distance)}}}};
      report.csv = frontier_csv(frontier, spec->asset_count());
      break;
    }
  }

  const auto elapsed = std::chrono::steady_clock::now() - started;
  out["elapsed_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  return report;
}

}  // namespace greymop::planner
