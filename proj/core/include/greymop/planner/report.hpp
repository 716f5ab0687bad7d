#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "greymop/planner/documents.hpp"
#include "greymop/planner/model_store.hpp"

namespace greymop::planner {

enum class ReportMode { positioned, weights, algorithm1, algorithm2, frontier };

/// Throws Error(ParameterError) on an unknown name.
ReportMode report_mode_from_string(std::string_view name);
std::string_view to_string(ReportMode mode) noexcept;

struct Report {
  Json document;                   ///< inputs echoed, results, elapsed_ms
  std::optional<std::string> csv;  ///< frontier mode only
};

/// Batch run of one mode against a stored model. Pure in (handle, parameters)
/// apart from the elapsed_ms field.
///
/// Parameters (all optional unless noted):
///   positioned  theta | rho, beta, delta (scalar or per entry), mu0,
///               risk_weight + theta_lambda + mode + purchase_cap for portfolios
///   weights     theta, points, sample_count, seed, preferences
///   algorithm1  the weights parameters plus reproduce_paper_rounding
///   algorithm2  theta, weights, reproduce_paper_rounding; without weights
///               they are derived as in algorithm1
///   frontier    epsilons (required), theta, mode, purchase_cap
Report run_report(const ModelStore& store, const std::string& handle, ReportMode mode,
                  const Json& parameters);

/// e2,Z1,Z2,tradeoff,x_0..x_n
std::string frontier_csv(std::span<const FrontierPoint> frontier, std::size_t asset_count);

}  // namespace greymop::planner
