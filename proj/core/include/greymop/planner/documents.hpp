#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "greymop/gmop.hpp"
#include "greymop/lp_solver.hpp"
#include "greymop/portfolio.hpp"
#include "greymop/positioned_lp.hpp"

namespace greymop::planner {

using Json = nlohmann::json;

enum class ModelKind { program, gmop, portfolio };

std::string_view to_string(ModelKind kind) noexcept;

/// One ingested model. GMOP documents may embed sample points.
struct ModelDocument {
  std::variant<GreyLinearProgram, GmopModel, PortfolioSpec> model;
  std::optional<std::vector<Point>> sample_points;

  ModelKind kind() const noexcept { return static_cast<ModelKind>(model.index()); }
  bool operator==(const ModelDocument&) const = default;
};

/// Parses a JSON model document. Syntax errors report line and column; field
/// errors report a JSON pointer. Both raise Error(ParseError); malformed
/// intervals raise Error(InvariantViolation).
ModelDocument parse_model(std::string_view text);
ModelDocument model_from_json(const Json& doc);

/// Lossless JSON form (doubles round-trip exactly).
Json to_json(const ModelDocument& doc);

/// Compact canonical text used for content addressing.
std::string canonical_text(const ModelDocument& doc);

GreyNumber grey_from_json(const Json& j, const std::string& where);
Json grey_to_json(const GreyNumber& g);

/// Rounds to 12 significant digits for output documents.
double output_number(double v);
Json output_vector(const std::vector<double>& v);
Json output_grey(const GreyNumber& g);

Json to_json(const LpSolution& s);
Json to_json(const PleasedAssessment& a);

Relation relation_from_string(std::string_view text, const std::string& where);
Sense sense_from_string(std::string_view text, const std::string& where);

}  // namespace greymop::planner
