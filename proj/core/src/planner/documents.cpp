#include "greymop/planner/documents.hpp"

#include <cstdio>
#include <cstdlib>

#include "greymop/error.hpp"

namespace greymop::planner {

namespace {

[[noreturn]] void field_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, "at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) field_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) field_error(where + "/" + key, "missing field");
  return *it;
}

double number_at(const Json& j, const std::string& where) {
  if (!j.is_number()) field_error(where, "expected a number");
  return j.get<double>();
}

std::vector<GreyNumber> grey_list(const Json& j, const std::string& where) {
  if (!j.is_array()) field_error(where, "expected an array of [lower, upper] pairs");
  std::vector<GreyNumber> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(grey_from_json(j[k], where + "/" + std::to_string(k)));
  }
  return out;
}

std::vector<double> number_list(const Json& j, const std::string& where) {
  if (!j.is_array()) field_error(where, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(number_at(j[k], where + "/" + std::to_string(k)));
  }
  return out;
}

Orientation orientation_from_string(std::string_view s, const std::string& where) {
  if (s == "benefit") return Orientation::benefit;
  if (s == "cost") return Orientation::cost;
  field_error(where, "orientation must be \"benefit\" or \"cost\"");
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) field_error(where, "expected a string");
  return j.get<std::string>();
}

GreyLinearProgram program_from_json(const Json& doc) {
  GreyLinearProgram g;
  g.sense = sense_from_string(string_at(require(doc, "sense", ""), "/sense"), "/sense");
  g.price = grey_list(require(doc, "price", ""), "/price");
  const Json& rows = require(doc, "consumption", "");
  if (!rows.is_array()) field_error("/consumption", "expected an array of rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    g.consumption.push_back(grey_list(rows[i], "/consumption/" + std::to_string(i)));
  }
  g.resources = grey_list(require(doc, "resources", ""), "/resources");
  const Json& rel = require(doc, "relations", "");
  if (!rel.is_array()) field_error("/relations", "expected an array");
  for (std::size_t i = 0; i < rel.size(); ++i) {
    const std::string where = "/relations/" + std::to_string(i);
    g.relations.push_back(relation_from_string(string_at(rel[i], where), where));
  }
  try {
    g.validate();
  } catch (const Error& e) {
    field_error("", e.what());
  }
  return g;
}

GmopModel gmop_from_json(const Json& doc) {
  GmopModel m;
  const Json& count = require(doc, "variable_count", "");
  if (!count.is_number_unsigned()) field_error("/variable_count", "expected a nonnegative integer");
  m.variable_count = count.get<std::size_t>();
  const Json& objs = require(doc, "objectives", "");
  if (!objs.is_array()) field_error("/objectives", "expected an array");
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const std::string where = "/objectives/" + std::to_string(i);
    const Json& o = objs[i];
    Objective obj;
    if (o.is_object() && o.contains("name")) obj.name = string_at(o["name"], where + "/name");
    obj.sense = sense_from_string(string_at(require(o, "sense", where), where + "/sense"),
                                  where + "/sense");
    if (o.contains("orientation")) {
      obj.orientation = orientation_from_string(
          string_at(o["orientation"], where + "/orientation"), where + "/orientation");
    }
    obj.coefficients = grey_list(require(o, "coefficients", where), where + "/coefficients");
    m.objectives.push_back(std::move(obj));
  }
  if (doc.contains("constraints")) {
    const Json& cons = doc["constraints"];
    if (!cons.is_array()) field_error("/constraints", "expected an array");
    for (std::size_t k = 0; k < cons.size(); ++k) {
      const std::string where = "/constraints/" + std::to_string(k);
      GreyConstraint c;
      c.coefficients = grey_list(require(cons[k], "coefficients", where), where + "/coefficients");
      c.relation = relation_from_string(
          string_at(require(cons[k], "relation", where), where + "/relation"), where + "/relation");
      c.rhs = grey_from_json(require(cons[k], "rhs", where), where + "/rhs");
      m.constraints.push_back(std::move(c));
    }
  }
  try {
    m.validate();
  } catch (const Error& e) {
    field_error("", e.what());
  }
  return m;
}

PortfolioSpec portfolio_from_json(const Json& doc) {
  PortfolioSpec p;
  p.total_funds = number_at(require(doc, "total_funds", ""), "/total_funds");
  p.bank_rate = grey_from_json(require(doc, "bank_rate", ""), "/bank_rate");
  const Json& assets = require(doc, "assets", "");
  if (!assets.is_array()) field_error("/assets", "expected an array");
  for (std::size_t k = 0; k < assets.size(); ++k) {
    const std::string where = "/assets/" + std::to_string(k);
    const Json& a = assets[k];
    Asset asset;
    if (a.is_object() && a.contains("name")) asset.name = string_at(a["name"], where + "/name");
    asset.profit_rate = grey_from_json(require(a, "profit_rate", where), where + "/profit_rate");
    asset.risk_rate = grey_from_json(require(a, "risk_rate", where), where + "/risk_rate");
    asset.transaction_rate =
        grey_from_json(require(a, "transaction_rate", where), where + "/transaction_rate");
    asset.purchase_floor =
        grey_from_json(require(a, "purchase_floor", where), where + "/purchase_floor");
    p.assets.push_back(std::move(asset));
  }
  p.validate();
  return p;
}

Json objective_to_json(const Objective& o) {
  Json j;
  j["name"] = o.name;
  j["sense"] = std::string(to_string(o.sense));
  j["orientation"] = o.orientation == Orientation::benefit ? "benefit" : "cost";
  j["coefficients"] = Json::array();
  for (const auto& g : o.coefficients) j["coefficients"].push_back(grey_to_json(g));
  return j;
}

}  // namespace

std::string_view to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::program: return "program";
    case ModelKind::gmop: return "gmop";
    case ModelKind::portfolio: return "portfolio";
  }
  return "?";
}

Relation relation_from_string(std::string_view text, const std::string& where) {
  if (text == "<=" || text == "le") return Relation::less_equal;
  if (text == ">=" || text == "ge") return Relation::greater_equal;
  if (text == "=" || text == "==" || text == "eq") return Relation::equal;
  field_error(where, "relation must be one of <=, >=, =");
}

Sense sense_from_string(std::string_view text, const std::string& where) {
  if (text == "maximize" || text == "max") return Sense::maximize;
  if (text == "minimize" || text == "min") return Sense::minimize;
  field_error(where, "sense must be \"maximize\" or \"minimize\"");
}

GreyNumber grey_from_json(const Json& j, const std::string& where) {
  if (j.is_number()) return GreyNumber::white(j.get<double>());
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    field_error(where, "expected [lower, upper]");
  }
  try {
    return GreyNumber(j[0].get<double>(), j[1].get<double>());
  } catch (const Error& e) {
    throw Error(e.code(), "at " + where + ": " + e.what());
  }
}

Json grey_to_json(const GreyNumber& g) { return Json::array({g.lower(), g.upper()}); }

ModelDocument model_from_json(const Json& doc) {
  if (!doc.is_object()) field_error("", "model document must be a JSON object");
  std::string kind;
  if (doc.contains("kind")) {
    kind = string_at(doc["kind"], "/kind");
  } else if (doc.contains("objectives")) {
    kind = "gmop";
  } else if (doc.contains("assets")) {
    kind = "portfolio";
  } else if (doc.contains("price")) {
    kind = "program";
  } else {
    field_error("/kind", "cannot tell the model kind; set \"kind\"");
  }

  ModelDocument out;
  if (kind == "program") {
    out.model = program_from_json(doc);
  } else if (kind == "gmop") {
    GmopModel m = gmop_from_json(doc);
    if (doc.contains("sample_points")) {
      const Json& pts = doc["sample_points"];
      if (!pts.is_array()) field_error("/sample_points", "expected an array of points");
      std::vector<Point> points;
      for (std::size_t t = 0; t < pts.size(); ++t) {
        points.push_back(number_list(pts[t], "/sample_points/" + std::to_string(t)));
        if (points.back().size() != m.variable_count) {
          field_error("/sample_points/" + std::to_string(t), "point dimension mismatch");
        }
      }
      out.sample_points = std::move(points);
    }
    out.model = std::move(m);
  } else if (kind == "portfolio") {
    out.model = portfolio_from_json(doc);
  } else {
    field_error("/kind", "unknown model kind \"" + kind + "\"");
  }
  return out;
}

ModelDocument parse_model(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                           std::to_string(col) + ": malformed JSON");
  }
  return model_from_json(doc);
}

Json to_json(const ModelDocument& doc) {
  Json j;
  j["kind"] = std::string(to_string(doc.kind()));
  if (const auto* g = std::get_if<GreyLinearProgram>(&doc.model)) {
    j["sense"] = std::string(to_string(g->sense));
    j["price"] = Json::array();
    for (const auto& c : g->price) j["price"].push_back(grey_to_json(c));
    j["consumption"] = Json::array();
    for (const auto& row : g->consumption) {
      Json r = Json::array();
      for (const auto& a : row) r.push_back(grey_to_json(a));
      j["consumption"].push_back(std::move(r));
    }
    j["resources"] = Json::array();
    for (const auto& b : g->resources) j["resources"].push_back(grey_to_json(b));
    j["relations"] = Json::array();
    for (auto rel : g->relations) j["relations"].push_back(std::string(to_string(rel)));
  } else if (const auto* m = std::get_if<GmopModel>(&doc.model)) {
    j["variable_count"] = m->variable_count;
    j["objectives"] = Json::array();
    for (const auto& o : m->objectives) j["objectives"].push_back(objective_to_json(o));
    j["constraints"] = Json::array();
    for (const auto& c : m->constraints) {
      Json row;
      row["coefficients"] = Json::array();
      for (const auto& a : c.coefficients) row["coefficients"].push_back(grey_to_json(a));
      row["relation"] = std::string(to_string(c.relation));
      row["rhs"] = grey_to_json(c.rhs);
      j["constraints"].push_back(std::move(row));
    }
    if (doc.sample_points) j["sample_points"] = *doc.sample_points;
  } else if (const auto* p = std::get_if<PortfolioSpec>(&doc.model)) {
    j["total_funds"] = p->total_funds;
    j["bank_rate"] = grey_to_json(p->bank_rate);
    j["assets"] = Json::array();
    for (const auto& a : p->assets) {
      Json aj;
      aj["name"] = a.name;
      aj["profit_rate"] = grey_to_json(a.profit_rate);
      aj["risk_rate"] = grey_to_json(a.risk_rate);
      aj["transaction_rate"] = grey_to_json(a.transaction_rate);
      aj["purchase_floor"] = grey_to_json(a.purchase_floor);
      j["assets"].push_back(std::move(aj));
    }
  }
  return j;
}

std::string canonical_text(const ModelDocument& doc) { return to_json(doc).dump(); }

double output_number(double v) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

Json output_vector(const std::vector<double>& v) {
  Json j = Json::array();
  for (double x : v) j.push_back(output_number(x));
  return j;
}

Json output_grey(const GreyNumber& g) {
  return Json::array({output_number(g.lower()), output_number(g.upper())});
}

Json to_json(const LpSolution& s) {
  Json j;
  j["status"] = std::string(to_string(s.status));
  if (s.optimal()) {
    j["point"] = output_vector(s.point);
    j["value"] = output_number(s.value);
    j["tight_constraints"] = s.tight_constraints;
  }
  return j;
}

Json to_json(const PleasedAssessment& a) {
  Json j;
  j["ideal_value"] = output_number(a.ideal_value);
  j["critical_value"] = output_number(a.critical_value);
  j["positioned_value"] = output_number(a.positioned_value);
  j["degree"] = output_number(a.degree);
  j["target_floor"] = output_number(a.target_floor);
  j["pleased"] = a.pleased;
  return j;
}

}  // namespace greymop::planner
