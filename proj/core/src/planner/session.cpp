#include "greymop/planner/session.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "greymop/error.hpp"

namespace greymop::planner {

namespace fs = std::filesystem;

std::string_view to_string(SessionStatus status) noexcept {
  switch (status) {
    case SessionStatus::awaiting_lambda: return "awaiting_lambda";
    case SessionStatus::pleased: return "pleased";
    case SessionStatus::abandoned: return "abandoned";
  }
  return "?";
}

namespace {

void check_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorCode::ParameterError, std::string(what) + " must lie in [0,1]");
  }
}

void check_position(const Position& p) {
  if (!(p.rho >= 0.0 && p.rho <= 1.0 && p.beta >= 0.0 && p.beta <= 1.0 && p.delta >= 0.0 &&
        p.delta <= 1.0)) {
    throw Error(ErrorCode::TOutOfRange, "rho, beta and delta must lie in [0,1]");
  }
}

constexpr const char* kAdvisory =
    " (advisory: the ideal, critical and positioned optima must all be positive; "
    "try other whitening positions, a different risk weight, or a lower target floor)";

}  // namespace

SessionState start_session(std::string session_id, const SessionConfig& config,
                           ModelDocument model) {
  if (model.kind() == ModelKind::gmop) {
    throw Error(ErrorCode::ParameterError,
                "sessions run on portfolio or program models, not multi-objective models");
  }
  check_unit(config.target_floor, "target floor");
  check_unit(config.theta_lambda, "theta_lambda");
  check_unit(config.theta, "theta");
  check_position(config.position);
  SessionState s;
  s.session_id = std::move(session_id);
  s.config = config;
  s.model = std::move(model);
  s.position = config.position;
  return s;
}

SessionState session_step(const SessionState& state, const StepUpdate& update) {
  if (state.status != SessionStatus::awaiting_lambda) {
    throw Error(ErrorCode::SessionClosed, "session " + state.session_id + " is " +
                                              std::string(to_string(state.status)));
  }
  SessionState next = state;
  if (update.position) {
    check_position(*update.position);
    next.position = *update.position;
  }
  if (update.risk_weight) next.risk_weight = update.risk_weight;

  SessionRecord record;
  record.position = next.position;
  try {
    if (const auto* spec = std::get_if<PortfolioSpec>(&next.model.model)) {
      if (!next.risk_weight) {
        throw Error(ErrorCode::ParameterError, "portfolio sessions need a risk weight");
      }
      record.risk_weight = next.risk_weight;
      const ScalarizedModel sm = scalarize(*spec, *next.risk_weight, next.config.theta_lambda,
                                           next.config.purchase_cap);
      const auto pc = PositionedCoefficients::uniform(sm.program, next.position.rho,
                                                      next.position.beta, next.position.delta);
      record.assessment = assess_pleased(sm.program, pc, next.config.target_floor);
      const PortfolioSolution sol =
          interpret_solution(*spec, sm, record.assessment.positioned, next.config.theta);
      record.allocation = sol.allocation;
      record.risk_level = sol.risk_level;
      record.profit = sol.profit;
      record.risk = sol.risk;
    } else {
      if (update.risk_weight) {
        throw Error(ErrorCode::ParameterError, "program sessions take no risk weight");
      }
      const auto& program = std::get<GreyLinearProgram>(next.model.model);
      const auto pc = PositionedCoefficients::uniform(program, next.position.rho,
                                                      next.position.beta, next.position.delta);
      record.assessment = assess_pleased(program, pc, next.config.target_floor);
      record.allocation = record.assessment.positioned.point;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateAssessment) throw;
    throw Error(ErrorCode::DegenerateAssessment, std::string(e.what()) + kAdvisory);
  }

  next.status = record.assessment.degree >= next.config.target_floor
                    ? SessionStatus::pleased
                    : SessionStatus::awaiting_lambda;
  next.history.push_back(std::move(record));
  return next;
}

SessionState abandon_session(const SessionState& state) {
  if (state.status != SessionStatus::awaiting_lambda) {
    throw Error(ErrorCode::SessionClosed, "session " + state.session_id + " is " +
                                              std::string(to_string(state.status)));
  }
  SessionState next = state;
  next.status = SessionStatus::abandoned;
  return next;
}

Position position_from_json(const Json& j, const Position& fallback) {
  Position p = fallback;
  if (j.is_null()) return p;
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "position must be an object");
  auto read = [&](const char* key, double& slot) {
    if (!j.contains(key)) return;
    if (!j[key].is_number()) {
      throw Error(ErrorCode::ParseError, std::string("position/") + key + " must be a number");
    }
    slot = j[key].get<double>();
  };
  if (j.contains("theta")) {
    read("theta", p.rho);
    p.beta = p.delta = p.rho;
  }
  read("rho", p.rho);
  read("beta", p.beta);
  read("delta", p.delta);
  return p;
}

namespace {

Json position_json(const Position& p) {
  return {{"rho", p.rho}, {"beta", p.beta}, {"delta", p.delta}};
}

}  // namespace

Json to_json(const SessionRecord& r) {
  Json j;
  j["risk_weight"] = r.risk_weight ? output_grey(*r.risk_weight) : Json();
  j["position"] = position_json(r.position);
  j["assessment"] = to_json(r.assessment);
  j["allocation"] = output_vector(r.allocation);
  j["risk_level"] = output_number(r.risk_level);
  j["profit"] = output_number(r.profit);
  j["risk"] = output_number(r.risk);
  return j;
}

Json to_json(const SessionState& s) {
  Json j;
  j["session_id"] = s.session_id;
  j["model"] = s.config.model_handle;
  j["kind"] = std::string(to_string(s.model.kind()));
  j["status"] = std::string(to_string(s.status));
  j["target_floor"] = s.config.target_floor;
  j["theta_lambda"] = s.config.theta_lambda;
  j["theta"] = s.config.theta;
  j["purchase_cap"] = s.config.purchase_cap;
  j["position"] = position_json(s.position);
  j["risk_weight"] = s.risk_weight ? output_grey(*s.risk_weight) : Json();
  j["history"] = Json::array();
  for (const auto& r : s.history) j["history"].push_back(to_json(r));
  return j;
}

SessionManager::SessionManager(const ModelStore& store, std::optional<fs::path> directory)
    : store_(store), directory_(std::move(directory)) {
  if (directory_) fs::create_directories(*directory_ / "sessions");
}

std::string SessionManager::fresh_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  for (;;) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "s-%016llx", static_cast<unsigned long long>(rng()));
    std::string id = buf;
    if (sessions_.contains(id)) continue;
    if (directory_ && fs::exists(*directory_ / "sessions" / (id + ".jsonl"))) continue;
    return id;
  }
}

void SessionManager::append(const std::string& session_id, const Json& line) const {
  if (!directory_) return;
  std::ofstream out(*directory_ / "sessions" / (session_id + ".jsonl"), std::ios::app);
  out << line.dump() << '\n';
  out.flush();
  if (!out) throw Error(ErrorCode::ParameterError, "cannot append to journal of " + session_id);
}

SessionState SessionManager::start(const SessionConfig& config) {
  ModelDocument model = store_.get(config.model_handle);
  std::lock_guard lock(mutex_);
  std::string id = fresh_id();
  auto entry = std::make_shared<Entry>();
  entry->state = start_session(id, config, std::move(model));
  append(id, {{"type", "start"},
              {"model", config.model_handle},
              {"target_floor", config.target_floor},
              {"theta_lambda", config.theta_lambda},
              {"theta", config.theta},
              {"purchase_cap", config.purchase_cap},
              {"position", position_json(config.position)}});
  sessions_.emplace(id, entry);
  return entry->state;
}

std::shared_ptr<SessionManager::Entry> SessionManager::replay(const std::string& session_id) {
  if (!directory_) return nullptr;
  for (char c : session_id) {
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-')) return nullptr;
  }
  const fs::path path = *directory_ / "sessions" / (session_id + ".jsonl");
  std::ifstream in(path);
  if (!in) return nullptr;

  auto entry = std::make_shared<Entry>();
  std::string line;
  bool started = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const Json j = Json::parse(line);
    const std::string type = j.at("type").get<std::string>();
    if (type == "start") {
      SessionConfig config;
      config.model_handle = j.at("model").get<std::string>();
      config.target_floor = j.at("target_floor").get<double>();
      config.theta_lambda = j.at("theta_lambda").get<double>();
      config.theta = j.value("theta", 0.5);
      config.purchase_cap = j.value("purchase_cap", false);
      config.position = position_from_json(j.at("position"), {});
      entry->state = start_session(session_id, config, store_.get(config.model_handle));
      started = true;
    } else if (started && type == "step") {
      StepUpdate update;
      if (j.contains("risk_weight") && !j["risk_weight"].is_null()) {
        update.risk_weight = grey_from_json(j["risk_weight"], "risk_weight");
      }
      if (j.contains("position") && !j["position"].is_null()) {
        update.position = position_from_json(j["position"], {});
      }
      entry->state = session_step(entry->state, update);
      const double logged = j.value("degree", entry->state.history.back().assessment.degree);
      if (logged != entry->state.history.back().assessment.degree) {
        throw Error(ErrorCode::InvariantViolation,
                    "journal replay of " + session_id + " diverged at step " +
                        std::to_string(entry->state.history.size()));
      }
    } else if (started && type == "abandon") {
      entry->state = abandon_session(entry->state);
    }
  }
  if (!started) return nullptr;
  return entry;
}

std::shared_ptr<SessionManager::Entry> SessionManager::find(const std::string& session_id) {
  std::lock_guard lock(mutex_);
  if (auto it = sessions_.find(session_id); it != sessions_.end()) return it->second;
  if (auto entry = replay(session_id)) {
    sessions_.emplace(session_id, entry);
    return entry;
  }
  throw Error(ErrorCode::UnknownSession, "unknown session '" + session_id + "'");
}

SessionState SessionManager::step(const std::string& session_id, const StepUpdate& update) {
  auto entry = find(session_id);
  std::lock_guard lock(entry->mutex);
  SessionState next = session_step(entry->state, update);
  Json line = {{"type", "step"}, {"degree", next.history.back().assessment.degree}};
  line["risk_weight"] = update.risk_weight ? grey_to_json(*update.risk_weight) : Json();
  line["position"] = update.position ? position_json(*update.position) : Json();
  append(session_id, line);
  entry->state = std::move(next);
  return entry->state;
}

SessionState SessionManager::show(const std::string& session_id) {
  auto entry = find(session_id);
  std::lock_guard lock(entry->mutex);
  return entry->state;
}

SessionState SessionManager::abandon(const std::string& session_id) {
  auto entry = find(session_id);
  std::lock_guard lock(entry->mutex);
  SessionState next = abandon_session(entry->state);
  append(session_id, {{"type", "abandon"}});
  entry->state = std::move(next);
  return entry->state;
}

}  // namespace greymop::planner
