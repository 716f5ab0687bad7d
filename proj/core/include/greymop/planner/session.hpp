#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "greymop/planner/documents.hpp"
#include "greymop/planner/model_store.hpp"

namespace greymop::planner {

enum class SessionStatus { awaiting_lambda, pleased, abandoned };

std::string_view to_string(SessionStatus status) noexcept;

/// Uniform whitening positions applied to every entry of the session program.
struct Position {
  double rho = 0.5;
  double beta = 0.5;
  double delta = 0.5;

  bool operator==(const Position&) const = default;
};

struct SessionConfig {
  std::string model_handle;
  double target_floor = 0.8;  ///< mu0
  double theta_lambda = 0.5;  ///< whitening of the risk weight
  double theta = 0.5;         ///< whitening used to report profit and risk
  Position position;
  bool purchase_cap = false;
};

struct StepUpdate {
  std::optional<GreyNumber> risk_weight;  ///< required for portfolios on the first step
  std::optional<Position> position;
};

struct SessionRecord {
  std::optional<GreyNumber> risk_weight;
  Position position;
  PleasedAssessment assessment;
  std::vector<double> allocation;  ///< x_0..x_n for portfolios, x for programs
  double risk_level = 0.0;
  double profit = 0.0;
  double risk = 0.0;
};

struct SessionState {
  std::string session_id;
  SessionConfig config;
  ModelDocument model;
  Position position;                       ///< current
  std::optional<GreyNumber> risk_weight;   ///< current
  std::vector<SessionRecord> history;
  SessionStatus status = SessionStatus::awaiting_lambda;
};

/// Throws Error(ParameterError) for GMOP models or bad settings.
SessionState start_session(std::string session_id, const SessionConfig& config,
                           ModelDocument model);

/// One pass of the interactive loop: scalarize with the current risk weight,
/// assess the positioned optimum, append to history. Pure.
/// Throws Error(SessionClosed) unless the session awaits a risk weight.
SessionState session_step(const SessionState& state, const StepUpdate& update);

SessionState abandon_session(const SessionState& state);

Json to_json(const SessionState& state);
Json to_json(const SessionRecord& record);
Position position_from_json(const Json& j, const Position& fallback);

/// Live sessions with exclusive per-session stepping. With a storage
/// directory every session is an append-only journal
/// <dir>/sessions/<id>.jsonl that is replayed on first access.
class SessionManager {
 public:
  SessionManager(const ModelStore& store,
                 std::optional<std::filesystem::path> directory = std::nullopt);

  SessionState start(const SessionConfig& config);
  /// Throws Error(UnknownSession).
  SessionState step(const std::string& session_id, const StepUpdate& update);
  SessionState show(const std::string& session_id);
  SessionState abandon(const std::string& session_id);

 private:
  struct Entry {
    std::mutex mutex;
    SessionState state;
  };

  std::shared_ptr<Entry> find(const std::string& session_id);
  std::shared_ptr<Entry> replay(const std::string& session_id);
  void append(const std::string& session_id, const Json& line) const;
  std::string fresh_id();

  const ModelStore& store_;
  std::optional<std::filesystem::path> directory_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
};

}  // namespace greymop::planner
