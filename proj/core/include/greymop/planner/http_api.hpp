#pragma once

#include <memory>
#include <string>

#include "greymop/error.hpp"
#include "greymop/planner/model_store.hpp"
#include "greymop/planner/session.hpp"

namespace greymop::planner {

/// HTTP status used for an error code in API responses.
int http_status(ErrorCode code) noexcept;

/// JSON-over-HTTP facade:
///   POST /models                     ingest, 201 {"handle", "kind"}
///   GET  /models                     list handles
///   GET  /models/{id}                stored document
///   POST /models/{id}/solve          positioned solve
///   POST /models/{id}/weights        entropy weights
///   POST /models/{id}/algorithm1
///   POST /models/{id}/algorithm2
///   POST /portfolios/{id}/frontier   report with a "csv" field
///   POST /sessions                   start
///   POST /sessions/{id}/step         {"risk_weight": [l, u], "position": {...}}
///   POST /sessions/{id}/abandon
///   GET  /sessions/{id}
/// Errors come back as {"error": <code>, "message": <text>}.
class HttpApi {
 public:
  HttpApi(ModelStore& store, SessionManager& sessions);
  ~HttpApi();
  HttpApi(const HttpApi&) = delete;
  HttpApi& operator=(const HttpApi&) = delete;

  /// Binds without serving; port 0 picks a free port. Returns the bound port
  /// or -1 on failure.
  int bind(const std::string& host, int port);
  /// Serves until stop(). Returns false if the server failed.
  bool run();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace greymop::planner
