#include "greymop/planner/http_api.hpp"

#include <httplib.h>

#include "greymop/planner/report.hpp"

namespace greymop::planner {

int http_status(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownHandle:
    case ErrorCode::UnknownSession:
      return 404;
    case ErrorCode::SessionClosed:
      return 409;
    case ErrorCode::ParseError:
    case ErrorCode::InvariantViolation:
    case ErrorCode::ParameterError:
    case ErrorCode::TOutOfRange:
    case ErrorCode::ThetaOutOfRange:
    case ErrorCode::RiskWeightOutOfRange:
    case ErrorCode::LengthMismatch:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::WeightDimensionMismatch:
    case ErrorCode::MalformedProblem:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::AllZeroPreferences:
    case ErrorCode::InfeasibleSample:
      return 400;
    default:
      return 422;
  }
}

namespace {

void send_json(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, std::string_view code,
                const std::string& message) {
  send_json(res, status, {{"error", code}, {"message", message}});
}

Json body_json(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  try {
    return Json::parse(req.body);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("request body: ") + e.what());
  }
}

/// Runs a handler and turns library errors into structured responses.
template <class F>
httplib::Server::Handler guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const Error& e) {
      send_error(res, http_status(e.code()), to_string(e.code()), e.what());
    } catch (const Json::exception& e) {
      send_error(res, 400, "ParseError", e.what());
    } catch (const std::exception& e) {
      send_error(res, 500, "InternalError", e.what());
    }
  };
}

}  // namespace

struct HttpApi::Impl {
  ModelStore& store;
  SessionManager& sessions;
  httplib::Server server;

  Impl(ModelStore& s, SessionManager& m) : store(s), sessions(m) { routes(); }

  void report_route(const char* pattern, ReportMode mode) {
    server.Post(pattern, guarded([this, mode](const httplib::Request& req, httplib::Response& res) {
      Report r = run_report(store, req.matches[1], mode, body_json(req));
      if (r.csv) r.document["csv"] = *r.csv;
      send_json(res, 200, r.document);
    }));
  }

  void routes() {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
    server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.status = 204;
    });

    server.Post("/models", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const ModelDocument doc = parse_model(req.body);
      const std::string handle = store.ingest(doc);
      send_json(res, 201, {{"handle", handle}, {"kind", to_string(doc.kind())}});
    }));
    server.Get("/models", guarded([this](const httplib::Request&, httplib::Response& res) {
      send_json(res, 200, {{"handles", store.handles()}});
    }));
    server.Get(R"(/models/([^/]+))",
               guarded([this](const httplib::Request& req, httplib::Response& res) {
                 send_json(res, 200, to_json(store.get(req.matches[1])));
               }));
    report_route(R"(/models/([^/]+)/solve)", ReportMode::positioned);
    report_route(R"(/models/([^/]+)/weights)", ReportMode::weights);
    report_route(R"(/models/([^/]+)/algorithm1)", ReportMode::algorithm1);
    report_route(R"(/models/([^/]+)/algorithm2)", ReportMode::algorithm2);
    report_route(R"(/portfolios/([^/]+)/frontier)", ReportMode::frontier);

    server.Post("/sessions", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const Json b = body_json(req);
      SessionConfig c;
      c.model_handle = b.at("model").get<std::string>();
      c.target_floor = b.value("target_floor", c.target_floor);
      c.theta_lambda = b.value("theta_lambda", c.theta_lambda);
      c.theta = b.value("theta", c.theta);
      c.purchase_cap = b.value("purchase_cap", false);
      if (b.contains("position")) c.position = position_from_json(b["position"], c.position);
      send_json(res, 201, to_json(sessions.start(c)));
    }));
    server.Post(R"(/sessions/([^/]+)/step)",
                guarded([this](const httplib::Request& req, httplib::Response& res) {
                  const Json b = body_json(req);
                  StepUpdate u;
                  if (b.contains("risk_weight") && !b["risk_weight"].is_null()) {
                    u.risk_weight = grey_from_json(b["risk_weight"], "/risk_weight");
                  }
                  if (b.contains("position") && !b["position"].is_null()) {
                    u.position = position_from_json(b["position"], {});
                  }
                  send_json(res, 200, to_json(sessions.step(req.matches[1], u)));
                }));
    server.Post(R"(/sessions/([^/]+)/abandon)",
                guarded([this](const httplib::Request& req, httplib::Response& res) {
                  send_json(res, 200, to_json(sessions.abandon(req.matches[1])));
                }));
    server.Get(R"(/sessions/([^/]+))",
               guarded([this](const httplib::Request& req, httplib::Response& res) {
                 send_json(res, 200, to_json(sessions.show(req.matches[1])));
               }));
  }
};

HttpApi::HttpApi(ModelStore& store, SessionManager& sessions)
    : impl_(std::make_unique<Impl>(store, sessions)) {}

HttpApi::~HttpApi() { stop(); }

int HttpApi::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpApi::run() { return impl_->server.listen_after_bind(); }

void HttpApi::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

void HttpApi::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace greymop::planner
