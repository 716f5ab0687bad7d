// greymop: command line front end for the planner.

#include <CLI11.hpp>

#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "greymop/error.hpp"
#include "greymop/planner/http_api.hpp"
#include "greymop/planner/model_store.hpp"
#include "greymop/planner/report.hpp"
#include "greymop/planner/session.hpp"

namespace fs = std::filesystem;
using namespace greymop;
using namespace greymop::planner;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParameterError, "cannot read " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Common {
  std::string store_dir;
  std::string output;
};

ModelStore open_store(const Common& c) {
  if (c.store_dir.empty()) return ModelStore();
  return ModelStore(fs::path(c.store_dir));
}

/// A model argument is a document path or, failing that, a stored handle.
std::string resolve_model(ModelStore& store, const std::string& arg) {
  if (fs::is_regular_file(arg)) return store.ingest(slurp(arg));
  return arg;
}

void emit(const Common& c, const Json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (c.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream(c.output) << text;
  }
}

Json points_from_file(const std::string& path) {
  const Json j = Json::parse(slurp(path));
  // either a bare list of points or {"points": [...]}
  return j.is_object() && j.contains("points") ? j["points"] : j;
}

struct PositionFlags {
  std::optional<double> theta, rho, beta, delta;

  void add(CLI::App* app) {
    app->add_option("--theta", theta, "Whitening position for every grey entry");
    app->add_option("--rho", rho, "Price position");
    app->add_option("--beta", beta, "Resource position");
    app->add_option("--delta", delta, "Consumption position");
  }
  void into(Json& p) const {
    if (theta) p["theta"] = *theta;
    if (rho) p["rho"] = *rho;
    if (beta) p["beta"] = *beta;
    if (delta) p["delta"] = *delta;
  }
  bool any() const { return theta || rho || beta || delta; }
  Position position(const Position& base) const {
    Json p = Json::object();
    into(p);
    return position_from_json(p, base);
  }
};

HttpApi* g_server = nullptr;

extern "C" void on_signal(int) {
  if (g_server) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grey multi-objective planning toolkit"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--store", common.store_dir, "Storage directory for models and sessions")
      ->envname("GREYMOP_STORE");
  app.add_option("-o,--output", common.output, "Write the JSON result to a file");

  std::string model;
  std::string points_file;
  std::size_t samples = 0;
  std::optional<std::uint64_t> seed;
  std::vector<double> preferences, weights, epsilons, risk_weight;
  bool coarse_rounding = false;
  std::optional<double> mu0, theta_lambda, theta_eval;
  std::string mode;
  bool purchase_cap = false;
  std::string csv_file;
  PositionFlags pos;

  auto* ingest = app.add_subcommand("ingest", "Validate and store a model document");
  ingest->add_option("model", model, "Model document")->required()->check(CLI::ExistingFile);

  auto* solve = app.add_subcommand("solve-positioned", "Solve a positioned program");
  solve->add_option("model", model, "Model document or handle")->required();
  pos.add(solve);
  solve->add_option("--mu0", mu0, "Also assess the pleased degree against this floor");
  solve->add_option("--risk-weight", risk_weight, "Portfolio risk weight lower,upper")
      ->delimiter(',')
      ->expected(2);
  solve->add_option("--theta-lambda", theta_lambda, "Whitening position of the risk weight");
  solve->add_option("--mode", mode, "Fee model for portfolios")
      ->check(CLI::IsMember({"proportional", "exact"}));
  solve->add_flag("--purchase-cap", purchase_cap, "Read purchase bounds as caps as well");

  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("model", model, "Model document or handle")->required();
    sub->add_option("--theta", pos.theta, "Whitening position");
    sub->add_option("--points", points_file, "JSON file with sample points")
        ->check(CLI::ExistingFile);
    sub->add_option("--samples", samples, "Number of generated sample points");
    sub->add_option("--seed", seed, "Seed for generated sample points");
    sub->add_option("--preferences", preferences, "Preference multipliers")->delimiter(',');
  };
  auto* weights_cmd = app.add_subcommand("weights", "Entropy weights of the objectives");
  add_sampling(weights_cmd);
  auto* alg1 = app.add_subcommand("algorithm1", "Entropy-weighted scalarization and solve");
  add_sampling(alg1);
  alg1->add_flag("--reproduce-paper-rounding", coarse_rounding,
                 "Round weights to one decimal before combining");
  auto* alg2 = app.add_subcommand("algorithm2", "Max-min whitening-weight solve");
  add_sampling(alg2);
  alg2->add_option("--weights", weights, "Objective weights (default: entropy weights)")
      ->delimiter(',');
  alg2->add_flag("--reproduce-paper-rounding", coarse_rounding,
                 "Round weights and max-min row coefficients like the worked example");

  auto* frontier = app.add_subcommand("frontier", "Epsilon-constraint frontier of a portfolio");
  frontier->add_option("model", model, "Portfolio document or handle")->required();
  frontier->add_option("--epsilons", epsilons, "Risk bounds e2, ascending")
      ->delimiter(',')
      ->required();
  frontier->add_option("--theta", pos.theta, "Whitening position");
  frontier->add_option("--mode", mode, "Fee model")->check(CLI::IsMember({"proportional", "exact"}));
  frontier->add_flag("--purchase-cap", purchase_cap, "Read purchase bounds as caps as well");
  frontier->add_option("--csv", csv_file, "Write the frontier table to this CSV file");

  auto* session = app.add_subcommand("session", "Interactive pleased-degree sessions");
  session->require_subcommand(1);
  std::string session_id;
  auto* s_start = session->add_subcommand("start", "Open a session on a model");
  s_start->add_option("model", model, "Model document or handle")->required();
  s_start->add_option("--mu0", mu0, "Target floor of the pleased degree");
  s_start->add_option("--theta-lambda", theta_lambda, "Whitening position of the risk weight");
  s_start->add_option("--report-theta", theta_eval, "Whitening used to report profit and risk");
  s_start->add_option("--rho", pos.rho, "Price position");
  s_start->add_option("--beta", pos.beta, "Resource position");
  s_start->add_option("--delta", pos.delta, "Consumption position");
  s_start->add_flag("--purchase-cap", purchase_cap, "Read purchase bounds as caps as well");
  auto* s_step = session->add_subcommand("step", "Assess with a new risk weight or positions");
  s_step->add_option("id", session_id, "Session id")->required();
  s_step->add_option("--risk-weight", risk_weight, "Risk weight lower,upper")
      ->delimiter(',')
      ->expected(2);
  pos.add(s_step);
  auto* s_show = session->add_subcommand("show", "Print a session");
  s_show->add_option("id", session_id, "Session id")->required();
  auto* s_abandon = session->add_subcommand("abandon", "Close a session without a decision");
  s_abandon->add_option("id", session_id, "Session id")->required();

  auto* serve = app.add_subcommand("serve", "Serve the JSON API over HTTP");
  std::string listen = "127.0.0.1:8080";
  serve->add_option("--listen", listen, "host:port")->envname("GREYMOP_LISTEN");

  CLI11_PARSE(app, argc, argv);

  try {
    ModelStore store = open_store(common);

    if (ingest->parsed()) {
      const std::string h = store.ingest(slurp(model));
      emit(common, {{"handle", h}, {"kind", to_string(store.get(h).kind())}});
      return 0;
    }

    if (solve->parsed() || weights_cmd->parsed() || alg1->parsed() || alg2->parsed() ||
        frontier->parsed()) {
      const std::string handle = resolve_model(store, model);
      Json p = Json::object();
      pos.into(p);
      if (!points_file.empty()) p["points"] = points_from_file(points_file);
      if (samples) p["sample_count"] = samples;
      if (seed) p["seed"] = *seed;
      if (!preferences.empty()) p["preferences"] = preferences;
      if (!weights.empty()) p["weights"] = weights;
      if (coarse_rounding) p["reproduce_paper_rounding"] = true;
      if (mu0) p["mu0"] = *mu0;
      if (!risk_weight.empty()) p["risk_weight"] = risk_weight;
      if (theta_lambda) p["theta_lambda"] = *theta_lambda;
      if (!mode.empty()) p["mode"] = mode;
      if (purchase_cap) p["purchase_cap"] = true;
      if (!epsilons.empty()) p["epsilons"] = epsilons;

      ReportMode m = ReportMode::positioned;
      if (weights_cmd->parsed()) m = ReportMode::weights;
      if (alg1->parsed()) m = ReportMode::algorithm1;
      if (alg2->parsed()) m = ReportMode::algorithm2;
      if (frontier->parsed()) m = ReportMode::frontier;
      const Report r = run_report(store, handle, m, p);
      if (r.csv && !csv_file.empty()) std::ofstream(csv_file) << *r.csv;
      emit(common, r.document);
      return 0;
    }

    if (session->parsed()) {
      if (common.store_dir.empty()) {
        throw Error(ErrorCode::ParameterError,
                    "session commands need --store or GREYMOP_STORE to keep the journal");
      }
      SessionManager sessions(store, fs::path(common.store_dir));
      SessionState state;
      if (s_start->parsed()) {
        SessionConfig c;
        c.model_handle = resolve_model(store, model);
        if (mu0) c.target_floor = *mu0;
        if (theta_lambda) c.theta_lambda = *theta_lambda;
        if (theta_eval) c.theta = *theta_eval;
        c.position = pos.position(c.position);
        c.purchase_cap = purchase_cap;
        state = sessions.start(c);
      } else if (s_step->parsed()) {
        StepUpdate u;
        if (!risk_weight.empty()) u.risk_weight = GreyNumber(risk_weight[0], risk_weight[1]);
        if (pos.any()) u.position = pos.position(sessions.show(session_id).position);
        state = sessions.step(session_id, u);
      } else if (s_abandon->parsed()) {
        state = sessions.abandon(session_id);
      } else {
        state = sessions.show(session_id);
      }
      emit(common, to_json(state));
      return 0;
    }

    if (serve->parsed()) {
      const auto colon = listen.rfind(':');
      if (colon == std::string::npos) {
        throw Error(ErrorCode::ParameterError, "--listen expects host:port");
      }
      const std::string host = listen.substr(0, colon);
      const int port = std::stoi(listen.substr(colon + 1));
      std::optional<fs::path> dir;
      if (!common.store_dir.empty()) dir = fs::path(common.store_dir);
      SessionManager sessions(store, dir);
      HttpApi api(store, sessions);
      const int bound = api.bind(host, port);
      if (bound < 0) {
        std::cerr << "greymop: cannot listen on " << listen << "\n";
        return 1;
      }
      std::cerr << "greymop: serving on " << host << ":" << bound << "\n";
      g_server = &api;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      api.run();
      g_server = nullptr;
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "greymop: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "greymop: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
