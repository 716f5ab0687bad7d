#include <doctest.h>

#include <thread>

#include "expect_error.hpp"
#include "fixtures.hpp"
#include "greymop/planner/documents.hpp"
#include "greymop/planner/model_store.hpp"
#include "greymop/planner/report.hpp"
#include "greymop/planner/session.hpp"
#include "temp_dir.hpp"

using namespace greymop;
using namespace greymop::planner;

namespace {

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("documents") {

TEST_CASE("model documents parse into the library types") {
  const ModelDocument gmop = parse_model(read_file(data_file("two_objective.json")));
  REQUIRE(gmop.kind() == ModelKind::gmop);
  CHECK(std::get<GmopModel>(gmop.model) == fixtures::two_objective_model());
  CHECK(*gmop.sample_points == fixtures::table_points());

  const ModelDocument prog = parse_model(read_file(data_file("combined_program.json")));
  CHECK(std::get<GreyLinearProgram>(prog.model) == fixtures::combined_program());

  const ModelDocument port = parse_model(read_file(data_file("portfolio.json")));
  CHECK(std::get<PortfolioSpec>(port.model) == fixtures::sample_portfolio());
}

TEST_CASE("export and re-import is lossless") {
  for (const char* name : {"two_objective.json", "combined_program.json", "portfolio.json"}) {
    const ModelDocument a = parse_model(read_file(data_file(name)));
    const ModelDocument b = parse_model(to_json(a).dump());
    CHECK(a == b);
    CHECK(canonical_text(a) == canonical_text(b));
  }
  SUBCASE("awkward doubles survive") {
    GreyLinearProgram g = fixtures::combined_program();
    g.price[0] = GreyNumber(0.1 + 0.2, 1.0 / 3.0);
    ModelDocument d{g, std::nullopt};
    CHECK(parse_model(to_json(d).dump()) == d);
  }
}

TEST_CASE("diagnostics") {
  CHECK(code_of([] { parse_model(read_file(data_file("inverted_interval.json"))); }) ==
        ErrorCode::InvariantViolation);
  CHECK(message_of([] { parse_model(read_file(data_file("inverted_interval.json"))); })
            .find("/price/0") != std::string::npos);

  const std::string broken = "{\n  \"kind\": \"program\",\n  \"price\": [[1, 2],\n}";
  CHECK(code_of([&] { parse_model(broken); }) == ErrorCode::ParseError);
  CHECK(message_of([&] { parse_model(broken); }).find("line 4") != std::string::npos);

  const std::string missing = R"({"kind": "portfolio", "total_funds": 10, "assets": []})";
  CHECK(code_of([&] { parse_model(missing); }) == ErrorCode::ParseError);
  CHECK(message_of([&] { parse_model(missing); }).find("/bank_rate") != std::string::npos);

  const std::string bad_relation =
      R"({"kind":"program","sense":"max","price":[[1,1]],"consumption":[[[1,1]]],)"
      R"("resources":[[1,1]],"relations":["<>"]})";
  CHECK(message_of([&] { parse_model(bad_relation); }).find("/relations/0") != std::string::npos);

  CHECK(code_of([] { parse_model(R"({"kind": "recipe"})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_model("[1, 2]"); }) == ErrorCode::ParseError);
}

TEST_CASE("output numbers carry twelve significant digits") {
  CHECK(output_number(34.2 / 7) == 4.88571428571);
  CHECK(output_number(0.1 + 0.2) == 0.3);
  CHECK(output_number(0) == 0);
}

}  // TEST_SUITE

TEST_SUITE("model_store") {

TEST_CASE("handles are content addressed and idempotent") {
  ModelStore store;
  const std::string text = read_file(data_file("two_objective.json"));
  const std::string h1 = store.ingest(text);
  const std::string h2 = store.ingest(text);
  CHECK(h1 == h2);
  CHECK(h1.rfind("gmop-", 0) == 0);
  CHECK(h1.size() == 5 + 16);
  // whitespace does not matter, content does
  CHECK(store.ingest(to_json(parse_model(text)).dump(4)) == h1);
  const std::string other = store.ingest(read_file(data_file("portfolio.json")));
  CHECK(other != h1);
  CHECK(store.handles().size() == 2);
  CHECK(code_of([&] { store.get("gmop-0000000000000000"); }) == ErrorCode::UnknownHandle);
  CHECK(code_of([&] { store.get("../../etc/passwd"); }) == ErrorCode::UnknownHandle);
}

TEST_CASE("fnv-1a reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("stored models survive a restart") {
  TempDir dir;
  std::string handle;
  {
    ModelStore store(dir.path());
    handle = store.ingest(read_file(data_file("portfolio.json")));
  }
  ModelStore again(dir.path());
  CHECK(again.contains(handle));
  CHECK(std::get<PortfolioSpec>(again.get(handle).model) == fixtures::sample_portfolio());
}

}  // TEST_SUITE

TEST_SUITE("session") {

TEST_CASE("stepping toward a pleased assessment") {
  ModelStore store;
  SessionManager sessions(store);
  SessionConfig c;
  c.model_handle = store.ingest(read_file(data_file("combined_program.json")));
  c.target_floor = 0.5;
  SessionState s = sessions.start(c);
  CHECK(s.status == SessionStatus::awaiting_lambda);

  SUBCASE("program sessions reject a risk weight") {
    CHECK(code_of([&] { sessions.step(s.session_id, {GreyNumber(0, 0.2), std::nullopt}); }) ==
          ErrorCode::ParameterError);
  }
  SUBCASE("pleased then closed") {
    s = sessions.step(s.session_id, {});
    REQUIRE(s.history.size() == 1);
    CHECK(s.history[0].assessment.degree == doctest::Approx(0.5447).epsilon(1e-4));
    CHECK(s.status == SessionStatus::pleased);
    CHECK(code_of([&] { sessions.step(s.session_id, {}); }) == ErrorCode::SessionClosed);
  }
  SUBCASE("below target, then new positions") {
    SessionConfig strict = c;
    strict.target_floor = 0.6;
    SessionState t = sessions.start(strict);
    t = sessions.step(t.session_id, {});
    CHECK(t.status == SessionStatus::awaiting_lambda);
    t = sessions.step(t.session_id, {std::nullopt, Position{1, 1, 0}});
    CHECK(t.history.size() == 2);
    CHECK(t.history[1].assessment.positioned_value == doctest::Approx(28));
    CHECK(t.status == SessionStatus::pleased);
  }
  CHECK(code_of([&] { sessions.show("s-nope"); }) == ErrorCode::UnknownSession);
}

TEST_CASE("portfolio sessions") {
  ModelStore store;
  SessionManager sessions(store);
  SessionConfig c;
  c.model_handle = store.ingest(read_file(data_file("portfolio.json")));
  c.target_floor = 0.99;
  SessionState s = sessions.start(c);
  CHECK(code_of([&] { sessions.step(s.session_id, {}); }) == ErrorCode::ParameterError);

  s = sessions.step(s.session_id, {GreyNumber(0.1, 0.3), std::nullopt});
  REQUIRE(s.history.size() == 1);
  const SessionRecord& r = s.history[0];
  CHECK(r.allocation.size() == 5);
  CHECK((r.assessment.degree >= 0 && r.assessment.degree <= 1));
  CHECK(s.status == SessionStatus::awaiting_lambda);

  // identical steps give identical records
  s = sessions.step(s.session_id, {GreyNumber(0.1, 0.3), std::nullopt});
  CHECK(s.history[1].assessment.degree == s.history[0].assessment.degree);
  CHECK(s.history[1].allocation == s.history[0].allocation);

  s = sessions.abandon(s.session_id);
  CHECK(s.status == SessionStatus::abandoned);
  CHECK(code_of([&] { sessions.step(s.session_id, {GreyNumber(0.1, 0.3), std::nullopt}); }) ==
        ErrorCode::SessionClosed);
}

TEST_CASE("degenerate assessments carry an advisory") {
  GreyLinearProgram g;
  g.price = {GreyNumber(-2, -1)};
  g.consumption = {{GreyNumber(1, 1)}};
  g.resources = {GreyNumber(1, 1)};
  g.relations = {Relation::less_equal};
  ModelStore store;
  SessionManager sessions(store);
  SessionConfig c;
  c.model_handle = store.ingest(ModelDocument{g, std::nullopt});
  const SessionState s = sessions.start(c);
  CHECK(code_of([&] { sessions.step(s.session_id, {}); }) == ErrorCode::DegenerateAssessment);
  CHECK(message_of([&] { sessions.step(s.session_id, {}); }).find("advisory") != std::string::npos);
  CHECK(sessions.show(s.session_id).history.empty());
}

TEST_CASE("journals replay after a restart") {
  TempDir dir;
  std::string id;
  SessionState before;
  {
    ModelStore store(dir.path());
    SessionManager sessions(store, dir.path());
    SessionConfig c;
    c.model_handle = store.ingest(read_file(data_file("portfolio.json")));
    c.target_floor = 0.999;
    id = sessions.start(c).session_id;
    for (double hi : {0.2, 0.4, 0.6}) sessions.step(id, {GreyNumber(0.0, hi), std::nullopt});
    before = sessions.step(id, {std::nullopt, Position{0.3, 0.7, 0.4}});
  }
  ModelStore store(dir.path());
  SessionManager sessions(store, dir.path());
  const SessionState after = sessions.show(id);
  REQUIRE(after.history.size() == before.history.size());
  for (std::size_t k = 0; k < after.history.size(); ++k) {
    CHECK(after.history[k].assessment.degree == before.history[k].assessment.degree);
    CHECK(after.history[k].allocation == before.history[k].allocation);
  }
  CHECK(after.position == before.position);
  CHECK(to_json(after) == to_json(before));
}

TEST_CASE("steps on one session are serialized") {
  ModelStore store;
  SessionManager sessions(store);
  SessionConfig c;
  c.model_handle = store.ingest(read_file(data_file("portfolio.json")));
  c.target_floor = 0.999;
  const std::string id = sessions.start(c).session_id;
  std::vector<std::thread> workers;
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&] {
      for (int k = 0; k < 5; ++k) sessions.step(id, {GreyNumber(0.2, 0.4), std::nullopt});
    });
  }
  for (auto& w : workers) w.join();
  CHECK(sessions.show(id).history.size() == 40);
}

}  // TEST_SUITE

TEST_SUITE("report") {

TEST_CASE("algorithm reports on the two-objective model") {
  ModelStore store;
  const std::string h = store.ingest(read_file(data_file("two_objective.json")));

  const Report a1 = run_report(store, h, ReportMode::algorithm1, {{"theta", 0.5}});
  const Json& r1 = a1.document["result"];
  CHECK(r1["solution"]["point"][0].get<double>() == doctest::Approx(6));
  CHECK(r1["objective_values"][0]["value"].get<double>() == doctest::Approx(6));
  CHECK(r1["objective_values"][1]["value"].get<double>() == doctest::Approx(18));
  CHECK(a1.document["parameters"]["theta"] == 0.5);
  CHECK(a1.document.contains("elapsed_ms"));
  CHECK_FALSE(a1.csv);

  const Report a2 =
      run_report(store, h, ReportMode::algorithm2, {{"reproduce_paper_rounding", true}});
  const Json& r2 = a2.document["result"];
  CHECK(r2["satisfaction"].get<double>() == doctest::Approx(1));
  CHECK(r2["point"][0].get<double>() == doctest::Approx(34.2 / 7).epsilon(1e-11));
  CHECK(r2["point"][1].get<double>() == doctest::Approx(11.6 / 7).epsilon(1e-11));
  CHECK(r2["weights"][0].get<double>() == doctest::Approx(0.6));

  const Report w = run_report(store, h, ReportMode::weights, Json::object());
  CHECK(w.document["result"]["weights"][0].get<double>() ==
        doctest::Approx(0.6135599853540431).epsilon(1e-11));

  CHECK(code_of([&] { run_report(store, h, ReportMode::frontier, {}); }) ==
        ErrorCode::ParameterError);
  CHECK(code_of([&] { run_report(store, "gmop-ffffffffffffffff", ReportMode::algorithm1, {}); }) ==
        ErrorCode::UnknownHandle);
}

TEST_CASE("positioned reports") {
  ModelStore store;
  const std::string h = store.ingest(read_file(data_file("combined_program.json")));
  const Report r = run_report(store, h, ReportMode::positioned, {{"theta", 0.5}, {"mu0", 0.5}});
  CHECK(r.document["result"]["solution"]["value"].get<double>() == doctest::Approx(10.8));
  CHECK(r.document["result"]["assessment"]["pleased"] == true);

  const Report ideal =
      run_report(store, h, ReportMode::positioned, {{"rho", 1}, {"beta", 1}, {"delta", 0}});
  CHECK(ideal.document["result"]["solution"]["value"].get<double>() == doctest::Approx(28));
  const Report per_entry = run_report(
      store, h, ReportMode::positioned,
      {{"rho", {1, 1}}, {"beta", {1, 1}}, {"delta", {{0, 0}, {0, 0}}}});
  CHECK(per_entry.document["result"]["solution"]["value"].get<double>() == doctest::Approx(28));
  CHECK(code_of([&] { run_report(store, h, ReportMode::positioned, {{"rho", {1}}}); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("frontier report and csv") {
  ModelStore store;
  const std::string h = store.ingest(read_file(data_file("portfolio.json")));
  const Report r =
      run_report(store, h, ReportMode::frontier, {{"epsilons", {0, 5, 10, 20, 40}}});
  REQUIRE(r.csv);
  CHECK(r.csv->rfind("e2,Z1,Z2,tradeoff,x_0,x_1,x_2,x_3,x_4\n", 0) == 0);
  const auto lines = std::count(r.csv->begin(), r.csv->end(), '\n');
  CHECK(lines == 1 + static_cast<long>(r.document["result"]["frontier"].size()));
  CHECK(r.document["result"].contains("compromise"));
  CHECK(code_of([&] {
          run_report(store, h, ReportMode::frontier, {{"epsilons", Json::array()}});
        }) == ErrorCode::ParameterError);
}

TEST_CASE("reports are pure in their inputs") {
  ModelStore store;
  const std::string h = store.ingest(read_file(data_file("two_objective.json")));
  Report a = run_report(store, h, ReportMode::algorithm2, {{"sample_count", 3}});
  Report b = run_report(store, h, ReportMode::algorithm2, {{"sample_count", 3}});
  a.document.erase("elapsed_ms");
  b.document.erase("elapsed_ms");
  CHECK(a.document == b.document);
}

}  // TEST_SUITE
