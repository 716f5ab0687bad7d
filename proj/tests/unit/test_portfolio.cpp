#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "expect_error.hpp"
#include "fixtures.hpp"
#include "greymop/portfolio.hpp"
#include "oracle.hpp"

using namespace greymop;

namespace {

PortfolioSpec one_asset() {
  PortfolioSpec p;
  p.total_funds = 10000;
  p.bank_rate = GreyNumber::white(0.02);
  p.assets = {{"S1", GreyNumber::white(0.10), GreyNumber::white(0.05), GreyNumber::white(0.01),
               GreyNumber::white(100)}};
  return p;
}

double max_risk_rate(const PortfolioSpec& spec, const std::vector<double>& x, double theta) {
  double r = 0;
  for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, whiten(spec.risk_rate(i), theta) * x[i]);
  return r;
}

}  // namespace

TEST_SUITE("portfolio") {

TEST_CASE("transaction cost") {
  const PortfolioSpec p = one_asset();
  CHECK(transaction_cost(p, 1, 0.0, 0.5) == 0.0);
  CHECK(transaction_cost(p, 0, 0.7, 0.5) == 0.0);
  CHECK(transaction_cost(p, 1, 0.5, 0.5) == doctest::Approx(50));
  CHECK(transaction_cost(p, 1, 0.001, 0.5) == doctest::Approx(1));  // floor of 100
  CHECK(code_of([&] { transaction_cost(p, 2, 0.1, 0.5); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("spec validation") {
  PortfolioSpec p = one_asset();
  p.total_funds = 0;
  CHECK(code_of([&] { p.validate(); }) == ErrorCode::InvariantViolation);
  p = one_asset();
  p.assets[0].risk_rate = GreyNumber(-0.1, 0.1);
  CHECK(code_of([&] { p.validate(); }) == ErrorCode::InvariantViolation);
  CHECK(one_asset().transaction_rate(0) == GreyNumber(0, 0));
  CHECK(one_asset().risk_rate(0) == GreyNumber(0, 0));
}

TEST_CASE("bi-objective model") {
  const PortfolioSpec p = one_asset();
  const BiObjectiveModel b = build_biobjective(p);
  const std::vector<double> zero = {0, 0};
  CHECK(b.profit(zero, 0.5) == -10000);
  CHECK(b.risk(zero, 0.5) == 0);
  CHECK(b.linear.objectives[0].coefficients[1] == GreyNumber::white(1.10 * 10000));
  const std::vector<double> bank = {1, 0};
  CHECK(b.profit(bank, 0.5) == doctest::Approx(200));
  CHECK(b.risk(bank, 0.5) == 0);
}

TEST_CASE("scalarized extremes") {
  const PortfolioSpec p = one_asset();
  SUBCASE("pure profit") {
    const PortfolioSolution s = optimize_portfolio(p, GreyNumber::white(0), 0.5);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.allocation[1] == doctest::Approx(1 / 1.01));
    CHECK(s.allocation[0] == doctest::Approx(0).scale(1));
    CHECK(s.value == doctest::Approx(1.10 / 1.01 - 1));
    // grid oracle over x1 with x0 = 1 - 1.01 x1
    double best = -1;
    for (int k = 0; k <= 10000; ++k) {
      const double x1 = k / 10000.0 / 1.01;
      const double x0 = 1 - 1.01 * x1;
      best = std::max(best, 1.02 * x0 + 1.10 * x1 - 1);
    }
    CHECK(s.value == doctest::Approx(best).epsilon(1e-6));
    CHECK(s.value == doctest::Approx(0.0891).epsilon(1e-3));
  }
  SUBCASE("pure risk aversion") {
    const PortfolioSolution s = optimize_portfolio(fixtures::sample_portfolio(),
                                                   GreyNumber::white(1), 0.5);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.risk == doctest::Approx(0).scale(1));
    CHECK(s.allocation[0] == doctest::Approx(1));
  }
  CHECK(code_of([&] { scalarize(p, GreyNumber(0.5, 1.5), 0.5); }) ==
        ErrorCode::RiskWeightOutOfRange);
  CHECK(code_of([&] { scalarize(p, GreyNumber(0.2, 0.4), 2); }) == ErrorCode::ThetaOutOfRange);
}

TEST_CASE("scalarized program shape") {
  const auto spec = fixtures::sample_portfolio();
  const ScalarizedModel m = scalarize(spec, GreyNumber(0.2, 0.4), 0.5);
  CHECK(m.lambda == doctest::Approx(0.3));
  CHECK(m.objective_constant == doctest::Approx(-0.7));
  CHECK(m.program.variable_count() == spec.asset_count() + 2);
  CHECK(m.program.row_count() == 1 + spec.asset_count() + 1);
  CHECK(m.program.relations[0] == Relation::equal);
  const ScalarizedModel capped = scalarize(spec, GreyNumber(0.2, 0.4), 0.5, true);
  CHECK(capped.program.row_count() == m.program.row_count() + spec.asset_count());
}

TEST_CASE("budget identity and risk linearization on random specs") {
  std::mt19937_64 rng(31337);
  for (int k = 0; k < 60; ++k) {
    const PortfolioSpec spec = oracle::random_portfolio(rng, 5);
    const double lambda = oracle::uniform(rng, 0.01, 1.0);
    const double theta = oracle::uniform(rng, 0, 1);
    CAPTURE(k);
    const PortfolioSolution s =
        optimize_portfolio(spec, GreyNumber::white(lambda), 0.5, {theta, CostMode::proportional});
    REQUIRE(s.status == LpStatus::optimal);
    const AllocationCheck c = check_allocation(spec, s.allocation, theta);
    CHECK(std::abs(c.proportional_budget - 1) <= 1e-9);
    CHECK(std::abs(s.risk_level - max_risk_rate(spec, s.allocation, theta)) <= 1e-9);
    for (double x : s.allocation) CHECK(x >= -1e-9);
  }
}

TEST_CASE("exact fee regimes") {
  std::mt19937_64 rng(4242);
  for (int k = 0; k < 30; ++k) {
    const PortfolioSpec spec = oracle::random_portfolio(rng, 4);
    const double lambda = oracle::uniform(rng, 0, 0.9);
    CAPTURE(k);
    const auto prop =
        optimize_portfolio(spec, GreyNumber::white(lambda), 0.5, {0.5, CostMode::proportional});
    const auto exact =
        optimize_portfolio(spec, GreyNumber::white(lambda), 0.5, {0.5, CostMode::exact});
    REQUIRE(exact.status == LpStatus::optimal);
    const AllocationCheck c = check_allocation(spec, exact.allocation, 0.5);
    CHECK(std::abs(c.exact_budget - 1) <= 1e-9);
    // the proportional model ignores purchase floors, so it relaxes the exact one
    CHECK(prop.value >= exact.value - 1e-9);
  }
  PortfolioSpec big = oracle::random_portfolio(rng, 1);
  big.assets.resize(kMaxExactAssets + 1, big.assets[0]);
  CHECK(code_of([&] {
          optimize_portfolio(big, GreyNumber::white(0.5), 0.5, {0.5, CostMode::exact});
        }) == ErrorCode::ParameterError);
}

TEST_CASE("frontier") {
  const auto spec = fixtures::sample_portfolio();
  std::vector<double> eps;
  for (int k = 0; k <= 12; ++k) eps.push_back(k * 2.5);
  const auto f = pareto_frontier(spec, 0.5, eps);
  REQUIRE(f.size() >= 3);

  SUBCASE("riskless end") {
    CHECK(f.front().epsilon == 0);
    CHECK(f.front().risk == 0);
    CHECK(f.front().profit == doctest::Approx(0.04 * spec.total_funds));
    CHECK(f.front().allocation[0] == doctest::Approx(1));
  }
  SUBCASE("risk bound, nondominance and monotone profit") {
    for (std::size_t k = 0; k < f.size(); ++k) {
      CHECK(f[k].risk <= f[k].epsilon + 1e-9);
      for (double x : f[k].allocation) CHECK(x >= -1e-12);
      if (k > 0) {
        CHECK(f[k].profit >= f[k - 1].profit - 1e-9);
        REQUIRE(f[k].tradeoff.has_value());
        CHECK(*f[k].tradeoff <= 0.0);
      }
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (j == k) continue;
        const bool dominates = f[j].profit >= f[k].profit && f[j].risk <= f[k].risk &&
                               (f[j].profit > f[k].profit || f[j].risk < f[k].risk);
        CHECK_FALSE(dominates);
      }
    }
  }
  SUBCASE("loose bound meets the profit maximum") {
    const std::vector<double> loose = {1e9};
    const auto top = pareto_frontier(spec, 0.5, loose);
    const auto s = optimize_portfolio(spec, GreyNumber::white(0), 0.5);
    CHECK(top.front().profit == doctest::Approx(s.profit));
  }
  SUBCASE("bad epsilon lists") {
    const std::vector<double> none;
    const std::vector<double> unsorted = {3, 1};
    const std::vector<double> negative = {-1};
    CHECK(code_of([&] { pareto_frontier(spec, 0.5, none); }) == ErrorCode::ParameterError);
    CHECK(code_of([&] { pareto_frontier(spec, 0.5, unsorted); }) == ErrorCode::ParameterError);
    CHECK(code_of([&] { pareto_frontier(spec, 0.5, negative); }) == ErrorCode::ParameterError);
  }
}

TEST_CASE("weighted-sum optima are nondominated") {
  const auto spec = fixtures::sample_portfolio();
  std::vector<double> eps;
  for (int k = 0; k <= 400; ++k) eps.push_back(k * 0.1);
  const auto f = pareto_frontier(spec, 0.5, eps);
  for (double lambda : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const auto s = optimize_portfolio(spec, GreyNumber::white(lambda), 0.5);
    for (const auto& p : f) {
      const bool dominated = p.profit > s.profit + 1e-6 && p.risk < s.risk - 1e-6;
      CHECK_FALSE(dominated);
    }
  }
}

TEST_CASE("compromise point") {
  auto point = [](double profit, double risk) {
    FrontierPoint p;
    p.profit = profit;
    p.risk = risk;
    return p;
  };
  const std::vector<FrontierPoint> single = {point(5, 1)};
  CHECK(compromise_solution(single).index == 0);

  const std::vector<FrontierPoint> pair = {point(0, 0), point(10, 10)};
  CHECK(compromise_solution(pair).index == 0);

  const std::vector<FrontierPoint> three = {point(0, 0), point(9, 2), point(10, 10)};
  const Compromise c = compromise_solution(three);
  // exhaustive check in normalized coordinates
  double best = 1e9;
  std::size_t arg = 0;
  for (std::size_t k = 0; k < three.size(); ++k) {
    const double dz1 = (10 - three[k].profit) / 10;
    const double dz2 = (three[k].risk - 0) / 10;
    const double d = std::hypot(dz1, dz2);
    if (d < best) {
      best = d;
      arg = k;
    }
  }
  CHECK(c.index == arg);
  CHECK(c.index == 1);
  CHECK(c.distance == doctest::Approx(best));
  CHECK(c.ideal_profit == 10);
  CHECK(c.ideal_risk == 0);
  CHECK(code_of([] { compromise_solution({}); }) == ErrorCode::EmptyFrontier);
}

}  // TEST_SUITE
