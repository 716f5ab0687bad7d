#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "greymop/gmop.hpp"
#include "greymop/lp_solver.hpp"
#include "greymop/portfolio.hpp"

using namespace greymop;

namespace {

GmopModel two_objective_model() {
  GmopModel m;
  m.variable_count = 2;
  m.objectives.push_back({"f1", Sense::maximize, Orientation::benefit,
                          {GreyNumber(0, 2), GreyNumber(1.5, 2.5)}});
  m.objectives.push_back({"f2", Sense::maximize, Orientation::benefit,
                          {GreyNumber(2, 4), GreyNumber(-1.5, -0.5)}});
  m.constraints.push_back(
      {{GreyNumber(2, 4), GreyNumber(1.5, 2.5)}, Relation::less_equal, GreyNumber(16, 20)});
  m.constraints.push_back(
      {{GreyNumber(-2, 0), GreyNumber(3, 5)}, Relation::less_equal, GreyNumber(7, 9)});
  return m;
}

/// Dense random LP with a bounded, nonempty region (x = 0 is feasible).
LpProblem random_packing_lp(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  LpProblem lp;
  lp.variable_count = n;
  for (std::size_t j = 0; j < n; ++j) lp.objective.push_back(u(rng));
  for (std::size_t i = 0; i < m; ++i) {
    LinearConstraint c;
    for (std::size_t j = 0; j < n; ++j) c.coefficients.push_back(u(rng));
    c.relation = Relation::less_equal;
    c.rhs = 10.0 * u(rng);
    lp.constraints.push_back(std::move(c));
  }
  return lp;
}

PortfolioSpec portfolio(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  PortfolioSpec p;
  p.total_funds = 10000;
  p.bank_rate = GreyNumber(0.02, 0.03);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = 0.05 + 0.25 * u(rng);
    const double q = 0.01 + 0.05 * u(rng);
    const double f = 0.01 + 0.03 * u(rng);
    p.assets.push_back({"S" + std::to_string(i + 1), GreyNumber(r, r + 0.04),
                        GreyNumber(q, q + 0.01), GreyNumber(f, f + 0.005),
                        GreyNumber(100, 100 + 400 * u(rng))});
  }
  return p;
}

void BM_SolveLp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const LpProblem lp = random_packing_lp(n, n, 17);
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp(lp));
}
BENCHMARK(BM_SolveLp)->RangeMultiplier(2)->Range(4, 64);

void BM_Algorithm1(benchmark::State& state) {
  const GmopModel m = two_objective_model();
  Algorithm1Options o;
  o.points = std::vector<Point>{{2, 1}, {4, 2}, {5, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(algorithm1(m, o));
}
BENCHMARK(BM_Algorithm1);

void BM_Algorithm2(benchmark::State& state) {
  const GmopModel m = two_objective_model();
  const std::vector<double> w = {0.6, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(algorithm2(m, w));
}
BENCHMARK(BM_Algorithm2);

void BM_Frontier(benchmark::State& state) {
  const PortfolioSpec p = portfolio(static_cast<std::size_t>(state.range(0)));
  std::vector<double> eps;
  for (int k = 0; k <= 20; ++k) eps.push_back(k * 25.0);
  for (auto _ : state) benchmark::DoNotOptimize(pareto_frontier(p, 0.5, eps));
}
BENCHMARK(BM_Frontier)->Arg(4)->Arg(16)->Arg(32);

void BM_ExactRegimes(benchmark::State& state) {
  const PortfolioSpec p = portfolio(static_cast<std::size_t>(state.range(0)));
  const PortfolioOptions o{0.5, CostMode::exact, false};
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_portfolio(p, GreyNumber(0.2, 0.4), 0.5, o));
  }
}
BENCHMARK(BM_ExactRegimes)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
