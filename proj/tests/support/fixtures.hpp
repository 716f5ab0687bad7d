#pragma once

#include <string>
#include <vector>

#include "greymop/gmop.hpp"
#include "greymop/portfolio.hpp"
#include "greymop/positioned_lp.hpp"

namespace fixtures {

using greymop::GreyNumber;

/// Two grey objectives over a grey region; the mean whitening of the region
/// is 3x1 + 2x2 <= 18, -x1 + 4x2 <= 8.
inline greymop::GmopModel two_objective_model() {
  using greymop::Relation;
  using greymop::Sense;
  greymop::GmopModel m;
  m.variable_count = 2;
  m.objectives.push_back({"f1", Sense::maximize, greymop::Orientation::benefit,
                          {GreyNumber(0, 2), GreyNumber(1.5, 2.5)}});
  m.objectives.push_back({"f2", Sense::maximize, greymop::Orientation::benefit,
                          {GreyNumber(2, 4), GreyNumber(-1.5, -0.5)}});
  m.constraints.push_back(
      {{GreyNumber(2, 4), GreyNumber(1.5, 2.5)}, Relation::less_equal, GreyNumber(16, 20)});
  m.constraints.push_back(
      {{GreyNumber(-2, 0), GreyNumber(3, 5)}, Relation::less_equal, GreyNumber(7, 9)});
  return m;
}

inline std::vector<greymop::Point> table_points() { return {{2, 1}, {4, 2}, {5, 1}}; }

/// Single-objective grey program with prices [0.8, 2.8], [0.3, 1.3] over
/// the same region.
inline greymop::GreyLinearProgram combined_program() {
  greymop::GreyLinearProgram g;
  g.sense = greymop::Sense::maximize;
  g.price = {GreyNumber(0.8, 2.8), GreyNumber(0.3, 1.3)};
  g.consumption = {{GreyNumber(2, 4), GreyNumber(1.5, 2.5)},
                   {GreyNumber(-2, 0), GreyNumber(3, 5)}};
  g.resources = {GreyNumber(16, 20), GreyNumber(7, 9)};
  g.relations = {greymop::Relation::less_equal, greymop::Relation::less_equal};
  return g;
}

/// Four assets plus the bank, money in thousands.
inline greymop::PortfolioSpec sample_portfolio() {
  greymop::PortfolioSpec p;
  p.total_funds = 1000;
  p.bank_rate = GreyNumber(0.03, 0.05);
  p.assets = {
      {"S1", GreyNumber(0.25, 0.31), GreyNumber(0.020, 0.030), GreyNumber(0.01, 0.015),
       GreyNumber(90, 110)},
      {"S2", GreyNumber(0.18, 0.24), GreyNumber(0.012, 0.018), GreyNumber(0.015, 0.025),
       GreyNumber(180, 220)},
      {"S3", GreyNumber(0.20, 0.26), GreyNumber(0.050, 0.060), GreyNumber(0.045, 0.060),
       GreyNumber(40, 60)},
      {"S4", GreyNumber(0.22, 0.28), GreyNumber(0.025, 0.031), GreyNumber(0.060, 0.070),
       GreyNumber(35, 45)},
  };
  return p;
}

}  // namespace fixtures
