#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oracle {

namespace {

struct Row {
  std::vector<double> a;
  greymop::Relation rel;
  double b;
};

/// Solves the square system in place; empty result when singular.
std::optional<std::vector<double>> gauss(std::vector<std::vector<double>> m,
                                         std::vector<double> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    }
    if (std::abs(m[piv][c]) < 1e-10) return std::nullopt;
    std::swap(m[c], m[piv]);
    std::swap(rhs[c], rhs[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = m[r][c] / m[c][c];
      if (f == 0.0) continue;
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

bool satisfies(const Row& row, const std::vector<double>& x, double tol) {
  double lhs = 0.0;
  double scale = std::abs(row.b);
  for (std::size_t j = 0; j < x.size(); ++j) {
    lhs += row.a[j] * x[j];
    scale = std::max(scale, std::abs(row.a[j] * x[j]));
  }
  const double t = tol * std::max(1.0, scale);
  switch (row.rel) {
    case greymop::Relation::less_equal: return lhs <= row.b + t;
    case greymop::Relation::greater_equal: return lhs >= row.b - t;
    case greymop::Relation::equal: return std::abs(lhs - row.b) <= t;
  }
  return false;
}

/// Vertices of {rows} with x >= 0 implied by the appended coordinate rows.
std::vector<std::vector<double>> basic_points(const std::vector<Row>& rows, std::size_t n,
                                              double tol) {
  std::vector<Row> all = rows;
  for (std::size_t j = 0; j < n; ++j) {
    Row r{std::vector<double>(n, 0.0), greymop::Relation::greater_equal, 0.0};
    r.a[j] = 1.0;
    all.push_back(std::move(r));
  }
  std::vector<std::vector<double>> out;
  const std::size_t total = all.size();
  if (n == 0 || total < n) return out;
  std::vector<bool> pick(total, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(n), true);
  do {
    std::vector<std::vector<double>> m;
    std::vector<double> rhs;
    for (std::size_t k = 0; k < total; ++k) {
      if (!pick[k]) continue;
      m.push_back(all[k].a);
      rhs.push_back(all[k].b);
    }
    auto x = gauss(m, rhs);
    if (!x) continue;
    bool ok = true;
    for (const auto& r : all) {
      if (!satisfies(r, *x, tol)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(*x);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::vector<Row> rows_of(const greymop::LpProblem& lp) {
  std::vector<Row> rows;
  for (const auto& c : lp.constraints) rows.push_back({c.coefficients, c.relation, c.rhs});
  return rows;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::vector<std::vector<double>> vertices(const greymop::LpProblem& lp, double tol) {
  return basic_points(rows_of(lp), lp.variable_count, tol);
}

Result enumerate(const greymop::LpProblem& lp, double tol) {
  const std::size_t n = lp.variable_count;
  const double sign = lp.sense == greymop::Sense::maximize ? 1.0 : -1.0;
  const auto pts = basic_points(rows_of(lp), n, tol);
  Result res;
  res.vertices = pts.size();
  if (pts.empty()) return res;

  // Recession cone: homogeneous rows, d >= 0, sum d = 1.
  std::vector<Row> cone;
  for (const auto& c : lp.constraints) cone.push_back({c.coefficients, c.relation, 0.0});
  cone.push_back({std::vector<double>(n, 1.0), greymop::Relation::equal, 1.0});
  for (const auto& d : basic_points(cone, n, 1e-9)) {
    if (sign * dot(lp.objective, d) > 1e-9) {
      res.status = Status::unbounded;
      return res;
    }
  }

  res.status = Status::optimal;
  double best = -INFINITY;
  for (const auto& x : pts) {
    const double v = sign * dot(lp.objective, x);
    if (v > best) {
      best = v;
      res.point = x;
    }
  }
  res.value = sign * best;
  return res;
}

std::vector<double> entropy_weights(const std::vector<std::vector<std::pair<double, double>>>& f,
                                    const std::vector<bool>& benefit) {
  using L = long double;
  const std::size_t m = f.size();
  const std::size_t l = f[0].size();
  std::vector<L> one_minus_e(m);
  for (std::size_t i = 0; i < m; ++i) {
    L hi = f[i][0].second;
    L lo = f[i][0].first;
    for (const auto& [a, b] : f[i]) {
      hi = std::max<L>(hi, b);
      lo = std::min<L>(lo, a);
    }
    const L range = hi - lo;
    std::vector<std::pair<L, L>> r(l);
    for (std::size_t t = 0; t < l; ++t) {
      const L a = (static_cast<L>(f[i][t].first) - lo) / range;
      const L b = (static_cast<L>(f[i][t].second) - lo) / range;
      r[t] = benefit[i] ? std::pair<L, L>{a, b} : std::pair<L, L>{1 - b, 1 - a};
    }
    // pairwise deviations, each pair counted from both sides
    std::vector<L> d(l, 0);
    L total = 0;
    for (std::size_t t = 0; t < l; ++t) {
      for (std::size_t s = 0; s < l; ++s) {
        d[t] += std::abs(r[t].first - r[s].first) + std::abs(r[t].second - r[s].second);
      }
      total += d[t];
    }
    L e = 0;
    for (std::size_t t = 0; t < l; ++t) {
      const L p = d[t] / total;
      if (p > 0) e -= p * std::log(p);
    }
    e /= std::log(static_cast<L>(l));
    one_minus_e[i] = 1 - e;
  }
  const L s = std::accumulate(one_minus_e.begin(), one_minus_e.end(), L{0});
  std::vector<double> w(m);
  for (std::size_t i = 0; i < m; ++i) w[i] = static_cast<double>(one_minus_e[i] / s);
  return w;
}

Result positioned_value(const greymop::GreyLinearProgram& g, double rho, double beta,
                        double delta) {
  greymop::LpProblem lp;
  lp.sense = g.sense;
  lp.variable_count = g.variable_count();
  for (const auto& c : g.price) lp.objective.push_back(c.lower() + rho * (c.upper() - c.lower()));
  for (std::size_t i = 0; i < g.row_count(); ++i) {
    greymop::LinearConstraint row;
    for (const auto& a : g.consumption[i]) {
      row.coefficients.push_back(a.lower() + delta * (a.upper() - a.lower()));
    }
    row.relation = g.relations[i];
    const auto& b = g.resources[i];
    row.rhs = b.lower() + beta * (b.upper() - b.lower());
    lp.constraints.push_back(std::move(row));
  }
  return enumerate(lp);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

greymop::GreyNumber random_grey(std::mt19937_64& rng, double lo, double hi) {
  double a = uniform(rng, lo, hi);
  double b = uniform(rng, lo, hi);
  if (a > b) std::swap(a, b);
  return greymop::GreyNumber(a, b);
}

greymop::LpProblem random_lp(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> nv(1, 4);
  std::uniform_int_distribution<std::size_t> nc(1, 5);
  std::uniform_int_distribution<int> rel(0, 9);
  greymop::LpProblem lp;
  lp.variable_count = nv(rng);
  lp.sense = rel(rng) < 5 ? greymop::Sense::maximize : greymop::Sense::minimize;
  for (std::size_t j = 0; j < lp.variable_count; ++j) lp.objective.push_back(uniform(rng, -10, 10));
  const std::size_t m = nc(rng);
  for (std::size_t i = 0; i < m; ++i) {
    greymop::LinearConstraint c;
    for (std::size_t j = 0; j < lp.variable_count; ++j) {
      c.coefficients.push_back(uniform(rng, -10, 10));
    }
    const int r = rel(rng);
    c.relation = r < 6   ? greymop::Relation::less_equal
                 : r < 9 ? greymop::Relation::greater_equal
                         : greymop::Relation::equal;
    c.rhs = uniform(rng, -10, 10);
    lp.constraints.push_back(std::move(c));
  }
  return lp;
}

greymop::GreyLinearProgram random_lpgp(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> nv(1, 4);
  std::uniform_int_distribution<std::size_t> nc(1, 4);
  greymop::GreyLinearProgram g;
  const std::size_t n = nv(rng);
  const std::size_t m = nc(rng);
  for (std::size_t j = 0; j < n; ++j) g.price.push_back(random_grey(rng, 0.1, 10));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<greymop::GreyNumber> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(random_grey(rng, 0.1, 10));
    g.consumption.push_back(std::move(row));
    g.resources.push_back(random_grey(rng, 1, 20));
    g.relations.push_back(greymop::Relation::less_equal);
  }
  return g;
}

greymop::PortfolioSpec random_portfolio(std::mt19937_64& rng, std::size_t max_assets) {
  std::uniform_int_distribution<std::size_t> na(1, max_assets);
  greymop::PortfolioSpec spec;
  spec.total_funds = uniform(rng, 1e3, 1e5);
  spec.bank_rate = random_grey(rng, 0.01, 0.05);
  const std::size_t n = na(rng);
  for (std::size_t i = 0; i < n; ++i) {
    greymop::Asset a;
    a.name = "S" + std::to_string(i + 1);
    a.profit_rate = random_grey(rng, 0.02, 0.35);
    a.risk_rate = random_grey(rng, 0.005, 0.1);
    a.transaction_rate = random_grey(rng, 0.0, 0.05);
    a.purchase_floor = random_grey(rng, 0.0, 0.2 * spec.total_funds);
    spec.assets.push_back(std::move(a));
  }
  return spec;
}

}  // namespace oracle
