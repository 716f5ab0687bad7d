#include "greymop/grey_number.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "greymop/error.hpp"

namespace greymop {

GreyNumber::GreyNumber(double lower, double upper) : lower_(lower), upper_(upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper) || lower > upper) {
    std::ostringstream msg;
    msg << "grey number [" << lower << ", " << upper << "] violates lower <= upper";
    throw Error(ErrorCode::InvariantViolation, msg.str());
  }
}

double GreyNumber::whiten(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    std::ostringstream msg;
    msg << "whitening position " << t << " outside [0, 1]";
    throw Error(ErrorCode::TOutOfRange, msg.str());
  }
  // std::lerp is exact at both ends, monotone in t and exact for degenerate intervals.
  return std::lerp(lower_, upper_, t);
}

double whiten(const GreyNumber& g, double t) { return g.whiten(t); }

GreyNumber lin_comb(std::span<const double> weights, std::span<const GreyNumber> greys) {
  if (weights.size() != greys.size()) {
    throw Error(ErrorCode::LengthMismatch, "lin_comb: " + std::to_string(weights.size()) +
                                               " weights for " + std::to_string(greys.size()) +
                                               " grey numbers");
  }
  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const double w = weights[k];
    if (w >= 0.0) {
      lo += w * greys[k].lower();
      hi += w * greys[k].upper();
    } else {
      lo += w * greys[k].upper();
      hi += w * greys[k].lower();
    }
  }
  return GreyNumber(lo, hi);
}

double grey_distance(const GreyNumber& r, const GreyNumber& s) noexcept {
  return std::abs(r.lower() - s.lower()) + std::abs(r.upper() - s.upper());
}

std::vector<GreyNumber> normalize_column_set(std::span<const GreyNumber> intervals,
                                             Orientation kind) {
  if (intervals.size() < 2) {
    throw Error(ErrorCode::DegenerateColumn,
                "extreme-difference normalization needs at least two intervals");
  }
  double max_upper = intervals.front().upper();
  double min_lower = intervals.front().lower();
  for (const auto& g : intervals) {
    max_upper = std::max(max_upper, g.upper());
    min_lower = std::min(min_lower, g.lower());
  }
  const double range = max_upper - min_lower;
  if (!(range > 0.0)) {
    throw Error(ErrorCode::DegenerateColumn,
                "extreme-difference normalization: all intervals are the same point");
  }

  std::vector<GreyNumber> out;
  out.reserve(intervals.size());
  for (const auto& g : intervals) {
    double lo = 0.0;
    double hi = 0.0;
    if (kind == Orientation::benefit) {
      lo = (g.lower() - min_lower) / range;
      hi = (g.upper() - min_lower) / range;
    } else {
      lo = (max_upper - g.upper()) / range;
      hi = (max_upper - g.lower()) / range;
    }
    out.emplace_back(std::clamp(lo, 0.0, 1.0), std::clamp(hi, 0.0, 1.0));
  }
  return out;
}

}  // namespace greymop
