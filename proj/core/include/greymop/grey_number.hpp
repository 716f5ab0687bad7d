#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace greymop {

/// Closed interval [lower, upper] with no distribution information.
/// A degenerate interval (lower == upper) is a white number.
class GreyNumber {
 public:
  constexpr GreyNumber() = default;
  /// Throws Error(InvariantViolation) when lower > upper or a bound is not finite.
  GreyNumber(double lower, double upper);

  static GreyNumber white(double value) { return GreyNumber(value, value); }

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  double width() const noexcept { return upper_ - lower_; }
  bool is_white() const noexcept { return lower_ == upper_; }

  /// Positioned white value t*upper + (1-t)*lower, t in [0,1].
  double whiten(double t) const;

  bool operator==(const GreyNumber&) const = default;

 private:
  double lower_ = 0.0;
  double upper_ = 0.0;
};

double whiten(const GreyNumber& g, double t);

/// Exact interval value of sum_k weights[k] * greys[k]. Weights may be negative.
GreyNumber lin_comb(std::span<const double> weights, std::span<const GreyNumber> greys);

/// L1 distance between bound pairs.
double grey_distance(const GreyNumber& r, const GreyNumber& s) noexcept;

enum class Orientation { benefit, cost };

/// Grey extreme-difference transformation of one objective's sample values.
/// With U = max upper and L = min lower, benefit maps [a,b] to
/// [(a-L)/R, (b-L)/R] and cost maps it to [(U-b)/R, (U-a)/R], R = U - L.
std::vector<GreyNumber> normalize_column_set(std::span<const GreyNumber> intervals,
                                             Orientation kind);

/// Dense rows x cols matrix of grey numbers (objectives x sample points).
class GreyIntervalMatrix {
 public:
  GreyIntervalMatrix() = default;
  GreyIntervalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  GreyNumber& at(std::size_t r, std::size_t c) { return cells_.at(r * cols_ + c); }
  const GreyNumber& at(std::size_t r, std::size_t c) const { return cells_.at(r * cols_ + c); }

  std::span<const GreyNumber> row(std::size_t r) const {
    return std::span<const GreyNumber>(cells_).subspan(r * cols_, cols_);
  }
  std::span<GreyNumber> row(std::size_t r) {
    return std::span<GreyNumber>(cells_).subspan(r * cols_, cols_);
  }

  bool operator==(const GreyIntervalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GreyNumber> cells_;
};

}  // namespace greymop
