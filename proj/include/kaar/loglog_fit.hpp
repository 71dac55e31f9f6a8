#pragma once

#include <span>

namespace kaar {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares of y on x. A perfectly flat y (zero total sum of
/// squares) is reported with r_squared = 1. Throws std::invalid_argument for
/// fewer than two points or mismatched lengths.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// OLS of log(y) on log(x); all values must be positive.
LineFit fit_loglog(std::span<const double> x, std::span<const double> y);

}  // namespace kaar
