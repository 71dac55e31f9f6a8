#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kaar/point_set.hpp"
#include "kaar/sobolev_kernel.hpp"

namespace kaar {

/// Raised when a Cholesky pivot is non-positive. With tau > 0 this cannot
/// happen in exact arithmetic, so it signals a corrupted Gram matrix.
class NumericalBreakdown : public std::runtime_error {
 public:
  NumericalBreakdown(const std::string& what, std::size_t round)
      : std::runtime_error(what + " (round " + std::to_string(round) + ")"), round_(round) {}
  std::size_t round() const { return round_; }

 private:
  std::size_t round_;
};

/// One provisional extension of the factor by a new input, produced by
/// KaarForecaster::extend and consumed by KaarForecaster::commit.
struct Extension {
  std::vector<double> point;
  std::vector<double> column;  // r = R^{-T} b with b_i = k(x_i, x)
  double pivot_sq = 0.0;       // k(x,x) + tau - |r|^2
  double forecast = 0.0;
};

/// Kernel Aggregating Algorithm for Regression with a Sobolev kernel.
///
/// At round t the forecast is
///
///   yhat_t = (y_1, ..., y_{t-1}, 0) (K_t + tau I)^{-1} (k(x_1,x_t), ..., k(x_t,x_t))^T
///
/// where K_t includes the current input. The state keeps the upper
/// triangular factor R with R^T R = K_{t-1} + tau I, stored column by
/// column, and w = R^{-T} y. Extending R by x_t costs one triangular solve,
/// so a round is O(t^2) and a game of n rounds is O(n^3 + n^2 d).
///
/// With r = R^{-T} b and rho^2 = k(x_t,x_t) + tau - |r|^2 the forecast
/// collapses to (r . w) * tau / rho^2.
class KaarForecaster {
 public:
  KaarForecaster(SobolevKernel kernel, double tau, std::optional<double> clip = std::nullopt);

  const SobolevKernel& kernel() const { return kernel_; }
  double tau() const { return tau_; }
  std::optional<double> clip_level() const { return clip_; }
  std::size_t size() const { return labels_.size(); }
  const PointSet& inputs() const { return inputs_; }
  const std::vector<double>& labels() const { return labels_; }

  /// Provisional factor extension for x; does not modify the state.
  Extension extend(std::span<const double> x) const;

  double predict(std::span<const double> x) const { return extend(x).forecast; }

  /// min(max(-M, predict(x)), M). Throws std::logic_error without a clip level.
  double predict_clipped(std::span<const double> x) const;

  /// Commits (x, y), recomputing the new factor column.
  void update(std::span<const double> x, double y);

  /// Commits a previously computed extension. The state must not have
  /// changed since `ext` was produced.
  void commit(Extension ext, double y);

  /// Right-hand side of the regret bound
  ///   tau |f|^2 + M^2 (1 + log(1 + n kappa^2 / tau)) d_eff(tau)
  /// using the state's clip level as M.
  double regret_certificate(double f_norm_sq, std::size_t n, double d_eff) const;

  /// Dense copy of R (upper triangular).
  Eigen::MatrixXd factor() const;

  /// max |R^T R - (K + tau I)| over all entries; O(t^3), for tests.
  double factor_residual() const;

  /// Replaces the factor with a fresh factorization of K + tau I.
  void refactorize();

 private:
  std::size_t column_offset(std::size_t j) const { return j * (j + 1) / 2; }
  void forward_solve(const Eigen::VectorXd& rhs, std::vector<double>& out) const;
  void append(Extension&& ext, double y);

  SobolevKernel kernel_;
  double tau_;
  std::optional<double> clip_;
  PointSet inputs_;
  std::vector<double> labels_;
  std::vector<double> packed_;  // column j of R occupies [j(j+1)/2, (j+1)(j+2)/2)
  std::vector<double> w_;       // R^{-T} y
};

/// Clipping of a raw forecast to [-M, M].
inline double clip_forecast(double yhat, double m) { return yhat < -m ? -m : (yhat > m ? m : yhat); }

}  // namespace kaar
