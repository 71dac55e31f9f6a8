#include "kaar/kaar_forecaster.hpp"

#include <cmath>
#include <utility>

namespace kaar {

KaarForecaster::KaarForecaster(SobolevKernel kernel, double tau, std::optional<double> clip)
    : kernel_(std::move(kernel)), tau_(tau), clip_(clip), inputs_(kernel_.dim()) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("KAAR: tau must be positive and finite");
  }
  if (clip && !(*clip > 0.0)) {
    throw std::invalid_argument("KAAR: clip level must be positive");
  }
}

void KaarForecaster::forward_solve(const Eigen::VectorXd& rhs, std::vector<double>& out) const {
  // R^T z = rhs; row i of R^T is column i of R, which is contiguous.
  const std::size_t n = size();
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double* col = packed_.data() + column_offset(i);
    const double dot = Eigen::Map<const Eigen::VectorXd>(col, static_cast<Eigen::Index>(i))
                           .dot(Eigen::Map<const Eigen::VectorXd>(out.data(), static_cast<Eigen::Index>(i)));
    out[i] = (rhs(static_cast<Eigen::Index>(i)) - dot) / col[i];
  }
}

Extension KaarForecaster::extend(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != kernel_.dim()) {
    throw std::invalid_argument("KAAR: input dimension mismatch");
  }
  Extension ext;
  ext.point.assign(x.begin(), x.end());
  forward_solve(kernel_column(kernel_, inputs_, x), ext.column);

  const auto n = static_cast<Eigen::Index>(size());
  const Eigen::Map<const Eigen::VectorXd> r(ext.column.data(), n);
  ext.pivot_sq = kernel_.kappa_sq() + tau_ - r.squaredNorm();
  if (!(ext.pivot_sq > 0.0)) {
    throw NumericalBreakdown("KAAR: non-positive Cholesky pivot", size() + 1);
  }
  const double rw = r.dot(Eigen::Map<const Eigen::VectorXd>(w_.data(), n));
  ext.forecast = rw * tau_ / ext.pivot_sq;
  return ext;
}

double KaarForecaster::predict_clipped(std::span<const double> x) const {
  if (!clip_) {
    throw std::logic_error("KAAR: predict_clipped requires a clip level");
  }
  return clip_forecast(predict(x), *clip_);
}

void KaarForecaster::append(Extension&& ext, double y) {
  const double pivot = std::sqrt(ext.pivot_sq);
  const auto n = static_cast<Eigen::Index>(size());
  const double rw = Eigen::Map<const Eigen::VectorXd>(ext.column.data(), n)
                        .dot(Eigen::Map<const Eigen::VectorXd>(w_.data(), n));
  packed_.insert(packed_.end(), ext.column.begin(), ext.column.end());
  packed_.push_back(pivot);
  w_.push_back((y - rw) / pivot);
  inputs_.push_back(ext.point);
  labels_.push_back(y);
}

void KaarForecaster::update(std::span<const double> x, double y) {
  if (!std::isfinite(y)) {
    throw std::invalid_argument("KAAR: label must be finite");
  }
  Extension ext;
  try {
    ext = extend(x);
  } catch (const NumericalBreakdown&) {
    // One fresh factorization; a second failure is fatal.
    refactorize();
    ext = extend(x);
  }
  append(std::move(ext), y);
}

void KaarForecaster::commit(Extension ext, double y) {
  if (!std::isfinite(y)) {
    throw std::invalid_argument("KAAR: label must be finite");
  }
  if (ext.column.size() != size() || static_cast<int>(ext.point.size()) != kernel_.dim()) {
    throw std::logic_error("KAAR: stale extension committed");
  }
  append(std::move(ext), y);
}

double KaarForecaster::regret_certificate(double f_norm_sq, std::size_t n, double d_eff) const {
  if (!clip_) {
    throw std::logic_error("KAAR: regret certificate requires a clip level M");
  }
  if (!std::isfinite(f_norm_sq) || !std::isfinite(d_eff) || f_norm_sq < 0.0 || d_eff < 0.0) {
    throw std::invalid_argument("KAAR: certificate inputs must be finite and nonnegative");
  }
  const double m = *clip_;
  const double log_term = 1.0 + std::log1p(static_cast<double>(n) * kernel_.kappa_sq() / tau_);
  return tau_ * f_norm_sq + m * m * log_term * d_eff;
}

Eigen::MatrixXd KaarForecaster::factor() const {
  const auto n = static_cast<Eigen::Index>(size());
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double* col = packed_.data() + column_offset(static_cast<std::size_t>(j));
    for (Eigen::Index i = 0; i <= j; ++i) {
      r(i, j) = col[i];
    }
  }
  return r;
}

double KaarForecaster::factor_residual() const {
  if (size() == 0) {
    return 0.0;
  }
  Eigen::MatrixXd a = gram(kernel_, inputs_);
  a.diagonal().array() += tau_;
  const Eigen::MatrixXd r = factor();
  return (r.transpose() * r - a).cwiseAbs().maxCoeff();
}

void KaarForecaster::refactorize() {
  if (size() == 0) {
    return;
  }
  Eigen::MatrixXd a = gram(kernel_, inputs_);
  a.diagonal().array() += tau_;
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) {
    throw NumericalBreakdown("KAAR: refactorization failed", size());
  }
  const Eigen::MatrixXd r = llt.matrixU();
  const auto n = static_cast<Eigen::Index>(size());
  packed_.clear();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      packed_.push_back(r(i, j));
    }
  }
  Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(labels_.data(), n);
  forward_solve(y, w_);
}

}  // namespace kaar
