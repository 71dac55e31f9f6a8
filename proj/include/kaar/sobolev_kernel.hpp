#pragma once

#include <span>

#include <Eigen/Dense>

#include "kaar/point_set.hpp"

namespace kaar {

/// Below this distance the kernel returns its analytic r -> 0 limit; the
/// product r^nu K_nu(r) is numerically 0 * inf there.
inline constexpr double kKernelMinRadius = 1e-10;

/// k(0) = 2^{-d/2} Gamma(s - d/2) / Gamma(s). Throws std::domain_error if
/// s <= d/2 or d < 1.
double diagonal_value(int d, double s);

/// Translation-invariant reproducing kernel of the Sobolev space W^s(R^d),
///
///   k(x, y) = 2^{1-s} / Gamma(s) * r^{s-d/2} * K_{d/2-s}(r),  r = |x - y|_2,
///
/// restricted to the input domain. Requires s > d/2, which is also what
/// makes point evaluation bounded. The order used with K is nu = s - d/2
/// since K_{-nu} = K_nu.
class SobolevKernel {
 public:
  SobolevKernel(int dim, double smoothness);

  int dim() const { return dim_; }
  double smoothness() const { return s_; }
  double bessel_order() const { return nu_; }
  /// sup_x k(x, x); cached at construction.
  double kappa_sq() const { return kappa_sq_; }

  /// Kernel as a function of the distance r >= 0.
  double radial(double r) const;

  /// Throws std::invalid_argument on a dimension mismatch.
  double operator()(std::span<const double> x, std::span<const double> y) const;

  bool operator==(const SobolevKernel& o) const { return dim_ == o.dim_ && s_ == o.s_; }

 private:
  int dim_;
  double s_;
  double nu_;
  double scale_;  // 2^{1-s} / Gamma(s)
  double kappa_sq_;
};

using GramMatrix = Eigen::MatrixXd;

/// Gram matrix K[i][j] = k(x_i, x_j). Each unordered pair is evaluated once
/// and the diagonal is set to kappa_sq. Throws on an empty point list or a
/// dimension mismatch.
GramMatrix gram(const SobolevKernel& kernel, const PointSet& points);

/// Cross-kernel column b[i] = k(points_i, x).
Eigen::VectorXd kernel_column(const SobolevKernel& kernel, const PointSet& points,
                              std::span<const double> x);

}  // namespace kaar
