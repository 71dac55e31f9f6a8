#include "kaar/sobolev_kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "kaar/special_functions.hpp"

namespace kaar {

namespace {

void check_params(int d, double s) {
  if (d < 1) {
    throw std::domain_error("Sobolev kernel: dimension must be >= 1");
  }
  if (!std::isfinite(s) || s <= 0.5 * d) {
    throw std::domain_error("Sobolev kernel: smoothness must satisfy s > d/2");
  }
}

}  // namespace

double diagonal_value(int d, double s) {
  check_params(d, s);
  return std::exp2(-0.5 * d) * gamma(s - 0.5 * d) / gamma(s);
}

SobolevKernel::SobolevKernel(int dim, double smoothness)
    : dim_(dim),
      s_(smoothness),
      nu_(smoothness - 0.5 * dim),
      scale_(0.0),
      kappa_sq_(diagonal_value(dim, smoothness)) {
  scale_ = std::exp2(1.0 - s_) / gamma(s_);
}

double SobolevKernel::radial(double r) const {
  if (r <= kKernelMinRadius) {
    return kappa_sq_;
  }
  return scale_ * std::pow(r, nu_) * bessel_k(nu_, r);
}

double SobolevKernel::operator()(std::span<const double> x, std::span<const double> y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_) {
    throw std::invalid_argument("Sobolev kernel: point dimension mismatch");
  }
  double r2 = 0.0;
  for (int i = 0; i < dim_; ++i) {
    const double diff = x[i] - y[i];
    r2 += diff * diff;
  }
  return radial(std::sqrt(r2));
}

GramMatrix gram(const SobolevKernel& kernel, const PointSet& points) {
  if (points.empty()) {
    throw std::invalid_argument("gram: empty point list");
  }
  if (points.dim() != kernel.dim()) {
    throw std::invalid_argument("gram: point dimension mismatch");
  }
  const auto n = static_cast<Eigen::Index>(points.size());
  GramMatrix k(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    k(j, j) = kernel.kappa_sq();
    for (Eigen::Index i = 0; i < j; ++i) {
      const double v = kernel(points[i], points[j]);
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  return k;
}

Eigen::VectorXd kernel_column(const SobolevKernel& kernel, const PointSet& points,
                              std::span<const double> x) {
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    b(i) = kernel(points[i], x);
  }
  return b;
}

}  // namespace kaar
