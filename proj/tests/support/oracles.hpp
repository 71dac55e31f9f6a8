// Slow, independent reference implementations used only by the tests.
#pragma once

#include <cmath>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "kaar/adversary.hpp"
#include "kaar/point_set.hpp"
#include "kaar/sobolev_kernel.hpp"

namespace oracle {

// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt, composite Simpson on a
// truncated range.
inline double bessel_k_integral(double nu, double x) {
  double upper = 1.0;
  while (x * std::cosh(upper) - nu * upper < 60.0) upper += 0.5;
  const int steps = 20000;
  const double h = upper / steps;
  auto f = [&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); };
  double sum = f(0.0) + f(upper);
  for (int i = 1; i < steps; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return sum * h / 3.0;
}

// Forecast from a fresh factorization of K_t + tau I over history plus x.
inline double kaar_direct(const kaar::SobolevKernel& k, double tau, const kaar::PointSet& inputs,
                          const std::vector<double>& labels, std::span<const double> x) {
  const std::size_t t = inputs.size() + 1;
  Eigen::MatrixXd a(t, t);
  Eigen::VectorXd b(t);
  Eigen::VectorXd y = Eigen::VectorXd::Zero(t);
  auto point = [&](std::size_t i) { return i + 1 < t ? inputs[i] : x; };
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) a(i, j) = k(point(i), point(j));
    a(i, i) += tau;
    b(i) = k(point(i), x);
    if (i + 1 < t) y(i) = labels[i];
  }
  return y.dot(a.ldlt().solve(b));
}

// Tr((K + tau I)^{-1} K) by a linear solve.
inline double effdim_trace(const Eigen::MatrixXd& gram, double tau) {
  Eigen::MatrixXd shifted = gram;
  shifted.diagonal().array() += tau;
  return shifted.ldlt().solve(gram).trace();
}

// Bump function summed over every cube, ignoring the support shortcut.
inline double bump_sum(const kaar::BumpComparator& f, std::span<const double> x) {
  const double scale = 1.0 / f.cell_width();
  double sum = 0.0;
  std::vector<double> z(x.size());
  for (std::size_t t = 0; t < f.size(); ++t) {
    const auto c = f.center(t);
    for (std::size_t j = 0; j < x.size(); ++j) z[j] = scale * (x[j] - c[j]);
    sum += f.signs()[t] * kaar::mollifier(z);
  }
  return f.amplitude() * sum;
}

}  // namespace oracle
