#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kaar/loglog_fit.hpp"
#include "kaar/sobolev_kernel.hpp"

namespace kaar {

/// d_eff(tau) = Tr((K + tau I)^{-1} K) = sum_j lambda_j / (lambda_j + tau).
struct EffDimReport {
  std::size_t n = 0;
  double tau = 0.0;
  double value = 0.0;
  std::vector<double> eigenvalues;  // nonincreasing, roundoff negatives clamped to 0

  double lambda_max() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
  double lambda_min() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
};

/// Eigenvalues of a symmetric matrix, nonincreasing, negatives clamped to 0.
/// Throws std::invalid_argument if the matrix is not square or symmetric to
/// within 1e-12 relative to its largest entry.
std::vector<double> gram_spectrum(const GramMatrix& gram);

/// Effective dimension from an already computed (clamped) spectrum.
double effective_dimension(std::span<const double> eigenvalues, double tau);

/// Symmetric eigendecomposition once, then the eigenvalue-sum form.
/// Throws std::invalid_argument for tau <= 0.
EffDimReport effective_dimension(const GramMatrix& gram, double tau);

/// OLS of log(d_eff) against log(n / tau). Needs at least four reports with
/// positive values.
LineFit scaling_fit(std::span<const EffDimReport> reports);

}  // namespace kaar
