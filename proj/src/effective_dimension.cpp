#include "kaar/effective_dimension.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kaar {

namespace {

Eigen::VectorXd eigenvalues_of(const GramMatrix& m) {
  Eigen::SelfAdjointEigenSolver<GramMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("gram_spectrum: eigendecomposition failed");
  }
  return solver.eigenvalues();
}

// K = J K J (J the exchange matrix) holds for kernels evaluated on point sets
// that are mirror images under index reversal, e.g. the 1-d uniform grid.
bool centrosymmetric(const GramMatrix& gram, double tol) {
  const Eigen::Index n = gram.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      if (std::abs(gram(i, j) - gram(n - 1 - i, n - 1 - j)) > tol) return false;
    }
  }
  return true;
}

// With Q = [I J; I -J]/sqrt(2) (plus the middle unit vector for odd n),
// Q K Q^T is block diagonal: the symmetric and antisymmetric parts. Both
// blocks are formed from the J-averaged entries so K and JKJ contribute
// equally.
Eigen::VectorXd centrosymmetric_eigenvalues(const GramMatrix& gram) {
  const Eigen::Index n = gram.rows();
  const Eigen::Index m = n / 2;
  const bool odd = n % 2 == 1;
  auto avg = [&](Eigen::Index i, Eigen::Index j) {
    return 0.5 * (gram(i, j) + gram(n - 1 - i, n - 1 - j));
  };
  GramMatrix even(m + (odd ? 1 : 0), m + (odd ? 1 : 0));
  GramMatrix oddb(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index i = 0; i < m; ++i) {
      const double a = avg(i, j);
      const double c = avg(i, n - 1 - j);
      even(i, j) = a + c;
      oddb(i, j) = a - c;
    }
  }
  if (odd) {
    for (Eigen::Index i = 0; i < m; ++i) {
      const double v = std::sqrt(2.0) * avg(i, m);
      even(i, m) = v;
      even(m, i) = v;
    }
    even(m, m) = gram(m, m);
  }
  Eigen::VectorXd all(n);
  all << eigenvalues_of(even), eigenvalues_of(oddb);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

std::vector<double> gram_spectrum(const GramMatrix& gram) {
  if (gram.rows() != gram.cols() || gram.rows() == 0) {
    throw std::invalid_argument("gram_spectrum: matrix must be square and non-empty");
  }
  const double tol = 1e-12 * std::max(gram.cwiseAbs().maxCoeff(), 1e-300);
  for (Eigen::Index j = 0; j < gram.cols(); ++j) {
    for (Eigen::Index i = 0; i < j; ++i) {
      if (std::abs(gram(i, j) - gram(j, i)) > tol) {
        throw std::invalid_argument("gram_spectrum: matrix is not symmetric");
      }
    }
  }
  // Splitting a centrosymmetric matrix is an exact orthogonal similarity and
  // costs a quarter of the full decomposition.
  const bool split = gram.rows() >= 64 && centrosymmetric(gram, 1e-13 * std::max(gram.cwiseAbs().maxCoeff(), 1e-300));
  const Eigen::VectorXd ev = split ? centrosymmetric_eigenvalues(gram) : eigenvalues_of(gram);  // ascending
  std::vector<double> out(static_cast<std::size_t>(ev.size()));
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    out[static_cast<std::size_t>(i)] = std::max(0.0, ev(ev.size() - 1 - i));
  }
  return out;
}

double effective_dimension(std::span<const double> eigenvalues, double tau) {
  if (!(tau > 0.0)) {
    throw std::invalid_argument("effective_dimension: tau must be positive");
  }
  double sum = 0.0;
  for (double lambda : eigenvalues) {
    sum += lambda / (lambda + tau);
  }
  return sum;
}

EffDimReport effective_dimension(const GramMatrix& gram, double tau) {
  if (!(tau > 0.0)) {
    throw std::invalid_argument("effective_dimension: tau must be positive");
  }
  EffDimReport report;
  report.n = static_cast<std::size_t>(gram.rows());
  report.tau = tau;
  report.eigenvalues = gram_spectrum(gram);
  report.value = effective_dimension(report.eigenvalues, tau);
  return report;
}

LineFit scaling_fit(std::span<const EffDimReport> reports) {
  if (reports.size() < 4) {
    throw std::invalid_argument("scaling_fit: need at least four reports");
  }
  std::vector<double> ratio;
  std::vector<double> value;
  for (const auto& r : reports) {
    if (!(r.value > 0.0)) {
      throw std::invalid_argument("scaling_fit: effective dimensions must be positive");
    }
    ratio.push_back(static_cast<double>(r.n) / r.tau);
    value.push_back(r.value);
  }
  return fit_loglog(ratio, value);
}

}  // namespace kaar
