#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "kaar/effective_dimension.hpp"
#include "kaar/experiment.hpp"
#include "kaar/random.hpp"
#include "support/oracles.hpp"

using kaar::SobolevKernel;

namespace {

kaar::GramMatrix random_gram(std::size_t n, int d, double s, std::uint64_t seed) {
  kaar::Rng rng(seed);
  kaar::PointSet pts(d);
  std::vector<double> x(d);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& v : x) v = rng.uniform(-1.0, 1.0);
    pts.push_back(x);
  }
  return kaar::gram(SobolevKernel(d, s), pts);
}

}  // namespace

TEST_CASE("eigenvalue sum equals the trace form") {
  for (std::size_t n : {8u, 64u, 256u}) {
    const auto g = random_gram(n, 2, 1.7, n);
    for (double tau : {1e-3, 0.5, 30.0}) {
      CHECK(std::abs(kaar::effective_dimension(g, tau).value - oracle::effdim_trace(g, tau)) <= 1e-9);
    }
  }
}

TEST_CASE("mirror-symmetric grids give the same spectrum as a full decomposition") {
  for (std::size_t n : {200u, 201u}) {
    for (double sk : {1.0, 2.0}) {
      const auto g = kaar::gram(SobolevKernel(1, sk), kaar::make_layout("equispaced", n, 1, 0));
      const auto fast = kaar::gram_spectrum(g);
      Eigen::SelfAdjointEigenSolver<kaar::GramMatrix> full(g, Eigen::EigenvaluesOnly);
      const double scale = full.eigenvalues().maxCoeff();
      for (std::size_t i = 0; i < n; ++i) {
        const double ref = std::max(0.0, full.eigenvalues()(static_cast<Eigen::Index>(n - 1 - i)));
        CHECK(std::abs(fast[i] - ref) <= 1e-12 * scale);
      }
      CHECK(std::abs(kaar::effective_dimension(g, 1.0).value - oracle::effdim_trace(g, 1.0)) <= 1e-9);
    }
  }
}

TEST_CASE("report invariants") {
  const auto g = random_gram(100, 1, 1.0, 4);
  const auto rep = kaar::effective_dimension(g, 1.0);
  CHECK(rep.n == 100);
  CHECK(rep.tau == 1.0);
  CHECK(rep.value >= 0.0);
  CHECK(rep.value <= 100.0);
  CHECK(std::is_sorted(rep.eigenvalues.rbegin(), rep.eigenvalues.rend()));
  CHECK(rep.lambda_min() >= 0.0);
  double sum = 0.0;
  for (double l : rep.eigenvalues) sum += l;
  CHECK(sum == doctest::Approx(g.trace()).epsilon(1e-10));
}

TEST_CASE("effective dimension is monotone in tau and n") {
  const auto g = random_gram(80, 1, 1.5, 6);
  const auto spec = kaar::gram_spectrum(g);
  double prev = 81.0;
  for (double tau = 1e-3; tau < 1e3; tau *= 3.0) {
    const double v = kaar::effective_dimension(spec, tau);
    CHECK(v < prev);
    prev = v;
  }
  // Interlacing: adding points never lowers d_eff.
  const auto sub = kaar::gram_spectrum(g.topLeftCorner(40, 40));
  CHECK(kaar::effective_dimension(sub, 1.0) <= kaar::effective_dimension(spec, 1.0) + 1e-12);
}

TEST_CASE("roundoff negatives are clamped") {
  kaar::GramMatrix m(2, 2);
  m << 1.0, 1.0, 1.0, 1.0 - 1e-17;
  for (double l : kaar::gram_spectrum(m)) CHECK(l >= 0.0);
}

TEST_CASE("input validation") {
  const auto g = random_gram(10, 1, 1.0, 1);
  CHECK_THROWS_AS(kaar::effective_dimension(g, 0.0), std::invalid_argument);
  kaar::GramMatrix asym = g;
  asym(0, 1) += 0.1;
  CHECK_THROWS_AS(kaar::gram_spectrum(asym), std::invalid_argument);
  CHECK_THROWS_AS(kaar::gram_spectrum(kaar::GramMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("scaling fit on equispaced grids is near d/2s") {
  std::vector<kaar::EffDimReport> reports;
  for (std::size_t n : {128u, 256u, 512u, 1024u}) {
    const auto pts = kaar::make_layout("equispaced", n, 1, 1);
    reports.push_back(kaar::effective_dimension(kaar::gram(SobolevKernel(1, 1.0), pts), 1.0));
  }
  const auto fit = kaar::scaling_fit(reports);
  CHECK(fit.slope > 0.3);
  CHECK(fit.slope < 0.6);
  CHECK(fit.r_squared > 0.9);
  CHECK_THROWS(kaar::scaling_fit(std::span(reports).first(3)));
}
