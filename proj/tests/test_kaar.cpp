#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "kaar/kaar_forecaster.hpp"
#include "kaar/random.hpp"
#include "support/oracles.hpp"

using kaar::KaarForecaster;
using kaar::SobolevKernel;

namespace {

std::vector<double> random_point(kaar::Rng& rng, int d) {
  std::vector<double> x(d);
  for (auto& v : x) v = rng.uniform(-1.0, 1.0);
  return x;
}

}  // namespace

TEST_CASE("empty history forecasts zero") {
  const KaarForecaster f(SobolevKernel(1, 1.0), 1.0);
  CHECK(f.predict(std::vector<double>{0.3}) == 0.0);
}

TEST_CASE("duplicate point closed form") {
  KaarForecaster f(SobolevKernel(1, 1.0), 1.0);
  f.update(std::vector<double>{0.0}, 1.0);
  CHECK(f.predict(std::vector<double>{0.0}) == doctest::Approx(0.35741288758284064973).epsilon(1e-14));
  const double k2 = f.kernel().kappa_sq();
  CHECK(f.predict(std::vector<double>{0.0}) == doctest::Approx(k2 / (2 * k2 + 1.0)).epsilon(1e-14));
}

TEST_CASE("incremental forecasts equal a fresh solve") {
  for (auto [d, s, tau] : {std::tuple{2, 2.0, 1.0}, std::tuple{1, 1.0, 0.1}, std::tuple{3, 2.5, 7.0}}) {
    kaar::Rng rng(5);
    KaarForecaster f(SobolevKernel(d, s), tau);
    double worst = 0.0;
    for (int t = 0; t < 120; ++t) {
      const auto x = random_point(rng, d);
      const double direct = oracle::kaar_direct(f.kernel(), tau, f.inputs(), f.labels(), x);
      worst = std::max(worst, std::abs(f.predict(x) - direct));
      f.update(x, rng.uniform(-1.0, 1.0));
    }
    CHECK(worst <= 1e-10);
    CHECK(f.factor_residual() <= 1e-12 * f.size());
  }
}

TEST_CASE("extend then commit matches update") {
  kaar::Rng rng(8);
  KaarForecaster a(SobolevKernel(2, 1.5), 0.5);
  KaarForecaster b(SobolevKernel(2, 1.5), 0.5);
  for (int t = 0; t < 60; ++t) {
    const auto x = random_point(rng, 2);
    const double y = rng.uniform(-1.0, 1.0);
    const auto ext = a.extend(x);
    CHECK(ext.forecast == b.predict(x));
    a.commit(ext, y);
    b.update(x, y);
  }
  CHECK(a.factor() == b.factor());
}

TEST_CASE("stale extensions are rejected") {
  KaarForecaster f(SobolevKernel(1, 1.0), 1.0);
  const auto ext = f.extend(std::vector<double>{0.1});
  f.update(std::vector<double>{0.2}, 0.5);
  CHECK_THROWS_AS(f.commit(ext, 0.0), std::logic_error);
}

TEST_CASE("refactorize reproduces the incremental factor") {
  kaar::Rng rng(9);
  KaarForecaster f(SobolevKernel(1, 2.0), 0.3);
  for (int t = 0; t < 40; ++t) f.update(random_point(rng, 1), rng.uniform(-1.0, 1.0));
  const auto before = f.factor();
  const auto x = random_point(rng, 1);
  const double forecast = f.predict(x);
  f.refactorize();
  CHECK((f.factor() - before).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(f.predict(x) == doctest::Approx(forecast).epsilon(1e-12));
}

TEST_CASE("forecast is linear in the labels") {
  kaar::Rng rng(10);
  const SobolevKernel k(1, 1.5);
  KaarForecaster a(k, 1.0), b(k, 1.0), ab(k, 1.0);
  for (int t = 0; t < 30; ++t) {
    const auto x = random_point(rng, 1);
    const double ya = rng.uniform(-1.0, 1.0);
    const double yb = rng.uniform(-1.0, 1.0);
    a.update(x, ya);
    b.update(x, yb);
    ab.update(x, 2.0 * ya - yb);
  }
  const std::vector<double> q{0.37};
  CHECK(ab.predict(q) == doctest::Approx(2.0 * a.predict(q) - b.predict(q)).epsilon(1e-12));
}

TEST_CASE("clipping") {
  KaarForecaster f(SobolevKernel(1, 1.0), 1.0, 1.0);
  CHECK(kaar::clip_forecast(2.0, 1.0) == 1.0);
  CHECK(kaar::clip_forecast(-3.0, 1.0) == -1.0);
  CHECK(kaar::clip_forecast(0.25, 1.0) == 0.25);
  CHECK(f.predict_clipped(std::vector<double>{0.0}) == 0.0);
  const KaarForecaster g(SobolevKernel(1, 1.0), 1.0);
  CHECK_THROWS_AS(g.predict_clipped(std::vector<double>{0.0}), std::logic_error);
}

TEST_CASE("regret certificate formula") {
  const KaarForecaster f(SobolevKernel(1, 1.0), 2.0, 1.0);
  const double k2 = f.kernel().kappa_sq();
  CHECK(f.regret_certificate(4.0, 100, 3.0) ==
        doctest::Approx(2.0 * 4.0 + (1.0 + std::log(1.0 + 100 * k2 / 2.0)) * 3.0).epsilon(1e-14));
  CHECK_THROWS(KaarForecaster(SobolevKernel(1, 1.0), 2.0).regret_certificate(1.0, 10, 1.0));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(KaarForecaster(SobolevKernel(1, 1.0), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(KaarForecaster(SobolevKernel(1, 1.0), -1.0), std::invalid_argument);
  CHECK_THROWS_AS(KaarForecaster(SobolevKernel(1, 1.0), 1.0, 0.0), std::invalid_argument);
  KaarForecaster f(SobolevKernel(2, 2.0), 1.0);
  CHECK_THROWS_AS(f.predict(std::vector<double>{0.0}), std::invalid_argument);
  CHECK_THROWS_AS(f.update(std::vector<double>{0.0, 0.0}, std::nan("")), std::invalid_argument);
}

TEST_CASE("breakdown is reported with its round") {
  // With a vanishing ridge repeated inputs make the pivot lose all digits.
  KaarForecaster f(SobolevKernel(1, 1.0), 1e-300);
  bool thrown = false;
  try {
    for (int t = 0; t < 20; ++t) f.update(std::vector<double>{0.0}, 1.0);
  } catch (const kaar::NumericalBreakdown& e) {
    thrown = true;
    CHECK(e.round() >= 2);
  }
  CHECK(thrown);
}
