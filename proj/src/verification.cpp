#include "kaar/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "kaar/adversary.hpp"
#include "kaar/effective_dimension.hpp"
#include "kaar/ewa.hpp"
#include "kaar/experiment.hpp"
#include "kaar/game.hpp"
#include "kaar/kaar_forecaster.hpp"
#include "kaar/special_functions.hpp"

namespace kaar {

namespace {

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << v;
  return out.str();
}

double k_half(double x) { return std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x); }
double k_three_halves(double x) { return k_half(x) * (1.0 + 1.0 / x); }

CheckResult check_bessel() {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double x = 0.05 * std::pow(400.0, i / 19.0);
    for (double eps : {0.0, 1e-12}) {
      worst = std::max(worst, std::abs(bessel_k(0.5 + eps, x) / k_half(x) - 1.0));
      worst = std::max(worst, std::abs(bessel_k(1.5 + eps, x) / k_three_halves(x) - 1.0));
    }
  }
  double recur = 0.0;
  for (double nu : {1.0, 2.3, 4.7}) {
    for (int i = 0; i < 20; ++i) {
      const double x = 0.05 * std::pow(400.0, i / 19.0);
      const double lhs = bessel_k(nu + 1.0, x);
      const double rhs = bessel_k(nu - 1.0, x) + 2.0 * nu / x * bessel_k(nu, x);
      recur = std::max(recur, std::abs(lhs - rhs) / std::abs(lhs));
    }
  }
  return {"bessel_k closed forms and recurrence", worst <= 1e-10 && recur <= 1e-8,
          "closed-form rel err " + fmt(worst) + ", recurrence rel residual " + fmt(recur)};
}

CheckResult check_psd(bool corrupt) {
  Rng rng(20240601);
  double worst = -1.0;
  int failures = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 1 + trial % 3;
    const double choices[] = {0.5 * d + 0.6, static_cast<double>(d), 2.0 * d};
    const double s = choices[(trial / 3) % 3];
    const SobolevKernel kernel(d, s);
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 63.0);
    PointSet pts(d);
    std::vector<double> x(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < n; ++i) {
      for (auto& xi : x) xi = rng.uniform(-1.0, 1.0);
      pts.push_back(x);
    }
    GramMatrix k = gram(kernel, pts);
    if (corrupt) {
      k(0, 1) = k(1, 0) = 3.0 * kernel.kappa_sq();
    }
    const auto spec = Eigen::SelfAdjointEigenSolver<GramMatrix>(k, Eigen::EigenvaluesOnly).eigenvalues();
    const double ratio = spec.minCoeff() / k.trace();
    worst = std::min(worst == -1.0 ? ratio : worst, ratio);
    if (ratio < -1e-8) ++failures;
  }
  return {"kernel PSD (50 random Gram matrices)", failures == 0,
          "min lambda / trace = " + fmt(worst) + ", failures " + std::to_string(failures)};
}

CheckResult check_diagonal_limit() {
  std::string detail;
  bool ok = true;
  for (auto [d, s] : {std::pair{2, 2.0}, std::pair{3, 2.0}}) {
    const SobolevKernel k(d, s);
    const double gap = std::abs(k.radial(1e-6) - k.kappa_sq());
    ok = ok && gap <= 1e-6;
    detail += "(" + std::to_string(d) + "," + std::to_string(static_cast<int>(s)) + ") gap " + fmt(gap) + "; ";
  }
  // (1,1): k(r) = sqrt(pi/2) e^{-r}, so the absolute gap at r = 1e-6 is
  // 1.25e-6 in exact arithmetic; checked relative to kappa^2 instead.
  const SobolevKernel k11(1, 1.0);
  const double rel = std::abs(k11.radial(1e-6) - k11.kappa_sq()) / k11.kappa_sq();
  ok = ok && rel <= 1.0000001e-6;
  detail += "(1,1) relative gap " + fmt(rel);
  return {"kernel diagonal limit", ok, detail};
}

double direct_forecast(const SobolevKernel& kernel, double tau, const PointSet& inputs,
                       const std::vector<double>& labels, std::span<const double> x) {
  PointSet all = inputs;
  all.push_back(x);
  GramMatrix k = gram(kernel, all);
  k.diagonal().array() += tau;
  Eigen::VectorXd y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(all.size()));
  for (std::size_t i = 0; i < labels.size(); ++i) y(static_cast<Eigen::Index>(i)) = labels[i];
  const Eigen::VectorXd b = kernel_column(kernel, all, x);
  return y.dot(k.llt().solve(b));
}

CheckResult check_oracle() {
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 2; ++seed) {
    Rng rng(seed);
    const SobolevKernel kernel(2, 2.0);
    KaarForecaster kaar(kernel, 1.0);
    for (int t = 0; t < 96; ++t) {
      const std::vector<double> x{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      const double y = rng.uniform(-1.0, 1.0);
      const double inc = kaar.predict(x);
      const double dir = direct_forecast(kernel, 1.0, kaar.inputs(), kaar.labels(), x);
      worst = std::max(worst, std::abs(inc - dir));
      kaar.update(x, y);
    }
  }
  return {"incremental KAAR equals direct solve", worst <= 1e-8, "max |diff| " + fmt(worst)};
}

// Two tight clusters with opposite labels plus scattered queries: a smooth
// kernel with small tau extrapolates past [-M, M] next to the clusters.
Stream cluster_stream(std::size_t n, Rng& rng) {
  Stream stream{PointSet(1), {}};
  const double left = rng.uniform(-0.5, 0.4);
  const double centers[] = {left, left + 0.1};
  for (std::size_t t = 0; t < n; ++t) {
    const int c = rng.sign() > 0 ? 1 : 0;
    if (t % 5 == 4) {
      const double side = c ? 1.0 : -1.0;
      stream.inputs.push_back({std::clamp(centers[c] + side * rng.uniform(0.01, 0.1), -1.0, 1.0)});
      stream.labels.push_back(rng.uniform(-1.0, 1.0));
    } else {
      stream.inputs.push_back({std::clamp(centers[c] + 0.002 * rng.normal(), -1.0, 1.0)});
      stream.labels.push_back(c ? -1.0 : 1.0);
    }
  }
  return stream;
}

CheckResult check_clipping() {
  std::size_t rounds = 0;
  std::size_t violations = 0;
  std::size_t active = 0;
  auto run = [&](const Stream& stream, const SobolevKernel& kernel, double tau) {
    KaarForecaster kaar(kernel, tau, 1.0);
    for (std::size_t t = 0; t < stream.size(); ++t) {
      const double y = stream.labels[t];
      const Extension ext = kaar.extend(stream.inputs[t]);
      const double c = clip_forecast(ext.forecast, 1.0);
      if (c != ext.forecast) ++active;
      if ((y - c) * (y - c) > (y - ext.forecast) * (y - ext.forecast)) ++violations;
      ++rounds;
      kaar.commit(ext, y);
    }
  };
  ExperimentConfig cfg;
  for (std::uint64_t seed = 1; seed <= 2; ++seed) {
    const GameSetup setup = make_setup(cfg, 500, seed);
    run(setup.stream, SobolevKernel(1, setup.s), setup.tau);
    Rng rng(seed);
    run(cluster_stream(300, rng), SobolevKernel(1, 3.0), 1e-3);
  }
  return {"clipping never increases loss", violations == 0 && active > 0,
          std::to_string(rounds) + " rounds, " + std::to_string(active) + " clipped, " +
              std::to_string(violations) + " violations"};
}

CheckResult check_ewa() {
  const ExpertNet proto = ExpertNet::build(1.0, 1.0, 0.5);
  const double n_experts = static_cast<double>(proto.size());
  double worst_margin = -1e300;
  bool ok = true;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    ExpertNet net = proto;
    Rng rng(seed);
    std::vector<double> expert_loss(net.size(), 0.0);
    CompensatedSum loss;
    for (int t = 0; t < 1000; ++t) {
      const double x = rng.uniform(-1.0, 1.0);
      const double y = rng.uniform(-1.0, 1.0);
      const double e = y - net.predict(x);
      loss.add(e * e);
      for (std::size_t i = 0; i < net.size(); ++i) {
        const double ei = y - net.expert_value(i, x);
        expert_loss[i] += ei * ei;
      }
      net.update(x, y);
    }
    const double best = *std::min_element(expert_loss.begin(), expert_loss.end());
    const double margin = loss.value() - best - 8.0 * std::log(n_experts);
    worst_margin = std::max(worst_margin, margin);
    ok = ok && margin <= 0.0;
  }
  return {"EWA regret <= ln(N)/eta", ok,
          "N = " + std::to_string(proto.size()) + ", max(regret - 8 ln N) = " + fmt(worst_margin)};
}

CheckResult check_mollifier() {
  bool ok = true;
  std::string detail;
  const double at0 = mollifier(std::vector<double>{0.0});
  const double inner = mollifier(std::vector<double>{0.2, 0.1});
  const double outer = mollifier(std::vector<double>{0.5, 0.0});
  ok = ok && at0 == 0.5 && inner == 0.5 && outer == 0.0;
  detail += "g(0) = " + fmt(at0) + ", g(|x|=0.5) = " + fmt(outer);
  for (auto [d, beta, m, n_grid] : {std::tuple{1, 0.5, 1.0, 64L}, std::tuple{2, 1.0, 2.0, 16L}}) {
    Rng rng(7);
    std::vector<int> signs(static_cast<std::size_t>(std::pow(cells_per_axis(n_grid, d), d)));
    for (auto& s : signs) s = rng.sign();
    const BumpComparator f(n_grid, d, beta, m, signs);
    double sup = 0.0;
    std::vector<double> x(static_cast<std::size_t>(d));
    for (int i = 0; i < 20000; ++i) {
      for (auto& xi : x) xi = rng.uniform(-1.0, 1.0);
      sup = std::max(sup, std::abs(f(x)));
    }
    double center_err = 0.0;
    for (std::size_t t = 0; t < f.size(); ++t) {
      center_err = std::max(center_err, std::abs(f(f.center(t)) - 0.5 * signs[t] * f.amplitude()));
    }
    ok = ok && sup <= m / 4.0 && center_err <= 1e-12;
    detail += "; sup|f| / (M/4) = " + fmt(sup / (m / 4.0));
  }
  return {"mollifier and bump class", ok, detail};
}

CheckResult check_effdim_forms() {
  Rng rng(99);
  double worst = 0.0;
  for (std::size_t n : {16u, 64u, 256u}) {
    const SobolevKernel kernel(1, 1.0 + rng.uniform());
    PointSet pts(1);
    for (std::size_t i = 0; i < n; ++i) pts.push_back({rng.uniform(-1.0, 1.0)});
    const GramMatrix k = gram(kernel, pts);
    for (double tau : {0.1, 1.0, 10.0}) {
      const double eig = effective_dimension(k, tau).value;
      GramMatrix shifted = k;
      shifted.diagonal().array() += tau;
      const double trace = shifted.llt().solve(k).trace();
      worst = std::max(worst, std::abs(eig - trace));
    }
  }
  return {"effective dimension: eigenvalue sum = trace form", worst <= 1e-9, "max |diff| " + fmt(worst)};
}

CheckResult check_certificate() {
  ExperimentConfig cfg;
  cfg.horizon = 500;
  bool ok = true;
  double worst = -1e300;
  for (std::uint64_t seed = 1; seed <= 2; ++seed) {
    const GameSetup setup = make_setup(cfg, cfg.horizon, seed);
    KaarPlayer player(KaarForecaster(SobolevKernel(cfg.d, setup.s), setup.tau, cfg.m), false);
    const Comparator* f = setup.comparators.front().get();
    const auto pts = std::span<const Comparator* const>(&f, 1);
    const auto trace = play(player, setup.stream, pts, std::vector<std::size_t>{setup.stream.size()});
    const double d_eff = effective_dimension(gram(player.state().kernel(), setup.stream.inputs), setup.tau).value;
    const double bound = player.state().regret_certificate(*f->norm_sq(), setup.stream.size(), d_eff);
    worst = std::max(worst, trace.final_regret() - bound);
    ok = ok && trace.final_regret() <= bound;
  }
  return {"regret certificate", ok, "max(regret - bound) = " + fmt(worst)};
}

}  // namespace

std::vector<CheckResult> run_property_suite(const VerifyOptions& options) {
  using Check = std::function<CheckResult()>;
  const std::vector<Check> checks = {
      check_bessel,
      [&] { return check_psd(options.corrupt_gram); },
      check_diagonal_limit,
      check_oracle,
      check_clipping,
      check_ewa,
      check_mollifier,
      check_effdim_forms,
      check_certificate,
  };
  std::vector<CheckResult> results(checks.size());
  parallel_for(checks.size(), options.threads, [&](std::size_t i) {
    try {
      results[i] = checks[i]();
    } catch (const std::exception& e) {
      results[i] = {"check " + std::to_string(i + 1), false, std::string("threw: ") + e.what()};
    }
  });
  return results;
}

}  // namespace kaar
