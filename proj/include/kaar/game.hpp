#pragma once

#include <cmath>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kaar/adversary.hpp"
#include "kaar/ewa.hpp"
#include "kaar/kaar_forecaster.hpp"
#include "kaar/loglog_fit.hpp"

namespace kaar {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// Online learner driven by the game loop: predict(x_t) is always called
/// before update(x_t, y_t) for the same round.
class Forecaster {
 public:
  virtual ~Forecaster() = default;
  virtual double predict(std::span<const double> x) = 0;
  virtual void update(std::span<const double> x, double y) = 0;
  virtual std::string id() const = 0;
};

/// KAAR, optionally clipped, reusing the provisional factor column between
/// predict and update.
class KaarPlayer final : public Forecaster {
 public:
  KaarPlayer(KaarForecaster forecaster, bool clipped);
  double predict(std::span<const double> x) override;
  void update(std::span<const double> x, double y) override;
  std::string id() const override { return clipped_ ? "kaar_clipped" : "kaar"; }
  const KaarForecaster& state() const { return kaar_; }

 private:
  KaarForecaster kaar_;
  bool clipped_;
  std::optional<Extension> pending_;
};

class EwaPlayer final : public Forecaster {
 public:
  explicit EwaPlayer(ExpertNet net) : net_(std::move(net)) {}
  double predict(std::span<const double> x) override { return net_.predict(x[0]); }
  void update(std::span<const double> x, double y) override { net_.update(x[0], y); }
  std::string id() const override { return "ewa"; }
  const ExpertNet& net() const { return net_; }

 private:
  ExpertNet net_;
};

class ZeroPlayer final : public Forecaster {
 public:
  double predict(std::span<const double>) override { return 0.0; }
  void update(std::span<const double>, double) override {}
  std::string id() const override { return "zero"; }
};

/// Predicts f(x_t); its regret against f is identically zero.
class ComparatorPlayer final : public Forecaster {
 public:
  explicit ComparatorPlayer(const Comparator& f) : f_(f) {}
  double predict(std::span<const double> x) override { return f_(x); }
  void update(std::span<const double>, double) override {}
  std::string id() const override { return "oracle_" + f_.id(); }

 private:
  const Comparator& f_;
};

struct Round {
  std::size_t t;  // 1-based
  double y;
  double yhat;
  double loss;
  double cum_loss;
};

struct ComparatorTrack {
  std::string id;
  std::optional<double> norm_sq;
  double cumulative_loss = 0.0;
  std::vector<double> regret_at_checkpoint;  // aligned with GameTrace::checkpoints
};

struct GameTrace {
  std::string forecaster;
  std::vector<Round> rounds;
  double cumulative_forecaster_loss = 0.0;
  std::vector<std::size_t> checkpoints;
  std::vector<ComparatorTrack> comparators;

  /// Regret against comparator i after all rounds.
  double final_regret(std::size_t i = 0) const {
    return cumulative_forecaster_loss - comparators.at(i).cumulative_loss;
  }
};

/// Powers of two up to n, plus n itself when n is not a power of two.
std::vector<std::size_t> pow2_checkpoints(std::size_t n, std::size_t first = 1);

/// Runs the protocol: for t = 1..n reveal x_t, obtain yhat_t, reveal y_t,
/// charge (y_t - yhat_t)^2, then update the forecaster. Regret against each
/// comparator is recorded at every checkpoint. A KAAR NumericalBreakdown
/// propagates with the round index it occurred in.
GameTrace play(Forecaster& forecaster, const Stream& stream,
               std::span<const Comparator* const> comparators,
               std::span<const std::size_t> checkpoints);

struct ExponentFit {
  LineFit fit;
  std::size_t floored = 0;   // checkpoints whose regret was <= 0
  bool all_floored = false;  // regret never accumulated; fit is meaningless
};

/// OLS of log(max(R_n, floor)) on log n. Needs at least four checkpoints.
ExponentFit estimate_exponent(std::span<const std::size_t> n, std::span<const double> regret,
                              double floor = 1e-12);

}  // namespace kaar
