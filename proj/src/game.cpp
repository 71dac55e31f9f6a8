#include "kaar/game.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace kaar {

KaarPlayer::KaarPlayer(KaarForecaster forecaster, bool clipped)
    : kaar_(std::move(forecaster)), clipped_(clipped) {
  if (clipped_ && !kaar_.clip_level()) {
    throw std::invalid_argument("kaar_clipped needs a clip level");
  }
}

double KaarPlayer::predict(std::span<const double> x) {
  pending_ = kaar_.extend(x);
  return clipped_ ? clip_forecast(pending_->forecast, *kaar_.clip_level()) : pending_->forecast;
}

void KaarPlayer::update(std::span<const double> x, double y) {
  if (pending_ && std::equal(x.begin(), x.end(), pending_->point.begin(), pending_->point.end())) {
    kaar_.commit(std::move(*pending_), y);
  } else {
    kaar_.update(x, y);
  }
  pending_.reset();
}

std::vector<std::size_t> pow2_checkpoints(std::size_t n, std::size_t first) {
  std::vector<std::size_t> out;
  for (std::size_t c = 1; c <= n; c *= 2) {
    if (c >= first) out.push_back(c);
  }
  if (out.empty() || out.back() != n) out.push_back(n);
  return out;
}

GameTrace play(Forecaster& forecaster, const Stream& stream,
               std::span<const Comparator* const> comparators,
               std::span<const std::size_t> checkpoints) {
  const std::size_t n = stream.size();
  if (stream.inputs.size() != n) {
    throw std::invalid_argument("play: stream inputs and labels differ in length");
  }
  for (std::size_t c : checkpoints) {
    if (c < 1 || c > n) {
      throw std::invalid_argument("play: checkpoints must lie in [1, n]");
    }
  }
  GameTrace trace;
  trace.forecaster = forecaster.id();
  trace.checkpoints.assign(checkpoints.begin(), checkpoints.end());
  std::sort(trace.checkpoints.begin(), trace.checkpoints.end());
  trace.rounds.reserve(n);

  std::vector<CompensatedSum> comp_loss(comparators.size());
  for (const Comparator* f : comparators) {
    trace.comparators.push_back({f->id(), f->norm_sq(), 0.0, {}});
  }
  CompensatedSum loss_sum;
  std::size_t next_checkpoint = 0;

  for (std::size_t t = 0; t < n; ++t) {
    const auto x = stream.inputs[t];
    const double yhat = forecaster.predict(x);
    const double y = stream.labels[t];
    const double loss = (y - yhat) * (y - yhat);
    loss_sum.add(loss);
    for (std::size_t i = 0; i < comparators.size(); ++i) {
      const double e = y - (*comparators[i])(x);
      comp_loss[i].add(e * e);
    }
    trace.rounds.push_back({t + 1, y, yhat, loss, loss_sum.value()});

    while (next_checkpoint < trace.checkpoints.size() && trace.checkpoints[next_checkpoint] == t + 1) {
      for (std::size_t i = 0; i < comparators.size(); ++i) {
        trace.comparators[i].regret_at_checkpoint.push_back(loss_sum.value() - comp_loss[i].value());
      }
      ++next_checkpoint;
    }

    forecaster.update(x, y);
  }
  trace.cumulative_forecaster_loss = loss_sum.value();
  for (std::size_t i = 0; i < comparators.size(); ++i) {
    trace.comparators[i].cumulative_loss = comp_loss[i].value();
  }
  return trace;
}

ExponentFit estimate_exponent(std::span<const std::size_t> n, std::span<const double> regret,
                              double floor) {
  if (n.size() != regret.size()) {
    throw std::invalid_argument("estimate_exponent: length mismatch");
  }
  if (n.size() < 4) {
    throw std::invalid_argument("estimate_exponent: need at least four checkpoints");
  }
  ExponentFit out;
  std::vector<double> x(n.size());
  std::vector<double> y(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    x[i] = static_cast<double>(n[i]);
    if (!(regret[i] > 0.0)) ++out.floored;
    y[i] = std::max(regret[i], floor);
  }
  out.all_floored = out.floored == n.size();
  out.fit = fit_loglog(x, y);
  return out;
}

}  // namespace kaar
