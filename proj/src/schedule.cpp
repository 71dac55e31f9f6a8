#include "kaar/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace kaar {

Regime parse_regime(const std::string& name) {
  if (name == "smooth") return Regime::smooth;
  if (name == "hard") return Regime::hard;
  if (name == "manual") return Regime::manual;
  throw std::invalid_argument("unknown regime '" + name + "'");
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::smooth: return "smooth";
    case Regime::hard: return "hard";
    case Regime::manual: return "manual";
  }
  return "?";
}

namespace {

void validate(const Schedule& sc, int d) {
  if (d < 1) {
    throw std::invalid_argument("schedule: dimension must be >= 1");
  }
  if (sc.horizon < 1) {
    throw std::invalid_argument("schedule: horizon must be >= 1");
  }
  switch (sc.regime) {
    case Regime::smooth:
      if (!(sc.beta > 0.5 * d)) {
        throw std::invalid_argument("schedule: smooth regime requires beta > d/2");
      }
      break;
    case Regime::hard:
      if (!(sc.p > 2.0)) {
        throw std::invalid_argument("schedule: hard regime requires p > 2");
      }
      if (!(sc.beta > d / sc.p && sc.beta <= 0.5 * d)) {
        throw std::invalid_argument("schedule: hard regime requires d/p < beta <= d/2");
      }
      if (!(sc.epsilon > 0.0 && sc.epsilon < sc.beta)) {
        throw std::invalid_argument("schedule: hard regime requires 0 < epsilon < beta");
      }
      break;
    case Regime::manual:
      if (!(sc.manual_s > 0.5 * d)) {
        throw std::invalid_argument("schedule: manual s must exceed d/2");
      }
      if (!(sc.manual_tau > 0.0)) {
        throw std::invalid_argument("schedule: manual tau must be positive");
      }
      break;
  }
}

}  // namespace

KernelChoice schedule_tau(const Schedule& sc, int d) {
  validate(sc, d);
  const double n = static_cast<double>(sc.horizon);
  switch (sc.regime) {
    case Regime::smooth:
      return {sc.beta, std::pow(n, d / (2.0 * sc.beta + d))};
    case Regime::hard: {
      const double inv_p = 1.0 / sc.p;  // 0 for p = inf
      const double beta_prime = sc.beta - sc.epsilon;
      const double exponent = 1.0 - (d * (1.0 - inv_p) - beta_prime) / (d * (1.0 - 2.0 * inv_p));
      return {0.5 * d + sc.epsilon, std::pow(n, exponent)};
    }
    case Regime::manual:
      return {sc.manual_s, sc.manual_tau};
  }
  throw std::logic_error("schedule: unreachable");
}

double target_exponent(const Schedule& sc, int d) {
  switch (sc.regime) {
    case Regime::smooth:
      return 1.0 - 2.0 * sc.beta / (2.0 * sc.beta + d);
    case Regime::hard:
      if (std::isinf(sc.p)) {
        return 1.0 - sc.beta / d;
      }
      return 1.0 - (sc.beta / d) * (sc.p - d / sc.beta) / (sc.p - 2.0);
    case Regime::manual:
      break;
  }
  throw std::invalid_argument("schedule: manual regime has no target exponent");
}

}  // namespace kaar
