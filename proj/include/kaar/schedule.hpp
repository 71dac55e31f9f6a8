#pragma once

#include <limits>
#include <string>

namespace kaar {

enum class Regime { smooth, hard, manual };

Regime parse_regime(const std::string& name);
std::string to_string(Regime regime);

/// Theory-driven choice of the RKHS smoothness s and the ridge tau for a
/// benchmark class of Sobolev balls W_p^beta on [-1,1]^d and horizon n.
///
/// smooth (beta > d/2):      s = beta,        tau = n^{d/(2 beta + d)}
/// hard   (d/p < beta <= d/2, p > 2):
///                           s = d/2 + eps,   tau = n^{1 - (d(1-1/p) - beta')/(d(1-2/p))},
///                           beta' = beta - eps
/// manual: s and tau are taken as given.
///
/// `epsilon` has no prescribed value; 0.05 is a default, not a derived one.
struct Schedule {
  Regime regime = Regime::smooth;
  double beta = 1.0;
  double p = std::numeric_limits<double>::infinity();
  double epsilon = 0.05;
  long horizon = 1;
  double manual_s = 0.0;
  double manual_tau = 0.0;

  bool operator==(const Schedule&) const = default;
};

struct KernelChoice {
  double s;
  double tau;
};

/// Throws std::invalid_argument when the regime's parameter constraints fail.
KernelChoice schedule_tau(const Schedule& schedule, int d);

/// Growth exponent of R_n predicted by the regime:
/// smooth 1 - 2 beta/(2 beta + d); hard 1 - (beta/d)(p - d/beta)/(p - 2),
/// which is 1 - beta/d for p = inf. Throws for manual.
double target_exponent(const Schedule& schedule, int d);

}  // namespace kaar
