#include "kaar/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace kaar {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-16;
constexpr int kMaxIterations = 100000;

// Taylor coefficients of 1/Gamma(z) = sum_{k>=1} c_k z^k (c_0 = 0), computed
// at 40 digits. Index i holds c_{i+1}.
constexpr std::array<double, 30> kRecipGammaTaylor = {
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -1.2504934821426706573e-6,
    1.1330272319816958824e-6,
    -2.0563384169776071035e-7,
    6.1160951044814158179e-9,
    5.0020076444692229301e-9,
    -1.1812745704870201446e-9,
    1.0434267116911005105e-10,
    7.782263439905071254e-12,
    -3.6968056186422057082e-12,
    5.100370287454475979e-13,
    -2.0583260535665067832e-14,
    -5.3481225394230179824e-15,
    1.2267786282382607902e-15,
    -1.1812593016974587695e-16,
    1.1866922547516003326e-18,
    1.4123806553180317816e-18,
    -2.2987456844353702066e-19,
    1.7144063219273374334e-20,
};

// Temme's auxiliary gammas for |mu| <= 1/2:
//   gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)
//   gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
// Splitting the Taylor series into even and odd parts removes the
// cancellation in gam1 near mu = 0.
struct TemmeGammas {
  double gam1;
  double gam2;
  double recip_gamma_plus;   // 1/Gamma(1+mu)
  double recip_gamma_minus;  // 1/Gamma(1-mu)
};

TemmeGammas temme_gammas(double mu) {
  const double mu2 = mu * mu;
  double odd = 0.0;   // sum over odd k of c_k mu^{k-1}
  double even = 0.0;  // sum over even k of c_k mu^{k-2}
  for (int i = static_cast<int>(kRecipGammaTaylor.size()) - 1; i >= 0; --i) {
    const int k = i + 1;
    if (k % 2 == 1) {
      odd = odd * mu2 + kRecipGammaTaylor[i];
    } else {
      even = even * mu2 + kRecipGammaTaylor[i];
    }
  }
  TemmeGammas g{};
  g.gam1 = -even;
  g.gam2 = odd;
  g.recip_gamma_plus = odd + mu * even;
  g.recip_gamma_minus = odd - mu * even;
  return g;
}

struct KPair {
  double k_mu;
  double k_mu1;
};

// Temme's series for K_mu(x), K_{mu+1}(x), |mu| <= 1/2, x < 2.
KPair temme_series(double mu, double x) {
  const double x2 = 0.5 * x;
  const double pimu = kPi * mu;
  const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
  const double d = -std::log(x2);
  double e = mu * d;
  const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
  const TemmeGammas g = temme_gammas(mu);

  double ff = fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
  double sum = ff;
  e = std::exp(e);
  double p = 0.5 * e / g.recip_gamma_plus;
  double q = 0.5 / (e * g.recip_gamma_minus);
  double c = 1.0;
  const double dd = x2 * x2;
  double sum1 = p;
  const double mu2 = mu * mu;
  for (int i = 1; i < kMaxIterations; ++i) {
    ff = (i * ff + p + q) / (i * i - mu2);
    c *= dd / i;
    p /= (i - mu);
    q /= (i + mu);
    const double del = c * ff;
    sum += del;
    sum1 += c * (p - i * ff);
    if (std::abs(del) < std::abs(sum) * kEps) {
      break;
    }
  }
  return {sum, sum1 * 2.0 / x};
}

// Steed's continued fraction (Temme's CF2) for K_mu(x), K_{mu+1}(x),
// |mu| <= 1/2, x >= 2.
KPair steed_cf2(double mu, double x) {
  const double mu2 = mu * mu;
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25 - mu2;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  int i = 1;
  for (; i < kMaxIterations; ++i) {
    a -= 2 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) {
      break;
    }
  }
  if (i == kMaxIterations) {
    throw std::runtime_error("bessel_k: continued fraction did not converge");
  }
  h *= a1;
  const double k_mu = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
  return {k_mu, k_mu * (mu + x + 0.5 - h) / x};
}

double half_integer_k(int n, double x) {
  double term = 1.0;
  double sum = 1.0;
  const double inv_2x = 0.5 / x;
  for (int k = 0; k < n; ++k) {
    term *= static_cast<double>(n + k + 1) * static_cast<double>(n - k) /
            static_cast<double>(k + 1) * inv_2x;
    sum += term;
  }
  return std::sqrt(kPi / (2.0 * x)) * std::exp(-x) * sum;
}

[[noreturn]] void overflow(double nu, double x) {
  throw std::overflow_error("bessel_k: K_" + std::to_string(nu) + "(" +
                            std::to_string(x) + ") overflows double");
}

}  // namespace

double gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::domain_error("gamma: argument must be finite and positive");
  }
  const double g = std::tgamma(x);
  if (!std::isfinite(g)) {
    throw std::overflow_error("gamma: result overflows double");
  }
  return g;
}

bool is_half_integer_order(double nu) {
  const double n = nu - 0.5;
  return n >= 0.0 && n == std::floor(n) && n < 1e6;
}

double bessel_k(double nu, double x) {
  if (std::isnan(nu) || std::isnan(x)) {
    throw std::domain_error("bessel_k: NaN argument");
  }
  if (nu < 0.0 || !std::isfinite(nu)) {
    throw std::domain_error("bessel_k: order must be finite and nonnegative");
  }
  if (x <= 0.0) {
    throw std::domain_error("bessel_k: argument must be positive");
  }
  if (std::isinf(x)) {
    return 0.0;
  }

  double result;
  if (is_half_integer_order(nu)) {
    result = half_integer_k(static_cast<int>(nu - 0.5), x);
  } else {
    const int steps = static_cast<int>(std::floor(nu + 0.5));
    const double mu = nu - steps;
    KPair k = x < 2.0 ? temme_series(mu, x) : steed_cf2(mu, x);
    const double two_over_x = 2.0 / x;
    for (int i = 1; i <= steps; ++i) {
      const double next = (mu + i) * two_over_x * k.k_mu1 + k.k_mu;
      k.k_mu = k.k_mu1;
      k.k_mu1 = next;
      if (!std::isfinite(k.k_mu)) {
        overflow(nu, x);
      }
    }
    result = k.k_mu;
  }
  if (!std::isfinite(result)) {
    overflow(nu, x);
  }
  return result;
}

}  // namespace kaar
