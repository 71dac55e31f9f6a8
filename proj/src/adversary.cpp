#include "kaar/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace kaar {

RepresenterComparator::RepresenterComparator(SobolevKernel kernel, PointSet centers,
                                             std::vector<double> coeffs)
    : kernel_(std::move(kernel)), centers_(std::move(centers)), coeffs_(std::move(coeffs)) {
  if (centers_.size() != coeffs_.size() || centers_.empty()) {
    throw std::invalid_argument("representer: need one coefficient per center");
  }
  const GramMatrix k = gram(kernel_, centers_);
  const Eigen::Map<const Eigen::VectorXd> c(coeffs_.data(), static_cast<Eigen::Index>(coeffs_.size()));
  norm_sq_ = std::max(0.0, c.dot(k * c));
}

double RepresenterComparator::operator()(std::span<const double> x) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    sum += coeffs_[i] * kernel_(centers_[i], x);
  }
  return sum;
}

RepresenterComparator random_representer(const SobolevKernel& kernel, std::size_t count,
                                         double norm_sq, Rng& rng) {
  if (count == 0 || !(norm_sq > 0.0)) {
    throw std::invalid_argument("random_representer: need centers and a positive norm");
  }
  PointSet centers(kernel.dim());
  std::vector<double> x(static_cast<std::size_t>(kernel.dim()));
  for (std::size_t i = 0; i < count; ++i) {
    for (auto& xi : x) xi = rng.uniform(-1.0, 1.0);
    centers.push_back(x);
  }
  std::vector<double> coeffs(count);
  for (auto& c : coeffs) c = rng.normal();
  const RepresenterComparator raw(kernel, centers, coeffs);
  const double scale = std::sqrt(norm_sq / *raw.norm_sq());
  for (auto& c : coeffs) c *= scale;
  return RepresenterComparator(kernel, std::move(centers), std::move(coeffs));
}

namespace {

constexpr double kInner = 0.25;  // a
constexpr double kOuter = 0.5;   // c

double h_fn(double t) { return t > 0.0 ? std::exp(-1.0 / (t * t)) : 0.0; }

double sigma_fn(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = h_fn(t);
  const double b = h_fn(1.0 - t);
  return a / (a + b);
}

double mollifier_sq(double r2) {
  const double t = (r2 - kInner * kInner) / (kOuter * kOuter - kInner * kInner);
  return 0.5 * (1.0 - sigma_fn(t));
}

// Radial profile phi(rho) = g(rho e_1), extended evenly to rho < 0.
double profile(double rho) { return mollifier_sq(rho * rho); }

double profile_d1(double rho, double h) { return (profile(rho + h) - profile(rho - h)) / (2.0 * h); }

double profile_d2(double rho, double h) {
  return (profile(rho + h) - 2.0 * profile(rho) + profile(rho - h)) / (h * h);
}

double estimate_norm(int d, double beta) {
  const int order = static_cast<int>(std::floor(beta));
  const double frac = beta - order;
  constexpr double kStep = 1e-5;
  constexpr int kProfilePoints = 20001;

  double norm = 0.5;  // sup g = g(0)
  for (int i = 0; i < kProfilePoints; ++i) {
    const double rho = kOuter * i / (kProfilePoints - 1);
    if (order >= 1) {
      norm = std::max(norm, std::abs(profile_d1(rho, kStep)));
    }
    if (order >= 2) {
      // d_11 g = phi'' cos^2 + (phi'/rho) sin^2 and, for d >= 2,
      // d_12 g = (phi'' - phi'/rho) cos sin; sup over the angle.
      const double p2 = profile_d2(rho, kStep);
      norm = std::max(norm, std::abs(p2));
      if (d >= 2 && rho > 1e-3) {
        const double p1r = profile_d1(rho, kStep) / rho;
        norm = std::max({norm, std::abs(p1r), 0.5 * std::abs(p2 - p1r)});
      }
    }
  }

  if (frac > 0.0) {
    // Holder quotient of the order-`order` derivative along the x_1 axis.
    constexpr int kPairPoints = 2001;
    std::vector<double> u(kPairPoints);
    std::vector<double> v(kPairPoints);
    for (int i = 0; i < kPairPoints; ++i) {
      u[i] = -0.55 + 1.1 * i / (kPairPoints - 1);
      v[i] = order == 0 ? profile(u[i]) : profile_d1(u[i], kStep);
    }
    for (int i = 0; i < kPairPoints; ++i) {
      for (int j = i + 1; j < kPairPoints; ++j) {
        const double q = std::abs(v[i] - v[j]) / std::pow(u[j] - u[i], frac);
        norm = std::max(norm, q);
      }
    }
  }
  return norm;
}

}  // namespace

double mollifier(std::span<const double> x) {
  double r2 = 0.0;
  for (double xi : x) r2 += xi * xi;
  return mollifier_sq(r2);
}

double mollifier_norm(int d, double beta) {
  if (d < 1 || !(beta > 0.0) || beta > 2.0) {
    throw std::domain_error("mollifier_norm: supported for d >= 1 and 0 < beta <= 2");
  }
  static std::mutex mutex;
  static std::map<std::pair<int, double>, double> cache;
  const std::lock_guard lock(mutex);
  // The estimate only distinguishes d = 1 from d >= 2.
  const auto key = std::make_pair(std::min(d, 2), beta);
  if (auto it = cache.find(key); it != cache.end()) {
    return it->second;
  }
  const double value = estimate_norm(d, beta);
  cache.emplace(key, value);
  return value;
}

long cells_per_axis(long n_grid, int d) {
  if (n_grid < 1 || d < 1) {
    throw std::invalid_argument("cells_per_axis: need n_grid >= 1 and d >= 1");
  }
  // Largest m with m^d <= 2^d n.
  auto pow_le = [d](long m, long double bound) {
    long double p = 1.0L;
    for (int i = 0; i < d; ++i) p *= m;
    return p <= bound;
  };
  const long double bound = std::ldexp(static_cast<long double>(n_grid), d);
  long m = static_cast<long>(std::floor(2.0 * std::pow(static_cast<double>(n_grid), 1.0 / d)));
  while (m > 0 && !pow_le(m, bound)) --m;
  while (pow_le(m + 1, bound)) ++m;
  return m;
}

BumpComparator::BumpComparator(long n_grid, int d, double beta, double m, std::vector<int> signs)
    : n_grid_(n_grid),
      d_(d),
      beta_(beta),
      m_(m),
      per_axis_(kaar::cells_per_axis(n_grid, d)),
      width_(std::pow(static_cast<double>(n_grid), -1.0 / d)),
      g_norm_(mollifier_norm(d, beta)),
      amplitude_(m * std::pow(static_cast<double>(n_grid), -beta / d) / (4.0 * g_norm_)),
      signs_(std::move(signs)) {
  std::size_t expected = 1;
  for (int i = 0; i < d; ++i) expected *= static_cast<std::size_t>(per_axis_);
  if (signs_.size() != expected) {
    throw std::invalid_argument("bump comparator: expected " + std::to_string(expected) +
                                " signs, got " + std::to_string(signs_.size()));
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("bump comparator: signs must be +1 or -1");
    }
  }
}

std::vector<double> BumpComparator::center(std::size_t t) const {
  std::vector<double> a(static_cast<std::size_t>(d_));
  for (int i = d_ - 1; i >= 0; --i) {
    const auto k = static_cast<long>(t % static_cast<std::size_t>(per_axis_));
    t /= static_cast<std::size_t>(per_axis_);
    a[static_cast<std::size_t>(i)] = width_ * (0.5 + static_cast<double>(k)) - 1.0;
  }
  return a;
}

double BumpComparator::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != d_) {
    throw std::invalid_argument("bump comparator: dimension mismatch");
  }
  std::size_t t = 0;
  for (int i = 0; i < d_; ++i) {
    const double cell = std::floor((x[i] + 1.0) / width_);
    if (cell < 0.0 || cell >= static_cast<double>(per_axis_)) {
      return 0.0;
    }
    t = t * static_cast<std::size_t>(per_axis_) + static_cast<std::size_t>(cell);
  }
  const std::vector<double> a = center(t);
  double r2 = 0.0;
  for (int i = 0; i < d_; ++i) {
    const double z = (x[i] - a[i]) / width_;
    r2 += z * z;
  }
  return signs_[t] * amplitude_ * mollifier_sq(r2);
}

ShatteringGame shattering_stream(long n_grid, int d, double m, double beta, Rng& rng) {
  const long per_axis = cells_per_axis(n_grid, d);
  std::size_t count = 1;
  for (int i = 0; i < d; ++i) count *= static_cast<std::size_t>(per_axis);
  std::vector<int> signs(count);
  for (auto& s : signs) s = rng.sign();
  BumpComparator comparator(n_grid, d, beta, m, signs);

  Stream stream{PointSet(d), {}};
  stream.inputs.reserve(count);
  stream.labels.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    stream.inputs.push_back(comparator.center(t));
    stream.labels.push_back(signs[t] * m);
  }
  return {std::move(stream), std::move(comparator)};
}

Stream iid_stream(const Comparator& f, int d, double m, double noise_sd, std::size_t n, Rng& rng) {
  if (!(noise_sd >= 0.0)) {
    throw std::invalid_argument("iid_stream: noise_sd must be nonnegative");
  }
  Stream stream{PointSet(d), {}};
  stream.inputs.reserve(n);
  stream.labels.reserve(n);
  std::vector<double> x(static_cast<std::size_t>(d));
  for (std::size_t t = 0; t < n; ++t) {
    for (auto& xi : x) xi = rng.uniform(-1.0, 1.0);
    const double noise = noise_sd * rng.normal();
    stream.inputs.push_back(x);
    stream.labels.push_back(std::clamp(f(x) + noise, -m, m));
  }
  return stream;
}

}  // namespace kaar
