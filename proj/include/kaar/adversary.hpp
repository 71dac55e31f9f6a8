#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kaar/point_set.hpp"
#include "kaar/random.hpp"
#include "kaar/sobolev_kernel.hpp"

namespace kaar {

/// A benchmark function f: [-1,1]^d -> R for regret accounting.
class Comparator {
 public:
  virtual ~Comparator() = default;
  virtual double operator()(std::span<const double> x) const = 0;
  virtual std::string id() const = 0;
  /// Exact RKHS norm squared when known.
  virtual std::optional<double> norm_sq() const { return std::nullopt; }
};

class ZeroComparator final : public Comparator {
 public:
  double operator()(std::span<const double>) const override { return 0.0; }
  std::string id() const override { return "zero"; }
  std::optional<double> norm_sq() const override { return 0.0; }
};

/// f(x) = sum_i c_i k(z_i, x), with |f|^2 = c^T K c by the reproducing
/// property.
class RepresenterComparator final : public Comparator {
 public:
  RepresenterComparator(SobolevKernel kernel, PointSet centers, std::vector<double> coeffs);

  double operator()(std::span<const double> x) const override;
  std::string id() const override { return "representer"; }
  std::optional<double> norm_sq() const override { return norm_sq_; }

  const PointSet& centers() const { return centers_; }
  const std::vector<double>& coeffs() const { return coeffs_; }

 private:
  SobolevKernel kernel_;
  PointSet centers_;
  std::vector<double> coeffs_;
  double norm_sq_;
};

/// Representer with `count` centers uniform on [-1,1]^d, Gaussian
/// coefficients rescaled so that |f|^2 = norm_sq exactly.
RepresenterComparator random_representer(const SobolevKernel& kernel, std::size_t count,
                                         double norm_sq, Rng& rng);

/// Smooth bump g(x) = 1/2 (1 - sigma((|x|^2 - a^2)/(c^2 - a^2))), a = 1/4,
/// c = 1/2, sigma(t) = h(t)/(h(t) + h(1-t)), h(t) = exp(-1/t^2) for t > 0
/// and 0 otherwise. Equals 1/2 on |x| <= 1/4 and vanishes for |x| >= 1/2.
double mollifier(std::span<const double> x);

/// Numerical estimate of |g|_{W_inf^beta} for 0 < beta <= 2: the largest of
/// sup|D^gamma g| over |gamma| <= floor(beta) and, for fractional beta, the
/// Holder quotient of the order-floor(beta) derivatives. Derivatives come
/// from central differences of the radial profile; the Holder quotient is
/// sampled over pairs on a coordinate axis. Cached per (d, beta).
double mollifier_norm(int d, double beta);

/// floor(2 n^{1/d}) computed in integer arithmetic.
long cells_per_axis(long n_grid, int d);

/// Member of the bump class on the cube partition of [-1,1]^d:
///
///   f(x) = M n^{-beta/d} / (4 |g|) * sum_t c_t g(n^{1/d} (x - a_t)),
///
/// with cubes of side b = n^{-1/d}, floor(2 n^{1/d}) per axis, centers a_t
/// in lexicographic order (first coordinate most significant) and c_t = +-1.
class BumpComparator final : public Comparator {
 public:
  BumpComparator(long n_grid, int d, double beta, double m, std::vector<int> signs);

  double operator()(std::span<const double> x) const override;
  std::string id() const override { return "bump"; }

  long n_grid() const { return n_grid_; }
  int dim() const { return d_; }
  double beta() const { return beta_; }
  long cells_per_axis() const { return per_axis_; }
  std::size_t size() const { return signs_.size(); }
  double cell_width() const { return width_; }
  double g_norm() const { return g_norm_; }
  /// M n^{-beta/d} / (4 |g|); the value at a center is sign * amplitude / 2.
  double amplitude() const { return amplitude_; }
  const std::vector<int>& signs() const { return signs_; }
  /// Center of the t-th cube, t zero-based.
  std::vector<double> center(std::size_t t) const;

 private:
  long n_grid_;
  int d_;
  double beta_;
  double m_;
  long per_axis_;
  double width_;
  double g_norm_;
  double amplitude_;
  std::vector<int> signs_;
};

/// An oblivious data sequence.
struct Stream {
  PointSet inputs;
  std::vector<double> labels;
  std::size_t size() const { return labels.size(); }
};

struct ShatteringGame {
  Stream stream;
  BumpComparator comparator;
};

/// Cube centers a_1..a_N in order with labels sign_t * M, signs uniform from
/// rng; the comparator carries the same signs.
ShatteringGame shattering_stream(long n_grid, int d, double m, double beta, Rng& rng);

/// x_t uniform on [-1,1]^d, y_t = clamp(f(x_t) + noise_sd * N(0,1), -M, M).
Stream iid_stream(const Comparator& f, int d, double m, double noise_sd, std::size_t n, Rng& rng);

}  // namespace kaar
