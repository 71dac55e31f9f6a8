#pragma once

#include <cstddef>
#include <vector>

namespace kaar {

/// Exponentially weighted average over a finite sup-norm net of the Holder
/// ball {f : [-1,1] -> [-M,M], |f(x) - f(y)| <= M |x - y|^beta}, d = 1.
///
/// Construction: m = ceil((2M/eps)^{1/beta}) equal cells; each expert is
/// piecewise constant with one value per cell taken from the grid
/// eps Z cap [-M,M] (plus +-M when the top gap exceeds eps/2), and adjacent
/// cell values differing by at most 2 eps. Rounding any ball member at the
/// cell centers gives such an expert within eps in sup norm, so the set is
/// an eps-net; its log-cardinality grows like eps^{-1/beta}.
///
/// Learning rate eta = 1/(8 M^2): squared loss on [-M,M] is eta-exp-concave,
/// so the weighted-average forecast has regret at most ln(N)/eta against the
/// best expert.
class ExpertNet {
 public:
  /// Throws std::invalid_argument for d != 1, beta outside (0, 1],
  /// eps <= 0, M <= 0, or a net with more than `max_experts` members.
  static ExpertNet build(double beta, double m, double epsilon, int d = 1,
                         std::size_t max_experts = std::size_t{1} << 20);

  /// Experts given directly as value arrays over `cells` equal cells.
  ExpertNet(std::size_t cells, std::vector<double> values, double m, double epsilon);

  std::size_t size() const { return count_; }
  std::size_t cells() const { return cells_; }
  double epsilon() const { return epsilon_; }
  double clip_level() const { return m_; }
  double eta() const { return eta_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& grid() const { return grid_; }

  std::size_t cell_of(double x) const;
  double expert_value(std::size_t i, double x) const { return values_[i * cells_ + cell_of(x)]; }

  /// sum_i w_i expert_i(x)
  double predict(double x) const;

  /// w_i <- w_i exp(-eta (y - expert_i(x))^2), renormalized. Throws
  /// std::invalid_argument for non-finite y.
  void update(double x, double y);

  /// Cardinality the construction would produce, without enumerating.
  static double count_experts(double beta, double m, double epsilon);

 private:
  void normalize();

  std::size_t cells_ = 0;
  std::size_t count_ = 0;
  double m_ = 1.0;
  double epsilon_ = 1.0;
  double eta_ = 0.125;
  std::vector<double> grid_;
  std::vector<double> values_;      // count_ x cells_, row-major
  std::vector<double> log_weights_;
  std::vector<double> weights_;
};

}  // namespace kaar
