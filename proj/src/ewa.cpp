#include "kaar/ewa.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace kaar {

namespace {

struct NetShape {
  std::size_t cells;
  std::vector<double> grid;
  double max_jump;
};

NetShape net_shape(double beta, double m, double epsilon, int d) {
  if (d != 1) {
    throw std::invalid_argument("EWA net: only d = 1 is supported (got d = " + std::to_string(d) + ")");
  }
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("EWA net: beta must lie in (0, 1]");
  }
  if (!(m > 0.0) || !(epsilon > 0.0)) {
    throw std::invalid_argument("EWA net: M and epsilon must be positive");
  }
  NetShape shape;
  const double cells = std::ceil(std::pow(2.0 * m / epsilon, 1.0 / beta) * (1.0 - 1e-12));
  if (cells > 1e7) {
    throw std::invalid_argument("EWA net: epsilon too small");
  }
  shape.cells = std::max<std::size_t>(1, static_cast<std::size_t>(cells));
  const auto top = static_cast<long>(std::floor(m / epsilon * (1.0 + 1e-12)));
  if (m - top * epsilon > 0.5 * epsilon) {
    shape.grid.push_back(-m);
  }
  for (long k = -top; k <= top; ++k) {
    shape.grid.push_back(k * epsilon);
  }
  if (m - top * epsilon > 0.5 * epsilon) {
    shape.grid.push_back(m);
  }
  shape.max_jump = 2.0 * epsilon * (1.0 + 1e-9);
  return shape;
}

}  // namespace

double ExpertNet::count_experts(double beta, double m, double epsilon) {
  const NetShape shape = net_shape(beta, m, epsilon, 1);
  const std::size_t g = shape.grid.size();
  std::vector<double> paths(g, 1.0);
  std::vector<double> next(g);
  for (std::size_t c = 1; c < shape.cells; ++c) {
    for (std::size_t j = 0; j < g; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < g; ++i) {
        if (std::abs(shape.grid[i] - shape.grid[j]) <= shape.max_jump) s += paths[i];
      }
      next[j] = s;
    }
    paths.swap(next);
  }
  double total = 0.0;
  for (double p : paths) total += p;
  return total;
}

ExpertNet ExpertNet::build(double beta, double m, double epsilon, int d, std::size_t max_experts) {
  const NetShape shape = net_shape(beta, m, epsilon, d);
  const double count = count_experts(beta, m, epsilon);
  if (count > static_cast<double>(max_experts)) {
    throw std::invalid_argument("EWA net: " + std::to_string(count) + " experts exceed the limit of " +
                                std::to_string(max_experts));
  }
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count) * shape.cells);
  std::vector<double> path(shape.cells);
  const std::function<void(std::size_t)> walk = [&](std::size_t c) {
    for (double v : shape.grid) {
      if (c > 0 && std::abs(v - path[c - 1]) > shape.max_jump) continue;
      path[c] = v;
      if (c + 1 == shape.cells) {
        values.insert(values.end(), path.begin(), path.end());
      } else {
        walk(c + 1);
      }
    }
  };
  walk(0);
  ExpertNet net(shape.cells, std::move(values), m, epsilon);
  net.grid_ = shape.grid;
  return net;
}

ExpertNet::ExpertNet(std::size_t cells, std::vector<double> values, double m, double epsilon)
    : cells_(cells), m_(m), epsilon_(epsilon), eta_(1.0 / (8.0 * m * m)), values_(std::move(values)) {
  if (cells_ == 0 || values_.empty() || values_.size() % cells_ != 0) {
    throw std::invalid_argument("EWA net: value array must hold whole experts");
  }
  for (double v : values_) {
    if (std::abs(v) > m_) {
      throw std::invalid_argument("EWA net: expert values must lie in [-M, M]");
    }
  }
  count_ = values_.size() / cells_;
  log_weights_.assign(count_, 0.0);
  weights_.assign(count_, 1.0 / static_cast<double>(count_));
}

std::size_t ExpertNet::cell_of(double x) const {
  const double c = std::floor((x + 1.0) * 0.5 * static_cast<double>(cells_));
  if (c <= 0.0) return 0;
  return std::min(cells_ - 1, static_cast<std::size_t>(c));
}

double ExpertNet::predict(double x) const {
  const std::size_t c = cell_of(x);
  double sum = 0.0;
  for (std::size_t i = 0; i < count_; ++i) {
    sum += weights_[i] * values_[i * cells_ + c];
  }
  return sum;
}

void ExpertNet::update(double x, double y) {
  if (!std::isfinite(y)) {
    throw std::invalid_argument("EWA: label must be finite");
  }
  const std::size_t c = cell_of(x);
  for (std::size_t i = 0; i < count_; ++i) {
    const double e = y - values_[i * cells_ + c];
    log_weights_[i] -= eta_ * e * e;
  }
  normalize();
}

void ExpertNet::normalize() {
  const double top = *std::max_element(log_weights_.begin(), log_weights_.end());
  double total = 0.0;
  for (std::size_t i = 0; i < count_; ++i) {
    log_weights_[i] -= top;
    weights_[i] = std::exp(log_weights_[i]);
    total += weights_[i];
  }
  for (auto& w : weights_) w /= total;
}

}  // namespace kaar
