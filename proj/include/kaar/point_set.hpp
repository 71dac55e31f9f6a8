#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace kaar {

/// A growable list of points in R^d stored row-major in one buffer.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(int dim) : dim_(dim) {
    if (dim < 1) {
      throw std::invalid_argument("PointSet: dimension must be positive");
    }
  }

  int dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
  bool empty() const { return data_.empty(); }

  std::span<const double> operator[](std::size_t i) const {
    return {data_.data() + i * dim_, static_cast<std::size_t>(dim_)};
  }
  std::span<double> operator[](std::size_t i) {
    return {data_.data() + i * dim_, static_cast<std::size_t>(dim_)};
  }

  void push_back(std::span<const double> x) {
    if (static_cast<int>(x.size()) != dim_) {
      throw std::invalid_argument("PointSet: point dimension mismatch");
    }
    data_.insert(data_.end(), x.begin(), x.end());
  }
  void push_back(std::initializer_list<double> x) {
    push_back(std::span<const double>(x.begin(), x.size()));
  }

  void reserve(std::size_t n) { data_.reserve(n * dim_); }
  const std::vector<double>& raw() const { return data_; }

  bool operator==(const PointSet&) const = default;

 private:
  int dim_ = 0;
  std::vector<double> data_;
};

}  // namespace kaar
