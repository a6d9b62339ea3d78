#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bezier_ifs {

/// Finite set of points in the complex plane; stands in for a compact set.
struct PointCloud {
  std::vector<std::complex<double>> points;
  int generation = 0;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  std::span<const std::complex<double>> view() const { return points; }
};

/// Points of C^(n+1) in homogeneous coordinates, stored flat.
class HomogeneousCloud {
 public:
  HomogeneousCloud() = default;
  explicit HomogeneousCloud(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t size() const { return width_ == 0 ? 0 : data_.size() / width_; }
  bool empty() const { return data_.empty(); }

  std::span<const std::complex<double>> operator[](std::size_t i) const {
    return {data_.data() + i * width_, width_};
  }
  std::span<std::complex<double>> operator[](std::size_t i) { return {data_.data() + i * width_, width_}; }

  void push_back(std::span<const std::complex<double>> p) { data_.insert(data_.end(), p.begin(), p.end()); }
  void resize(std::size_t count) { data_.resize(count * width_); }
  void reserve(std::size_t count) { data_.reserve(count * width_); }

  std::vector<std::complex<double>>& raw() { return data_; }
  const std::vector<std::complex<double>>& raw() const { return data_; }

 private:
  std::size_t width_ = 0;
  std::vector<std::complex<double>> data_;
};

}  // namespace bezier_ifs
