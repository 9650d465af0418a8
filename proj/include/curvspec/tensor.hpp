#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace curvspec {

// Minimal dense rank-3 tensor with uniform extent n per index.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n, 0.0) {}

  int dim() const { return n_; }

  double& operator()(int i, int j, int k) {
    return data_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
  }
  double operator()(int i, int j, int k) const {
    return data_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : data_) m = std::max(m, std::fabs(x));
    return m;
  }

 private:
  int n_ = 0;
  std::vector<double> data_;
};

// Minimal dense rank-4 tensor with uniform extent n per index.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int n)
      : n_(n), data_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

  int dim() const { return n_; }

  double& operator()(int i, int j, int k, int l) {
    return data_[((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l];
  }
  double operator()(int i, int j, int k, int l) const {
    return data_[((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l];
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : data_) m = std::max(m, std::fabs(x));
    return m;
  }

 private:
  int n_ = 0;
  std::vector<double> data_;
};

}  // namespace curvspec
