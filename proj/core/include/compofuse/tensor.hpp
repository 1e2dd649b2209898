#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "compofuse/error.hpp"

namespace compofuse {

/// 4-d extents. Feature maps use (n, h, w, c); convolution kernels reuse the
/// same storage as (kh, kw, in_c, out_c); vectors live in (1, 1, 1, c).
struct Shape {
  int n = 0, h = 0, w = 0, c = 0;

  int64_t size() const { return int64_t(n) * h * w * c; }
  bool operator==(const Shape&) const = default;

  std::string str() const {
    return "(" + std::to_string(n) + "," + std::to_string(h) + "," + std::to_string(w) + "," +
           std::to_string(c) + ")";
  }
};

/// Dense row-major double tensor. All arithmetic in this project is 64-bit;
/// reduction order inside every kernel is fixed, so results are bit-stable
/// across runs and thread counts.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape s) : shape_(s), data_(static_cast<size_t>(s.size()), 0.0) {}
  Tensor(Shape s, std::vector<double> values) : shape_(s), data_(std::move(values)) {
    require(static_cast<int64_t>(data_.size()) == s.size(), ErrorCode::ShapeMismatch,
            "tensor data does not match shape " + s.str());
  }

  static Tensor zeros(Shape s) { return Tensor(s); }
  static Tensor full(Shape s, double v) {
    Tensor t(s);
    for (double& x : t.data_) x = v;
    return t;
  }
  static Tensor scalar(double v) { return full({1, 1, 1, 1}, v); }

  const Shape& shape() const { return shape_; }
  int64_t size() const { return shape_.size(); }
  bool empty() const { return data_.empty(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  int64_t index(int b, int y, int x, int ch) const {
    return ((int64_t(b) * shape_.h + y) * shape_.w + x) * shape_.c + ch;
  }
  double& at(int b, int y, int x, int ch) { return data_[static_cast<size_t>(index(b, y, x, ch))]; }
  double at(int b, int y, int x, int ch) const {
    return data_[static_cast<size_t>(index(b, y, x, ch))];
  }

  /// Pointer to the channel row at one spatial site.
  double* row(int b, int y, int x) { return data_.data() + index(b, y, x, 0); }
  const double* row(int b, int y, int x) const { return data_.data() + index(b, y, x, 0); }

  void fill(double v) {
    for (double& x : data_) x = v;
  }

  bool all_finite() const {
    for (double x : data_)
      if (!std::isfinite(x)) return false;
    return true;
  }

  double min() const {
    double m = data_.empty() ? 0.0 : data_[0];
    for (double x : data_) m = x < m ? x : m;
    return m;
  }
  double max() const {
    double m = data_.empty() ? 0.0 : data_[0];
    for (double x : data_) m = x > m ? x : m;
    return m;
  }

  bool operator==(const Tensor& o) const { return shape_ == o.shape_ && data_ == o.data_; }

 private:
  Shape shape_;
  std::vector<double> data_;
};

/// Integer label map, one plane per batch element.
struct LabelMap {
  int n = 0, h = 0, w = 0;
  std::vector<int32_t> data;

  LabelMap() = default;
  LabelMap(int n_, int h_, int w_) : n(n_), h(h_), w(w_), data(size_t(n_) * h_ * w_, 0) {}

  int32_t& at(int b, int y, int x) { return data[(size_t(b) * h + y) * w + x]; }
  int32_t at(int b, int y, int x) const { return data[(size_t(b) * h + y) * w + x]; }
  int64_t size() const { return int64_t(n) * h * w; }
};

inline double max_abs_diff(const Tensor& a, const Tensor& b) {
  require(a.shape() == b.shape(), ErrorCode::ShapeMismatch,
          "max_abs_diff: " + a.shape().str() + " vs " + b.shape().str());
  double m = 0.0;
  for (int64_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

/// max_i |a_i - b_i| / (|b_i| + eps); the denominator guard keeps the measure
/// usable when the reference value is ~0.
inline double max_rel_diff(const Tensor& a, const Tensor& b, double eps = 1e-12) {
  require(a.shape() == b.shape(), ErrorCode::ShapeMismatch,
          "max_rel_diff: " + a.shape().str() + " vs " + b.shape().str());
  double m = 0.0;
  for (int64_t i = 0; i < a.size(); ++i) {
    double d = std::fabs(a[i] - b[i]) / (std::fabs(b[i]) + eps);
    m = std::max(m, d);
  }
  return m;
}

}  // namespace compofuse
