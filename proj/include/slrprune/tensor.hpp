#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "slrprune/errors.hpp"

namespace slrprune {

using Shape = std::vector<std::int64_t>;

// Dense row-major tensor of doubles, rank 1..4. Values are plain owned
// storage; copying copies the buffer.
class Tensor {
 public:
  Tensor() = default;  // empty placeholder, not valid for arithmetic
  explicit Tensor(Shape shape);
  Tensor(Shape shape, std::vector<double> data);

  static Tensor zeros_like(const Tensor& other) { return Tensor(other.shape_); }

  const Shape& shape() const { return shape_; }
  std::int64_t rank() const { return static_cast<std::int64_t>(shape_.size()); }
  std::int64_t size() const { return static_cast<std::int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  double& operator[](std::int64_t i) { return data_[static_cast<std::size_t>(i)]; }
  double operator[](std::int64_t i) const { return data_[static_cast<std::size_t>(i)]; }

  std::span<double> values() { return data_; }
  std::span<const double> values() const { return data_; }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

  void fill(double v);

 private:
  Shape shape_;
  std::vector<double> data_;
};

// sqrt of the sum of squared entries; fixed left-to-right reduction order.
double frobenius_norm(const Tensor& t);

// a*x + y elementwise. Throws ShapeError on mismatch.
Tensor axpy(double a, const Tensor& x, const Tensor& y);
void axpy_inplace(double a, const Tensor& x, Tensor& y);

// Hadamard product. Throws ShapeError on mismatch.
Tensor elementwise_mul(const Tensor& x, const Tensor& y);

void scale_inplace(Tensor& t, double a);

std::int64_t count_nonzero(const Tensor& t);

// Throws NumericError if any entry is NaN or infinite.
void ensure_all_finite(const Tensor& t, const char* what);

std::string shape_to_string(const Shape& s);

}  // namespace slrprune
