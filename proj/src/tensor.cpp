#include "slrprune/tensor.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace slrprune {

namespace {

std::int64_t checked_volume(const Shape& shape) {
  if (shape.empty() || shape.size() > 4) {
    throw ShapeError("tensor rank must be 1..4, got " + shape_to_string(shape));
  }
  std::int64_t volume = 1;
  for (std::int64_t d : shape) {
    if (d <= 0) {
      throw ShapeError("tensor dimensions must be positive, got " + shape_to_string(shape));
    }
    volume *= d;
  }
  return volume;
}

}  // namespace

Tensor::Tensor(Shape shape) : shape_(std::move(shape)) {
  data_.assign(static_cast<std::size_t>(checked_volume(shape_)), 0.0);
}

Tensor::Tensor(Shape shape, std::vector<double> data) : shape_(std::move(shape)), data_(std::move(data)) {
  const std::int64_t volume = checked_volume(shape_);
  if (volume != static_cast<std::int64_t>(data_.size())) {
    throw ShapeError("tensor data length " + std::to_string(data_.size()) + " does not match shape " +
                     shape_to_string(shape_));
  }
  ensure_all_finite(*this, "tensor constructor");
}

void Tensor::fill(double v) {
  for (double& x : data_) x = v;
}

double frobenius_norm(const Tensor& t) {
  double sum = 0.0;
  for (double v : t.values()) sum += v * v;
  return std::sqrt(sum);
}

Tensor axpy(double a, const Tensor& x, const Tensor& y) {
  if (!x.same_shape(y)) {
    throw ShapeError("axpy shape mismatch: " + shape_to_string(x.shape()) + " vs " + shape_to_string(y.shape()));
  }
  Tensor out = y;
  axpy_inplace(a, x, out);
  return out;
}

void axpy_inplace(double a, const Tensor& x, Tensor& y) {
  if (!x.same_shape(y)) {
    throw ShapeError("axpy shape mismatch: " + shape_to_string(x.shape()) + " vs " + shape_to_string(y.shape()));
  }
  auto xv = x.values();
  auto yv = y.values();
  for (std::size_t i = 0; i < xv.size(); ++i) yv[i] += a * xv[i];
  ensure_all_finite(y, "axpy");
}

Tensor elementwise_mul(const Tensor& x, const Tensor& y) {
  if (!x.same_shape(y)) {
    throw ShapeError("elementwise_mul shape mismatch: " + shape_to_string(x.shape()) + " vs " +
                     shape_to_string(y.shape()));
  }
  Tensor out(x.shape());
  auto xv = x.values();
  auto yv = y.values();
  auto ov = out.values();
  for (std::size_t i = 0; i < xv.size(); ++i) ov[i] = xv[i] * yv[i];
  ensure_all_finite(out, "elementwise_mul");
  return out;
}

void scale_inplace(Tensor& t, double a) {
  for (double& v : t.values()) v *= a;
  ensure_all_finite(t, "scale");
}

std::int64_t count_nonzero(const Tensor& t) {
  std::int64_t n = 0;
  for (double v : t.values()) {
    if (v != 0.0) ++n;
  }
  return n;
}

void ensure_all_finite(const Tensor& t, const char* what) {
  for (double v : t.values()) {
    if (!std::isfinite(v)) {
      throw NumericError(std::string(what) + ": non-finite tensor entry");
    }
  }
}

std::string shape_to_string(const Shape& s) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ",";
    os << s[i];
  }
  os << "]";
  return os.str();
}

}  // namespace slrprune
