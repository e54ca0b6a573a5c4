#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slrprune/objective.hpp"
#include "slrprune/weights.hpp"

namespace slrprune {

enum class OptimizerKind { sgd, adam };

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::adam;
  double learning_rate = 0.01;
  int batch_size = 128;

  void validate() const;
};

OptimizerKind optimizer_kind_from_string(const std::string& s);
std::string to_string(OptimizerKind kind);

// Gradient-step engine over a weight set plus bias tensors. SGD is the
// plain rule w -= lr * g; Adam keeps first/second moment state per tensor.
class Optimizer {
 public:
  explicit Optimizer(OptimizerConfig cfg);

  void step(WeightSet& w, const WeightSet& grad_w, std::vector<Tensor>& b, const std::vector<Tensor>& grad_b);
  void step(WeightSet& w, const WeightSet& grad_w);

  void reset();

  const OptimizerConfig& config() const { return cfg_; }

 private:
  void step_tensor(Tensor& param, const Tensor& grad, std::size_t slot);

  OptimizerConfig cfg_;
  std::int64_t t_ = 0;
  std::vector<Tensor> m_;
  std::vector<Tensor> v_;
};

}  // namespace slrprune
