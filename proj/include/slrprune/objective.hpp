#pragma once

#include <vector>

#include "slrprune/batch.hpp"
#include "slrprune/weights.hpp"

namespace slrprune {

// Loss gradients with respect to weights and (optionally) biases.
struct Gradients {
  WeightSet weights;
  std::vector<Tensor> biases;
};

// A differentiable training objective f over a set of weight tensors.
// Both the feed-forward network and the closed-form quadratic test
// objectives implement this, so the relaxation-based training loops can
// drive either one.
class TrainableObjective {
 public:
  virtual ~TrainableObjective() = default;

  virtual const WeightSet& weights() const = 0;
  virtual WeightSet& mutable_weights() = 0;

  // Empty when the objective has no bias parameters.
  virtual const std::vector<Tensor>& biases() const = 0;
  virtual std::vector<Tensor>& mutable_biases() = 0;

  // f at the current parameters.
  virtual double loss(const Batch& batch) const = 0;

  // d f / d parameters at the current parameters.
  virtual Gradients gradients(const Batch& batch) const = 0;
};

}  // namespace slrprune
