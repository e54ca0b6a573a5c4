#pragma once

#include <cstdint>
#include <vector>

#include "slrprune/tensor.hpp"

namespace slrprune {

// Mini-batch of inputs (batch_size x input_dim) with integer class labels.
struct Batch {
  Tensor inputs;
  std::vector<std::int32_t> labels;

  std::int64_t size() const { return static_cast<std::int64_t>(labels.size()); }
};

// Deterministic source of mini-batches.
class BatchStream {
 public:
  virtual ~BatchStream() = default;
  virtual Batch next() = 0;
  // steps covering one pass over the underlying data (1 for fixed streams)
  virtual int steps_per_epoch() const = 0;
};

}  // namespace slrprune
