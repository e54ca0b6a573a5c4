#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "slrprune/tensor.hpp"

namespace slrprune {

// Per-layer list of weight tensors. The same structure carries the duplicate
// variables Z and the multipliers, which are shape-parallel by construction.
struct WeightSet {
  std::vector<Tensor> layers;

  std::int64_t layer_count() const { return static_cast<std::int64_t>(layers.size()); }
  std::int64_t total_entries() const;

  static WeightSet zeros_like(const WeightSet& other);
};

using MultiplierSet = WeightSet;

bool same_structure(const WeightSet& a, const WeightSet& b);
void require_same_structure(const WeightSet& a, const WeightSet& b, const char* what);

// dst += a * x, layer by layer
void add_scaled_inplace(WeightSet& dst, double a, const WeightSet& x);
WeightSet add_scaled(const WeightSet& base, double a, const WeightSet& x);

// Frobenius norm of the concatenation of all layers of (w - z).
double violation_norm(const WeightSet& w, const WeightSet& z);

double total_frobenius_norm(const WeightSet& w);

// Per-layer nonzero allowance l_n.
struct SparsityBudget {
  std::vector<std::int64_t> keep;

  // l_n = floor((1 - fraction_n) * entries_n); fractions in [0,1].
  // A single fraction applies to every layer.
  static SparsityBudget from_fractions(const WeightSet& w, std::span<const double> fractions);
  static SparsityBudget exact(std::vector<std::int64_t> keep);

  void validate_against(const WeightSet& w) const;
};

// card(z_n) <= l_n for every layer
bool is_feasible(const WeightSet& z, const SparsityBudget& budget);

}  // namespace slrprune
