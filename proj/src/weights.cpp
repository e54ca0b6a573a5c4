#include "slrprune/weights.hpp"

#include <cmath>
#include <string>

#include "slrprune/errors.hpp"

namespace slrprune {

std::int64_t WeightSet::total_entries() const {
  std::int64_t n = 0;
  for (const Tensor& t : layers) n += t.size();
  return n;
}

WeightSet WeightSet::zeros_like(const WeightSet& other) {
  WeightSet out;
  out.layers.reserve(other.layers.size());
  for (const Tensor& t : other.layers) out.layers.push_back(Tensor::zeros_like(t));
  return out;
}

bool same_structure(const WeightSet& a, const WeightSet& b) {
  if (a.layers.size() != b.layers.size()) return false;
  for (std::size_t i = 0; i < a.layers.size(); ++i) {
    if (!a.layers[i].same_shape(b.layers[i])) return false;
  }
  return true;
}

void require_same_structure(const WeightSet& a, const WeightSet& b, const char* what) {
  if (!same_structure(a, b)) {
    throw ShapeError(std::string(what) + ": weight sets are not shape-parallel");
  }
}

void add_scaled_inplace(WeightSet& dst, double a, const WeightSet& x) {
  require_same_structure(dst, x, "add_scaled");
  for (std::size_t i = 0; i < dst.layers.size(); ++i) {
    axpy_inplace(a, x.layers[i], dst.layers[i]);
  }
}

WeightSet add_scaled(const WeightSet& base, double a, const WeightSet& x) {
  WeightSet out = base;
  add_scaled_inplace(out, a, x);
  return out;
}

double violation_norm(const WeightSet& w, const WeightSet& z) {
  require_same_structure(w, z, "violation_norm");
  double sum = 0.0;
  for (std::size_t i = 0; i < w.layers.size(); ++i) {
    auto wv = w.layers[i].values();
    auto zv = z.layers[i].values();
    for (std::size_t j = 0; j < wv.size(); ++j) {
      const double d = wv[j] - zv[j];
      sum += d * d;
    }
  }
  return std::sqrt(sum);
}

double total_frobenius_norm(const WeightSet& w) {
  double sum = 0.0;
  for (const Tensor& t : w.layers) {
    for (double v : t.values()) sum += v * v;
  }
  return std::sqrt(sum);
}

SparsityBudget SparsityBudget::from_fractions(const WeightSet& w, std::span<const double> fractions) {
  if (fractions.size() != 1 && fractions.size() != w.layers.size()) {
    throw DomainError("sparsity fractions: expected 1 or " + std::to_string(w.layers.size()) + " values, got " +
                      std::to_string(fractions.size()));
  }
  SparsityBudget budget;
  budget.keep.reserve(w.layers.size());
  for (std::size_t i = 0; i < w.layers.size(); ++i) {
    const double f = fractions.size() == 1 ? fractions[0] : fractions[i];
    if (f < 0.0 || f > 1.0) {
      throw DomainError("sparsity fraction must be in [0,1], got " + std::to_string(f));
    }
    const double entries = static_cast<double>(w.layers[i].size());
    // epsilon guard so e.g. (1 - 0.9) * 100 floors to 10, not 9
    budget.keep.push_back(static_cast<std::int64_t>(std::floor((1.0 - f) * entries + 1e-9)));
  }
  budget.validate_against(w);
  return budget;
}

SparsityBudget SparsityBudget::exact(std::vector<std::int64_t> keep) {
  SparsityBudget budget;
  budget.keep = std::move(keep);
  return budget;
}

void SparsityBudget::validate_against(const WeightSet& w) const {
  if (keep.size() != w.layers.size()) {
    throw DomainError("sparsity budget has " + std::to_string(keep.size()) + " entries for " +
                      std::to_string(w.layers.size()) + " layers");
  }
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] > w.layers[i].size()) {
      throw DomainError("layer " + std::to_string(i) + " budget " + std::to_string(keep[i]) +
                        " outside [0, " + std::to_string(w.layers[i].size()) + "]");
    }
  }
}

bool is_feasible(const WeightSet& z, const SparsityBudget& budget) {
  if (budget.keep.size() != z.layers.size()) return false;
  for (std::size_t i = 0; i < z.layers.size(); ++i) {
    if (count_nonzero(z.layers[i]) > budget.keep[i]) return false;
  }
  return true;
}

}  // namespace slrprune
