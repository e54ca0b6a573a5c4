#include "slrprune/optimizer.hpp"

#include <cmath>

#include "slrprune/errors.hpp"

namespace slrprune {

namespace {
constexpr double kBeta1 = 0.9;
constexpr double kBeta2 = 0.999;
constexpr double kEps = 1e-8;
}  // namespace

void OptimizerConfig::validate() const {
  if (!(learning_rate > 0.0)) throw DomainError("learning_rate must be > 0");
  if (batch_size <= 0) throw DomainError("batch_size must be > 0");
}

OptimizerKind optimizer_kind_from_string(const std::string& s) {
  if (s == "sgd") return OptimizerKind::sgd;
  if (s == "adam") return OptimizerKind::adam;
  throw DomainError("unknown optimizer kind '" + s + "' (expected sgd|adam)");
}

std::string to_string(OptimizerKind kind) {
  return kind == OptimizerKind::sgd ? "sgd" : "adam";
}

Optimizer::Optimizer(OptimizerConfig cfg) : cfg_(cfg) {
  cfg_.validate();
}

void Optimizer::reset() {
  t_ = 0;
  m_.clear();
  v_.clear();
}

void Optimizer::step_tensor(Tensor& param, const Tensor& grad, std::size_t slot) {
  if (!param.same_shape(grad)) throw ShapeError("optimizer step: gradient shape mismatch");
  auto pv = param.values();
  auto gv = grad.values();
  if (cfg_.kind == OptimizerKind::sgd) {
    for (std::size_t i = 0; i < pv.size(); ++i) pv[i] -= cfg_.learning_rate * gv[i];
  } else {
    while (m_.size() <= slot) {
      m_.push_back(Tensor());
      v_.push_back(Tensor());
    }
    if (m_[slot].empty()) {
      m_[slot] = Tensor::zeros_like(param);
      v_[slot] = Tensor::zeros_like(param);
    }
    auto mv = m_[slot].values();
    auto vv = v_[slot].values();
    const double bc1 = 1.0 - std::pow(kBeta1, static_cast<double>(t_));
    const double bc2 = 1.0 - std::pow(kBeta2, static_cast<double>(t_));
    for (std::size_t i = 0; i < pv.size(); ++i) {
      mv[i] = kBeta1 * mv[i] + (1.0 - kBeta1) * gv[i];
      vv[i] = kBeta2 * vv[i] + (1.0 - kBeta2) * gv[i] * gv[i];
      const double mhat = mv[i] / bc1;
      const double vhat = vv[i] / bc2;
      pv[i] -= cfg_.learning_rate * mhat / (std::sqrt(vhat) + kEps);
    }
  }
  ensure_all_finite(param, "optimizer step");
}

void Optimizer::step(WeightSet& w, const WeightSet& grad_w, std::vector<Tensor>& b,
                     const std::vector<Tensor>& grad_b) {
  require_same_structure(w, grad_w, "optimizer step");
  if (b.size() != grad_b.size()) throw ShapeError("optimizer step: bias gradient count mismatch");
  ++t_;
  std::size_t slot = 0;
  for (std::size_t i = 0; i < w.layers.size(); ++i) step_tensor(w.layers[i], grad_w.layers[i], slot++);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].empty()) {
      ++slot;
      continue;
    }
    step_tensor(b[i], grad_b[i], slot++);
  }
}

void Optimizer::step(WeightSet& w, const WeightSet& grad_w) {
  std::vector<Tensor> none;
  step(w, grad_w, none, none);
}

}  // namespace slrprune
