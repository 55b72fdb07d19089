#include "tsym/mlp.hpp"

#include <cmath>

namespace tsym {

Mlp::Mlp(const std::vector<int>& layer_sizes) : sizes_(layer_sizes) {
  if (sizes_.size() < 2) throw ContractViolation("Mlp: need at least input and output sizes");
  for (int s : sizes_)
    if (s < 1) throw ContractViolation("Mlp: layer sizes must be positive");
  layers_.resize(sizes_.size() - 1);
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    layers_[l].W = Eigen::MatrixXd::Zero(sizes_[l + 1], sizes_[l]);
    layers_[l].b = Eigen::VectorXd::Zero(sizes_[l + 1]);
  }
}

void Mlp::init_uniform(RngStream& rng) {
  for (auto& layer : layers_) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(layer.W.cols()));
    for (Eigen::Index i = 0; i < layer.W.rows(); ++i)
      for (Eigen::Index j = 0; j < layer.W.cols(); ++j)
        layer.W(i, j) = rng.uniform(-bound, bound);
    for (Eigen::Index i = 0; i < layer.b.size(); ++i) layer.b(i) = rng.uniform(-bound, bound);
  }
}

void Mlp::Gradients::set_zero() {
  for (auto& layer : layers) {
    layer.W.setZero();
    layer.b.setZero();
  }
}

Mlp::Gradients Mlp::make_gradients() const {
  Gradients g;
  g.layers.resize(layers_.size());
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    g.layers[l].W = Eigen::MatrixXd::Zero(layers_[l].W.rows(), layers_[l].W.cols());
    g.layers[l].b = Eigen::VectorXd::Zero(layers_[l].b.size());
  }
  return g;
}

std::vector<double> Mlp::apply(const std::vector<double>& input) const {
  if (static_cast<int>(input.size()) != input_dim())
    throw ContractViolation("Mlp::apply: input size mismatch");
  Eigen::MatrixXd x = Eigen::Map<const Eigen::VectorXd>(input.data(), input.size());
  Workspace ws;
  const Eigen::MatrixXd& y = forward(x, ws);
  return std::vector<double>(y.data(), y.data() + y.rows());
}

const Eigen::MatrixXd& Mlp::forward(const Eigen::MatrixXd& input, Workspace& ws) const {
  if (input.rows() != input_dim())
    throw ContractViolation("Mlp::forward: input rows != input_dim");
  ws.acts.resize(layers_.size() + 1);
  ws.acts[0] = input;
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    Eigen::MatrixXd& out = ws.acts[l + 1];
    out.noalias() = layers_[l].W * ws.acts[l];
    out.colwise() += layers_[l].b;
    if (l + 1 < layers_.size()) out = out.cwiseMax(0.0);  // relu on hidden layers
  }
  return ws.acts.back();
}

void Mlp::backward(const Workspace& ws, const Eigen::MatrixXd& output_grad, Gradients& grads,
                   Eigen::MatrixXd* input_grad) const {
  if (ws.acts.size() != layers_.size() + 1)
    throw ContractViolation("Mlp::backward: workspace does not match a forward pass");
  if (output_grad.rows() != output_dim() || output_grad.cols() != ws.acts.back().cols())
    throw ContractViolation("Mlp::backward: output_grad shape mismatch");
  if (grads.layers.size() != layers_.size())
    throw ContractViolation("Mlp::backward: gradient shape mismatch");

  Eigen::MatrixXd delta = output_grad;  // dL/d(pre-activation), linear output
  for (std::size_t l = layers_.size(); l-- > 0;) {
    grads.layers[l].W.noalias() += delta * ws.acts[l].transpose();
    grads.layers[l].b.noalias() += delta.rowwise().sum();
    if (l > 0) {
      Eigen::MatrixXd prev = layers_[l].W.transpose() * delta;
      // relu mask: activation output > 0 iff the unit was live
      delta = (ws.acts[l].array() > 0.0).cast<double>() * prev.array();
    } else if (input_grad != nullptr) {
      input_grad->noalias() = layers_[0].W.transpose() * delta;
    }
  }
}

void Mlp::backward_input(const Workspace& ws, const Eigen::MatrixXd& output_grad,
                         Eigen::MatrixXd& input_grad) const {
  if (ws.acts.size() != layers_.size() + 1)
    throw ContractViolation("Mlp::backward_input: workspace does not match a forward pass");
  Eigen::MatrixXd delta = output_grad;
  for (std::size_t l = layers_.size(); l-- > 0;) {
    Eigen::MatrixXd prev = layers_[l].W.transpose() * delta;
    if (l > 0)
      delta = (ws.acts[l].array() > 0.0).cast<double>() * prev.array();
    else
      input_grad = std::move(prev);
  }
}

std::size_t Mlp::parameter_count() const {
  std::size_t n = 0;
  for (const auto& layer : layers_)
    n += static_cast<std::size_t>(layer.W.size()) + static_cast<std::size_t>(layer.b.size());
  return n;
}

std::vector<double> Mlp::flatten() const {
  std::vector<double> flat;
  flat.reserve(parameter_count());
  for (const auto& layer : layers_) {
    flat.insert(flat.end(), layer.W.data(), layer.W.data() + layer.W.size());
    flat.insert(flat.end(), layer.b.data(), layer.b.data() + layer.b.size());
  }
  return flat;
}

void Mlp::unflatten(const std::vector<double>& flat) {
  if (flat.size() != parameter_count())
    throw ContractViolation("Mlp::unflatten: size mismatch");
  std::size_t off = 0;
  for (auto& layer : layers_) {
    std::copy(flat.begin() + off, flat.begin() + off + layer.W.size(), layer.W.data());
    off += layer.W.size();
    std::copy(flat.begin() + off, flat.begin() + off + layer.b.size(), layer.b.data());
    off += layer.b.size();
  }
}

bool Mlp::finite() const {
  for (const auto& layer : layers_)
    if (!layer.W.allFinite() || !layer.b.allFinite()) return false;
  return true;
}

void soft_update(Mlp& target, const Mlp& source, double rate) {
  if (target.layer_sizes() != source.layer_sizes())
    throw ContractViolation("soft_update: shape mismatch");
  for (std::size_t l = 0; l < target.layers().size(); ++l) {
    target.layers()[l].W = (1.0 - rate) * target.layers()[l].W + rate * source.layers()[l].W;
    target.layers()[l].b = (1.0 - rate) * target.layers()[l].b + rate * source.layers()[l].b;
  }
}

AdamOptimizer::AdamOptimizer(double lr, double beta1, double beta2, double eps)
    : lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps) {}

void AdamOptimizer::step(Mlp& params, const Mlp::Gradients& grads) {
  if (grads.layers.size() != params.layers().size())
    throw ContractViolation("AdamOptimizer: gradient shape mismatch");
  if (m_.empty()) {
    m_.resize(params.layers().size());
    v_.resize(params.layers().size());
    for (std::size_t l = 0; l < params.layers().size(); ++l) {
      m_[l].W = Eigen::MatrixXd::Zero(params.layers()[l].W.rows(), params.layers()[l].W.cols());
      m_[l].b = Eigen::VectorXd::Zero(params.layers()[l].b.size());
      v_[l] = m_[l];
    }
  }
  ++t_;
  const double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
  const double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
  auto update = [&](auto& p, auto& m, auto& v, const auto& g) {
    m = beta1_ * m + (1.0 - beta1_) * g;
    v = beta2_ * v + (1.0 - beta2_) * g.cwiseProduct(g);
    p.array() -= lr_ * (m.array() / bc1) / ((v.array() / bc2).sqrt() + eps_);
  };
  for (std::size_t l = 0; l < params.layers().size(); ++l) {
    update(params.layers()[l].W, m_[l].W, v_[l].W, grads.layers[l].W);
    update(params.layers()[l].b, m_[l].b, v_[l].b, grads.layers[l].b);
  }
}

void AdamScalar::step(double& param, double grad) {
  ++t_;
  m_ = beta1_ * m_ + (1.0 - beta1_) * grad;
  v_ = beta2_ * v_ + (1.0 - beta2_) * grad * grad;
  const double mhat = m_ / (1.0 - std::pow(beta1_, static_cast<double>(t_)));
  const double vhat = v_ / (1.0 - std::pow(beta2_, static_cast<double>(t_)));
  param -= lr_ * mhat / (std::sqrt(vhat) + eps_);
}

}  // namespace tsym
