#ifndef TSYM_MLP_HPP
#define TSYM_MLP_HPP

#include <Eigen/Dense>
#include <vector>

#include "tsym/rng.hpp"
#include "tsym/types.hpp"

namespace tsym {

struct MlpLayer {
  Eigen::MatrixXd W;  // out x in
  Eigen::VectorXd b;  // out
};

// Fully connected network with rectified-linear hidden layers and a linear
// output, batched column-wise (inputs are in_dim x batch matrices). Forward
// caches activations in a caller-owned workspace so backward can run without
// recomputation; backward produces exact reverse-mode gradients and,
// optionally, the gradient with respect to the input batch.
class Mlp {
 public:
  Mlp() = default;
  explicit Mlp(const std::vector<int>& layer_sizes);  // {in, hidden..., out}

  // U(-1/sqrt(fan_in), 1/sqrt(fan_in)) for weights and biases.
  void init_uniform(RngStream& rng);

  int input_dim() const { return sizes_.front(); }
  int output_dim() const { return sizes_.back(); }
  const std::vector<int>& layer_sizes() const { return sizes_; }
  std::vector<MlpLayer>& layers() { return layers_; }
  const std::vector<MlpLayer>& layers() const { return layers_; }

  struct Workspace {
    // acts[0] is the input batch; acts[l+1] the output of layer l
    // (post-activation on hidden layers, linear on the last).
    std::vector<Eigen::MatrixXd> acts;
  };

  struct Gradients {
    std::vector<MlpLayer> layers;
    void set_zero();
  };
  Gradients make_gradients() const;

  // Single-sample forward.
  std::vector<double> apply(const std::vector<double>& input) const;

  const Eigen::MatrixXd& forward(const Eigen::MatrixXd& input, Workspace& ws) const;

  // output_grad is dL/d(output), shaped out_dim x batch. Parameter gradients
  // are accumulated into grads (call grads.set_zero() first when starting a
  // fresh loss); input_grad, when non-null, receives dL/d(input).
  void backward(const Workspace& ws, const Eigen::MatrixXd& output_grad, Gradients& grads,
                Eigen::MatrixXd* input_grad = nullptr) const;

  // dL/d(input) only, skipping parameter-gradient accumulation.
  void backward_input(const Workspace& ws, const Eigen::MatrixXd& output_grad,
                      Eigen::MatrixXd& input_grad) const;

  // Flat parameter views for optimizers, checkpoints and gradient checks.
  std::size_t parameter_count() const;
  std::vector<double> flatten() const;
  void unflatten(const std::vector<double>& flat);

  bool finite() const;

 private:
  std::vector<int> sizes_;
  std::vector<MlpLayer> layers_;
};

// target <- (1 - rate) * target + rate * source, elementwise.
void soft_update(Mlp& target, const Mlp& source, double rate);

// Adam over an Mlp's parameters; moment buffers live here, aligned with the
// network's layer shapes.
class AdamOptimizer {
 public:
  explicit AdamOptimizer(double lr, double beta1 = 0.9, double beta2 = 0.999,
                         double eps = 1e-8);
  void step(Mlp& params, const Mlp::Gradients& grads);
  double learning_rate() const { return lr_; }

 private:
  double lr_, beta1_, beta2_, eps_;
  long t_ = 0;
  std::vector<MlpLayer> m_, v_;
};

// Same update rule for a single scalar parameter (the entropy temperature).
class AdamScalar {
 public:
  explicit AdamScalar(double lr, double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8)
      : lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps) {}
  void step(double& param, double grad);

 private:
  double lr_, beta1_, beta2_, eps_;
  long t_ = 0;
  double m_ = 0.0, v_ = 0.0;
};

}  // namespace tsym

#endif  // TSYM_MLP_HPP
