#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "passim/rng.hpp"

namespace passim {

enum class OutputActivation { Tanh, Identity };

/// Dense feed-forward network with rectifier hidden layers. Batches are held
/// column-wise (one sample per column).
struct Mlp {
  std::vector<Eigen::MatrixXd> weights;  // layer l: out_l x in_l
  std::vector<Eigen::VectorXd> biases;
  OutputActivation out_act = OutputActivation::Identity;

  int layer_count() const { return static_cast<int>(weights.size()); }
  int input_dim() const { return static_cast<int>(weights.front().cols()); }
  int output_dim() const { return static_cast<int>(weights.back().rows()); }
  std::vector<int> layer_sizes() const;
  std::size_t parameter_count() const;

  /// Uniform +-1/sqrt(fan_in) initialization; the final layer is scaled by
  /// final_layer_scale.
  static Mlp create(const std::vector<int>& sizes, OutputActivation out_act,
                    Rng& rng, double final_layer_scale = 1.0);

  Eigen::VectorXd forward(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd forward_batch(const Eigen::MatrixXd& x) const;
};

bool same_architecture(const Mlp& a, const Mlp& b);

/// Forward-pass intermediates needed by the backward pass.
struct MlpCache {
  std::vector<Eigen::MatrixXd> pre;  // pre-activations per layer
  std::vector<Eigen::MatrixXd> act;  // act[0] = input, act[l] = layer output
};

struct MlpGrads {
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::VectorXd> biases;

  static MlpGrads zeros_like(const Mlp& net);
};

Eigen::MatrixXd mlp_forward_cached(const Mlp& net, const Eigen::MatrixXd& x,
                                   MlpCache& cache);

/// Reverse-mode pass. upstream is d(loss)/d(output), out_dim x batch. Either
/// output may be null: grads receives parameter gradients, input_grad the
/// gradient with respect to the input batch.
void mlp_backward(const Mlp& net, const MlpCache& cache,
                  const Eigen::MatrixXd& upstream, MlpGrads* grads,
                  Eigen::MatrixXd* input_grad = nullptr);

struct AdamState {
  std::vector<Eigen::MatrixXd> m_w, v_w;
  std::vector<Eigen::VectorXd> m_b, v_b;
  long step = 0;

  static AdamState zeros_like(const Mlp& net);
};

void adam_step(Mlp& net, const MlpGrads& grads, AdamState& state, double lr,
               double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8);

/// target <- tau * online + (1 - tau) * target. Throws on architecture
/// mismatch.
void soft_update(Mlp& target, const Mlp& online, double tau);

}  // namespace passim
