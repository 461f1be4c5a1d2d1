#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "passim/environment.hpp"
#include "passim/mlp.hpp"
#include "passim/replay.hpp"
#include "passim/rng.hpp"

namespace passim {

struct AgentConfig {
  double discount = 0.99;  // eta
  double tau_q = 0.001;
  double tau_mu = 0.001;
  double tau_q_target = 0.001;   // rate applied to Q'
  double tau_mu_target = 0.001;  // rate applied to mu'
  double actor_lr = 1e-4;
  double critic_lr = 1e-3;
  int batch_size = 64;
  std::size_t buffer_capacity = 100000;
  int episodes = 2000;  // M
  double noise_std = 0.2;
  double noise_decay = 0.999;  // per episode
  double noise_floor = 0.02;
  int hidden1 = 256;  // L1
  int hidden2 = 256;  // L2

  int warmup_transitions() const { return 10 * batch_size; }
  void validate() const;
};

struct EpisodeLog {
  int episode = 0;          // 1-based
  double reward_sum = 0.0;  // summed step rewards
  double mean_rate = 0.0;   // bps/Hz averaged over the episode
  double qos_violation_rate = 0.0;
  double noise_std = 0.0;
  double wall_ms = 0.0;
};

struct TrainLog {
  std::vector<EpisodeLog> episodes;
};

/// DDPG actor-critic pair with target copies, Adam optimizers, and the
/// training loop (act, store, sample, critic step, actor step, soft update).
class DdpgAgent {
 public:
  DdpgAgent(int state_dim, int action_dim, AgentConfig cfg, Rng& init_rng);

  /// Rebuild from externally provided networks (checkpoint restore).
  DdpgAgent(AgentConfig cfg, Mlp actor, Mlp critic, Mlp target_actor,
            Mlp target_critic);

  const AgentConfig& config() const { return cfg_; }
  const Mlp& actor() const { return actor_; }
  const Mlp& critic() const { return critic_; }
  const Mlp& target_actor() const { return target_actor_; }
  const Mlp& target_critic() const { return target_critic_; }

  int state_dim() const { return actor_.input_dim(); }
  int action_dim() const { return actor_.output_dim(); }

  /// Deterministic policy output.
  Eigen::VectorXd act(const Eigen::VectorXd& state) const;

  /// Policy output plus Gaussian noise, clipped to [-1, 1].
  Eigen::VectorXd act_noisy(const Eigen::VectorXd& state, double noise_std,
                            Rng& rng) const;

  /// One critic step toward y = r + eta Q'(s', mu'(s')); returns the
  /// pre-step mean squared TD error.
  double critic_update(const std::vector<const Transition*>& batch);

  /// One deterministic-policy-gradient ascent step on the actor.
  void actor_update(const std::vector<const Transition*>& batch);

  void soft_update_targets();

  /// Full training loop: cfg_.episodes episodes of env-length episodes.
  TrainLog train(Environment& env, Rng& rng);

 private:
  AgentConfig cfg_;
  Mlp actor_, critic_, target_actor_, target_critic_;
  AdamState actor_opt_, critic_opt_;
};

}  // namespace passim
