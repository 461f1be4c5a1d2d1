#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "passim/channel.hpp"
#include "passim/geometry.hpp"
#include "passim/mobility.hpp"
#include "passim/rng.hpp"

namespace passim {

/// Flat action layout: [Re(w) (N), Im(w) (N), raw positions (sum P_n)],
/// every entry nominally in [-1, 1] before decoding.
using ActionVector = Eigen::VectorXd;

/// Flat state layout: [previous action, |w|^2, g re/im pairs, h re/im pairs].
using StateVector = Eigen::VectorXd;

struct EnvConfig {
  double p_bs_w = 0.1;        // transmit power budget, W
  double r_th = 1.0;          // QoS rate threshold, bps/Hz
  double min_spacing = 0.00555;  // D, m
  int episode_steps = 100;    // T
  double pen_qos = 10.0;      // pen1
  double pen_guide = 1.0;     // pen2
  double pen_spacing = 1.0;   // pen3
  double state_ref_distance = 10.0;  // reference distance for h observation scaling

  WaveguideLayout layout;
  RwpParams mobility;
  ChannelParams channel;

  int waveguides() const { return layout.count(); }
  int total_pas() const { return layout.total_pas(); }
  int action_dim() const { return 2 * waveguides() + total_pas(); }
  int state_dim() const { return action_dim() + 1 + 4 * total_pas(); }

  /// Table-1 scenario.
  static EnvConfig table1_defaults();

  void validate() const;
};

struct PhysicalAction {
  Eigen::VectorXcd w;       // N entries
  PinchingConfig pinching;  // positions in meters
};

/// Rescales w so that |w|^2 equals the power budget. Throws on a zero vector.
Eigen::VectorXcd normalize_beamformer(const Eigen::VectorXcd& w_raw,
                                      double p_bs_w);

/// Maps raw actor output to a physical action. The beam part goes through
/// normalize_beamformer (zero vector falls back to the uniform equal-phase
/// beam); position entry t maps to (t+1)/2 * D_n.
PhysicalAction decode_action(const ActionVector& raw, const EnvConfig& cfg);

/// QoS indicator: 0 for x >= 0, x otherwise (non-positive).
double qos_indicator(double x);

/// Out-of-guide violation magnitude: distance from x to [0, length].
double guide_violation(double x, double length);

/// Spacing shortfall: max(min_spacing - gap, 0).
double spacing_shortfall(double gap, double min_spacing);

/// rate + I1(rate - R_th) * pen1 - sum I2 * pen2 - sum-over-pairs I3 * pen3.
double compute_reward(double rate, const PinchingConfig& config,
                      const EnvConfig& cfg);

struct StepOutcome {
  StateVector next_state;
  double reward = 0.0;
  double rate = 0.0;  // bps/Hz
  bool qos_met = false;
  std::vector<SpacingViolation> spacing;
  int out_of_guide = 0;
  Point3 user;
  PinchingConfig pinching;
  double beam_power = 0.0;
  std::uint64_t blockage_seed = 0;
};

struct EnvStats {
  std::uint64_t decode_count = 0;
  double max_power_rel_err = 0.0;  // max |   |w|^2 - P_BS | / P_BS over decodes
};

/// Episodic environment: one mobile user served through pinching antennas,
/// blockage and channels redrawn every step.
class Environment {
 public:
  explicit Environment(EnvConfig cfg);

  const EnvConfig& config() const { return cfg_; }
  int state_dim() const { return cfg_.state_dim(); }
  int action_dim() const { return cfg_.action_dim(); }

  /// Fresh user, uniform pinching, uniform equal-phase beam, new channels.
  StateVector reset(Rng& rng);

  /// Decodes the raw action and advances one step.
  StepOutcome step(const ActionVector& raw_action, Rng& rng);

  /// Advances one step with an already-physical action. When raw_encoding is
  /// null the canonical re-encoding of the physical action is stored in the
  /// next state's previous-action slot.
  StepOutcome step_physical(const PhysicalAction& action, Rng& rng,
                            const ActionVector* raw_encoding = nullptr);

  /// Channel realization of the most recent reset/step.
  const ChannelRealization& channel() const { return chan_; }
  const UserMobilityState& user() const { return user_; }
  std::uint64_t last_blockage_seed() const { return blockage_seed_; }
  const EnvStats& stats() const { return stats_; }

  /// Canonical raw action of the reset configuration.
  ActionVector initial_action() const;

  /// Canonical raw encoding of a physical action (exact position round trip).
  ActionVector encode_physical(const PhysicalAction& action) const;

 private:
  StateVector encode_state(const ActionVector& prev_action, double beam_power,
                           const ChannelRealization& chan) const;
  PhysicalAction decode_checked(const ActionVector& raw);

  EnvConfig cfg_;
  UserMobilityState user_;
  ChannelRealization chan_;
  std::uint64_t blockage_seed_ = 0;
  EnvStats stats_;
};

}  // namespace passim
