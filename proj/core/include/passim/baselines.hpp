#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "passim/channel.hpp"
#include "passim/environment.hpp"
#include "passim/mlp.hpp"
#include "passim/rng.hpp"

namespace passim {

/// Matched-filter beamformer w* = sqrt(P_BS) G^H H / |G^H H|. Throws when the
/// effective channel is zero.
Eigen::VectorXcd mrt_beamformer(const ChannelRealization& chan, double p_bs_w);

/// Closed-form rate of the matched filter: log2(1 + P_BS |G^H H|^2 / sigma2).
double mrt_rate(const ChannelRealization& chan, double p_bs_w, double sigma2);

struct GridSearchResult {
  PinchingConfig config;
  double rate = 0.0;
};

/// Brute-force pinching oracle for one time step. Blockage is redrawn from
/// blockage_seed for every candidate, so all candidates share the underlying
/// uniform draws. Joint exhaustive search when the layout has at most two PAs
/// in total; cyclic coordinate search otherwise. Candidate positions per
/// coordinate are the axial grid at the given resolution plus the user's x
/// projection; extra_starts seed additional search restarts. Ties prefer the
/// lexicographically smallest position vector.
GridSearchResult grid_search_pinching(
    const WaveguideLayout& layout, const Point3& user,
    std::uint64_t blockage_seed, const ChannelParams& params, double p_bs_w,
    double min_spacing, double resolution,
    const std::vector<PinchingConfig>& extra_starts = {});

/// What a policy may observe before acting: the encoded state and the channel
/// realization it encodes.
struct Observation {
  const StateVector& state;
  const ChannelRealization& chan;
};

struct PolicyDecision {
  PhysicalAction physical;
  /// Raw actor output when the policy has one; stored verbatim in the next
  /// state so evaluation matches training-time encoding.
  std::optional<ActionVector> raw;
};

class Policy {
 public:
  virtual ~Policy() = default;
  virtual PolicyDecision act(const Observation& obs) = 0;
};

/// Uniformly spaced time-invariant pinching positions, x = (p - 1/2) D_n / P_n,
/// with the matched filter for the observed (previous-step) channel.
class FixedBaselinePolicy : public Policy {
 public:
  explicit FixedBaselinePolicy(const EnvConfig& cfg);
  PolicyDecision act(const Observation& obs) override;

  const PinchingConfig& positions() const { return positions_; }

 private:
  PinchingConfig positions_;
  double p_bs_w_;
  int waveguides_;
};

/// Deterministic actor rollout (no exploration noise).
class LearnedPolicy : public Policy {
 public:
  LearnedPolicy(const Mlp& actor, const EnvConfig& cfg);
  PolicyDecision act(const Observation& obs) override;

 private:
  const Mlp* actor_;
  const EnvConfig* cfg_;
};

struct StepTrace {
  int episode = 0;
  int t = 0;  // 1-based step within episode
  Point3 user;
  PinchingConfig pinching;
  double rate = 0.0;
};

struct EvalMetrics {
  double mean_rate = 0.0;
  double qos_violation_freq = 0.0;
  std::uint64_t spacing_violation_count = 0;
  std::uint64_t out_of_guide_count = 0;
  std::vector<double> episode_mean_rates;
  std::vector<StepTrace> traces;  // filled when capture_traces is set
};

/// Noise-free rollouts of a policy over full episodes.
EvalMetrics evaluate_policy(Policy& policy, const EnvConfig& cfg, int episodes,
                            Rng& rng, bool capture_traces = false);

}  // namespace passim
