#include "passim/environment.hpp"

#include <cmath>
#include <stdexcept>

namespace passim {

EnvConfig EnvConfig::table1_defaults() {
  EnvConfig cfg;
  cfg.layout.length = {100.0, 100.0};
  cfg.layout.height = {10.0, 10.0};
  cfg.layout.lateral_offset = {0.0, 3.0};
  cfg.layout.pa_count = {4, 4};
  cfg.mobility = RwpParams{};
  cfg.channel = ChannelParams::defaults_for(cfg.layout.max_pa_count());
  cfg.min_spacing = cfg.channel.wavelength / 2.0;
  cfg.p_bs_w = 0.1;  // 20 dBm
  return cfg;
}

void EnvConfig::validate() const {
  layout.validate();
  mobility.validate();
  channel.validate(layout.max_pa_count());
  if (!(p_bs_w > 0.0)) throw std::invalid_argument("env: power budget must be positive");
  if (r_th < 0.0) throw std::invalid_argument("env: negative QoS threshold");
  if (!(min_spacing > 0.0)) throw std::invalid_argument("env: min spacing must be positive");
  if (episode_steps < 1) throw std::invalid_argument("env: episode needs at least one step");
  if (pen_qos < 0.0 || pen_guide < 0.0 || pen_spacing < 0.0)
    throw std::invalid_argument("env: penalty weights must be non-negative");
  if (!(state_ref_distance > 0.0))
    throw std::invalid_argument("env: state reference distance must be positive");
}

Eigen::VectorXcd normalize_beamformer(const Eigen::VectorXcd& w_raw,
                                      double p_bs_w) {
  const double power = w_raw.squaredNorm();
  if (power == 0.0)
    throw std::invalid_argument("normalize_beamformer: zero beamforming vector");
  return w_raw * std::sqrt(p_bs_w / power);
}

PhysicalAction decode_action(const ActionVector& raw, const EnvConfig& cfg) {
  const int n_wg = cfg.waveguides();
  if (raw.size() != cfg.action_dim())
    throw std::invalid_argument("decode_action: action dimension mismatch");

  Eigen::VectorXcd w_raw(n_wg);
  for (int n = 0; n < n_wg; ++n)
    w_raw[n] = std::complex<double>(raw[n], raw[n_wg + n]);

  Eigen::VectorXcd w;
  if (w_raw.squaredNorm() == 0.0) {
    // Deterministic fallback: uniform equal-phase beam at full power.
    w = Eigen::VectorXcd::Constant(n_wg, std::sqrt(cfg.p_bs_w / n_wg));
  } else {
    w = normalize_beamformer(w_raw, cfg.p_bs_w);
  }

  PinchingConfig pinching;
  pinching.x.resize(n_wg);
  int idx = 2 * n_wg;
  for (int n = 0; n < n_wg; ++n) {
    pinching.x[n].resize(cfg.layout.pa_count[n]);
    for (int p = 0; p < cfg.layout.pa_count[n]; ++p) {
      pinching.x[n][p] = (raw[idx++] + 1.0) / 2.0 * cfg.layout.length[n];
    }
  }
  return {std::move(w), std::move(pinching)};
}

double qos_indicator(double x) { return x >= 0.0 ? 0.0 : x; }

double guide_violation(double x, double length) {
  if (x < 0.0) return -x;
  if (x > length) return x - length;
  return 0.0;
}

double spacing_shortfall(double gap, double min_spacing) {
  return gap >= min_spacing ? 0.0 : min_spacing - gap;
}

double compute_reward(double rate, const PinchingConfig& config,
                      const EnvConfig& cfg) {
  double r = rate + qos_indicator(rate - cfg.r_th) * cfg.pen_qos;
  for (int n = 0; n < config.waveguides(); ++n)
    for (double x : config.x[n])
      r -= guide_violation(x, cfg.layout.length[n]) * cfg.pen_guide;
  for (const auto& v : spacing_violations(config, cfg.min_spacing))
    r -= spacing_shortfall(v.gap, cfg.min_spacing) * cfg.pen_spacing;
  return r;
}

Environment::Environment(EnvConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
}

ActionVector Environment::initial_action() const {
  const int n_wg = cfg_.waveguides();
  ActionVector raw = ActionVector::Zero(cfg_.action_dim());
  // Equal-phase beam: all real parts one, imaginary parts zero.
  for (int n = 0; n < n_wg; ++n) raw[n] = 1.0;
  int idx = 2 * n_wg;
  for (int n = 0; n < n_wg; ++n) {
    const int count = cfg_.layout.pa_count[n];
    for (int p = 0; p < count; ++p) {
      // Uniform partition centers (p - 1/2) D / P mapped back to [-1, 1].
      raw[idx++] = (2.0 * p + 1.0) / count - 1.0;
    }
  }
  return raw;
}

ActionVector Environment::encode_physical(const PhysicalAction& action) const {
  const int n_wg = cfg_.waveguides();
  ActionVector raw = ActionVector::Zero(cfg_.action_dim());
  const double power = action.w.squaredNorm();
  const double scale = power > 0.0 ? 1.0 / std::sqrt(power) : 0.0;
  for (int n = 0; n < n_wg; ++n) {
    raw[n] = action.w[n].real() * scale;
    raw[n_wg + n] = action.w[n].imag() * scale;
  }
  int idx = 2 * n_wg;
  for (int n = 0; n < n_wg; ++n)
    for (double x : action.pinching.x.at(n))
      raw[idx++] = 2.0 * x / cfg_.layout.length[n] - 1.0;
  return raw;
}

StateVector Environment::encode_state(const ActionVector& prev_action,
                                      double beam_power,
                                      const ChannelRealization& chan) const {
  StateVector s(cfg_.state_dim());
  Eigen::Index at = 0;
  s.segment(at, prev_action.size()) = prev_action;
  at += prev_action.size();
  s[at++] = beam_power;
  for (const auto& g : chan.g) {
    for (Eigen::Index p = 0; p < g.size(); ++p) {
      s[at++] = g[p].real();
      s[at++] = g[p].imag();
    }
  }
  // Wireless entries are rescaled to the LoS gain at a reference distance;
  // raw magnitudes (~1e-6) would starve the networks.
  const double scale =
      std::pow(cfg_.state_ref_distance, cfg_.channel.alpha_los / 2.0) /
      cfg_.channel.eta_los;
  for (const auto& h : chan.h) {
    for (Eigen::Index p = 0; p < h.size(); ++p) {
      s[at++] = h[p].real() * scale;
      s[at++] = h[p].imag() * scale;
    }
  }
  return s;
}

StateVector Environment::reset(Rng& rng) {
  user_ = rwp_reset(rng, cfg_.mobility);
  const ActionVector raw = initial_action();
  const PhysicalAction act = decode_checked(raw);
  blockage_seed_ = rng.next_u64();
  Rng blockage_rng(blockage_seed_);
  const BlockageRealization blockage = sample_blockage(
      blockage_rng, cfg_.layout, act.pinching, user_.position, cfg_.channel);
  chan_ = assemble(cfg_.layout, act.pinching, user_.position, blockage,
                   cfg_.channel);
  return encode_state(raw, act.w.squaredNorm(), chan_);
}

StepOutcome Environment::step(const ActionVector& raw_action, Rng& rng) {
  const PhysicalAction act = decode_checked(raw_action);
  return step_physical(act, rng, &raw_action);
}

StepOutcome Environment::step_physical(const PhysicalAction& action, Rng& rng,
                                       const ActionVector* raw_encoding) {
  if (action.w.size() != cfg_.waveguides() ||
      action.pinching.waveguides() != cfg_.waveguides())
    throw std::invalid_argument("step: physical action dimension mismatch");

  user_ = rwp_advance(user_, rng, cfg_.mobility);
  blockage_seed_ = rng.next_u64();
  Rng blockage_rng(blockage_seed_);
  const BlockageRealization blockage =
      sample_blockage(blockage_rng, cfg_.layout, action.pinching,
                      user_.position, cfg_.channel);
  chan_ = assemble(cfg_.layout, action.pinching, user_.position, blockage,
                   cfg_.channel);

  StepOutcome out;
  out.rate = achievable_rate(chan_, action.w, cfg_.channel.sigma2());
  out.reward = compute_reward(out.rate, action.pinching, cfg_);
  out.qos_met = out.rate >= cfg_.r_th;
  out.spacing = spacing_violations(action.pinching, cfg_.min_spacing);
  for (int n = 0; n < action.pinching.waveguides(); ++n)
    for (double x : action.pinching.x[n])
      if (guide_violation(x, cfg_.layout.length[n]) > 0.0) ++out.out_of_guide;
  out.user = user_.position;
  out.pinching = action.pinching;
  out.beam_power = action.w.squaredNorm();
  out.blockage_seed = blockage_seed_;

  const ActionVector prev =
      raw_encoding != nullptr ? *raw_encoding : encode_physical(action);
  out.next_state = encode_state(prev, out.beam_power, chan_);
  return out;
}

PhysicalAction Environment::decode_checked(const ActionVector& raw) {
  PhysicalAction act = decode_action(raw, cfg_);
  ++stats_.decode_count;
  const double rel_err =
      std::abs(act.w.squaredNorm() - cfg_.p_bs_w) / cfg_.p_bs_w;
  stats_.max_power_rel_err = std::max(stats_.max_power_rel_err, rel_err);
  return act;
}

}  // namespace passim
