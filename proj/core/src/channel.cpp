#include "passim/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace passim {

double guided_wavelength(double wavelength, double n_eff) {
  return wavelength / n_eff;
}

double noise_power(double n0_dbm_hz, double bandwidth_hz) {
  const double dbm = n0_dbm_hz + 10.0 * std::log10(bandwidth_hz);
  return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double los_prob(double d, double beta) { return std::exp(-beta * d); }

void ChannelParams::apply_derived_defaults() {
  if (eta_los <= 0.0) eta_los = wavelength / (4.0 * M_PI);
  if (eta_nlos <= 0.0) eta_nlos = eta_los / 10.0;
}

ChannelParams ChannelParams::defaults_for(int max_pa_count) {
  ChannelParams p;
  p.delta_eq = 1.0 / static_cast<double>(max_pa_count);
  p.apply_derived_defaults();
  return p;
}

void ChannelParams::validate(int max_pa_count) const {
  if (!(wavelength > 0.0)) throw std::invalid_argument("channel: wavelength must be positive");
  if (!(n_eff >= 1.0)) throw std::invalid_argument("channel: n_eff must be >= 1");
  if (!(delta_eq > 0.0) || delta_eq > 1.0 / static_cast<double>(max_pa_count))
    throw std::invalid_argument("channel: need 0 < delta_eq <= 1/max P_n");
  if (!(eta_nlos < eta_los))
    throw std::invalid_argument("channel: NLoS gain must be below LoS gain");
  if (!(alpha_nlos > alpha_los))
    throw std::invalid_argument("channel: NLoS exponent must exceed LoS exponent");
  if (beta < 0.0) throw std::invalid_argument("channel: negative blockage density");
  if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("channel: bandwidth must be positive");
  if (!(sigma2() > 0.0)) throw std::invalid_argument("channel: noise power must be positive");
}

BlockageRealization sample_blockage(Rng& rng, const WaveguideLayout& layout,
                                    const PinchingConfig& config,
                                    const Point3& user,
                                    const ChannelParams& params) {
  BlockageRealization out;
  const int n_wg = layout.count();
  out.los.resize(n_wg);
  out.nlos_phase.resize(n_wg);
  for (int n = 0; n < n_wg; ++n) {
    const auto& xs = config.x.at(n);
    out.los[n].resize(xs.size());
    out.nlos_phase[n].resize(xs.size());
    for (std::size_t p = 0; p < xs.size(); ++p) {
      // One uniform pair per PA in (n, p) order: equal seeds share draws
      // across candidate geometries.
      const double u = rng.uniform();
      const double phase = rng.uniform(0.0, 2.0 * M_PI);
      const double d = distance(pa_position(layout, n, xs[p]), user);
      out.los[n][p] = u < los_prob(d, params.beta) ? 1 : 0;
      out.nlos_phase[n][p] = phase;
    }
  }
  return out;
}

Eigen::VectorXcd waveguide_channel(const WaveguideLayout& layout,
                                   const PinchingConfig& config, int n,
                                   const ChannelParams& params) {
  if (n < 0 || n >= layout.count())
    throw std::out_of_range("waveguide_channel: waveguide index out of range");
  const auto& xs = config.x.at(n);
  const double k_g = 2.0 * M_PI / params.guided();
  const double amp = std::sqrt(params.delta_eq);
  Eigen::VectorXcd g(xs.size());
  const Point3 feed = layout.feed_point(n);
  for (std::size_t p = 0; p < xs.size(); ++p) {
    // In-guide distance from the feed; equals |x| since y and z match.
    const double d = distance(pa_position(layout, n, xs[p]), feed);
    g[static_cast<Eigen::Index>(p)] = std::polar(amp, -k_g * d);
  }
  return g;
}

std::complex<double> wireless_channel(const Point3& pa, const Point3& user,
                                      bool line_of_sight, double nlos_phase,
                                      const ChannelParams& params) {
  const double d = distance(pa, user);
  if (d <= 0.0)
    throw std::invalid_argument("wireless_channel: zero PA-user distance");
  if (line_of_sight) {
    const double amp = params.eta_los / std::pow(d, params.alpha_los / 2.0);
    return std::polar(amp, -2.0 * M_PI / params.wavelength * d);
  }
  const double amp = params.eta_nlos / std::pow(d, params.alpha_nlos / 2.0);
  return std::polar(amp, -nlos_phase);
}

ChannelRealization assemble(const WaveguideLayout& layout,
                            const PinchingConfig& config, const Point3& user,
                            const BlockageRealization& blockage,
                            const ChannelParams& params) {
  const int n_wg = layout.count();
  if (config.waveguides() != n_wg ||
      static_cast<int>(blockage.los.size()) != n_wg)
    throw std::invalid_argument("assemble: waveguide count mismatch");

  ChannelRealization chan;
  chan.g.resize(n_wg);
  chan.h.resize(n_wg);
  const int total = config.total();
  chan.stacked_h.resize(total);
  chan.block_diag_g = Eigen::MatrixXcd::Zero(total, n_wg);

  Eigen::Index row = 0;
  for (int n = 0; n < n_wg; ++n) {
    const auto& xs = config.x[n];
    if (blockage.los[n].size() != xs.size() ||
        blockage.nlos_phase[n].size() != xs.size())
      throw std::invalid_argument("assemble: blockage dimensions mismatch");

    chan.g[n] = waveguide_channel(layout, config, n, params);
    Eigen::VectorXcd h(xs.size());
    for (std::size_t p = 0; p < xs.size(); ++p) {
      h[static_cast<Eigen::Index>(p)] =
          wireless_channel(pa_position(layout, n, xs[p]), user,
                           blockage.los[n][p] != 0, blockage.nlos_phase[n][p],
                           params);
    }
    chan.h[n] = h;

    const auto len = static_cast<Eigen::Index>(xs.size());
    chan.stacked_h.segment(row, len) = h;
    chan.block_diag_g.block(row, n, len, 1) = chan.g[n];
    row += len;
  }
  return chan;
}

double achievable_rate(const ChannelRealization& chan,
                       const Eigen::VectorXcd& w, double sigma2) {
  if (w.size() != chan.block_diag_g.cols())
    throw std::invalid_argument("achievable_rate: beamformer dimension mismatch");
  const std::complex<double> rx =
      (chan.stacked_h.adjoint() * chan.block_diag_g * w)(0);
  return std::log2(1.0 + std::norm(rx) / sigma2);
}

}  // namespace passim
