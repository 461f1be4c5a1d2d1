#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "passim/geometry.hpp"
#include "passim/rng.hpp"

namespace passim {

/// Guided wavelength lambda / n_eff.
double guided_wavelength(double wavelength, double n_eff);

/// Thermal noise power in watts from a PSD in dBm/Hz and a bandwidth in Hz.
double noise_power(double n0_dbm_hz, double bandwidth_hz);

/// Distance-dependent line-of-sight probability exp(-beta * d).
double los_prob(double d, double beta);

struct ChannelParams {
  double wavelength = 0.0111;       // m
  double n_eff = 1.4;               // effective refractive index
  double delta_eq = 0.25;           // per-PA radiated power ratio
  double eta_los = 0.0;             // LoS amplitude gain factor
  double eta_nlos = 0.0;            // NLoS amplitude gain factor
  double alpha_los = 3.9;           // LoS path-loss exponent
  double alpha_nlos = 4.4;          // NLoS path-loss exponent
  double beta = 0.05;               // blockage density, 1/m
  double noise_psd_dbm_hz = -174.0;
  double bandwidth_hz = 1e6;

  double guided() const { return guided_wavelength(wavelength, n_eff); }
  double sigma2() const { return noise_power(noise_psd_dbm_hz, bandwidth_hz); }

  /// Fills eta_los (free-space amplitude at 1 m) and eta_nlos when unset.
  void apply_derived_defaults();

  /// Table-1 configuration with derived gain defaults for the given layout.
  static ChannelParams defaults_for(int max_pa_count);

  void validate(int max_pa_count) const;
};

/// Per-PA blockage bits and NLoS scattering phases for one time step.
struct BlockageRealization {
  std::vector<std::vector<std::uint8_t>> los;  // [n][p], 1 = LoS
  std::vector<std::vector<double>> nlos_phase;  // [n][p], [0, 2pi)
};

/// Draws b_{n,p} ~ Bernoulli(exp(-beta d)) and an independent phase per PA.
/// Exactly one uniform pair is consumed per PA in (n, p) order, so two calls
/// with equally-seeded generators share the underlying draws even when the
/// pinching positions differ.
BlockageRealization sample_blockage(Rng& rng, const WaveguideLayout& layout,
                                    const PinchingConfig& config,
                                    const Point3& user,
                                    const ChannelParams& params);

/// In-waveguide channel of waveguide n: sqrt(delta_eq) * exp(-j 2pi/lambda_g * x_p).
Eigen::VectorXcd waveguide_channel(const WaveguideLayout& layout,
                                   const PinchingConfig& config, int n,
                                   const ChannelParams& params);

/// Wireless channel of one PA-user link. Throws on zero distance.
std::complex<double> wireless_channel(const Point3& pa, const Point3& user,
                                      bool line_of_sight, double nlos_phase,
                                      const ChannelParams& params);

struct ChannelRealization {
  std::vector<Eigen::VectorXcd> g;  // per waveguide, P_n entries
  std::vector<Eigen::VectorXcd> h;  // per waveguide, P_n entries
  Eigen::VectorXcd stacked_h;       // H_k, sum P_n entries
  Eigen::MatrixXcd block_diag_g;    // G, (sum P_n) x N, block diagonal
};

ChannelRealization assemble(const WaveguideLayout& layout,
                            const PinchingConfig& config, const Point3& user,
                            const BlockageRealization& blockage,
                            const ChannelParams& params);

/// log2(1 + |H^H G w|^2 / sigma2).
double achievable_rate(const ChannelRealization& chan,
                       const Eigen::VectorXcd& w, double sigma2);

}  // namespace passim
