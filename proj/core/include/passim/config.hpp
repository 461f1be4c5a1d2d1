#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "passim/ddpg.hpp"
#include "passim/environment.hpp"

namespace passim {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepConfig {
  std::vector<double> p_bs_dbm = {0, 5, 10, 15, 20, 25, 30};
  std::vector<double> beta = {0.05, 0.1};
  std::vector<double> r_th = {1.0, 2.0};
  bool retrain_per_beta = true;
};

/// Everything one experiment needs: scenario, agent, sweeps, seed, output.
struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::string out_dir = "out";
  int realizations = 150;
  double oracle_resolution = 1.0;  // m

  EnvConfig env;
  AgentConfig agent;
  SweepConfig sweep;

  static ExperimentConfig defaults();

  /// Throws ConfigError listing every violated invariant.
  void validate() const;
};

/// Parses a JSON config file; absent keys take Table-1 defaults, unknown keys
/// are rejected. An empty (or whitespace-only) file yields the defaults.
/// Power values accept either numbers (dBm) or unit-tagged strings such as
/// "20 dBm", "-5 dBm", "0.1 W", "100 mW".
ExperimentConfig load_config(const std::filesystem::path& path);

/// Fully resolved configuration as a JSON document (defaults expanded).
std::string resolved_config_json(const ExperimentConfig& cfg);

/// Parses a power string/number in dBm/W/mW into watts.
double parse_power_w(const std::string& text);
double dbm_to_w(double dbm);

}  // namespace passim
