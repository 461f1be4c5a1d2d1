#pragma once

#include <filesystem>

#include "passim/ddpg.hpp"
#include "passim/mlp.hpp"

namespace passim {

/// Self-describing model container: format tag, env dimensions, agent
/// config, and all four networks (row-major 64-bit parameters).
struct Checkpoint {
  int state_dim = 0;
  int action_dim = 0;
  AgentConfig agent;
  Mlp actor, critic, target_actor, target_critic;

  static Checkpoint from_agent(const DdpgAgent& agent);
  DdpgAgent to_agent() const;
};

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ck);

/// Throws std::runtime_error on I/O failure, bad magic, or version mismatch.
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace passim
