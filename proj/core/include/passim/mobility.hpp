#pragma once

#include "passim/geometry.hpp"
#include "passim/rng.hpp"

namespace passim {

/// Random-waypoint parameters over a rectangular ground-level service area.
struct RwpParams {
  double x_lo = 0.0;
  double x_hi = 100.0;
  double y_lo = 5.0;
  double y_hi = 25.0;
  double v_min = 1.0;   // m/s
  double v_max = 5.0;   // m/s
  double pause_s = 0.0;
  double dt_s = 1.0;

  void validate() const;
};

struct UserMobilityState {
  Point3 position;   // z = 0
  Point3 waypoint;   // z = 0
  double speed = 0.0;
  double pause_remaining = 0.0;
};

/// Position, waypoint uniform over the area; speed uniform in [v_min, v_max].
UserMobilityState rwp_reset(Rng& rng, const RwpParams& params);

/// One time step of speed * dt toward the waypoint. Arrival truncates motion
/// at the waypoint; after any pause expires a fresh waypoint and speed are
/// drawn.
UserMobilityState rwp_advance(const UserMobilityState& state, Rng& rng,
                              const RwpParams& params);

}  // namespace passim
