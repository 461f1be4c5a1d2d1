#include "passim/mobility.hpp"

#include <cmath>
#include <stdexcept>

namespace passim {

void RwpParams::validate() const {
  if (!(x_lo <= x_hi) || !(y_lo <= y_hi))
    throw std::invalid_argument("mobility: service area bounds reversed");
  if (!(v_min > 0.0) || !(v_min <= v_max))
    throw std::invalid_argument("mobility: need 0 < v_min <= v_max");
  if (!(dt_s > 0.0)) throw std::invalid_argument("mobility: dt must be positive");
  if (pause_s < 0.0) throw std::invalid_argument("mobility: negative pause");
}

namespace {

Point3 draw_point(Rng& rng, const RwpParams& p) {
  return {rng.uniform(p.x_lo, p.x_hi), rng.uniform(p.y_lo, p.y_hi), 0.0};
}

void draw_leg(UserMobilityState& s, Rng& rng, const RwpParams& p) {
  s.waypoint = draw_point(rng, p);
  s.speed = rng.uniform(p.v_min, p.v_max);
}

}  // namespace

UserMobilityState rwp_reset(Rng& rng, const RwpParams& params) {
  UserMobilityState s;
  s.position = draw_point(rng, params);
  draw_leg(s, rng, params);
  s.pause_remaining = 0.0;
  return s;
}

UserMobilityState rwp_advance(const UserMobilityState& state, Rng& rng,
                              const RwpParams& params) {
  UserMobilityState s = state;
  if (s.pause_remaining > 0.0) {
    s.pause_remaining -= params.dt_s;
    if (s.pause_remaining <= 0.0) {
      s.pause_remaining = 0.0;
      draw_leg(s, rng, params);
    }
    return s;
  }

  const double dx = s.waypoint.x - s.position.x;
  const double dy = s.waypoint.y - s.position.y;
  const double remaining = std::sqrt(dx * dx + dy * dy);
  const double travel = s.speed * params.dt_s;

  if (remaining <= travel) {
    // Arrival truncates motion at the waypoint; no overshoot.
    s.position = s.waypoint;
    if (params.pause_s > 0.0) {
      s.pause_remaining = params.pause_s;
    } else {
      draw_leg(s, rng, params);
    }
  } else {
    s.position.x += dx / remaining * travel;
    s.position.y += dy / remaining * travel;
  }
  s.position.z = 0.0;
  return s;
}

}  // namespace passim
