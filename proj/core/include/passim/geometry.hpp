#pragma once

#include <cmath>
#include <vector>

namespace passim {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline double distance(const Point3& a, const Point3& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

/// Geometry of the N parallel waveguides. Waveguide n runs along the x axis
/// from its feed point [0, y_n, A_n] to [D_n, y_n, A_n] and carries P_n
/// pinching antennas.
struct WaveguideLayout {
  std::vector<double> length;          // D_n, m
  std::vector<double> height;         // A_n, m
  std::vector<double> lateral_offset;  // y_n, m
  std::vector<int> pa_count;           // P_n

  int count() const { return static_cast<int>(length.size()); }
  int total_pas() const;
  int max_pa_count() const;
  Point3 feed_point(int n) const;
  Point3 end_point(int n) const;

  /// Throws std::invalid_argument if any structural invariant is violated.
  void validate() const;
};

/// World coordinate of a pinching antenna at axial position x on waveguide n.
/// x may lie outside [0, D_n]; feasibility is the caller's concern.
Point3 pa_position(const WaveguideLayout& layout, int n, double x);

/// Axial pinching positions, x[n][p] in meters along waveguide n. Infeasible
/// configurations (out-of-guide or too closely spaced) are representable.
struct PinchingConfig {
  std::vector<std::vector<double>> x;

  int waveguides() const { return static_cast<int>(x.size()); }
  int total() const;
};

struct SpacingViolation {
  int waveguide = 0;
  int first = 0;   // PA indices with first < second
  int second = 0;
  double gap = 0.0;
};

/// Every unordered same-waveguide pair closer than min_spacing. Pairs on
/// different waveguides are never reported.
std::vector<SpacingViolation> spacing_violations(const PinchingConfig& config,
                                                 double min_spacing);

}  // namespace passim
