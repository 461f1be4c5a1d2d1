#include "passim/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace passim {

int WaveguideLayout::total_pas() const {
  int total = 0;
  for (int p : pa_count) total += p;
  return total;
}

int WaveguideLayout::max_pa_count() const {
  int best = 0;
  for (int p : pa_count) best = std::max(best, p);
  return best;
}

Point3 WaveguideLayout::feed_point(int n) const {
  return {0.0, lateral_offset.at(n), height.at(n)};
}

Point3 WaveguideLayout::end_point(int n) const {
  return {length.at(n), lateral_offset.at(n), height.at(n)};
}

void WaveguideLayout::validate() const {
  const std::size_t n = length.size();
  if (n == 0) throw std::invalid_argument("layout: at least one waveguide required");
  if (height.size() != n || lateral_offset.size() != n || pa_count.size() != n)
    throw std::invalid_argument("layout: per-waveguide field lengths disagree");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(length[i] > 0.0))
      throw std::invalid_argument("layout: waveguide length must be positive");
    if (!(height[i] > 0.0))
      throw std::invalid_argument("layout: waveguide height must be positive");
    if (pa_count[i] < 1)
      throw std::invalid_argument("layout: each waveguide needs at least one PA");
    if (!std::isfinite(length[i]) || !std::isfinite(height[i]) ||
        !std::isfinite(lateral_offset[i]))
      throw std::invalid_argument("layout: non-finite geometry");
  }
}

Point3 pa_position(const WaveguideLayout& layout, int n, double x) {
  if (n < 0 || n >= layout.count())
    throw std::out_of_range("pa_position: waveguide index " + std::to_string(n) +
                            " out of range");
  return {x, layout.lateral_offset[n], layout.height[n]};
}

int PinchingConfig::total() const {
  int total = 0;
  for (const auto& wg : x) total += static_cast<int>(wg.size());
  return total;
}

std::vector<SpacingViolation> spacing_violations(const PinchingConfig& config,
                                                 double min_spacing) {
  std::vector<SpacingViolation> out;
  for (int n = 0; n < config.waveguides(); ++n) {
    const auto& xs = config.x[n];
    const int count = static_cast<int>(xs.size());
    for (int p = 0; p < count; ++p) {
      for (int q = p + 1; q < count; ++q) {
        const double gap = std::abs(xs[p] - xs[q]);
        if (gap < min_spacing) out.push_back({n, p, q, gap});
      }
    }
  }
  return out;
}

}  // namespace passim
