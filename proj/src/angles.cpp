#include "relloc/angles.hpp"

#include <cmath>
#include <stdexcept>

namespace relloc {

double wrap_deg(double a) {
  if (!std::isfinite(a)) {
    throw std::domain_error("wrap_deg: non-finite angle");
  }
  double r = std::fmod(a, 360.0);
  if (r < 0.0) {
    r += 360.0;
  }
  if (r >= 360.0) {  // fmod rounding can land exactly on 360
    r = 0.0;
  }
  return r;
}

double angle_diff_deg(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw std::domain_error("angle_diff_deg: non-finite angle");
  }
  return wrap_deg(a - b + 180.0) - 180.0;
}

double circular_mean_deg(std::span<const double> angles_deg,
                         std::span<const double> weights) {
  if (angles_deg.empty()) {
    throw std::domain_error("circular_mean_deg: empty input");
  }
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t i = 0; i < angles_deg.size(); ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    const double r = deg2rad(angles_deg[i]);
    sx += w * std::cos(r);
    sy += w * std::sin(r);
  }
  if (std::hypot(sx, sy) < 1e-12) {
    return wrap_deg(angles_deg[0]);
  }
  return wrap_deg(rad2deg(std::atan2(sy, sx)));
}

}  // namespace relloc
