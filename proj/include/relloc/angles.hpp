#pragma once

#include <numbers>
#include <span>

namespace relloc {

inline constexpr double kPi = std::numbers::pi;

inline double deg2rad(double d) { return d * (kPi / 180.0); }
inline double rad2deg(double r) { return r * (180.0 / kPi); }

/// Wrap an angle to the canonical [0, 360) range. Throws std::domain_error
/// on non-finite input.
double wrap_deg(double a);

/// Signed minimal difference a - b, wrapped to [-180, 180).
double angle_diff_deg(double a, double b);

/// Circular (vector) mean of angles in degrees, optionally weighted.
/// Result is in [0, 360). Falls back to the first angle when the resultant
/// vector is degenerate (antipodal inputs).
double circular_mean_deg(std::span<const double> angles_deg,
                         std::span<const double> weights = {});

}  // namespace relloc
