#pragma once

#include <stdexcept>

#include "relloc/geometry.hpp"

namespace relloc {

/// Range below which the relative-state dynamics become singular.
inline constexpr double kDefaultMinRange = 1e-3;

struct singularity_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Absolute pose of one robot in the world frame. Heading is stored in
/// degrees, wrapped to [0, 360).
struct Pose2D {
  double x = 0.0;    // m
  double y = 0.0;    // m
  double phi = 0.0;  // deg
};

/// Unicycle control input: forward speed and turn rate.
struct ControlInput {
  double v = 0.0;        // m/s
  double phi_dot = 0.0;  // deg/s
};

/// Relative state as tracked by the estimators: bearing of B in A's frame
/// and the inter-robot distance.
struct RelativeState {
  double theta_a = 0.0;  // deg, [0, 360)
  double r_rel = 0.0;    // m, > 0
};

struct RelativeRates {
  double theta_dot = 0.0;  // deg/s
  double r_dot = 0.0;      // m/s
};

/// One explicit-Euler step of the unicycle model.
Pose2D step_pose(const Pose2D& p, const ControlInput& u, double dt_s);

/// Ground-truth relative state of B as seen from A.
/// Throws std::domain_error for coincident positions.
RelativeState true_relative_state(const Pose2D& pa, const Pose2D& pb);

/// Bearing of A in B's frame, derived from the A-side bearing and the two
/// absolute headings.
double theta_b_from_theta_a(double theta_a_deg, double phi_a_deg, double phi_b_deg);

/// Time derivative of the relative state given both speeds, A's turn rate
/// and the B-side bearing. Throws singularity_error when r_rel <= r_min.
RelativeRates relative_state_derivative(const RelativeState& x, double v_a, double v_b,
                                        double phi_dot_a_deg, double theta_b_deg,
                                        double r_min = kDefaultMinRange);

}  // namespace relloc
