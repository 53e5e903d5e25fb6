#include "relloc/kinematics.hpp"

#include <cmath>

#include "relloc/angles.hpp"

namespace relloc {

Pose2D step_pose(const Pose2D& p, const ControlInput& u, double dt_s) {
  if (!(dt_s > 0.0)) {
    throw std::domain_error("step_pose: dt must be positive");
  }
  const double phi_rad = deg2rad(p.phi);
  Pose2D out;
  out.x = p.x + u.v * std::cos(phi_rad) * dt_s;
  out.y = p.y + u.v * std::sin(phi_rad) * dt_s;
  out.phi = wrap_deg(p.phi + u.phi_dot * dt_s);
  return out;
}

RelativeState true_relative_state(const Pose2D& pa, const Pose2D& pb) {
  const double dx = pb.x - pa.x;
  const double dy = pb.y - pa.y;
  const double r = std::hypot(dx, dy);
  if (r < 1e-12) {
    throw std::domain_error("true_relative_state: coincident positions");
  }
  const Transform2D t = Transform2D::into_frame({pa.x, pa.y}, deg2rad(pa.phi));
  const Vec2 b_in_a = world_to_frame(t, {pb.x, pb.y});
  RelativeState s;
  s.r_rel = r;
  s.theta_a = wrap_deg(rad2deg(std::atan2(b_in_a.y, b_in_a.x)));
  return s;
}

double theta_b_from_theta_a(double theta_a_deg, double phi_a_deg, double phi_b_deg) {
  return wrap_deg(theta_a_deg + phi_a_deg - phi_b_deg + 180.0);
}

RelativeRates relative_state_derivative(const RelativeState& x, double v_a, double v_b,
                                        double phi_dot_a_deg, double theta_b_deg,
                                        double r_min) {
  if (x.r_rel <= r_min) {
    throw singularity_error("relative_state_derivative: range at or below r_min");
  }
  const double ta = deg2rad(x.theta_a);
  const double tb = deg2rad(theta_b_deg);
  RelativeRates d;
  d.theta_dot = -phi_dot_a_deg + rad2deg((v_b * std::sin(tb) + v_a * std::sin(ta)) / x.r_rel);
  d.r_dot = -(v_b * std::cos(tb) + v_a * std::cos(ta));
  return d;
}

}  // namespace relloc
