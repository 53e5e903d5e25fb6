#pragma once

namespace relloc {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Rigid 2D transform p' = R(rotation) * p + translation.
class Transform2D {
 public:
  Transform2D() : c_(1.0), s_(0.0), tx_(0.0), ty_(0.0) {}
  Transform2D(double rotation_rad, Vec2 translation);

  static Transform2D identity() { return {}; }

  /// Transform mapping world coordinates into the frame anchored at
  /// `origin` with heading `heading_rad` (x axis along the heading).
  static Transform2D into_frame(Vec2 origin, double heading_rad);

  Vec2 apply(Vec2 p) const {
    return {c_ * p.x - s_ * p.y + tx_, s_ * p.x + c_ * p.y + ty_};
  }

  Transform2D inverse() const;

  /// Composition: (a * b).apply(p) == a.apply(b.apply(p)).
  Transform2D operator*(const Transform2D& rhs) const;

  double rotation_rad() const;
  Vec2 translation() const { return {tx_, ty_}; }

 private:
  double c_, s_, tx_, ty_;
};

inline Vec2 world_to_frame(const Transform2D& t, Vec2 p_world) { return t.apply(p_world); }
inline Vec2 frame_to_world(const Transform2D& t, Vec2 p_frame) { return t.inverse().apply(p_frame); }

}  // namespace relloc
