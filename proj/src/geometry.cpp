#include "relloc/geometry.hpp"

#include <cmath>

namespace relloc {

Transform2D::Transform2D(double rotation_rad, Vec2 translation)
    : c_(std::cos(rotation_rad)),
      s_(std::sin(rotation_rad)),
      tx_(translation.x),
      ty_(translation.y) {}

Transform2D Transform2D::into_frame(Vec2 origin, double heading_rad) {
  // Inverse of the frame pose: rotate by -heading, then shift by the
  // rotated negative origin.
  Transform2D t;
  t.c_ = std::cos(heading_rad);
  t.s_ = -std::sin(heading_rad);
  t.tx_ = -(t.c_ * origin.x - t.s_ * origin.y);
  t.ty_ = -(t.s_ * origin.x + t.c_ * origin.y);
  return t;
}

Transform2D Transform2D::inverse() const {
  Transform2D t;
  t.c_ = c_;
  t.s_ = -s_;
  t.tx_ = -(c_ * tx_ + s_ * ty_);
  t.ty_ = -(-s_ * tx_ + c_ * ty_);
  return t;
}

Transform2D Transform2D::operator*(const Transform2D& rhs) const {
  Transform2D t;
  t.c_ = c_ * rhs.c_ - s_ * rhs.s_;
  t.s_ = s_ * rhs.c_ + c_ * rhs.s_;
  const Vec2 moved = apply({rhs.tx_, rhs.ty_});
  t.tx_ = moved.x;
  t.ty_ = moved.y;
  return t;
}

double Transform2D::rotation_rad() const { return std::atan2(s_, c_); }

}  // namespace relloc
