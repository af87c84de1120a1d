#pragma once

#include <cmath>
#include <ostream>

namespace natmap {

/// Hamilton quaternion with double components, w + x i + y j + z k.
/// Multiplication follows ij = k, jk = i, ki = j.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  constexpr explicit Quaternion(double real) : w(real) {}

  constexpr Quaternion& operator+=(const Quaternion& r) {
    w += r.w;
    x += r.x;
    y += r.y;
    z += r.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& r) {
    w -= r.w;
    x -= r.x;
    y -= r.y;
    z -= r.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(double s) { return *this *= (1.0 / s); }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) {
    return a += b;
  }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) {
    return a -= b;
  }
  friend constexpr Quaternion operator-(const Quaternion& a) {
    return {-a.w, -a.x, -a.y, -a.z};
  }
  friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
  friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
  friend constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }

  friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }

  [[nodiscard]] constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  [[nodiscard]] constexpr double norm_sq() const {
    return w * w + x * x + y * y + z * z;
  }
  [[nodiscard]] double norm() const { return std::sqrt(norm_sq()); }
  [[nodiscard]] Quaternion inverse() const {
    const double n2 = norm_sq();
    return {w / n2, -x / n2, -y / n2, -z / n2};
  }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.w << "," << q.x << "," << q.y << "," << q.z << ")";
  }
};

}  // namespace natmap
