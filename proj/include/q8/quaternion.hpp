#pragma once
#include <string>

#include "q8/rational.hpp"

namespace q8 {

// Element t + x*i + y*j + z*k of the definite quaternion algebra (-1,-1 | Q),
// with i^2 = j^2 = -1 and ij = k = -ji.
struct Quaternion {
  Rational t, x, y, z;

  Quaternion() : t(0), x(0), y(0), z(0) {}
  Quaternion(int v) : t(v), x(0), y(0), z(0) {}  // NOLINT: implicit by design
  Quaternion(Rational tt, Rational xx, Rational yy, Rational zz)
      : t(std::move(tt)), x(std::move(xx)), y(std::move(yy)), z(std::move(zz)) {}

  static Quaternion i() { return {Rational(0), Rational(1), Rational(0), Rational(0)}; }
  static Quaternion j() { return {Rational(0), Rational(0), Rational(1), Rational(0)}; }
  static Quaternion k() { return {Rational(0), Rational(0), Rational(0), Rational(1)}; }

  bool is_zero() const { return t == 0 && x == 0 && y == 0 && z == 0; }
  bool is_lipschitz_integral() const {
    return is_integer(t) && is_integer(x) && is_integer(y) && is_integer(z);
  }

  Quaternion conj() const { return {t, -x, -y, -z}; }
  Rational trd() const { return t * 2; }
  Rational nrd() const { return t * t + x * x + y * y + z * z; }

  Quaternion operator-() const { return {-t, -x, -y, -z}; }
  Quaternion operator+(const Quaternion& o) const { return {t + o.t, x + o.x, y + o.y, z + o.z}; }
  Quaternion operator-(const Quaternion& o) const { return {t - o.t, x - o.x, y - o.y, z - o.z}; }
  Quaternion operator*(const Quaternion& o) const {
    return {t * o.t - x * o.x - y * o.y - z * o.z,
            t * o.x + x * o.t + y * o.z - z * o.y,
            t * o.y - x * o.z + y * o.t + z * o.x,
            t * o.z + x * o.y - y * o.x + z * o.t};
  }
  Quaternion operator*(const Rational& s) const { return {t * s, x * s, y * s, z * s}; }

  Quaternion inverse() const {
    if (is_zero()) fail(Err::DivisionByZero, "inverse of zero quaternion");
    Rational n = nrd();
    return {t / n, -x / n, -y / n, -z / n};
  }
  Quaternion operator/(const Quaternion& o) const { return *this * o.inverse(); }

  Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
  Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

  bool operator==(const Quaternion& o) const {
    return t == o.t && x == o.x && y == o.y && z == o.z;
  }
  bool operator!=(const Quaternion& o) const { return !(*this == o); }
};

std::string quaternion_str(const Quaternion& q);

}  // namespace q8
