#pragma once
#include <string>

#include "q8/rational.hpp"

namespace q8 {

// Element re + im*i of Q(i).
struct GaussianRational {
  Rational re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(int v) : re(v), im(0) {}  // NOLINT: implicit by design
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_rational() const { return im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational inverse() const {
    if (is_zero()) fail(Err::DivisionByZero, "inverse of zero in Q(i)");
    Rational n = norm();
    return {re / n, -im / n};
  }
  GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }

  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }
};

std::string gaussian_str(const GaussianRational& z);  // "a", "bi", or "a+bi" / "a-bi"
GaussianRational parse_gaussian(const std::string& s);

}  // namespace q8
