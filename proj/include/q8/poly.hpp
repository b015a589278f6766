#pragma once
#include <vector>

#include "q8/common.hpp"

namespace q8 {

// Dense univariate polynomial over an exact field K (Rational or GaussianRational).
// c[k] is the coefficient of x^k; the zero polynomial has an empty vector.
template <class K>
struct Poly {
  std::vector<K> c;

  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }

  static Poly constant(K v) {
    Poly p;
    p.c.push_back(std::move(v));
    p.trim();
    return p;
  }
  static Poly monomial(int k, K v = K(1)) {
    Poly p;
    p.c.assign(k + 1, K(0));
    p.c[k] = std::move(v);
    p.trim();
    return p;
  }
  static Poly x() { return monomial(1); }

  int degree() const { return int(c.size()) - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return c.empty(); }
  const K& lc() const { return c.back(); }
  K coeff(int k) const { return (k >= 0 && k < int(c.size())) ? c[k] : K(0); }

  void trim() {
    while (!c.empty() && c.back() == K(0)) c.pop_back();
  }

  K operator()(const K& v) const {
    K acc(0);
    for (int k = degree(); k >= 0; --k) acc = acc * v + c[k];
    return acc;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c) a = -a;
    return r;
  }
  Poly operator+(const Poly& o) const {
    Poly r;
    r.c.resize(std::max(c.size(), o.c.size()), K(0));
    for (size_t k = 0; k < r.c.size(); ++k) r.c[k] = coeff(int(k)) + o.coeff(int(k));
    r.trim();
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.c.assign(c.size() + o.c.size() - 1, K(0));
    for (size_t a = 0; a < c.size(); ++a)
      for (size_t b = 0; b < o.c.size(); ++b) r.c[a + b] += c[a] * o.c[b];
    r.trim();
    return r;
  }
  Poly operator*(const K& s) const {
    Poly r = *this;
    for (auto& a : r.c) a = a * s;
    r.trim();
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  bool operator==(const Poly& o) const { return c == o.c; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative() const {
    Poly r;
    if (degree() < 1) return r;
    r.c.resize(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) r.c[k - 1] = c[k] * K(int(k));
    r.trim();
    return r;
  }

  // Coefficient reversal within a frame of the given degree (>= deg).
  Poly reversed(int frame_degree) const {
    Poly r;
    r.c.assign(frame_degree + 1, K(0));
    for (int k = 0; k <= degree(); ++k) r.c[frame_degree - k] = c[k];
    r.trim();
    return r;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    Poly r = *this;
    K inv = K(1) / lc();
    for (auto& a : r.c) a = a * inv;
    return r;
  }
};

template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& num, const Poly<K>& den) {
  if (den.is_zero()) fail(Err::DivisionByZero, "polynomial division by zero");
  Poly<K> q, r = num;
  if (num.degree() < den.degree()) return {q, r};
  q.c.assign(num.degree() - den.degree() + 1, K(0));
  while (!r.is_zero() && r.degree() >= den.degree()) {
    int shift = r.degree() - den.degree();
    K factor = r.lc() / den.lc();
    q.c[shift] = factor;
    for (int k = 0; k <= den.degree(); ++k) r.c[shift + k] -= factor * den.c[k];
    r.trim();
  }
  q.trim();
  return {q, r};
}

template <class K>
Poly<K> exact_div(const Poly<K>& num, const Poly<K>& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) fail(Err::InternalError, "polynomial division expected to be exact");
  return q;
}

template <class K>
bool divides(const Poly<K>& den, const Poly<K>& num) {
  if (den.is_zero()) return num.is_zero();
  return divmod(num, den).second.is_zero();
}

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = b;
    b = r;
  }
  return a.monic();
}

template <class K>
Poly<K> poly_pow(const Poly<K>& base, unsigned e) {
  Poly<K> r = Poly<K>::constant(K(1)), b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// Determinant by Gaussian elimination with exact field arithmetic; destroys m.
template <class K>
K det_inplace(std::vector<std::vector<K>>& m) {
  const size_t n = m.size();
  K det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == K(0)) ++piv;
    if (piv == n) return K(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    K inv = K(1) / m[col][col];
    for (size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == K(0)) continue;
      K factor = m[row][col] * inv;
      for (size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

// Sylvester-determinant resultant: Res(f, g) = lc(f)^deg(g) * prod g(roots of f).
template <class K>
K resultant(const Poly<K>& f, const Poly<K>& g) {
  if (f.is_zero() && g.is_zero()) fail(Err::DegenerateInput, "resultant of two zero polynomials");
  if (f.is_zero() || g.is_zero()) return K(0);
  const int m = f.degree(), n = g.degree();
  if (m == 0 && n == 0) return K(1);
  if (m == 0) {
    K r(1);
    for (int k = 0; k < n; ++k) r = r * f.c[0];
    return r;
  }
  if (n == 0) {
    K r(1);
    for (int k = 0; k < m; ++k) r = r * g.c[0];
    return r;
  }
  std::vector<std::vector<K>> s(m + n, std::vector<K>(m + n, K(0)));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k) s[row][row + k] = f.c[m - k];
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k) s[n + row][row + k] = g.c[n - k];
  return det_inplace(s);
}

template <class K>
K discriminant(const Poly<K>& f) {
  const int n = f.degree();
  if (n < 1) fail(Err::DegenerateInput, "discriminant of a constant polynomial");
  K r = resultant(f, f.derivative());
  K sign = (long(n) * (n - 1) / 2) % 2 == 0 ? K(1) : K(-1);
  return sign * r / f.lc();
}

}  // namespace q8
