#pragma once
#include <array>
#include <complex>
#include <string>
#include <vector>

#include "q8/algebra.hpp"
#include "q8/gaussian.hpp"

namespace q8 {

// Hyperelliptic model y^2 = f(x) with deg f = 2g+1 and f(0) = 0.
struct HyperellipticModel {
  RatPoly f;
  int genus = 0;
};

// f(x) = x(x^4-1)(x^{2g-4} + 1 + sum_{j=1}^d a_j (x^{2g-4-2j} + x^{2j})),
// d = g/2 - 1. For even g >= 4; degenerate a is allowed (smoothness is a
// separate check via the discriminant).
HyperellipticModel build_family_poly(int g, const std::vector<Rational>& a);
GaussPoly build_family_poly_gaussian(int g, const std::vector<GaussianRational>& a);

// Discriminant of the hyperelliptic model y^2 = f(x): 2^{4g} disc(f), the
// standard normalization for an odd-degree model. Zero iff the fiber is
// singular; the bare polynomial discriminant is discriminant(m.f).
Rational family_discriminant(int g, const std::vector<Rational>& a);

// Recovers a from the factored inner polynomial prod_j (x^2-b_j^2)(x^2-1/b_j^2)
// = x^{2g-4} + 1 + sum_j a_j (x^{2g-4-2j} + x^{2j}).
std::vector<GaussianRational> base_change_b_to_a(int g, const std::vector<GaussianRational>& b);

// True iff f(-x) = -f(x) and x^{2g+2} f(1/x) = -f(x) hold exactly.
template <class K>
bool verify_q8_symmetry(const Poly<K>& f, int g) {
  if (f.degree() != 2 * g + 1) return false;
  for (int k = 0; k <= f.degree(); k += 2)
    if (f.coeff(k) != K(0)) return false;
  return f.reversed(2 * g + 2) == -f;
}
inline bool verify_q8_symmetry(const HyperellipticModel& m) {
  return verify_q8_symmetry(m.f, m.genus);
}

// Branch locus data: 2g+1 finite x-coordinates plus infinity, each with its
// stabilizer order in the reduced automorphism group (4 for {0, +-1, +-i, inf},
// 2 otherwise).
struct WeierstrassPoint {
  std::string label;  // "0", "1", "-1", "i", "-i", "b1", "-b1", "1/b1", ..., "inf"
  GaussianRational value;
  bool at_infinity = false;
  int stabilizer_order = 2;
};
struct WeierstrassSet {
  std::vector<WeierstrassPoint> points;  // 2g+2 entries, infinity last
};
WeierstrassSet weierstrass_data(int g, const std::vector<GaussianRational>& b);

// Orbit of a genus-4 parameter under {+-a, +-(a+3)/(a-1), +-(a-3)/(a+1)},
// duplicates merged, ascending.
std::vector<Rational> moduli_orbit_g4(const Rational& a);

// Fractional-linear map x -> (a x + b)/(c x + d), det != 0.
struct MobiusMap {
  GaussianRational a, b, c, d;
  std::string describe() const;  // "x", "-x", "1/x", "-1/x", or generic form
};

// All fractional-linear maps stabilizing S = {0, inf, +-1, +-i, +-b, +-1/b},
// found by brute force over ordered triples (z1, z2, z3) mapped to (0, 1, inf);
// exactly {x, -x, 1/x, -1/x} for generic b.
std::vector<MobiusMap> extra_automorphism_scan(const GaussianRational& b);

// Same scan over complex floats for parameters outside Q(i); maps are returned
// as matrices normalized to unit sup-norm.
std::vector<std::array<std::complex<double>, 4>> extra_automorphism_scan_float(
    std::complex<double> b, double tol = 1e-9);

}  // namespace q8
