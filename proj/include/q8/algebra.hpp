#pragma once
#include <optional>

#include "q8/gaussian.hpp"
#include "q8/poly.hpp"
#include "q8/rational.hpp"

namespace q8 {

using RatPoly = Poly<Rational>;
using GaussPoly = Poly<GaussianRational>;

// k-th cyclotomic polynomial, monic with integer coefficients, by iterated exact
// division of x^k - 1; memoized, thread-safe.
const RatPoly& cyclotomic(unsigned k);

// Inverse-root companion: x^phi(k) * Phi_k(1/x), normalized to constant term 1.
// Coincides with Phi_k for k >= 2; equals 1 - x for k = 1.
RatPoly cyclotomic_reversed(unsigned k);

unsigned long euler_phi(unsigned long n);

// Square root of a mod odd prime p (a a residue), Tonelli-Shanks; nullopt if a
// is a non-residue.
std::optional<Integer> sqrt_mod(const Integer& a, const Integer& p);

// The square root u of -1 mod p^N with smallest residue u mod p, lifted by
// Newton iteration; requires p = 1 mod 4.
Integer hensel_sqrt_minus_one(const Integer& p, unsigned digits = 64);

// Legendre symbol of a rational with v_p = 0.
int legendre(const Integer& a, const Integer& p);
int legendre_rational(const Rational& a, const Integer& p);

struct Valuation {
  bool is_infinity = false;
  Rational value;

  static Valuation infinity() { return {true, Rational(0)}; }
  static Valuation finite(Rational v) { return {false, std::move(v)}; }
  bool operator==(const Valuation& o) const {
    return is_infinity == o.is_infinity && (is_infinity || value == o.value);
  }
};

// Valuation on Q(i) extending v_p, normalized with v(p) = 1; v(0) = infinity.
// For split p = 1 mod 4 the branch is the square root u of -1 mod p selecting
// the prime (p, u + i); only u mod p enters the divisibility test, but callers
// may pass any Hensel lift. For inert p = 3 mod 4 the branch is ignored and
// v = v_p(Norm)/2. p = 2 (ramified) is not supported.
Valuation gaussian_valuation(const GaussianRational& x, const Integer& p,
                             std::optional<Integer> branch_u = std::nullopt);

}  // namespace q8
