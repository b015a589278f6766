#pragma once
#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "q8/common.hpp"

namespace q8 {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class does not canonicalize two-argument constructions, so every (num, den)
// entry point funnels through here.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(Err::DivisionByZero, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat(long num, long den = 1) { return make_rational(Integer(num), Integer(den)); }

// Canonical GMP string form: "num/den", with "/den" omitted when den = 1.
std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& s);

inline Integer numer(const Rational& q) { return q.get_num(); }
inline Integer denom(const Rational& q) { return q.get_den(); }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Exponent of p in n (n != 0).
long int_valuation(Integer n, const Integer& p);
// v_p of a rational, as v_p(num) - v_p(den); q != 0.
long rat_valuation(const Rational& q, const Integer& p);

bool is_square(const Integer& n, Integer* root = nullptr);
bool is_rational_square(const Rational& q, Rational* root = nullptr);
// k-th power test; for even k only nonnegative inputs can pass.
bool is_perfect_power(const Integer& n, unsigned k, Integer* root = nullptr);
bool is_rational_fourth_power(const Rational& q, Rational* root = nullptr);

bool is_prime(const Integer& n);
std::vector<long> primes_up_to(long n);

struct Factorization {
  std::vector<std::pair<Integer, int>> primes;  // ascending
  bool complete = true;                         // false if a composite cofactor resisted
};
// Factors |n| for n != 0; sign is the caller's business.
Factorization factor_integer(Integer n);

// Largest squarefree divisor with the sign of n; nullopt if factorization incomplete.
std::optional<Integer> squarefree_part(const Integer& n);

Integer pow_integer(Integer base, unsigned long e);

}  // namespace q8
