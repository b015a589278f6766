#pragma once
#include <cstdint>
#include <vector>

#include "q8/rational.hpp"

// Internal dense polynomial arithmetic over F_p for word-sized p. Shared by the
// finite field modulus search and the mod-ell splitting certificates.
namespace q8::fppoly {

using FpPoly = std::vector<uint64_t>;  // coefficient k at index k, reduced mod p

inline void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return uint64_t((unsigned __int128)a * b % p);
}

inline uint64_t invmod(uint64_t v, uint64_t p) {
  // Fermat inverse
  uint64_t e = p - 2, base = v % p, acc = 1;
  while (e) {
    if (e & 1) acc = mulmod(acc, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return acc;
}

inline FpPoly mul_mod_modulus(const FpPoly& a, const FpPoly& b, const FpPoly& modulus,
                              uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + (unsigned __int128)a[i] * b[j]) % p;
  }
  // modulus is monic of degree r
  size_t r = modulus.size() - 1;
  for (size_t k = prod.size(); k-- > r;) {
    uint64_t top = prod[k];
    if (!top) continue;
    prod[k] = 0;
    for (size_t t = 0; t < r; ++t) {
      uint64_t sub = mulmod(top, modulus[t], p);
      prod[k - r + t] = (prod[k - r + t] + p - sub) % p;
    }
  }
  prod.resize(r);
  trim(prod);
  return prod;
}

inline FpPoly powmod_x(const Integer& e, const FpPoly& modulus, uint64_t p) {
  FpPoly result{1};
  FpPoly x = mul_mod_modulus({0, 1}, {1}, modulus, p);  // x reduced mod modulus
  for (size_t bit = mpz_sizeinbase(e.get_mpz_t(), 2); bit-- > 0;) {
    result = mul_mod_modulus(result, result, modulus, p);
    if (mpz_tstbit(e.get_mpz_t(), bit)) result = mul_mod_modulus(result, x, modulus, p);
  }
  return result;
}

inline FpPoly fp_poly_gcd(FpPoly a, FpPoly b, uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    uint64_t lead_inv = invmod(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
      uint64_t factor = mulmod(a.back(), lead_inv, p);
      size_t shift = a.size() - b.size();
      for (size_t k = 0; k < b.size(); ++k) {
        uint64_t sub = mulmod(factor, b[k], p);
        a[shift + k] = (a[shift + k] + p - sub) % p;
      }
      trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

inline FpPoly make_monic(FpPoly f, uint64_t p) {
  trim(f);
  if (f.empty() || f.back() == 1) return f;
  uint64_t inv = invmod(f.back(), p);
  for (auto& c : f) c = mulmod(c, inv, p);
  return f;
}

// num = q * den exactly; any remainder is discarded
inline FpPoly divexact(FpPoly num, const FpPoly& den, uint64_t p) {
  if (num.size() < den.size()) return {};
  FpPoly q(num.size() - den.size() + 1, 0);
  uint64_t lead_inv = invmod(den.back(), p);
  for (size_t k = num.size(); k >= den.size(); --k) {
    uint64_t factor = mulmod(num[k - 1], lead_inv, p);
    q[k - den.size()] = factor;
    if (factor)
      for (size_t t = 0; t < den.size(); ++t) {
        uint64_t sub = mulmod(factor, den[t], p);
        size_t idx = k - den.size() + t;
        num[idx] = (num[idx] + p - sub) % p;
      }
    if (k == den.size()) break;
  }
  trim(q);
  return q;
}

// Rabin test for a monic modulus: x^(p^r) = x, and gcd(x^(p^(r/l)) - x, m) = 1
// for prime divisors l of r.
inline bool irreducible(const FpPoly& modulus, uint64_t p) {
  size_t r = modulus.size() - 1;
  if (r == 0) return false;
  if (r == 1) return true;
  Integer pr = pow_integer(Integer((unsigned long)p), (unsigned long)r);
  FpPoly frob = powmod_x(pr, modulus, p);
  FpPoly x_reduced = mul_mod_modulus({0, 1}, {1}, modulus, p);
  if (frob != x_reduced) return false;
  for (unsigned long l = 2; l <= r; ++l) {
    if (r % l) continue;
    bool l_prime = true;
    for (unsigned long d = 2; d * d <= l; ++d)
      if (l % d == 0) l_prime = false;
    if (!l_prime) continue;
    Integer e = pow_integer(Integer((unsigned long)p), (unsigned long)(r / l));
    FpPoly sub = powmod_x(e, modulus, p);
    FpPoly diff = sub;
    diff.resize(std::max(diff.size(), x_reduced.size()), 0);
    for (size_t k = 0; k < x_reduced.size(); ++k) diff[k] = (diff[k] + p - x_reduced[k]) % p;
    trim(diff);
    FpPoly g = fp_poly_gcd(modulus, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace q8::fppoly
