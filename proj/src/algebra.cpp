#include "q8/algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace q8 {

namespace {

std::map<unsigned, RatPoly> g_cyclotomic_cache;
std::mutex g_cyclotomic_mutex;

RatPoly compute_cyclotomic(unsigned k) {
  // x^k - 1 divided by Phi_d for all proper divisors d of k.
  std::vector<Rational> c(k + 1, Rational(0));
  c[0] = Rational(-1);
  c[k] = Rational(1);
  RatPoly f{std::move(c)};
  for (unsigned d = 1; d < k; ++d) {
    if (k % d) continue;
    f = exact_div(f, cyclotomic(d));
  }
  return f;
}

}  // namespace

const RatPoly& cyclotomic(unsigned k) {
  require(k >= 1, Err::DegenerateInput, "cyclotomic index must be positive");
  {
    std::lock_guard<std::mutex> lock(g_cyclotomic_mutex);
    auto it = g_cyclotomic_cache.find(k);
    if (it != g_cyclotomic_cache.end()) return it->second;
  }
  RatPoly value = compute_cyclotomic(k);
  std::lock_guard<std::mutex> lock(g_cyclotomic_mutex);
  return g_cyclotomic_cache.emplace(k, std::move(value)).first->second;
}

RatPoly cyclotomic_reversed(unsigned k) {
  const RatPoly& phi = cyclotomic(k);
  return phi.reversed(phi.degree());
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int legendre(const Integer& a, const Integer& p) {
  require(p > 2 && is_prime(p), Err::DegenerateInput, "legendre needs an odd prime");
  Integer r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

int legendre_rational(const Rational& a, const Integer& p) {
  require(rat_valuation(a, p) == 0, Err::DegenerateInput, "legendre_rational needs v_p = 0");
  return legendre(numer(a) * denom(a), p);
}

std::optional<Integer> sqrt_mod(const Integer& a_in, const Integer& p) {
  require(p > 2 && is_prime(p), Err::DegenerateInput, "sqrt_mod needs an odd prime");
  Integer a = a_in % p;
  if (a < 0) a += p;
  if (a == 0) return Integer(0);
  if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;

  auto powm = [&](Integer base, Integer e) {
    Integer out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return out;
  };

  // Tonelli-Shanks. p - 1 = q * 2^s with q odd.
  Integer q = p - 1;
  unsigned long s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  if (s == 1) return powm(a, (p + 1) / 4);

  Integer z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  Integer m((unsigned long)s), c = powm(z, q), t = powm(a, q), r = powm(a, (q + 1) / 2);
  while (t != 1) {
    Integer t2 = t;
    unsigned long i = 0;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    Integer b = c;
    for (Integer j = 0; j < m - Integer((unsigned long)i) - 1; ++j) b = b * b % p;
    m = Integer((unsigned long)i);
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

Integer hensel_sqrt_minus_one(const Integer& p, unsigned digits) {
  require(p % 4 == 1, Err::PreconditionFailed, "sqrt(-1) mod p needs p = 1 mod 4");
  auto root = sqrt_mod(p - 1, p);
  require(root.has_value(), Err::InternalError, "p = 1 mod 4 but -1 not a residue");
  Integer u = *root;
  if (p - u < u) u = p - u;  // smallest residue branch
  Integer mod = p;
  unsigned have = 1;
  while (have < digits) {
    unsigned next = std::min(2 * have, digits);
    Integer next_mod = mod * mod;
    if (next < 2 * have) {
      next_mod = pow_integer(p, next);
    }
    // Newton step u <- u - (u^2 + 1) / (2u) mod p^next
    Integer f = (u * u + 1) % next_mod;
    Integer two_u = 2 * u % next_mod;
    Integer inv;
    int ok = mpz_invert(inv.get_mpz_t(), two_u.get_mpz_t(), next_mod.get_mpz_t());
    require(ok != 0, Err::InternalError, "2u not invertible in Hensel lift");
    u = (u - f * inv) % next_mod;
    if (u < 0) u += next_mod;
    mod = next_mod;
    have = next;
  }
  return u;
}

Valuation gaussian_valuation(const GaussianRational& x, const Integer& p,
                             std::optional<Integer> branch_u) {
  require(p >= 2 && is_prime(p), Err::DegenerateInput, "valuation base must be prime");
  require(p != 2, Err::RamifiedPrime, "p = 2 ramifies in Z[i]");
  if (x.is_zero()) return Valuation::infinity();

  // Write x = (A + B i) / D with integer A, B, D > 0.
  Integer d1 = denom(x.re), d2 = denom(x.im);
  Integer g;
  mpz_gcd(g.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
  Integer D = d1 / g * d2;
  Integer A = numer(x.re) * (D / d1);
  Integer B = numer(x.im) * (D / d2);
  long vD = int_valuation(D, p);

  if (p % 4 == 3) {
    // Inert: v = v_p(A^2 + B^2) / 2 - v_p(D).
    Integer norm = A * A + B * B;
    long vn = int_valuation(norm, p);
    return Valuation::finite(make_rational(Integer(vn) - Integer(2 * vD), Integer(2)));
  }

  require(branch_u.has_value(), Err::PreconditionFailed,
          "split prime valuation needs a branch (root of -1 mod p)");
  Integer u = *branch_u % p;
  if (u < 0) u += p;
  require((u * u + 1) % p == 0, Err::DegenerateInput, "branch is not a root of -1 mod p");

  // v_(p, u+i)(A + Bi): strip the common p-power first, then test the residue
  // A' - B' u mod p; if it vanishes the remaining norm p-power sits entirely in
  // this branch.
  Integer common;
  mpz_gcd(common.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
  long vc = common == 0 ? 0 : int_valuation(common, p);
  Integer pk = pow_integer(p, (unsigned long)vc);
  Integer A1 = A / pk, B1 = B / pk;
  long extra = 0;
  if ((A1 - B1 * u) % p == 0) {
    Integer norm = A1 * A1 + B1 * B1;
    extra = int_valuation(norm, p);
  }
  return Valuation::finite(Rational(Integer(vc + extra - vD)));
}

}  // namespace q8
