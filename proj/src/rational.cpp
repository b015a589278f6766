#include "q8/rational.hpp"

#include <algorithm>
#include <cstdint>

namespace q8 {

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  if (s.empty()) fail(Err::UsageError, "empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return make_rational(Integer(s), 1);
    return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    fail(Err::UsageError, "bad rational literal: " + s);
  }
}

long int_valuation(Integer n, const Integer& p) {
  if (n == 0) fail(Err::DegenerateInput, "valuation of zero integer");
  long v = 0;
  Integer q, r;
  for (;;) {
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (r != 0) return v;
    n = q;
    ++v;
  }
}

long rat_valuation(const Rational& q, const Integer& p) {
  if (q == 0) fail(Err::DegenerateInput, "valuation of zero rational");
  long v = 0;
  if (mpz_divisible_p(q.get_num().get_mpz_t(), p.get_mpz_t()))
    v = int_valuation(q.get_num(), p);
  if (mpz_divisible_p(q.get_den().get_mpz_t(), p.get_mpz_t()))
    v -= int_valuation(q.get_den(), p);
  return v;
}

bool is_square(const Integer& n, Integer* root) {
  if (n < 0) return false;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
  if (root) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
  return true;
}

bool is_rational_square(const Rational& q, Rational* root) {
  Integer rn, rd;
  if (!is_square(q.get_num(), &rn) || !is_square(q.get_den(), &rd)) return false;
  if (root) *root = make_rational(rn, rd);
  return true;
}

bool is_perfect_power(const Integer& n, unsigned k, Integer* root) {
  if (k == 0) fail(Err::DegenerateInput, "0th power test");
  if (n < 0 && k % 2 == 0) return false;
  if (n == 0) {
    if (root) *root = 0;
    return true;
  }
  Integer r;
  int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  if (!exact) return false;
  if (root) *root = r;
  return true;
}

bool is_rational_fourth_power(const Rational& q, Rational* root) {
  Integer rn, rd;
  if (!is_perfect_power(q.get_num(), 4, &rn) || !is_perfect_power(q.get_den(), 4, &rd))
    return false;
  if (root) *root = make_rational(rn, rd);
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<long> primes_up_to(long n) {
  std::vector<bool> sieve(std::max<long>(n + 1, 2), true);
  sieve[0] = sieve[1] = false;
  for (long d = 2; d * d <= n; ++d)
    if (sieve[d])
      for (long m = d * d; m <= n; m += d) sieve[m] = false;
  std::vector<long> out;
  for (long d = 2; d <= n; ++d)
    if (sieve[d]) out.push_back(d);
  return out;
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return uint64_t((unsigned __int128)a * b % m);
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
  while (b) {
    uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Brent's variant of Pollard rho; n odd composite. Returns a nontrivial factor
// or 0 if every parameter choice fails (practically unreachable at our sizes).
uint64_t brent_rho(uint64_t n) {
  if (n % 2 == 0) return 2;
  for (uint64_t c = 1; c <= 100; ++c) {
    auto f = [&](uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
    uint64_t y = 2, g = 1, q = 1, x = 0, ys = 0;
    const uint64_t m = 128;
    for (uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (uint64_t i = 0; i < r; ++i) y = f(y);
      for (uint64_t k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod_u64(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
      }
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

void factor_recurse(const Integer& n, Factorization& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.primes.emplace_back(n, 1);
    return;
  }
  if (!n.fits_ulong_p()) {
    out.complete = false;
    out.primes.emplace_back(n, 1);  // composite stub; caller sees the flag
    return;
  }
  uint64_t d = brent_rho(n.get_ui());
  if (d == 0 || d == 1 || Integer((unsigned long)d) == n) {
    out.complete = false;
    out.primes.emplace_back(n, 1);
    return;
  }
  factor_recurse(Integer((unsigned long)d), out);
  factor_recurse(n / Integer((unsigned long)d), out);
}

}  // namespace

Factorization factor_integer(Integer n) {
  if (n == 0) fail(Err::DegenerateInput, "factor of zero");
  n = abs(n);
  Factorization out;
  for (long p : primes_up_to(100000)) {
    if (n == 1 || Integer(p) * p > n) break;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), (unsigned long)p)) {
      n /= (unsigned long)p;
      ++e;
    }
    if (e) out.primes.emplace_back(Integer(p), e);
  }
  if (n > 1) factor_recurse(n, out);
  std::sort(out.primes.begin(), out.primes.end(),
            [](auto& a, auto& b) { return a.first < b.first; });
  // merge equal primes produced by separate recursion branches
  Factorization merged;
  merged.complete = out.complete;
  for (auto& [p, e] : out.primes) {
    if (!merged.primes.empty() && merged.primes.back().first == p)
      merged.primes.back().second += e;
    else
      merged.primes.emplace_back(p, e);
  }
  return merged;
}

std::optional<Integer> squarefree_part(const Integer& n) {
  if (n == 0) fail(Err::DegenerateInput, "squarefree part of zero");
  Factorization f = factor_integer(n);
  if (!f.complete) return std::nullopt;
  Integer out = n < 0 ? -1 : 1;
  for (auto& [p, e] : f.primes)
    if (e % 2) out *= p;
  return out;
}

Integer pow_integer(Integer base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace q8
