#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "q8/algebra.hpp"
#include "q8/finite_field.hpp"
#include "q8/quaternion.hpp"

using namespace q8;

namespace {

RatPoly rp(std::vector<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return RatPoly{std::move(c)};
}

RatPoly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg_dist(0, max_deg), coeff_dist(-5, 5);
  int d = deg_dist(rng);
  std::vector<Rational> c(d + 1);
  for (auto& a : c) a = Rational(coeff_dist(rng));
  if (c.back() == 0) c.back() = Rational(1);
  return RatPoly{std::move(c)};
}

}  // namespace

TEST_CASE("rational canonicalization and parsing") {
  CHECK(make_rational(Integer(3), Integer(6)) == rat(1, 2));
  CHECK(make_rational(Integer(-3), Integer(-6)) == rat(1, 2));
  CHECK(make_rational(Integer(3), Integer(-6)) == rat(-1, 2));
  CHECK(rational_str(rat(-1, 2)) == "-1/2");
  CHECK(rational_str(rat(7)) == "7");
  CHECK(parse_rational("22/7") == rat(22, 7));
  CHECK(parse_rational("-5") == rat(-5));
  CHECK(parse_rational(rational_str(rat(-481, 36))) == rat(-481, 36));
  CHECK_THROWS_AS(make_rational(Integer(1), Integer(0)), Error);
}

TEST_CASE("valuations on Q") {
  CHECK(int_valuation(Integer(48), Integer(2)) == 4);
  CHECK(int_valuation(Integer(-27), Integer(3)) == 3);
  CHECK(rat_valuation(rat(9, 8), Integer(2)) == -3);
  CHECK(rat_valuation(rat(9, 8), Integer(3)) == 2);
  CHECK(rat_valuation(rat(5), Integer(7)) == 0);
}

TEST_CASE("square and power detection") {
  Integer root;
  CHECK(is_square(Integer(144), &root));
  CHECK(root == 12);
  CHECK_FALSE(is_square(Integer(145)));
  CHECK_FALSE(is_square(Integer(-4)));
  Rational qr;
  CHECK(is_rational_square(rat(9, 16), &qr));
  CHECK(qr == rat(3, 4));
  CHECK_FALSE(is_rational_square(rat(2)));
  CHECK(is_perfect_power(Integer(81), 4, &root));
  CHECK(root == 3);
  CHECK_FALSE(is_perfect_power(Integer(80), 4));
  CHECK(is_rational_fourth_power(rat(16, 81), &qr));
  CHECK(qr == rat(2, 3));
  CHECK_FALSE(is_rational_fourth_power(rat(-16, 81)));
}

TEST_CASE("factorization and squarefree part") {
  auto f = factor_integer(Integer(2) * 2 * 2 * 3 * 3 * 41);
  REQUIRE(f.complete);
  REQUIRE(f.primes.size() == 3);
  CHECK(f.primes[0] == std::pair<Integer, int>(Integer(2), 3));
  CHECK(f.primes[1] == std::pair<Integer, int>(Integer(3), 2));
  CHECK(f.primes[2] == std::pair<Integer, int>(Integer(41), 1));

  // large semiprime forces the rho splitter
  Integer a("1000003"), b("1000033");
  auto g = factor_integer(a * b);
  REQUIRE(g.complete);
  REQUIRE(g.primes.size() == 2);
  CHECK(g.primes[0].first == a);
  CHECK(g.primes[1].first == b);

  CHECK(squarefree_part(Integer(48)) == Integer(3));
  CHECK(squarefree_part(Integer(-48)) == Integer(-3));
  CHECK(squarefree_part(Integer(1)) == Integer(1));
  CHECK(squarefree_part(a * a * b) == b);
}

TEST_CASE("primality and prime sieve") {
  CHECK(is_prime(Integer(2)));
  CHECK(is_prime(Integer(113)));
  CHECK_FALSE(is_prime(Integer(1)));
  CHECK_FALSE(is_prime(Integer(121)));
  auto ps = primes_up_to(30);
  CHECK(ps == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("gaussian arithmetic and strings") {
  GaussianRational z{rat(2), rat(-3)};
  CHECK(z * z.conj() == GaussianRational(rat(13)));
  CHECK(z.norm() == rat(13));
  CHECK((z / z) == GaussianRational(1));
  CHECK(gaussian_str(z) == "2-3i");
  CHECK(gaussian_str(GaussianRational::i()) == "i");
  CHECK(gaussian_str(-GaussianRational::i()) == "-i");
  CHECK(gaussian_str(GaussianRational{rat(0), rat(1, 2)}) == "1/2i");
  CHECK(parse_gaussian("2+i") == GaussianRational{rat(2), rat(1)});
  CHECK(parse_gaussian("-i") == -GaussianRational::i());
  CHECK(parse_gaussian("-3/4-5/2i") == GaussianRational{rat(-3, 4), rat(-5, 2)});
  CHECK(parse_gaussian(gaussian_str(z)) == z);
}

TEST_CASE("quaternion relations") {
  auto i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  CHECK(i * i == Quaternion(-1));
  CHECK(j * j == Quaternion(-1));
  CHECK(k * k == Quaternion(-1));
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(i * j * k == Quaternion(-1));

  // the half-integral unit (-1 + i + j + k)/2 has reduced trace -1 and norm 1
  Quaternion omega{rat(-1, 2), rat(1, 2), rat(1, 2), rat(1, 2)};
  CHECK(omega.trd() == rat(-1));
  CHECK(omega.nrd() == rat(1));
  CHECK(omega * omega * omega == Quaternion(1));
  CHECK_FALSE(omega.is_lipschitz_integral());

  Quaternion t11{rat(0), rat(-1, 2), rat(-1, 2), rat(0)};
  Quaternion t22{rat(0), rat(0), rat(0), rat(1, 2)};
  CHECK(t11.nrd() * t22.nrd() == rat(1, 8));
  CHECK_FALSE(is_rational_square(t11.nrd() * t22.nrd()));
}

TEST_CASE("quaternion norm multiplicativity") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    Quaternion a{rat(d(rng), 2), rat(d(rng), 2), rat(d(rng), 2), rat(d(rng), 2)};
    Quaternion b{rat(d(rng), 3), rat(d(rng), 3), rat(d(rng), 3), rat(d(rng), 3)};
    CHECK((a * b).nrd() == a.nrd() * b.nrd());
    CHECK((a * b).conj() == b.conj() * a.conj());
  }
}

TEST_CASE("polynomial division and gcd") {
  auto f = rp({-1, 0, 0, 0, 1});  // x^4 - 1
  auto g = rp({-1, 0, 1});        // x^2 - 1
  CHECK(exact_div(f, g) == rp({1, 0, 1}));
  CHECK(divides(g, f));
  CHECK_FALSE(divides(rp({1, 1}), rp({1, 0, 1})));
  CHECK(poly_gcd(f, g) == g.monic());
  auto [q, r] = divmod(rp({1, 2, 3}), rp({1, 1}));
  CHECK(q * rp({1, 1}) + r == rp({1, 2, 3}));
}

TEST_CASE("resultant matches root-product convention") {
  CHECK(resultant(rp({-2, 1}), rp({-5, 1})) == rat(-3));
  CHECK(resultant(rp({1, 0, 1}), rp({1, 0, 1})) == rat(0));
  CHECK(resultant(rp({-2, 1}), rp({7})) == rat(7));
  CHECK_THROWS_AS(resultant(RatPoly(), RatPoly()), Error);
}

TEST_CASE("resultant multiplicativity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_poly(rng, 4), g = random_poly(rng, 3), h = random_poly(rng, 3);
    CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
  }
}

TEST_CASE("discriminant examples and gcd criterion") {
  CHECK(discriminant(rp({-1, 0, 1})) == rat(4));
  CHECK(discriminant(rp({0, -1, 0, 1})) == rat(4));
  CHECK(discriminant(rp({1, 2, 1})) == rat(0));
  CHECK_THROWS_AS(discriminant(rp({5})), Error);

  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_poly(rng, 9);
    if (f.degree() < 1) continue;
    bool disc_zero = discriminant(f) == rat(0);
    bool has_repeat = poly_gcd(f, f.derivative()).degree() >= 1;
    CHECK(disc_zero == has_repeat);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == rp({-1, 1}));
  CHECK(cyclotomic(2) == rp({1, 1}));
  CHECK(cyclotomic(4) == rp({1, 0, 1}));
  CHECK(cyclotomic(12) == rp({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_reversed(1) == rp({1, -1}));
  CHECK(cyclotomic_reversed(8) == cyclotomic(8));

  for (unsigned n = 1; n <= 30; ++n) {
    RatPoly prod = RatPoly::constant(Rational(1));
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0) prod *= cyclotomic(d);
    std::vector<Rational> c(n + 1, Rational(0));
    c[0] = Rational(-1);
    c[n] = Rational(1);
    CHECK(prod == RatPoly{std::move(c)});
    CHECK(unsigned(cyclotomic(n).degree()) == euler_phi(n));
  }
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(97) == 96);
}

TEST_CASE("finite field modulus search is deterministic") {
  auto f13 = FqContext::make(13, 1);
  CHECK(f13->modulus_id() == "13^1:0");
  CHECK(f13->q() == 13);

  // F_9: candidates n = 0.. give tails (c1, c0); first irreducible x^2 + c1 x + c0.
  // n=0: x^2 (reducible), n=1: x^2+1 irreducible over F_3.
  auto f9 = FqContext::make(3, 2);
  CHECK(f9->modulus_tail() == std::vector<uint64_t>{1, 0});
  CHECK(f9->modulus_id() == "3^2:0,1");
  CHECK(f9->q() == 9);

  auto f9b = FqContext::make_alternative(3, 2, 1);
  CHECK(f9b->modulus_tail() != f9->modulus_tail());
  CHECK(f9b->q() == 9);

  // x^2+1 is reducible over F_13 (13 = 1 mod 4), so the search must skip it.
  auto f169 = FqContext::make(13, 2);
  Integer c0((unsigned long)f169->modulus_tail()[0]);
  CHECK(legendre((13 - c0) % 13, Integer(13)) != 1);
}

TEST_CASE("finite field arithmetic") {
  auto f9 = FqContext::make(3, 2);
  // with modulus x^2 + 1: x has order 4, x + 1 has order 8 (a generator)
  FqCoords x = f9->from_index(3);  // coords (0, 1)
  CHECK(f9->equal(f9->pow(x, 2), f9->neg(f9->one())));
  CHECK(f9->equal(f9->pow(x, 4), f9->one()));
  FqCoords gen = f9->add(x, f9->one());
  CHECK(f9->equal(f9->pow(gen, 8), f9->one()));
  CHECK_FALSE(f9->equal(f9->pow(gen, 4), f9->one()));

  // index round trip covers all of F_q
  for (uint64_t idx = 0; idx < f9->q(); ++idx) CHECK(f9->index_of(f9->from_index(idx)) == idx);

  // field axioms on random triples in F_169
  auto f169 = FqContext::make(13, 2);
  std::mt19937 rng(17);
  std::uniform_int_distribution<uint64_t> d(0, f169->q() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    FqCoords a = f169->from_index(d(rng)), b = f169->from_index(d(rng)),
             c = f169->from_index(d(rng));
    CHECK(f169->equal(f169->mul(a, f169->add(b, c)),
                      f169->add(f169->mul(a, b), f169->mul(a, c))));
    CHECK(f169->equal(f169->mul(f169->mul(a, b), c), f169->mul(a, f169->mul(b, c))));
  }
  // Fermat: a^q = a
  for (int trial = 0; trial < 50; ++trial) {
    FqCoords a = f169->from_index(d(rng));
    CHECK(f169->equal(f169->pow(a, f169->q()), a));
  }
}

TEST_CASE("quadratic character") {
  auto f13 = FqContext::make(13, 1);
  CHECK(quadratic_character(FiniteFieldElement::make(f13, 3)) == 1);
  CHECK(quadratic_character(FiniteFieldElement::make(f13, 2)) == -1);
  CHECK(quadratic_character(FiniteFieldElement::make(f13, 0)) == 0);

  // multiplicativity over many pairs at p in {13, 41}, r in {1, 2}
  std::mt19937 rng(19);
  for (uint64_t p : {uint64_t(13), uint64_t(41)}) {
    for (unsigned r = 1; r <= 2; ++r) {
      auto ctx = FqContext::make(p, r);
      std::uniform_int_distribution<uint64_t> d(1, ctx->q() - 1);
      for (int trial = 0; trial < 2500; ++trial) {
        auto a = FiniteFieldElement{ctx, ctx->from_index(d(rng))};
        auto b = FiniteFieldElement{ctx, ctx->from_index(d(rng))};
        CHECK(quadratic_character(a * b) == quadratic_character(a) * quadratic_character(b));
      }
    }
  }

  // norm compatibility: for c in the prime subfield, chi_{F_q}(c) = chi_p(c)^r
  auto f169 = FqContext::make(13, 2);
  for (uint64_t c = 1; c < 13; ++c) {
    int chi_ext = quadratic_character(FiniteFieldElement::make(f169, c));
    int chi_base = quadratic_character(FiniteFieldElement::make(f13, c));
    CHECK(chi_ext == chi_base * chi_base);
  }
}

TEST_CASE("legendre symbols") {
  CHECK(legendre(Integer(3), Integer(13)) == 1);
  CHECK(legendre(Integer(2), Integer(13)) == -1);
  CHECK(legendre(Integer(26), Integer(13)) == 0);
  CHECK(legendre(Integer(-1), Integer(13)) == 1);   // 13 = 1 mod 4
  CHECK(legendre(Integer(-1), Integer(7)) == -1);   // 7 = 3 mod 4
  CHECK(legendre_rational(rat(1, 2), Integer(13)) == -1);
  CHECK_THROWS_AS(legendre_rational(rat(13, 2), Integer(13)), Error);
}

TEST_CASE("modular square roots") {
  auto r = sqrt_mod(Integer(3), Integer(13));
  REQUIRE(r.has_value());
  CHECK((*r) * (*r) % 13 == 3);
  CHECK_FALSE(sqrt_mod(Integer(2), Integer(13)).has_value());
  CHECK(sqrt_mod(Integer(0), Integer(13)) == Integer(0));
  // 41 = 1 mod 8 exercises the full Tonelli-Shanks loop
  for (long a = 1; a < 41; ++a) {
    auto s = sqrt_mod(Integer(a), Integer(41));
    if (s.has_value())
      CHECK((*s) * (*s) % 41 == a);
    else
      CHECK(legendre(Integer(a), Integer(41)) == -1);
  }
}

TEST_CASE("hensel lift of sqrt(-1)") {
  Integer u5 = hensel_sqrt_minus_one(Integer(5), 1);
  CHECK(u5 == 2);  // 2^2 = 4 = -1 mod 5, and 2 < 3
  Integer u = hensel_sqrt_minus_one(Integer(5), 10);
  Integer mod = pow_integer(Integer(5), 10);
  CHECK((u * u + 1) % mod == 0);
  CHECK(u % 5 == 2);
  Integer u13 = hensel_sqrt_minus_one(Integer(13), 64);
  Integer mod13 = pow_integer(Integer(13), 64);
  CHECK((u13 * u13 + 1) % mod13 == 0);
  CHECK(u13 % 13 == 5);  // roots are 5 and 8; smallest picked
  CHECK_THROWS_AS(hensel_sqrt_minus_one(Integer(7)), Error);
}

TEST_CASE("gaussian valuation: split prime branches") {
  GaussianRational z{rat(2), rat(1)};
  CHECK(gaussian_valuation(z, Integer(5), Integer(2)) == Valuation::finite(rat(1)));
  CHECK(gaussian_valuation(z, Integer(5), Integer(3)) == Valuation::finite(rat(0)));
  CHECK(gaussian_valuation(z.conj(), Integer(5), Integer(2)) == Valuation::finite(rat(0)));
  CHECK(gaussian_valuation(z.conj(), Integer(5), Integer(3)) == Valuation::finite(rat(1)));
  // both branches on p itself give 1
  CHECK(gaussian_valuation(GaussianRational(5), Integer(5), Integer(2)) ==
        Valuation::finite(rat(1)));
  CHECK(gaussian_valuation(GaussianRational(5), Integer(5), Integer(3)) ==
        Valuation::finite(rat(1)));
  // higher power on one branch: (2+i)^3 = 2+11i
  GaussianRational z3 = z * z * z;
  CHECK(z3 == GaussianRational{rat(2), rat(11)});
  CHECK(gaussian_valuation(z3, Integer(5), Integer(2)) == Valuation::finite(rat(3)));
  CHECK(gaussian_valuation(z3, Integer(5), Integer(3)) == Valuation::finite(rat(0)));
  // a Hensel lift of the branch gives the same answer as its reduction mod p
  Integer u_lifted = hensel_sqrt_minus_one(Integer(5), 6);
  CHECK(gaussian_valuation(z3, Integer(5), u_lifted) ==
        gaussian_valuation(z3, Integer(5), u_lifted % 5));
  CHECK_THROWS_AS(gaussian_valuation(z, Integer(5)), Error);
  CHECK_THROWS_AS(gaussian_valuation(z, Integer(5), Integer(1)), Error);
  CHECK_THROWS_AS(gaussian_valuation(z, Integer(2), Integer(1)), Error);
}

TEST_CASE("gaussian valuation: inert prime and infinity") {
  CHECK(gaussian_valuation(GaussianRational(0), Integer(7)).is_infinity);
  CHECK(gaussian_valuation(GaussianRational(7), Integer(7)) == Valuation::finite(rat(1)));
  CHECK(gaussian_valuation(GaussianRational::i(), Integer(7)) == Valuation::finite(rat(0)));
  CHECK(gaussian_valuation(GaussianRational{rat(7), rat(7)}, Integer(7)) ==
        Valuation::finite(rat(1)));
  CHECK(gaussian_valuation(GaussianRational{rat(1, 7), rat(0)}, Integer(7)) ==
        Valuation::finite(rat(-1)));
  // norms multiply: v(z) + v(conj z) = v_p(norm)
  GaussianRational w{rat(3), rat(5)};  // norm 34, v_7 = 0
  auto vw = gaussian_valuation(w, Integer(7));
  auto vwc = gaussian_valuation(w.conj(), Integer(7));
  CHECK(vw.value + vwc.value == rat(0));
}

TEST_CASE("gaussian valuation: additivity and ultrametric") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> d(-20, 20);
  std::uniform_int_distribution<long> dpos(1, 20);
  Integer p(5), u(2);
  for (int trial = 0; trial < 300; ++trial) {
    GaussianRational a{rat(d(rng), dpos(rng)), rat(d(rng), dpos(rng))};
    GaussianRational b{rat(d(rng), dpos(rng)), rat(d(rng), dpos(rng))};
    if (a.is_zero() || b.is_zero()) continue;
    auto va = gaussian_valuation(a, p, u), vb = gaussian_valuation(b, p, u);
    auto vab = gaussian_valuation(a * b, p, u);
    CHECK(vab.value == va.value + vb.value);
    if (!(a + b).is_zero()) {
      auto vsum = gaussian_valuation(a + b, p, u);
      CHECK(vsum.value >= std::min(va.value, vb.value));
    }
  }
}
