#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "q8/schoen.hpp"

using namespace q8;

namespace {

template <typename F>
Err code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Err::InternalError;
}

std::vector<Rational> rats(std::initializer_list<long> v) {
  std::vector<Rational> r;
  for (long x : v) r.push_back(rat(x));
  return r;
}

// Random admissible branch parameters: distinct integers >= 2 shifted by a
// random small rational, kept clear of 0 and +-1 and reciprocal collisions.
std::vector<Rational> random_beta(std::mt19937& rng, int d) {
  while (true) {
    std::vector<Rational> b;
    for (int j = 0; j < d; ++j) {
      long num = static_cast<long>(rng() % 41) - 20;
      long den = static_cast<long>(rng() % 9) + 1;
      b.push_back(rat(num, den));
    }
    bool ok = true;
    std::vector<Rational> all;
    for (const Rational& x : b) {
      if (x == 0 || x == 1 || x == -1) {
        ok = false;
        break;
      }
      all.push_back(x);
      all.push_back(Rational(1) / x);
    }
    if (!ok) continue;
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) continue;
    return b;
  }
}

}  // namespace

TEST_CASE("coefficients of the middle-normalized form") {
  auto c4 = compute_c_coefficients(4, {rat(2)});
  REQUIRE(c4.size() == 5);
  CHECK(c4[0] == 0);
  CHECK(c4[1] == rat(-4, 5));
  CHECK(c4[2] == 2);
  CHECK(c4[3] == rat(-4, 5));
  CHECK(c4[4] == 0);

  auto c6 = compute_c_coefficients(6, rats({2, 3}));
  REQUIRE(c6.size() == 7);
  CHECK(c6[1] == rat(6, 31));
  CHECK(c6[2] == rat(-35, 31));
  CHECK(c6[3] == 2);
  CHECK(c6[4] == c6[2]);
  CHECK(c6[5] == c6[1]);
  CHECK(c6[0] == 0);
  CHECK(c6[6] == 0);

  SUBCASE("middle coefficient and generating form") {
    auto ctx = make_schoen_context(4, {rat(2)});
    CHECK(ctx.zg2 == rat(-5, 2));
    // q1(u,1) = u(u-2)(u-1/2) = u^3 - (5/2)u^2 + u
    REQUIRE(ctx.q1.size() == 4);
    CHECK(ctx.q1[0] == 0);
    CHECK(ctx.q1[1] == 1);
    CHECK(ctx.q1[2] == rat(-5, 2));
    CHECK(ctx.q1[3] == 1);
    auto ctx6 = make_schoen_context(6, rats({2, 3}));
    CHECK(ctx6.zg2 == rat(31, 3));
  }

  SUBCASE("defining symmetries hold on random admissible inputs") {
    std::mt19937 rng(23);
    int done = 0;
    while (done < 100) {
      int g = 4 + 2 * static_cast<int>(rng() % 4);  // 4, 6, 8, 10
      auto beta = random_beta(rng, (g - 2) / 2);
      auto c = compute_c_coefficients(g, beta);
      CHECK(c[0] == 0);
      CHECK(c[g] == 0);
      CHECK(c[g / 2] == 2);
      for (int j = 0; j <= g; ++j) CHECK(c[j] == c[g - j]);
      ++done;
    }
  }

  SUBCASE("rejects malformed inputs") {
    CHECK(code_of([] { compute_c_coefficients(5, {rat(2)}); }) == Err::PreconditionFailed);
    CHECK(code_of([] { compute_c_coefficients(2, {}); }) == Err::PreconditionFailed);
    CHECK(code_of([] { compute_c_coefficients(4, {rat(2), rat(3)}); }) ==
          Err::PreconditionFailed);
    CHECK(code_of([] { compute_c_coefficients(4, {rat(0)}); }) == Err::PreconditionFailed);
    CHECK(code_of([] { compute_c_coefficients(4, {rat(1)}); }) == Err::PreconditionFailed);
    CHECK(code_of([] { compute_c_coefficients(4, {rat(-1)}); }) == Err::PreconditionFailed);
    CHECK(code_of([] { compute_c_coefficients(6, {rat(2), rat(1, 2)}); }) ==
          Err::PreconditionFailed);
    CHECK(code_of([] { compute_c_coefficients(6, {rat(2), rat(2)}); }) ==
          Err::PreconditionFailed);
  }
}

TEST_CASE("default offset avoids every branch value") {
  CHECK(make_schoen_context(4, {rat(2)}).gamma == 3);
  CHECK(make_schoen_context(6, rats({2, 3})).gamma == 4);
  CHECK(make_schoen_context(6, rats({3, 4})).gamma == 2);
  CHECK(make_schoen_context(4, {rat(2)}, rat(7)).gamma == 7);
  CHECK(code_of([] { make_schoen_context(4, {rat(2)}, rat(2)); }) == Err::PreconditionFailed);
  CHECK(code_of([] { make_schoen_context(4, {rat(2)}, rat(1, 2)); }) ==
        Err::PreconditionFailed);
  CHECK(code_of([] { make_schoen_context(4, {rat(2)}, rat(-1)); }) == Err::PreconditionFailed);
}

TEST_CASE("subspace points derive their reflected coordinates") {
  auto ctx = make_schoen_context(4, {rat(2)}, rat(7));
  auto pt = p0_point(ctx, {rat(1), rat(1)});
  REQUIRE(pt.e.size() == 5);
  CHECK(pt.e[0] == 1);
  CHECK(pt.e[1] == 1);
  CHECK(pt.e[2] == 1);
  CHECK(pt.e[3] == rat(-1, 5));
  CHECK(pt.e[4] == -1);

  SUBCASE("top coordinate is always -1") {
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
      int g = 4 + 2 * static_cast<int>(rng() % 4);
      auto beta = random_beta(rng, (g - 2) / 2);
      auto c = make_schoen_context(g, beta);
      std::vector<Rational> free_coords;
      for (int i = 0; i < g / 2; ++i)
        free_coords.push_back(rat(static_cast<long>(rng() % 19) - 9,
                                  static_cast<long>(rng() % 9) + 1));
      auto p = p0_point(c, free_coords);
      CHECK(p.e[0] == 1);
      CHECK(p.e[g] == -1);
      for (int i = 0; i <= g / 2; ++i) {
        Rational sgn = ((g / 2 + i) % 2 == 0) ? c.c[i] : -c.c[i];
        CHECK(p.e[i] + p.e[g - i] == sgn * p.e[g / 2]);
      }
    }
  }

  CHECK(code_of([&] { p0_point(ctx, {rat(1)}); }) == Err::PreconditionFailed);
}

TEST_CASE("branch parameters annihilate the coefficient polynomial") {
  auto ctx = make_schoen_context(4, {rat(2)});
  // term by term: c_1 * 2 + c_2 * 4 + c_3 * 8 = -8/5 + 8 - 32/5 = 0
  CHECK(ctx.c[1] * 2 == rat(-8, 5));
  CHECK(ctx.c[2] * 4 == 8);
  CHECK(ctx.c[3] * 8 == rat(-32, 5));
  CHECK(surprising_symmetry_check(ctx));

  auto ctx6 = make_schoen_context(6, rats({2, 3}));
  CHECK(surprising_symmetry_check(ctx6));

  std::mt19937 rng(17);
  for (int t = 0; t < 20; ++t) {
    int g = 4 + 2 * static_cast<int>(rng() % 4);
    auto c = make_schoen_context(g, random_beta(rng, (g - 2) / 2));
    CHECK(surprising_symmetry_check(c));
  }

  SUBCASE("a corrupted coefficient breaks the sum") {
    auto bad = ctx;
    bad.c[1] += 1;
    CHECK_FALSE(surprising_symmetry_check(bad));
  }
}

TEST_CASE("conjugate pair products stay rational via traces") {
  auto ctx = make_schoen_context(4, {rat(2)}, rat(7));
  auto pt = p0_point(ctx, {rat(1), rat(1)});

  // pair {2, 1/2}: trace path against the frozen direct value
  Rational pair = pair_product_from_trace(pt.e, rat(5, 2));
  CHECK(pair == rat(-3249, 400));
  GaussianRational gpair = pair_product_gaussian(pt.e, GaussianRational(rat(2)));
  CHECK(gpair.im == 0);
  CHECK(gpair.re == pair);

  // pair {i, -i} has trace 0 and evaluates prod (t_k^2 + 1)
  Rational pair_i = pair_product_from_trace(pt.e, rat(0));
  GaussianRational gpair_i = pair_product_gaussian(pt.e, GaussianRational::i());
  CHECK(gpair_i.im == 0);
  CHECK(gpair_i.re == pair_i);

  SUBCASE("agreement on random points and traces") {
    std::mt19937 rng(29);
    for (int t = 0; t < 25; ++t) {
      std::vector<Rational> free_coords{rat(static_cast<long>(rng() % 21) - 10,
                                            static_cast<long>(rng() % 9) + 1),
                                        rat(static_cast<long>(rng() % 21) - 10,
                                            static_cast<long>(rng() % 9) + 1)};
      auto p = p0_point(ctx, free_coords);
      long bn = static_cast<long>(rng() % 13) + 2;
      long bd = static_cast<long>(rng() % 5) + 1;
      Rational b = rat(bn, bd);
      if (b == 1) continue;
      GaussianRational direct = pair_product_gaussian(p.e, GaussianRational(b));
      CHECK(direct.im == 0);
      CHECK(direct.re == pair_product_from_trace(p.e, b + Rational(1) / b));
      GaussianRational at_i = pair_product_gaussian(p.e, GaussianRational::i());
      CHECK(at_i.im == 0);
      CHECK(at_i.re == pair_product_from_trace(p.e, rat(0)));
    }
  }

  CHECK(code_of([&] { pair_product_gaussian(pt.e, GaussianRational(rat(0))); }) ==
        Err::DegenerateInput);
}

TEST_CASE("middle factor closed form carries the odd sign") {
  auto ctx = make_schoen_context(4, {rat(2)}, rat(7));
  auto pt = p0_point(ctx, {rat(1), rat(1)});
  // (sum e_i)(sum (-1)^i e_i) = (9/5)(1/5) = 9/25 = +(9/4) e_2^2 / (25/4)
  Rational sum = 0, alt = 0;
  for (int i = 0; i <= 4; ++i) {
    sum += pt.e[i];
    alt += (i % 2 == 0) ? pt.e[i] : -pt.e[i];
  }
  CHECK(sum == rat(9, 5));
  CHECK(alt == rat(1, 5));
  CHECK(sum * alt == rat(9, 25));
  Rational wrong_sign = rat(-1) * rat(9, 4) * pt.e[2] * pt.e[2] / (ctx.zg2 * ctx.zg2);
  CHECK(sum * alt != wrong_sign);  // the even-power sign convention fails
  CHECK(middle_factor_identity(ctx, pt));

  std::mt19937 rng(31);
  for (int t = 0; t < 10; ++t) {
    int g = 4 + 2 * static_cast<int>(rng() % 3);
    auto c = make_schoen_context(g, random_beta(rng, (g - 2) / 2));
    std::vector<Rational> free_coords;
    for (int i = 0; i < g / 2; ++i)
      free_coords.push_back(
          rat(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 9) + 1));
    CHECK(middle_factor_identity(c, p0_point(c, free_coords)));
  }
}

TEST_CASE("restricted product agrees across both evaluations") {
  auto ctx = make_schoen_context(4, {rat(2)}, rat(7));
  auto pt = p0_point(ctx, {rat(1), rat(1)});
  Rational v = restrict_fhat_to_P0(ctx, pt);
  CHECK(v == make_rational(Integer(-855036081), Integer(100000000)));
  CHECK(restrict_fhat_factored(ctx, pt) == v);
  CHECK(fourth_root_candidate(ctx, pt) == rat(171, 100));
  Rational root;
  CHECK(is_rational_fourth_power(-v, &root));
  CHECK(root == rat(171, 100));

  SUBCASE("agreement at random points for larger genus") {
    std::mt19937 rng(37);
    for (int t = 0; t < 12; ++t) {
      int g = 4 + 2 * static_cast<int>(rng() % 3);
      auto c = make_schoen_context(g, random_beta(rng, (g - 2) / 2));
      std::vector<Rational> free_coords;
      for (int i = 0; i < g / 2; ++i)
        free_coords.push_back(
            rat(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 9) + 1));
      auto p = p0_point(c, free_coords);
      Rational direct;
      try {
        direct = restrict_fhat_to_P0(c, p);
      } catch (const Error& e) {
        CHECK(e.code() == Err::DegeneratePoint);
        continue;
      }
      CHECK(restrict_fhat_factored(c, p) == direct);
    }
  }

  SUBCASE("vanishing middle coordinate gives a plain zero value") {
    auto flat = p0_point(ctx, {rat(1), rat(0)});
    CHECK(restrict_fhat_to_P0(ctx, flat) == 0);
    CHECK(restrict_fhat_factored(ctx, flat) == 0);
    CHECK(fourth_root_candidate(ctx, flat) == 0);
    Rational rootz;
    CHECK(is_rational_fourth_power(rat(0), &rootz));
    CHECK(rootz == 0);
  }

  SUBCASE("points on the offset hyperplane are rejected") {
    // P(7) = 2400 - 336 e_1 + (217/5) e_2 vanishes at e = (50/7, 0)
    auto onplane = p0_point(ctx, {rat(50, 7), rat(0)});
    CHECK(code_of([&] { restrict_fhat_to_P0(ctx, onplane); }) == Err::DegeneratePoint);
    CHECK(code_of([&] { restrict_fhat_factored(ctx, onplane); }) == Err::DegeneratePoint);
  }

  SUBCASE("foreign coordinates are rejected") {
    P0Point bad = pt;
    bad.e[3] += 1;
    CHECK(code_of([&] { restrict_fhat_to_P0(ctx, bad); }) == Err::PreconditionFailed);
    P0Point shorter = pt;
    shorter.e.pop_back();
    CHECK(code_of([&] { restrict_fhat_to_P0(ctx, shorter); }) == Err::PreconditionFailed);
  }
}

TEST_CASE("fourth power detection on rationals") {
  Rational r;
  CHECK(is_rational_fourth_power(rat(81, 16), &r));
  CHECK(r == rat(3, 2));
  CHECK_FALSE(is_rational_fourth_power(rat(-16)));
  CHECK(is_rational_fourth_power(rat(16), &r));
  CHECK(r == 2);
  CHECK_FALSE(is_rational_fourth_power(rat(8)));
  CHECK_FALSE(is_rational_fourth_power(rat(81, 8)));
  CHECK(is_rational_fourth_power(rat(625, 16), &r));
  CHECK(r == rat(5, 2));
  CHECK(is_rational_fourth_power(rat(0), &r));
  CHECK(r == 0);
}

TEST_CASE("minus the restricted product is always a fourth power") {
  auto ctx = make_schoen_context(4, {rat(2)}, rat(7));
  auto rep = verify_fourth_power_identity(ctx, 25, 1);
  CHECK(rep.all_pass);
  CHECK(rep.trials.size() == 25);
  CHECK(rep.symbolic_checked);
  CHECK(rep.symbolic_pass);
  CHECK(rep.sign_control_passes == 0);
  for (const auto& tr : rep.trials) {
    CHECK(tr.pass);
    CHECK(tr.value < 0);
    CHECK(tr.root * tr.root * tr.root * tr.root == -tr.value);
  }

  SUBCASE("same seed reproduces the same trials") {
    auto rep2 = verify_fourth_power_identity(ctx, 25, 1);
    REQUIRE(rep2.trials.size() == rep.trials.size());
    for (size_t i = 0; i < rep.trials.size(); ++i) {
      CHECK(rep2.trials[i].value == rep.trials[i].value);
      CHECK(rep2.trials[i].free_coords == rep.trials[i].free_coords);
    }
  }

  SUBCASE("larger genus with randomized trials only") {
    auto ctx6 = make_schoen_context(6, rats({2, 3}), rat(11));
    auto rep6 = verify_fourth_power_identity(ctx6, 25, 1);
    CHECK(rep6.all_pass);
    CHECK_FALSE(rep6.symbolic_checked);
    CHECK(rep6.sign_control_passes == 0);
  }

  SUBCASE("symbolic pass is available beyond the base genus") {
    auto ctx6 = make_schoen_context(6, rats({2, 3}), rat(11));
    auto rep6 = verify_fourth_power_identity(ctx6, 2, 5, true);
    CHECK(rep6.symbolic_checked);
    CHECK(rep6.symbolic_pass);
    CHECK(rep6.all_pass);
  }

  SUBCASE("no trials still runs the symbolic check at the base genus") {
    auto rep0 = verify_fourth_power_identity(ctx, 0, 9);
    CHECK(rep0.trials.empty());
    CHECK(rep0.symbolic_checked);
    CHECK(rep0.symbolic_pass);
    CHECK(rep0.all_pass);
  }
}
