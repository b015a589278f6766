#include "q8/frobenius.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <thread>

#include "q8/curve_family.hpp"

namespace q8 {

namespace {

// reduce a rational mod p; p odd prime, denominator a p-unit
uint64_t reduce_rational(const Rational& x, const Integer& p) {
  Integer num = numer(x) % p;
  if (num < 0) num += p;
  Integer den = denom(x) % p;
  Integer inv;
  int ok = mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  require(ok != 0, Err::BadPrime, "coefficient denominator vanishes mod p");
  Integer r = num * inv % p;
  return r.get_ui();
}

// c_0..c_deg of prod (1 - alpha T) from power sums s_1..s_deg
std::vector<Rational> newton_fit(const std::vector<Rational>& s, unsigned deg) {
  std::vector<Rational> c(deg + 1, Rational(0));
  c[0] = 1;
  for (unsigned k = 1; k <= deg; ++k) {
    Rational acc(0);
    for (unsigned m = 1; m <= k; ++m) acc += s[m - 1] * c[k - m];
    c[k] = -acc / Rational(long(k));
  }
  return c;
}

bool integral(const RatPoly& f) {
  for (const auto& coef : f.c)
    if (!is_integer(coef)) return false;
  return true;
}

}  // namespace

Integer count_points(int g, const std::vector<Rational>& a, const Integer& p, unsigned r,
                     const CountOptions& opts) {
  require(r >= 1, Err::DegenerateInput, "extension degree must be >= 1");
  require(is_prime(p), Err::DegenerateInput, "p must be prime");
  require(p != 2, Err::BadPrime, "p = 2 is a bad prime for every fiber");
  Rational delta = family_discriminant(g, a);
  require(delta != 0, Err::DegenerateInput, "singular fiber");
  require(numer(delta) % p != 0 && denom(delta) % p != 0, Err::BadPrime,
          "p divides the discriminant");

  Integer q_big = pow_integer(p, r);
  require(q_big <= opts.budget, Err::BudgetExceeded, "field size exceeds the counting budget");
  require(q_big.fits_ulong_p(), Err::BudgetExceeded, "field size beyond 64-bit addressing");
  const uint64_t q = q_big.get_ui();

  auto ctx = opts.field;
  if (!ctx) ctx = FqContext::make(p.get_ui(), r);
  require(Integer((unsigned long)ctx->p()) == p && ctx->r() == r, Err::DegenerateInput,
          "field override mismatches (p, r)");

  auto f = build_family_poly(g, a).f;
  std::vector<FqCoords> fc(f.degree() + 1);
  for (int k = 0; k <= f.degree(); ++k) fc[k] = ctx->from_int(reduce_rational(f.coeff(k), p));

  // chi via a squares table when it fits, else by exponentiation
  const bool use_table = q <= (uint64_t(1) << 26);
  std::vector<uint8_t> is_sq;
  if (use_table) {
    is_sq.assign(q, 0);
    for (uint64_t idx = 0; idx < q; ++idx) {
      FqCoords z = ctx->from_index(idx);
      is_sq[ctx->index_of(ctx->mul(z, z))] = 1;
    }
  }
  const uint64_t half = (q - 1) / 2;

  unsigned nthreads =
      opts.threads > 0 ? unsigned(opts.threads) : std::min(std::thread::hardware_concurrency(), 8u);
  if (nthreads == 0 || q < (1u << 16)) nthreads = 1;

  std::vector<long> partial(nthreads, 0);
  auto worker = [&](unsigned tid) {
    const uint64_t chunk = (q + nthreads - 1) / nthreads;
    const uint64_t lo = tid * chunk, hi = std::min<uint64_t>(q, lo + chunk);
    long sum = 0;
    for (uint64_t idx = lo; idx < hi; ++idx) {
      FqCoords x = ctx->from_index(idx);
      FqCoords acc = fc.back();
      for (int k = int(fc.size()) - 2; k >= 0; --k) acc = ctx->add(ctx->mul(acc, x), fc[k]);
      if (ctx->is_zero(acc)) continue;
      bool square = use_table ? bool(is_sq[ctx->index_of(acc)])
                              : ctx->equal(ctx->pow(acc, half), ctx->one());
      sum += square ? 1 : -1;
    }
    partial[tid] = sum;
  };
  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  long chi_sum = 0;
  for (long v : partial) chi_sum += v;  // fixed summation order

  Integer count = Integer(1) + Integer((unsigned long)q) + Integer(chi_sum);
  Integer dev = count - Integer((unsigned long)q) - 1;
  require(dev * dev <= Integer(4 * g * g) * Integer((unsigned long)q), Err::InternalError,
          "count violates the Weil bound");
  return count;
}

std::vector<Rational> power_sums_from_poly(const RatPoly& c, unsigned r_max) {
  require(!c.is_zero() && c.coeff(0) == 1, Err::DegenerateInput, "constant term must be 1");
  const int n = c.degree();
  std::vector<Rational> s(r_max);
  for (unsigned k = 1; k <= r_max; ++k) {
    Rational acc(0);
    if (int(k) <= n) {
      for (unsigned m = 1; m < k; ++m) acc += s[m - 1] * c.coeff(int(k - m));
      s[k - 1] = -Rational(long(k)) * c.coeff(int(k)) - acc;
    } else {
      for (int j = 1; j <= n; ++j) acc += c.coeff(j) * s[k - 1 - j];
      s[k - 1] = -acc;
    }
  }
  return s;
}

LPolynomialReport fit_l_polynomial(const std::map<unsigned, Integer>& counts, const Integer& p,
                                   int g, FitAnsatz ansatz) {
  require(g >= 1, Err::DegenerateInput, "genus must be positive");
  require(is_prime(p), Err::DegenerateInput, "p must be prime");
  if (ansatz == FitAnsatz::Square)
    require(g % 2 == 0, Err::DegenerateInput, "square ansatz needs even genus");
  for (const auto& [rr, nn] : counts)
    require(rr >= 1, Err::DegenerateInput, "counts must be keyed by r >= 1");
  const unsigned need = ansatz == FitAnsatz::Generic ? unsigned(g) : unsigned(g) / 2;
  for (unsigned rr = 1; rr <= need; ++rr)
    require(counts.count(rr), Err::PreconditionFailed,
            "missing count at r = " + std::to_string(rr));

  unsigned r_have = 0;
  for (const auto& [rr, nn] : counts) r_have = std::max(r_have, rr);
  std::vector<Rational> s(need);
  for (unsigned rr = 1; rr <= need; ++rr)
    s[rr - 1] = Rational(pow_integer(p, rr) + 1 - counts.at(rr));

  auto counts_match = [&](const RatPoly& c) {
    auto ps = power_sums_from_poly(c, r_have);
    for (const auto& [rr, nn] : counts)
      if (ps[rr - 1] != Rational(pow_integer(p, rr) + 1 - nn)) return false;
    return true;
  };

  LPolynomialReport rep;
  rep.p = p;
  rep.g = g;
  rep.counts = counts;

  if (ansatz == FitAnsatz::Generic) {
    auto chalf = newton_fit(s, need);  // c_0..c_g
    std::vector<Rational> cc(2 * unsigned(g) + 1, Rational(0));
    for (unsigned k = 0; k <= need; ++k) cc[k] = chalf[k];
    for (int j = g - 1; j >= 0; --j)
      cc[2 * g - j] = Rational(pow_integer(p, unsigned(g - j))) * cc[j];
    RatPoly c{std::move(cc)};
    require(integral(c), Err::AnsatzViolated, "fit produced non-integer coefficients");
    require(counts_match(c), Err::AnsatzViolated, "surplus counts disagree with the fit");
    rep.c = c;
    return rep;
  }

  // square ansatz: power sums of g_p are half those of c_p, and the
  // functional equation b_{g-j} = eps p^{g/2-j} b_j pins the upper half.
  // eps = +1 is forced when the middle coefficient is nonzero; otherwise both
  // signs are tried and surplus counts must disambiguate.
  std::vector<Rational> t(need);
  for (unsigned k = 0; k < need; ++k) t[k] = s[k] / 2;
  auto bhalf = newton_fit(t, need);  // b_0..b_{g/2}
  const unsigned m = need;
  std::vector<int> signs = bhalf[m] != 0 ? std::vector<int>{+1} : std::vector<int>{+1, -1};
  std::vector<std::pair<RatPoly, RatPoly>> survivors;
  for (int eps : signs) {
    std::vector<Rational> b(unsigned(g) + 1, Rational(0));
    for (unsigned k = 0; k <= m; ++k) b[k] = bhalf[k];
    for (int j = int(m) - 1; j >= 0; --j)
      b[unsigned(g) - unsigned(j)] =
          Rational(eps) * Rational(pow_integer(p, m - unsigned(j))) * b[unsigned(j)];
    RatPoly gp{std::move(b)};
    RatPoly c = gp * gp;
    if (!integral(gp) || !integral(c)) continue;
    if (!counts_match(c)) continue;
    survivors.emplace_back(std::move(gp), std::move(c));
  }
  if (survivors.empty()) fail(Err::AnsatzViolated, "no square-ansatz candidate fits the counts");
  if (survivors.size() > 1)
    fail(Err::PreconditionFailed,
         "functional-equation sign is ambiguous; provide a count at r = g/2 + 1");
  rep.gp = std::move(survivors[0].first);
  rep.c = std::move(survivors[0].second);
  return rep;
}

RatPoly tensor_square(const RatPoly& c, int g) {
  require(g >= 1, Err::DegenerateInput, "genus must be positive");
  require(c.degree() == 2 * g, Err::DegenerateInput, "input degree must be 2g");
  require(c.coeff(0) == 1, Err::DegenerateInput, "constant term must be 1");
  const int D = 4 * g * g;

  // evaluate R(t) = Res_z(c(z), B_t(z)) at D+1 integer nodes, then interpolate
  std::vector<Rational> xs(D + 1), ys(D + 1);
  for (int idx = 0; idx <= D; ++idx) {
    xs[idx] = Rational(long(idx - D / 2));
    std::vector<Rational> bz(2 * unsigned(g) + 1, Rational(0));
    Rational tk(1);
    for (int k = 0; k <= 2 * g; ++k) {
      bz[2 * g - k] = c.coeff(k) * tk;
      tk *= xs[idx];
    }
    ys[idx] = resultant(c, RatPoly{std::move(bz)});
  }

  // Lagrange: P = sum_i y_i * (M / (T - x_i)) / M'(x_i), with M = prod (T - x_j)
  RatPoly master = RatPoly::constant(Rational(1));
  for (int j = 0; j <= D; ++j)
    master *= RatPoly{std::vector<Rational>{-xs[j], Rational(1)}};
  RatPoly out;
  for (int i = 0; i <= D; ++i) {
    RatPoly qi = exact_div(master, RatPoly{std::vector<Rational>{-xs[i], Rational(1)}});
    out += qi * (ys[i] / qi(xs[i]));
  }
  require(out.degree() <= D, Err::InternalError, "interpolation degree overflow");
  return out;
}

CyclotomicSplit cyclotomic_factorization(const RatPoly& ct, const Integer& p) {
  require(!ct.is_zero() && ct.coeff(0) == 1, Err::DegenerateInput, "constant term must be 1");
  require(is_prime(p), Err::DegenerateInput, "p must be prime");

  // F(U) = ct(U/p); inverse roots on the unit circle that are roots of unity
  // of order k contribute the irreducible factor C_k(U), so exhaustive trial
  // division over phi(k) <= deg is complete.
  std::vector<Rational> fcoef(ct.degree() + 1);
  Rational pk(1);
  for (int k = 0; k <= ct.degree(); ++k) {
    fcoef[k] = ct.coeff(k) / pk;
    pk *= Rational(p);
  }
  RatPoly rem{std::move(fcoef)};

  CyclotomicSplit out;
  const long d0 = ct.degree();
  const long kbound = 2 * d0 * d0 + 1;  // phi(k) >= sqrt(k/2)
  for (long k = 1; k <= kbound && rem.degree() > 0; ++k) {
    if (long(euler_phi((unsigned long)k)) > rem.degree()) continue;
    const RatPoly ck = cyclotomic_reversed(unsigned(k));
    while (rem.degree() >= ck.degree()) {
      auto [quo, rr] = divmod(rem, ck);
      if (!rr.is_zero()) break;
      rem = quo;
      out.kset[unsigned(k)] += 1;
    }
  }
  require(rem.coeff(0) == 1, Err::InternalError, "cyclotomic division lost the constant term");
  out.h = rem;
  return out;
}

EndoDimensionReport endo_dimension_report(const std::map<unsigned, int>& kset, unsigned r_max) {
  require(!kset.empty(), Err::DegenerateInput, "empty k-multiset");
  EndoDimensionReport out;
  Integer l(1);
  for (const auto& [k, mult] : kset) {
    require(k >= 1 && mult >= 1, Err::DegenerateInput, "bad multiset entry");
    mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), k);
  }
  require(l.fits_slong_p(), Err::InternalError, "endomorphism field degree overflow");
  out.k_lcm = l.get_si();
  for (unsigned r = 1; r <= r_max; ++r) {
    long dim = 0;
    for (const auto& [k, mult] : kset)
      if (r % k == 0) dim += long(mult) * long(euler_phi(k));
    out.dims[r] = dim;
  }
  return out;
}

bool ordinarity_check(const RatPoly& gp, const Integer& p) {
  require(gp.degree() >= 0 && gp.degree() % 2 == 0, Err::DegenerateInput,
          "even degree required");
  Rational mid = gp.coeff(gp.degree() / 2);
  require(is_integer(mid), Err::DegenerateInput, "middle coefficient must be integral");
  return numer(mid) % p != 0;
}

double weil_residual(const RatPoly& c, const Integer& p) {
  require(c.degree() >= 1, Err::DegenerateInput, "positive degree required");
  const int n = c.degree();
  // substitute T = S/sqrt(p): roots S_i = sqrt(p)/alpha_i land on the unit
  // circle for a Weil polynomial, and the scaled coefficients stay O(2^n)
  const double sqp = std::sqrt(p.get_d());
  std::vector<double> q(n + 1);
  double scale = 1.0;
  for (int k = 0; k <= n; ++k) {
    q[k] = c.coeff(k).get_d() / scale;
    scale *= sqp;
  }
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    comp(k, n - 1) = -q[k] / q[n];
    if (k + 1 < n) comp(k + 1, k) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
  double worst = 0;
  for (int k = 0; k < n; ++k)
    worst = std::max(worst, std::abs(1.0 / std::abs(es.eigenvalues()[k]) - 1.0));
  return worst;
}

LPolynomialReport analyze_frobenius(const std::map<unsigned, Integer>& counts, const Integer& p,
                                    int g, FitAnsatz ansatz, unsigned dims_r_max) {
  LPolynomialReport rep = fit_l_polynomial(counts, p, g, ansatz);
  require(weil_residual(rep.c, p) < 1e-7, Err::AnsatzViolated,
          "fitted polynomial fails the Weil modulus check");
  RatPoly ct = tensor_square(rep.c, g);
  auto split = cyclotomic_factorization(ct, p);
  rep.tensor_kset = split.kset;
  rep.h = split.h;
  if (!split.kset.empty()) {
    auto endo = endo_dimension_report(split.kset, dims_r_max);
    rep.endo_dims = endo.dims;
    rep.endo_field_degree = endo.k_lcm;
  }
  rep.ordinary = ordinarity_check(rep.gp ? *rep.gp : rep.c, p);
  return rep;
}

}  // namespace q8
