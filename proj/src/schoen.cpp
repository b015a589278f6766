#include "q8/schoen.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "q8/common.hpp"

namespace q8 {
namespace {

// P(r) = prod_i (t_i - r) = sum_k e_k (-r)^{g-k}, Horner in -r.
Rational eval_root_product(const std::vector<Rational>& e, const Rational& r) {
  Rational x = -r;
  Rational acc = e[0];
  for (size_t k = 1; k < e.size(); ++k) acc = acc * x + e[k];
  return acc;
}

GaussianRational eval_root_product_gaussian(const std::vector<Rational>& e,
                                            const GaussianRational& r) {
  GaussianRational x = -r;
  GaussianRational acc(e[0]);
  for (size_t k = 1; k < e.size(); ++k) acc = acc * x + GaussianRational(e[k]);
  return acc;
}

// W_k = (delta^k - delta^{-k}) / (delta - delta^{-1}) as polynomials in
// sigma = delta + 1/delta: W_0 = 0, W_1 = 1, W_{k+1} = sigma W_k - W_{k-1}.
std::vector<Rational> second_kind_values(const Rational& sigma, int n) {
  std::vector<Rational> w(n + 1);
  w[0] = 0;
  if (n >= 1) w[1] = 1;
  for (int k = 2; k <= n; ++k) w[k] = sigma * w[k - 1] - w[k - 2];
  return w;
}

void check_shape(int g, const std::vector<Rational>& beta) {
  if (g < 4 || g % 2 != 0) fail(Err::PreconditionFailed, "genus must be an even integer >= 4");
  size_t d = static_cast<size_t>(g - 2) / 2;
  if (beta.size() != d) {
    std::ostringstream os;
    os << "expected " << d << " branch parameters for genus " << g << ", got " << beta.size();
    fail(Err::PreconditionFailed, os.str());
  }
  std::vector<Rational> all;
  for (const Rational& b : beta) {
    if (b == 0) fail(Err::PreconditionFailed, "branch parameter must be nonzero");
    if (b == 1 || b == -1)
      fail(Err::PreconditionFailed, "branch parameter " + rational_str(b) +
                                        " collides with a fixed branch value");
    all.push_back(b);
    all.push_back(Rational(1) / b);
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    fail(Err::PreconditionFailed, "branch values collide among the beta and their reciprocals");
}

// Multiplies the dense coefficient vector p (by ascending power) by (u - r).
void mul_linear(std::vector<Rational>& p, const Rational& r) {
  p.push_back(0);
  for (size_t k = p.size(); k-- > 1;) p[k] = p[k - 1] - r * p[k];
  p[0] = -r * p[0];
}

// Coefficients of q1(u,1) = u prod_j (u - beta_j)(u - 1/beta_j), built from the
// individual roots and cross-checked against the conjugate-pair quadratics
// u^2 - s_j u + 1, which certifies that the pair product has rational
// coefficients.
std::vector<Rational> q1_coefficients(int g, const std::vector<Rational>& beta) {
  std::vector<Rational> lin{Rational(0), Rational(1)};  // the factor u
  for (const Rational& b : beta) {
    mul_linear(lin, b);
    mul_linear(lin, Rational(1) / b);
  }
  std::vector<Rational> quad{Rational(0), Rational(1)};
  for (const Rational& b : beta) {
    Rational s = b + Rational(1) / b;
    std::vector<Rational> next(quad.size() + 2, Rational(0));
    for (size_t k = 0; k < quad.size(); ++k) {
      next[k] += quad[k];
      next[k + 1] -= s * quad[k];
      next[k + 2] += quad[k];
    }
    quad.swap(next);
  }
  if (lin != quad)
    fail(Err::InternalError, "conjugate-pair quadratics disagree with the root expansion");
  if (static_cast<int>(lin.size()) != g) fail(Err::InternalError, "q1 degree mismatch");
  return lin;
}

void check_point(const SchoenContext& ctx, const P0Point& pt) {
  int g = ctx.g, h = g / 2;
  if (static_cast<int>(pt.e.size()) != g + 1)
    fail(Err::PreconditionFailed, "point must carry g+1 coordinates");
  if (pt.e[0] != 1) fail(Err::PreconditionFailed, "coordinate e_0 must be 1");
  for (int i = 0; i < h; ++i) {
    Rational expect = -pt.e[i] + (((h + i) % 2 == 0) ? ctx.c[i] : -ctx.c[i]) * pt.e[h];
    if (pt.e[g - i] != expect)
      fail(Err::PreconditionFailed, "coordinates violate the subspace relations");
  }
}

// bracket_j = sum_{i=0}^d e_i W_{h-i}(sigma_j) - (1/2)(-1)^h e_h sum_{i=0}^d (-1)^i c_i W_{h-i}(sigma_j)
// with sigma_j = -s_j; the conjugate-pair product equals -bracket_j^2 (s_j^2 - 4).
Rational bracket_value(const SchoenContext& ctx, const std::vector<Rational>& e,
                       const Rational& s) {
  int h = ctx.g / 2, d = (ctx.g - 2) / 2;
  std::vector<Rational> w = second_kind_values(-s, h);
  Rational br = 0, t = 0;
  for (int i = 0; i <= d; ++i) {
    br += e[i] * w[h - i];
    t += ((i % 2 == 0) ? ctx.c[i] : -ctx.c[i]) * w[h - i];
  }
  Rational half(1, 2);
  br += ((h % 2 == 0) ? -half : half) * t * e[h];
  return br;
}

void check_not_on_offset_hyperplane(const SchoenContext& ctx, const P0Point& pt) {
  if (eval_root_product(pt.e, ctx.gamma) == 0)
    fail(Err::DegeneratePoint, "point lies on the offset hyperplane t = gamma");
}

// Sparse multivariate polynomials over Q in the free coordinates e_1..e_h,
// used for the symbolic form of the identity.
using Mono = std::vector<int>;
using MPoly = std::map<Mono, Rational>;

void paccum(MPoly& p, const Mono& m, const Rational& v) {
  if (v == 0) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p.emplace(m, v);
  } else {
    it->second += v;
    if (it->second == 0) p.erase(it);
  }
}

MPoly pconst(int nvars, const Rational& v) {
  MPoly p;
  if (v != 0) p[Mono(nvars, 0)] = v;
  return p;
}

MPoly pvar(int nvars, int idx) {
  Mono m(nvars, 0);
  m[idx] = 1;
  return MPoly{{m, Rational(1)}};
}

MPoly padd(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [m, v] : b) paccum(r, m, v);
  return r;
}

MPoly pscale(const MPoly& a, const Rational& v) {
  MPoly r;
  if (v == 0) return r;
  for (const auto& [m, c] : a) r[m] = c * v;
  return r;
}

MPoly pmul(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ma, va] : a)
    for (const auto& [mb, vb] : b) {
      Mono m(ma.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      paccum(r, m, va * vb);
    }
  return r;
}

// Checks value + uhat^4 == 0 identically in Q[e_1..e_{g/2}], with the derived
// coordinates substituted as linear polynomials in the free ones.
bool symbolic_identity_holds(const SchoenContext& ctx) {
  int g = ctx.g, h = g / 2, d = (g - 2) / 2, nv = h;
  std::vector<MPoly> e(g + 1);
  e[0] = pconst(nv, Rational(1));
  for (int i = 1; i <= h; ++i) e[i] = pvar(nv, i - 1);
  for (int i = 0; i < h; ++i) {
    Rational sgn = ((h + i) % 2 == 0) ? ctx.c[i] : -ctx.c[i];
    e[g - i] = padd(pscale(e[i], Rational(-1)), pscale(e[h], sgn));
  }
  auto eval_sym = [&](const Rational& r) {
    Rational x = -r;
    MPoly acc = e[0];
    for (int k = 1; k <= g; ++k) acc = padd(pscale(acc, x), e[k]);
    return acc;
  };
  MPoly value = e[g];
  MPoly pm = eval_sym(Rational(-1));
  MPoly pp = eval_sym(Rational(1));
  value = pmul(value, pmul(pm, pm));
  value = pmul(value, pmul(pp, pp));
  Rational bigr = 1;
  MPoly uhat = e[h];
  for (const Rational& b : ctx.beta) {
    MPoly q = pmul(eval_sym(b), eval_sym(Rational(1) / b));
    value = pmul(value, pmul(q, q));
    Rational s = b + Rational(1) / b;
    bigr *= s * s - 4;
    std::vector<Rational> w = second_kind_values(-s, h);
    MPoly br = pconst(nv, Rational(0));
    Rational t = 0;
    for (int i = 0; i <= d; ++i) {
      br = padd(br, pscale(e[i], w[h - i]));
      t += ((i % 2 == 0) ? ctx.c[i] : -ctx.c[i]) * w[h - i];
    }
    Rational half(1, 2);
    br = padd(br, pscale(e[h], ((h % 2 == 0) ? -half : half) * t));
    uhat = pmul(uhat, br);
  }
  uhat = pscale(uhat, bigr / ctx.zg2);
  MPoly u2 = pmul(uhat, uhat);
  return padd(value, pmul(u2, u2)).empty();
}

}  // namespace

std::vector<Rational> compute_c_coefficients(int g, const std::vector<Rational>& beta) {
  check_shape(g, beta);
  std::vector<Rational> q1 = q1_coefficients(g, beta);
  Rational z = q1[g / 2];
  if (z == 0) fail(Err::PreconditionFailed, "middle coefficient of q1 vanishes");
  std::vector<Rational> c(g + 1, Rational(0));
  for (int j = 0; j < g; ++j) c[j] = 2 * q1[j] / z;
  if (c[0] != 0 || c[g] != 0 || c[g / 2] != 2)
    fail(Err::InternalError, "c coefficients violate their defining symmetries");
  for (int j = 0; j <= g; ++j)
    if (c[j] != c[g - j]) fail(Err::InternalError, "c coefficients are not palindromic");
  return c;
}

SchoenContext make_schoen_context(int g, const std::vector<Rational>& beta,
                                  const std::optional<Rational>& gamma) {
  SchoenContext ctx;
  ctx.g = g;
  ctx.beta = beta;
  ctx.c = compute_c_coefficients(g, beta);
  ctx.q1 = q1_coefficients(g, beta);
  ctx.zg2 = ctx.q1[g / 2];
  std::vector<Rational> branch{Rational(0), Rational(1), Rational(-1)};
  for (const Rational& b : beta) {
    branch.push_back(b);
    branch.push_back(Rational(1) / b);
  }
  auto is_branch = [&](const Rational& v) {
    return std::find(branch.begin(), branch.end(), v) != branch.end();
  };
  if (gamma) {
    if (is_branch(*gamma))
      fail(Err::PreconditionFailed, "offset gamma collides with a branch value");
    ctx.gamma = *gamma;
  } else {
    Rational cand(2);
    while (is_branch(cand)) cand += 1;
    ctx.gamma = cand;
  }
  return ctx;
}

P0Point p0_point(const SchoenContext& ctx, const std::vector<Rational>& free_coords) {
  int g = ctx.g, h = g / 2;
  if (static_cast<int>(free_coords.size()) != h)
    fail(Err::PreconditionFailed, "expected g/2 free coordinates");
  P0Point pt;
  pt.e.assign(g + 1, Rational(0));
  pt.e[0] = 1;
  for (int i = 1; i <= h; ++i) pt.e[i] = free_coords[i - 1];
  for (int i = 0; i < h; ++i)
    pt.e[g - i] = -pt.e[i] + (((h + i) % 2 == 0) ? ctx.c[i] : -ctx.c[i]) * pt.e[h];
  return pt;
}

bool surprising_symmetry_check(const SchoenContext& ctx) {
  for (const Rational& b : ctx.beta) {
    Rational acc = 0, pw = 1;
    for (int i = 0; i <= ctx.g; ++i) {
      acc += ctx.c[i] * pw;
      pw *= b;
    }
    if (acc != 0) return false;
  }
  return true;
}

Rational pair_product_from_trace(const std::vector<Rational>& e, const Rational& s) {
  if (e.size() < 2) fail(Err::PreconditionFailed, "need at least two coordinates");
  int g = static_cast<int>(e.size()) - 1;
  // P(beta) P(1/beta) = sum_{j,k} p_j p_k beta^{j-k} with p_j = e_{g-j} (-1)^j;
  // grouping by m = j-k leaves only beta^m + beta^{-m}, a polynomial in s.
  std::vector<Rational> p(g + 1);
  for (int j = 0; j <= g; ++j) p[j] = (j % 2 == 0) ? e[g - j] : -e[g - j];
  std::vector<Rational> d(g + 1);
  d[0] = 2;
  if (g >= 1) d[1] = s;
  for (int m = 2; m <= g; ++m) d[m] = s * d[m - 1] - d[m - 2];
  Rational acc = 0;
  for (int j = 0; j <= g; ++j) acc += p[j] * p[j];
  for (int m = 1; m <= g; ++m) {
    Rational q = 0;
    for (int j = m; j <= g; ++j) q += p[j] * p[j - m];
    acc += q * d[m];
  }
  return acc;
}

GaussianRational pair_product_gaussian(const std::vector<Rational>& e,
                                       const GaussianRational& beta) {
  if (e.size() < 2) fail(Err::PreconditionFailed, "need at least two coordinates");
  if (beta.is_zero()) fail(Err::DegenerateInput, "pair parameter must be nonzero");
  return eval_root_product_gaussian(e, beta) * eval_root_product_gaussian(e, beta.inverse());
}

Rational restrict_fhat_to_P0(const SchoenContext& ctx, const P0Point& pt) {
  check_point(ctx, pt);
  check_not_on_offset_hyperplane(ctx, pt);
  Rational pm = eval_root_product(pt.e, Rational(-1));
  Rational pp = eval_root_product(pt.e, Rational(1));
  Rational value = pt.e[ctx.g] * pm * pm * pp * pp;
  for (const Rational& b : ctx.beta) {
    Rational q = pair_product_from_trace(pt.e, b + Rational(1) / b);
    value *= q * q;
  }
  return value;
}

Rational restrict_fhat_factored(const SchoenContext& ctx, const P0Point& pt) {
  check_point(ctx, pt);
  check_not_on_offset_hyperplane(ctx, pt);
  int d = (ctx.g - 2) / 2;
  Rational eh = pt.e[ctx.g / 2];
  Rational bigr = 1;
  Rational value = pt.e[ctx.g];
  for (const Rational& b : ctx.beta) {
    Rational s = b + Rational(1) / b;
    Rational disc = s * s - 4;
    bigr *= disc;
    Rational br = bracket_value(ctx, pt.e, s);
    Rational pair = -br * br * disc;
    value *= pair * pair;
  }
  Rational middle = bigr * eh * eh / (ctx.zg2 * ctx.zg2);
  if (d % 2 == 0) middle = -middle;  // the closed form carries (-1)^{d+1}
  return value * middle * middle;
}

Rational fourth_root_candidate(const SchoenContext& ctx, const P0Point& pt) {
  check_point(ctx, pt);
  Rational bigr = 1, prod = 1;
  for (const Rational& b : ctx.beta) {
    Rational s = b + Rational(1) / b;
    bigr *= s * s - 4;
    prod *= bracket_value(ctx, pt.e, s);
  }
  Rational u = pt.e[ctx.g / 2] * bigr * prod / ctx.zg2;
  return u < 0 ? -u : u;
}

bool middle_factor_identity(const SchoenContext& ctx, const P0Point& pt) {
  check_point(ctx, pt);
  int d = (ctx.g - 2) / 2;
  Rational lhs =
      eval_root_product(pt.e, Rational(-1)) * eval_root_product(pt.e, Rational(1));
  Rational bigr = 1;
  for (const Rational& b : ctx.beta) {
    Rational s = b + Rational(1) / b;
    bigr *= s * s - 4;
  }
  Rational eh = pt.e[ctx.g / 2];
  Rational rhs = bigr * eh * eh / (ctx.zg2 * ctx.zg2);
  if (d % 2 == 0) rhs = -rhs;
  return lhs == rhs;
}

FourthPowerReport verify_fourth_power_identity(const SchoenContext& ctx, int trials,
                                               std::uint64_t seed, bool symbolic_beyond_g4) {
  FourthPowerReport rep;
  std::mt19937_64 rng(seed);
  auto draw = [&]() {
    long num = static_cast<long>(rng() % 2001) - 1000;
    long den = static_cast<long>(rng() % 1000) + 1;
    return rat(num, den);
  };
  int h = ctx.g / 2;
  long attempts_left = 1000L * (trials + 1);
  for (int k = 0; k < trials; ++k) {
    for (;;) {
      if (--attempts_left < 0)
        fail(Err::InternalError, "unable to draw a nondegenerate point");
      std::vector<Rational> free_coords;
      free_coords.reserve(h);
      for (int i = 0; i < h; ++i) free_coords.push_back(draw());
      P0Point pt = p0_point(ctx, free_coords);
      if (eval_root_product(pt.e, ctx.gamma) == 0) {
        rep.degenerate_redraws++;
        continue;
      }
      Rational value = restrict_fhat_to_P0(ctx, pt);
      if (value == 0) {
        rep.degenerate_redraws++;
        continue;
      }
      FourthPowerTrial tr;
      tr.free_coords = free_coords;
      tr.value = value;
      Rational root;
      bool ok = is_rational_fourth_power(-value, &root);
      bool pass = ok && restrict_fhat_factored(ctx, pt) == value;
      if (ok) {
        tr.root = root;
        pass = pass && fourth_root_candidate(ctx, pt) == root;
      }
      tr.pass = pass;
      if (is_rational_fourth_power(value)) rep.sign_control_passes++;
      rep.trials.push_back(std::move(tr));
      break;
    }
  }
  rep.all_pass = std::all_of(rep.trials.begin(), rep.trials.end(),
                             [](const FourthPowerTrial& t) { return t.pass; });
  if (ctx.g == 4 || symbolic_beyond_g4) {
    rep.symbolic_checked = true;
    rep.symbolic_pass = symbolic_identity_holds(ctx);
    rep.all_pass = rep.all_pass && rep.symbolic_pass;
  }
  return rep;
}

}  // namespace q8
