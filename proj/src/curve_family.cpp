#include "q8/curve_family.hpp"

#include <algorithm>
#include <set>

namespace q8 {

namespace {

void check_genus(int g) {
  require(g >= 4 && g % 2 == 0, Err::DegenerateInput, "genus must be even and >= 4");
}

template <class K>
Poly<K> family_poly_impl(int g, const std::vector<K>& a) {
  check_genus(g);
  const int d = g / 2 - 1;
  require(int(a.size()) == d, Err::DegenerateInput, "parameter count must be g/2 - 1");
  // inner = x^{2g-4} + 1 + sum_j a_j (x^{2g-4-2j} + x^{2j})
  std::vector<K> inner(2 * g - 3, K(0));
  inner[0] = K(1);
  inner[2 * g - 4] = K(1);
  for (int j = 1; j <= d; ++j) {
    inner[2 * g - 4 - 2 * j] += a[j - 1];
    inner[2 * j] += a[j - 1];
  }
  Poly<K> shell{std::vector<K>{K(0), K(-1), K(0), K(0), K(0), K(1)}};  // x(x^4 - 1)
  return shell * Poly<K>{std::move(inner)};
}

}  // namespace

HyperellipticModel build_family_poly(int g, const std::vector<Rational>& a) {
  return {family_poly_impl<Rational>(g, a), g};
}

GaussPoly build_family_poly_gaussian(int g, const std::vector<GaussianRational>& a) {
  return family_poly_impl<GaussianRational>(g, a);
}

Rational family_discriminant(int g, const std::vector<Rational>& a) {
  Rational scale(pow_integer(Integer(2), 4 * (unsigned long)g));
  return scale * discriminant(build_family_poly(g, a).f);
}

std::vector<GaussianRational> base_change_b_to_a(int g, const std::vector<GaussianRational>& b) {
  check_genus(g);
  const int d = g / 2 - 1;
  require(int(b.size()) == d, Err::DegenerateInput, "parameter count must be g/2 - 1");
  for (const auto& bj : b)
    require(!bj.is_zero(), Err::DegenerateInput, "b parameters must be nonzero");
  // P(u) = prod_j (u - b_j^2)(u - 1/b_j^2) in u = x^2; then a_j = [u^j]P for
  // j < d and a_d = [u^d]P / 2 (the middle term appears twice in the ansatz).
  GaussPoly P = GaussPoly::constant(GaussianRational(1));
  for (const auto& bj : b) {
    GaussianRational s = bj * bj;
    P *= GaussPoly{std::vector<GaussianRational>{-s, GaussianRational(1)}};
    P *= GaussPoly{std::vector<GaussianRational>{-s.inverse(), GaussianRational(1)}};
  }
  std::vector<GaussianRational> a(d);
  for (int j = 1; j <= d; ++j) a[j - 1] = P.coeff(j);
  a[d - 1] = a[d - 1] * GaussianRational{rat(1, 2), rat(0)};
  return a;
}

WeierstrassSet weierstrass_data(int g, const std::vector<GaussianRational>& b) {
  check_genus(g);
  const int d = g / 2 - 1;
  require(int(b.size()) == d, Err::DegenerateInput, "parameter count must be g/2 - 1");
  for (const auto& bj : b)
    require(!bj.is_zero(), Err::DegenerateInput, "b parameters must be nonzero");

  WeierstrassSet ws;
  auto add = [&](std::string label, GaussianRational v, int stab) {
    ws.points.push_back({std::move(label), std::move(v), false, stab});
  };
  add("0", GaussianRational(0), 4);
  add("1", GaussianRational(1), 4);
  add("-1", GaussianRational(-1), 4);
  add("i", GaussianRational::i(), 4);
  add("-i", -GaussianRational::i(), 4);
  for (int j = 1; j <= d; ++j) {
    const auto& bj = b[j - 1];
    std::string tag = "b" + std::to_string(j);
    add(tag, bj, 2);
    add("-" + tag, -bj, 2);
    add("1/" + tag, bj.inverse(), 2);
    add("-1/" + tag, -bj.inverse(), 2);
  }
  for (size_t r = 0; r < ws.points.size(); ++r)
    for (size_t s = r + 1; s < ws.points.size(); ++s)
      require(ws.points[r].value != ws.points[s].value, Err::SingularFiber,
              "branch points collide: " + ws.points[r].label + " = " + ws.points[s].label);
  ws.points.push_back({"inf", GaussianRational(0), true, 4});
  return ws;
}

std::vector<Rational> moduli_orbit_g4(const Rational& a) {
  require(a != 1 && a != -1, Err::SingularFiber, "orbit undefined at a = +-1");
  std::vector<Rational> members{a, -a, (a + 3) / (a - 1), -((a + 3) / (a - 1)),
                                (a - 3) / (a + 1), -((a - 3) / (a + 1))};
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

namespace {

// Projective point [num : den] over Q(i); infinity is [1 : 0].
struct ProjPoint {
  GaussianRational num, den;
};

bool proj_eq(const ProjPoint& p, const ProjPoint& q) {
  return p.num * q.den == q.num * p.den;
}

std::vector<ProjPoint> branch_set(const GaussianRational& b) {
  GaussianRational one(1), zero(0), im = GaussianRational::i();
  require(!b.is_zero(), Err::DegenerateInput, "b must be nonzero");
  std::vector<ProjPoint> s{{zero, one}, {one, zero}, {one, one},          {-one, one},
                           {im, one},   {-im, one},  {b, one},            {-b, one},
                           {one, b},    {-one, b}};
  for (size_t r = 0; r < s.size(); ++r)
    for (size_t t = r + 1; t < s.size(); ++t)
      require(!proj_eq(s[r], s[t]), Err::SingularFiber, "branch set has a collision");
  return s;
}

// Matrix of the map sending (z1, z2, z3) to (0, 1, inf).
std::array<GaussianRational, 4> triple_matrix(const ProjPoint& z1, const ProjPoint& z2,
                                              const ProjPoint& z3) {
  GaussianRational lam = z3.den * z2.num - z3.num * z2.den;
  GaussianRational mu = z1.den * z2.num - z1.num * z2.den;
  return {lam * z1.den, -(lam * z1.num), mu * z3.den, -(mu * z3.num)};
}

std::string canonical_key(std::array<GaussianRational, 4> m) {
  GaussianRational scale(0);
  for (const auto& e : m)
    if (!e.is_zero()) {
      scale = e.inverse();
      break;
    }
  std::string key;
  for (auto& e : m) key += gaussian_str(e * scale) + ";";
  return key;
}

}  // namespace

std::string MobiusMap::describe() const {
  auto zero = GaussianRational(0);
  if (b == zero && c == zero && a == d) return "x";
  if (b == zero && c == zero && a == -d) return "-x";
  if (a == zero && d == zero && b == c) return "1/x";
  if (a == zero && d == zero && b == -c) return "-1/x";
  return "(" + gaussian_str(a) + "*x + " + gaussian_str(b) + ")/(" + gaussian_str(c) + "*x + " +
         gaussian_str(d) + ")";
}

std::vector<MobiusMap> extra_automorphism_scan(const GaussianRational& b) {
  auto s = branch_set(b);
  std::set<std::string> seen;
  std::vector<MobiusMap> out;
  const size_t n = s.size();
  for (size_t i1 = 0; i1 < n; ++i1)
    for (size_t i2 = 0; i2 < n; ++i2)
      for (size_t i3 = 0; i3 < n; ++i3) {
        if (i1 == i2 || i1 == i3 || i2 == i3) continue;
        auto m = triple_matrix(s[i1], s[i2], s[i3]);
        bool stabilizes = true;
        for (const auto& p : s) {
          ProjPoint img{m[0] * p.num + m[1] * p.den, m[2] * p.num + m[3] * p.den};
          bool hit = false;
          for (const auto& q : s)
            if (proj_eq(img, q)) {
              hit = true;
              break;
            }
          if (!hit) {
            stabilizes = false;
            break;
          }
        }
        if (!stabilizes) continue;
        // normalize so the first nonzero entry is 1
        GaussianRational scale(0);
        for (const auto& e : m)
          if (!e.is_zero()) {
            scale = e.inverse();
            break;
          }
        std::array<GaussianRational, 4> norm{m[0] * scale, m[1] * scale, m[2] * scale,
                                             m[3] * scale};
        std::string key = canonical_key(norm);
        if (seen.insert(key).second) out.push_back({norm[0], norm[1], norm[2], norm[3]});
      }
  return out;
}

std::vector<std::array<std::complex<double>, 4>> extra_automorphism_scan_float(
    std::complex<double> b, double tol) {
  using C = std::complex<double>;
  struct P {
    C num, den;
  };
  auto normalize = [](P p) {
    double m = std::max(std::abs(p.num), std::abs(p.den));
    if (m > 0) {
      p.num /= m;
      p.den /= m;
    }
    return p;
  };
  auto eq = [&](const P& p, const P& q) {
    P a = p, c = q;
    return std::abs(a.num * c.den - c.num * a.den) <=
           tol * std::max(1.0, std::abs(a.num * c.den) + std::abs(c.num * a.den));
  };
  C one(1), zero(0), im(0, 1);
  require(std::abs(b) > tol, Err::DegenerateInput, "b must be nonzero");
  std::vector<P> s;
  for (P p : std::vector<P>{{zero, one},
                            {one, zero},
                            {one, one},
                            {-one, one},
                            {im, one},
                            {-im, one},
                            {b, one},
                            {-b, one},
                            {one, b},
                            {-one, b}})
    s.push_back(normalize(p));
  for (size_t r = 0; r < s.size(); ++r)
    for (size_t t = r + 1; t < s.size(); ++t)
      require(!eq(s[r], s[t]), Err::SingularFiber, "branch set has a collision");

  std::vector<std::array<C, 4>> out;
  const std::array<C, 4> probes{C(2, 0), C(3, 1), C(0, 0.7), C(-5, 0.3)};
  auto apply = [&](const std::array<C, 4>& m, const P& p) {
    return normalize({m[0] * p.num + m[1] * p.den, m[2] * p.num + m[3] * p.den});
  };
  auto same_map = [&](const std::array<C, 4>& m1, const std::array<C, 4>& m2) {
    for (const auto& x : probes) {
      P p = normalize({x, C(1)});
      if (!eq(apply(m1, p), apply(m2, p))) return false;
    }
    return true;
  };
  const size_t n = s.size();
  for (size_t i1 = 0; i1 < n; ++i1)
    for (size_t i2 = 0; i2 < n; ++i2)
      for (size_t i3 = 0; i3 < n; ++i3) {
        if (i1 == i2 || i1 == i3 || i2 == i3) continue;
        C lam = s[i3].den * s[i2].num - s[i3].num * s[i2].den;
        C mu = s[i1].den * s[i2].num - s[i1].num * s[i2].den;
        std::array<C, 4> m{lam * s[i1].den, -(lam * s[i1].num), mu * s[i3].den,
                           -(mu * s[i3].num)};
        double sup = 0;
        for (const auto& e : m) sup = std::max(sup, std::abs(e));
        if (sup == 0) continue;
        for (auto& e : m) e /= sup;
        bool stabilizes = true;
        for (const auto& p : s) {
          P img = apply(m, p);
          bool hit = false;
          for (const auto& q : s)
            if (eq(img, q)) {
              hit = true;
              break;
            }
          if (!hit) {
            stabilizes = false;
            break;
          }
        }
        if (!stabilizes) continue;
        bool dup = false;
        for (const auto& kept : out)
          if (same_map(kept, m)) {
            dup = true;
            break;
          }
        if (!dup) out.push_back(m);
      }
  return out;
}

}  // namespace q8
