#include "q8/degeneration.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace q8 {
namespace {

bool is_zero(const GaussianRational& x) { return x == GaussianRational(0); }

void check_odd_prime(const Integer& p) {
  require(p != 2, Err::Unsupported, "residue characteristic 2 is ramified in Q(i)");
  require(p > 2 && mpz_probab_prime_p(p.get_mpz_t(), 30) != 0,
          Err::PreconditionFailed, "odd prime modulus required");
}

// smallest s with s^2 + t^2 = p, s < t; exists exactly when p = 1 mod 4
void two_square_split(const Integer& p, Integer& s, Integer& t) {
  for (s = 1; 2 * s * s < p; ++s) {
    Integer rem = p - s * s;
    t = sqrt(rem);
    if (t * t == rem) return;
  }
  throw Error(Err::InternalError, "split prime is not a sum of two squares");
}

Laurent laurent_diff(const Laurent& a, const Laurent& b) {
  Laurent d = a;
  for (const auto& [e, coeff] : b) {
    auto it = d.find(e);
    if (it == d.end())
      d[e] = GaussianRational(0) - coeff;
    else
      it->second = it->second - coeff;
  }
  for (auto it = d.begin(); it != d.end();)
    it = is_zero(it->second) ? d.erase(it) : std::next(it);
  return d;
}

Rational difference_valuation(const ValuedPoint& a, const ValuedPoint& b,
                              const ValuationContext& ctx) {
  if (ctx.t_adic) {
    Laurent d = laurent_diff(a.series, b.series);
    require(!d.empty(), Err::DegenerateInput,
            "indistinguishable roots " + a.label + ", " + b.label);
    return laurent_valuation(d);
  }
  GaussianRational d = a.value - b.value;
  require(!is_zero(d), Err::DegenerateInput,
          "indistinguishable roots " + a.label + ", " + b.label);
  return gaussian_valuation(d, ctx.p, ctx.branch);
}

struct Dsu {
  std::vector<int> up;
  explicit Dsu(int n) : up(n) {
    for (int i = 0; i < n; ++i) up[i] = i;
  }
  int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
  void join(int a, int b) { up[find(a)] = find(b); }
};

bool is_even_rational(const Rational& r) {
  return r.get_den() == 1 && mpz_even_p(r.get_num().get_mpz_t());
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ", ";
    out += l;
  }
  return out;
}

}  // namespace

ValuedPoint valued_point(std::string label, GaussianRational value) {
  return ValuedPoint{std::move(label), std::move(value), {}};
}

ValuedPoint valued_point(std::string label, Laurent series) {
  return ValuedPoint{std::move(label), GaussianRational(0), std::move(series)};
}

Rational gaussian_valuation(const GaussianRational& x, const Integer& p,
                            int branch) {
  require(!is_zero(x), Err::DegenerateInput, "valuation of zero");
  check_odd_prime(p);
  require(branch == 0 || branch == 1, Err::PreconditionFailed,
          "branch must be 0 or 1");
  if (p % 4 == 3) {
    long v = 0;
    bool first = true;
    for (const Rational& coord : {x.re, x.im})
      if (coord != 0) {
        long cv = rat_valuation(coord, p);
        v = first ? cv : std::min(v, cv);
        first = false;
      }
    return Rational(v);
  }
  Integer s, t;
  two_square_split(p, s, t);
  if (branch == 1) std::swap(s, t);
  Integer den = lcm(x.re.get_den(), x.im.get_den());
  Integer a = Rational(x.re * den).get_num();
  Integer b = Rational(x.im * den).get_num();
  long v = -int_valuation(den, p);
  while (true) {
    if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()) &&
        mpz_divisible_p(b.get_mpz_t(), p.get_mpz_t())) {
      a /= p;
      b /= p;
      ++v;
      continue;
    }
    Integer a2 = a * s + b * t, b2 = b * s - a * t;
    if (mpz_divisible_p(a2.get_mpz_t(), p.get_mpz_t()) &&
        mpz_divisible_p(b2.get_mpz_t(), p.get_mpz_t())) {
      a = a2 / p;
      b = b2 / p;
      ++v;
      continue;
    }
    break;
  }
  return Rational(v);
}

Rational laurent_valuation(const Laurent& x) {
  for (const auto& [e, coeff] : x)
    if (!is_zero(coeff)) return Rational(e);
  throw Error(Err::DegenerateInput, "valuation of the zero Laurent polynomial");
}

ClusterTree build_cluster_tree(const std::vector<ValuedPoint>& roots,
                               const ValuationContext& ctx,
                               const Rational& leading_coeff_valuation) {
  if (!ctx.t_adic) check_odd_prime(ctx.p);
  int n = static_cast<int>(roots.size());
  require(n >= 2, Err::DegenerateInput, "at least two roots required");

  ClusterTree tree;
  tree.context = ctx;
  tree.leading_coeff_valuation = leading_coeff_valuation;
  for (const auto& r : roots) tree.labels.push_back(r.label);

  tree.pairwise.assign(n, std::vector<Rational>(n, Rational(0)));
  std::set<Rational> thresholds;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational v = difference_valuation(roots[i], roots[j], ctx);
      tree.pairwise[i][j] = tree.pairwise[j][i] = v;
      thresholds.insert(v);
    }

  std::set<std::vector<int>> seen;
  for (auto it = thresholds.rbegin(); it != thresholds.rend(); ++it) {
    Dsu dsu(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (tree.pairwise[i][j] >= *it) dsu.join(i, j);
    std::vector<std::vector<int>> comps(n);
    for (int i = 0; i < n; ++i) comps[dsu.find(i)].push_back(i);
    for (auto& members : comps)
      if (members.size() >= 2 && seen.insert(members).second)
        tree.clusters.push_back(Cluster{members, *it, -1});
  }

  std::sort(tree.clusters.begin(), tree.clusters.end(),
            [](const Cluster& a, const Cluster& b) {
              if (a.members.size() != b.members.size())
                return a.members.size() > b.members.size();
              return a.members < b.members;
            });
  for (size_t k = 1; k < tree.clusters.size(); ++k) {
    const auto& mem = tree.clusters[k].members;
    int best = -1;
    for (size_t m = 0; m < k; ++m) {
      const auto& sup = tree.clusters[m].members;
      if (sup.size() > mem.size() &&
          std::includes(sup.begin(), sup.end(), mem.begin(), mem.end()) &&
          (best < 0 || tree.clusters[m].depth > tree.clusters[best].depth))
        best = static_cast<int>(m);
    }
    tree.clusters[k].parent = best;
    require(best >= 0 && tree.clusters[k].depth > tree.clusters[best].depth,
            Err::InternalError, "cluster nesting is not laminar");
  }
  return tree;
}

std::vector<std::string> cluster_labels(const ClusterTree& tree, int k) {
  std::vector<std::string> out;
  for (int m : tree.clusters.at(k).members) out.push_back(tree.labels[m]);
  return out;
}

ReductionReport reduction_verdict(const ClusterTree& tree) {
  if (!tree.context.t_adic)
    require(tree.context.p != 2, Err::Unsupported,
            "residue characteristic 2 unsupported");
  const auto& cl = tree.clusters;
  int n = static_cast<int>(tree.labels.size());
  ReductionReport rep;

  for (const auto& c : cl) {
    Rational nu = tree.leading_coeff_valuation;
    for (int r = 0; r < n; ++r) {
      Rational join = c.depth;
      if (!std::binary_search(c.members.begin(), c.members.end(), r))
        for (int m : c.members) join = std::min(join, tree.pairwise[r][m]);
      nu += join;
    }
    rep.nu.push_back(nu);
  }

  std::vector<int> recorded_children(cl.size(), 0);
  std::vector<int> covered(cl.size(), 0);
  for (size_t k = 1; k < cl.size(); ++k)
    if (cl[k].parent >= 0) {
      ++recorded_children[cl[k].parent];
      covered[cl[k].parent] += static_cast<int>(cl[k].members.size());
    }
  auto children_count = [&](size_t k) {
    int singles = static_cast<int>(cl[k].members.size()) - covered[k];
    return recorded_children[k] + singles;
  };

  // even proper non-root cluster: obstruction to potentially good reduction,
  // provided the root cluster is not itself a union of even children
  int even_nonroot = -1;
  for (size_t k = cl.size(); k-- > 1;)
    if (cl[k].members.size() % 2 == 0) even_nonroot = static_cast<int>(k);
  if (even_nonroot >= 0) {
    bool ubereven = covered[0] == n;
    for (size_t k = 1; k < cl.size(); ++k)
      if (cl[k].parent == 0 && cl[k].members.size() % 2 != 0) ubereven = false;
    if (ubereven) {
      rep.verdict = ReductionVerdict::Inconclusive;
      rep.reason = "all children of the root cluster are even; outside the implemented criteria";
      return rep;
    }
    rep.verdict = ReductionVerdict::NotPotentiallyGood;
    rep.reason = "even proper cluster {" +
                 join_labels(cluster_labels(tree, even_nonroot)) + "} of depth " +
                 cl[even_nonroot].depth.get_str();
    return rep;
  }

  int big_child_size = (n % 2 == 0) ? n - 1 : n;
  std::vector<std::string> failures;
  for (size_t k = 0; k < cl.size(); ++k) {
    bool principal = cl[k].members.size() >= 3;
    if (k == 0 && n % 2 == 0 && children_count(0) == 2) principal = false;
    for (size_t m = 1; m < cl.size(); ++m)
      if (cl[m].parent == static_cast<int>(k) &&
          static_cast<int>(cl[m].members.size()) == big_child_size)
        principal = false;
    if (!principal)
      failures.push_back("non-principal cluster {" +
                         join_labels(cluster_labels(tree, static_cast<int>(k))) + "}");
    else if (!is_even_rational(rep.nu[k]))
      failures.push_back("odd nu " + rep.nu[k].get_str() + " at cluster {" +
                         join_labels(cluster_labels(tree, static_cast<int>(k))) + "}");
  }
  if (failures.empty()) {
    rep.verdict = ReductionVerdict::GoodReduction;
    rep.reason = "all proper non-root clusters odd; principal clusters have even nu";
  } else {
    rep.verdict = ReductionVerdict::PotentiallyGood;
    std::string all;
    for (const auto& f : failures) {
      if (!all.empty()) all += "; ";
      all += f;
    }
    rep.reason = all + "; a ramified base change can repair this";
  }
  return rep;
}

DegeneratingFiber genus4_degenerating_roots(int exponent) {
  require(exponent >= 1, Err::PreconditionFailed, "positive exponent required");
  std::string te = exponent == 1 ? "t" : "t^" + std::to_string(exponent);
  GaussianRational one(1), minus(-1);
  DegeneratingFiber fib;
  fib.roots.push_back(valued_point("0", Laurent{}));
  fib.roots.push_back(valued_point("1", Laurent{{0, one}}));
  fib.roots.push_back(valued_point("-1", Laurent{{0, minus}}));
  fib.roots.push_back(valued_point("i", Laurent{{0, GaussianRational::i()}}));
  fib.roots.push_back(
      valued_point("-i", Laurent{{0, GaussianRational(0) - GaussianRational::i()}}));
  fib.roots.push_back(valued_point(te, Laurent{{exponent, one}}));
  fib.roots.push_back(valued_point("-" + te, Laurent{{exponent, minus}}));
  fib.roots.push_back(valued_point("1/" + te, Laurent{{-exponent, one}}));
  fib.roots.push_back(valued_point("-1/" + te, Laurent{{-exponent, minus}}));
  fib.leading_coeff_valuation = Rational(-2 * exponent);
  return fib;
}

std::vector<ValuedPoint> expanded_branch_points(const std::vector<Rational>& b) {
  std::vector<ValuedPoint> pts;
  pts.push_back(valued_point("0", GaussianRational(0)));
  pts.push_back(valued_point("1", GaussianRational(1)));
  pts.push_back(valued_point("-1", GaussianRational(-1)));
  pts.push_back(valued_point("i", GaussianRational::i()));
  pts.push_back(
      valued_point("-i", GaussianRational(0) - GaussianRational::i()));
  for (size_t j = 0; j < b.size(); ++j) {
    require(b[j] != 0, Err::DegenerateInput,
            "zero parameter has no reciprocal root");
    std::string tag = "b" + std::to_string(j + 1);
    Rational inv = Rational(1) / b[j];
    pts.push_back(valued_point(tag, GaussianRational(b[j])));
    pts.push_back(valued_point("-" + tag, GaussianRational(-b[j])));
    pts.push_back(valued_point("1/" + tag, GaussianRational(inv)));
    pts.push_back(valued_point("-1/" + tag, GaussianRational(-inv)));
  }
  return pts;
}

namespace {

// verifies the twin-cluster pattern for a candidate tuple on every branch
bool bad_tuple_verifies(const std::vector<Rational>& bs, const Integer& p) {
  for (const Rational& b : bs)
    if (b == 0 || b == 1 || b == -1) return false;
  auto pts = expanded_branch_points(bs);
  const Rational &b1 = bs[0], &b2 = bs[1];
  std::vector<std::pair<GaussianRational, GaussianRational>> twins = {
      {GaussianRational(b1), GaussianRational(b2)},
      {GaussianRational(-b1), GaussianRational(-b2)},
      {GaussianRational(1 / b1), GaussianRational(1 / b2)},
      {GaussianRational(-1 / b1), GaussianRational(-1 / b2)}};
  int branches = (p % 4 == 1) ? 2 : 1;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      GaussianRational d = pts[i].value - pts[j].value;
      if (is_zero(d)) return false;
      bool twin = false;
      for (const auto& [u, w] : twins)
        if ((pts[i].value == u && pts[j].value == w) ||
            (pts[i].value == w && pts[j].value == u))
          twin = true;
      for (int br = 0; br < branches; ++br) {
        Rational v = gaussian_valuation(d, p, br);
        if (twin ? v <= 0 : v != 0) return false;
      }
    }
  return true;
}

}  // namespace

std::vector<Rational> bad_parameter_constructor(int g, const Integer& p) {
  require(g >= 6 && g % 2 == 0, Err::PreconditionFailed,
          "even genus at least 6 required");
  check_odd_prime(p);
  require(p.fits_slong_p(), Err::BudgetExceeded, "prime too large for search");
  int d = (g - 2) / 2;
  long bound = 4 * d + p.get_si() + 20;

  for (long b1 = 2; b1 <= bound; ++b1) {
    std::vector<Rational> picked = {Rational(b1), Rational(b1) + Rational(p)};
    if (!bad_tuple_verifies(picked, p)) continue;
    for (long cand = 2; static_cast<int>(picked.size()) < d && cand <= bound;
         ++cand) {
      if (std::find(picked.begin(), picked.end(), Rational(cand)) !=
          picked.end())
        continue;
      std::vector<Rational> trial = picked;
      trial.push_back(Rational(cand));
      if (bad_tuple_verifies(trial, p)) picked = trial;
    }
    require(static_cast<int>(picked.size()) == d, Err::SearchExhausted,
            "no clean extension of the leading twin pair within the bound");
    return picked;
  }
  throw Error(Err::SearchExhausted,
              "no residue class admits a unit twin pair at this prime");
}

namespace {

// polynomials in z, c, s with the reduction s^2 = c applied eagerly
using Mono = std::array<int, 3>;
using MPoly = std::map<Mono, Rational>;

void accumulate(MPoly& p, Mono m, const Rational& coeff) {
  while (m[2] >= 2) {
    m[2] -= 2;
    m[1] += 1;
  }
  Rational& slot = p[m];
  slot += coeff;
  if (slot == 0) p.erase(m);
}

MPoly mono(int ze, int ce, int se, const Rational& coeff) {
  MPoly p;
  accumulate(p, {ze, ce, se}, coeff);
  return p;
}

MPoly mul(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b)
      accumulate(out, {ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
  return out;
}

MPoly sub(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  for (const auto& [m, coeff] : b) accumulate(out, m, -coeff);
  return out;
}

MPoly add(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  for (const auto& [m, coeff] : b) accumulate(out, m, coeff);
  return out;
}

}  // namespace

bool genus2_splitting_identity(int sign, bool include_i_factor) {
  require(sign == 1 || sign == -1, Err::PreconditionFailed,
          "sign must be +1 or -1");
  MPoly z = mono(1, 0, 0, 1), z2m1 = add(mono(2, 0, 0, 1), mono(0, 0, 0, -1));
  MPoly z2mc2 = add(mono(2, 0, 0, 1), mono(0, 2, 0, -1));
  MPoly zps = add(mono(1, 0, 0, 1), mono(0, 0, 1, sign));

  // w^2 z^4 = i^2 v^2 (z +- s)^2 with v^2 = -z(z^2-1)(z^2-c^2)
  Rational sigma = include_i_factor ? 1 : -1;
  MPoly lhs = mul(mono(0, 0, 0, sigma),
                  mul(z, mul(z2m1, mul(z2mc2, mul(zps, zps)))));

  // (u +- 2s)(u^2-(c+1)^2) z^4 with u = z + c/z
  MPoly u_num = add(add(mono(2, 0, 0, 1), mono(1, 0, 1, 2 * sign)),
                    mono(0, 1, 0, 1));  // z(u +- 2s)
  MPoly z2pc = add(mono(2, 0, 0, 1), mono(0, 1, 0, 1));
  MPoly cp1 = add(mono(0, 1, 0, 1), mono(0, 0, 0, 1));
  MPoly u2_num = sub(mul(z2pc, z2pc), mul(mono(2, 0, 0, 1), mul(cp1, cp1)));
  MPoly rhs = mul(z, mul(u_num, u2_num));

  return sub(lhs, rhs).empty();
}

Rational splitting_j_invariant(const Rational& c) {
  require(c != 1 && c != -1, Err::Pole, "j-invariant has a pole at c = +-1");
  Rational n1 = c + rat(1, 3), n2 = c + 3, d1 = c - 1, d2 = c + 1;
  return Rational(1728) * n1 * n1 * n1 * n2 * n2 * n2 /
         (d1 * d1 * d1 * d1 * d2 * d2);
}

}  // namespace q8
