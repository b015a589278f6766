#include "q8/monodromy.hpp"

#include <algorithm>
#include <set>

#include "fp_poly.hpp"

namespace q8 {

namespace {

std::optional<Integer> signed_kernel(const Rational& d) {
  return squarefree_part(numer(d) * denom(d));
}

std::vector<uint64_t> reduce_monic_mod(const RatPoly& f, uint64_t ell) {
  std::vector<uint64_t> out(f.degree() + 1);
  for (int k = 0; k <= f.degree(); ++k)
    out[k] = mpz_fdiv_ui(numer(f.coeff(k)).get_mpz_t(), ell);
  return out;
}

// monic characteristic polynomial of Frobenius: x^d gp(1/x)
RatPoly frobenius_char_poly(const RatPoly& gp) { return gp.reversed(gp.degree()); }

// ascending residue degrees of the primes over ell, by distinct-degree splitting
std::vector<int> factor_pattern(const RatPoly& P, uint64_t ell) {
  using namespace fppoly;
  FpPoly f = make_monic(reduce_monic_mod(P, ell), ell);
  const int deg = int(f.size()) - 1;
  std::vector<int> parts;
  Integer q(1);
  for (int d = 1; f.size() > 1; ++d) {
    require(d <= deg, Err::InternalError, "distinct-degree scan overran the modulus");
    q *= (unsigned long)ell;
    FpPoly diff = powmod_x(q, f, ell);  // x^(ell^d) - x mod f
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + ell - 1) % ell;
    trim(diff);
    FpPoly g = make_monic(fp_poly_gcd(f, diff, ell), ell);
    if (g.size() > 1) {
      parts.insert(parts.end(), (g.size() - 1) / d, d);
      f = make_monic(divexact(f, g, ell), ell);
    }
  }
  return parts;
}

// Splitting types of a hypothetical subfield that are consistent with the
// observed residue degrees. A quadratic subfield split at ell forces every
// part to divide into the relative degree deg/2; inert, every part even.
// A cubic subfield (sextic input) leaves types {1,1,1}, {1,2} or {3}, and
// each type generates a short explicit list of full patterns.
struct SubfieldTypeSets {
  bool quad_split = false, quad_inert = false;
  bool cubic_111 = false, cubic_12 = false, cubic_3 = false;
};

SubfieldTypeSets classify_pattern(std::vector<int> parts, int degree) {
  SubfieldTypeSets s;
  const int rel = degree / 2;
  bool all_le = true, all_even = true, all_12 = true;
  for (int d : parts) {
    if (d > rel) all_le = false;
    if (d % 2) all_even = false;
    if (d != 1 && d != 2) all_12 = false;
  }
  s.quad_split = all_le;
  s.quad_inert = all_even;
  if (degree == 6) {
    std::sort(parts.begin(), parts.end());
    using V = std::vector<int>;
    s.cubic_111 = all_12;
    s.cubic_12 =
        parts == V{1, 1, 2, 2} || parts == V{1, 1, 4} || parts == V{2, 2, 2} || parts == V{2, 4};
    s.cubic_3 = parts == V{3, 3} || parts == V{6};
  }
  return s;
}

struct SplittingWitnesses {
  std::optional<Integer> not_isomorphic, no_common_quadratic, no_common_cubic;
};

SplittingWitnesses scan_splitting_witnesses(const RatPoly& g1, const RatPoly& g2) {
  RatPoly P1 = frobenius_char_poly(g1), P2 = frobenius_char_poly(g2);
  Rational d1 = discriminant(P1), d2 = discriminant(P2);
  require(d1 != 0 && d2 != 0, Err::NotSimpleInput, "repeated inverse roots");
  const int deg = P1.degree();
  SplittingWitnesses w;
  for (long ell_long : primes_up_to(1223)) {  // the first 200 primes
    if (w.not_isomorphic && w.no_common_quadratic && (deg == 4 || w.no_common_cubic)) break;
    uint64_t ell = uint64_t(ell_long);
    if (mpz_fdiv_ui(numer(d1).get_mpz_t(), ell) == 0) continue;
    if (mpz_fdiv_ui(numer(d2).get_mpz_t(), ell) == 0) continue;
    auto pat1 = factor_pattern(P1, ell);
    auto pat2 = factor_pattern(P2, ell);
    auto s1 = classify_pattern(pat1, deg);
    auto s2 = classify_pattern(pat2, deg);
    if (!w.not_isomorphic && pat1 != pat2) w.not_isomorphic = ell_long;
    if (!w.no_common_quadratic &&
        !((s1.quad_split && s2.quad_split) || (s1.quad_inert && s2.quad_inert)))
      w.no_common_quadratic = ell_long;
    if (deg == 6 && !w.no_common_cubic &&
        !((s1.cubic_111 && s2.cubic_111) || (s1.cubic_12 && s2.cubic_12) ||
          (s1.cubic_3 && s2.cubic_3)))
      w.no_common_cubic = ell_long;
  }
  return w;
}

void check_plus_type(const RatPoly& gp, const Integer& p) {
  const int d = gp.degree();
  require(gp.coeff(0) == 1, Err::PreconditionFailed, "constant term must be 1");
  for (int k = 0; k <= d; ++k)
    require(is_integer(gp.coeff(k)), Err::PreconditionFailed, "integer coefficients required");
  Rational P(p);
  for (int j = 0; 2 * j <= d; ++j) {
    Rational scale = 1;
    for (int t = 0; t < d / 2 - j; ++t) scale *= P;
    require(gp.coeff(d - j) == scale * gp.coeff(j), Err::PreconditionFailed,
            "plus-type functional equation required");
  }
}

}  // namespace

int omega_of_frobenius(const RatPoly& gp, const Integer& p, int g) {
  require(g >= 2 && g % 2 == 0, Err::PreconditionFailed, "even genus required");
  require(gp.degree() == g, Err::PreconditionFailed, "degree must equal the genus");
  require(gp.coeff(0) == 1, Err::PreconditionFailed, "constant term must be 1");
  require(is_prime(p), Err::PreconditionFailed, "p must be prime");
  require(p % 4 == 1, Err::PreconditionFailed, "p = 1 mod 4 required");
  Integer target = pow_integer(p, unsigned(g / 2));
  Rational ag = gp.coeff(g);
  if (ag == Rational(target)) return 1;
  if (ag == Rational(-target)) return -1;
  fail(Err::WeilShapeViolated, "top coefficient is not +-p^(g/2)");
}

std::string CandidateField::beta_tag() const {
  if (m == 1) return "i";
  std::string s = m.get_str();
  if (times_i) s += "i";
  return s;
}

std::string CandidateField::field_name() const {
  if (m == 1 && times_i) return "Q(zeta8)";
  return "Q(i,sqrt(" + beta_tag() + "))";
}

bool operator==(const CandidateField& a, const CandidateField& b) {
  return a.m == b.m && a.times_i == b.times_i;
}

std::vector<CandidateField> candidate_fields(const std::vector<Integer>& bad_primes) {
  std::set<Integer> odd;
  for (const Integer& q : bad_primes) {
    require(is_prime(q), Err::DegenerateInput, "bad primes must be prime");
    if (q != 2) odd.insert(q);
  }
  std::vector<Integer> qs(odd.begin(), odd.end());
  std::vector<CandidateField> out;
  for (size_t mask = 0; mask < (size_t(1) << qs.size()); ++mask) {
    Integer m = 1;
    for (size_t j = 0; j < qs.size(); ++j)
      if (mask & (size_t(1) << j)) m *= qs[j];
    for (bool ti : {false, true}) {
      if (m == 1 && !ti) continue;  // beta = 1 generates nothing
      out.push_back(CandidateField{m, ti});
    }
  }
  std::sort(out.begin(), out.end(), [](const CandidateField& a, const CandidateField& b) {
    if (a.m != b.m) return a.m < b.m;
    return int(a.times_i) < int(b.times_i);
  });
  return out;
}

bool splits_completely(const Integer& p, const CandidateField& field) {
  require(is_prime(p), Err::DegenerateInput, "p must be prime");
  require(p != 2, Err::RamifiedPrime, "2 ramifies in Q(i)");
  require(field.m % p != 0, Err::RamifiedPrime, "p ramifies in the candidate field");
  if (p % 4 == 3) return false;  // p inert in Q(i)
  Integer res = field.m % p;
  if (field.times_i) {
    auto u = sqrt_mod(p - 1, p);
    require(u.has_value(), Err::InternalError, "no square root of -1 at p = 1 mod 4");
    res = (res * *u) % p;
  }
  return legendre(res, p) == 1;
}

MonodromyIdentification identify_connected_monodromy_field(
    const std::vector<OmegaDatum>& data, const std::vector<CandidateField>& candidates) {
  require(!data.empty(), Err::PreconditionFailed, "at least one omega datum required");
  for (const OmegaDatum& d : data)
    require(d.omega == 1 || d.omega == -1, Err::DegenerateInput, "omega must be +-1");
  MonodromyIdentification out;
  for (const CandidateField& cand : candidates) {
    bool alive = true;
    for (const OmegaDatum& d : data) {
      if (splits_completely(d.p, cand) != (d.omega == 1)) {
        out.eliminated.push_back(EliminationRecord{cand, d.p});
        alive = false;
        break;
      }
    }
    if (alive) out.survivors.push_back(cand);
  }
  if (out.survivors.size() == 1) {
    out.status = IdentifyStatus::Identified;
    out.field = out.survivors.front();
  } else if (out.survivors.empty()) {
    out.status = IdentifyStatus::NoCandidate;
  } else {
    out.status = IdentifyStatus::Inconclusive;
  }
  return out;
}

bool weil_irreducible(const RatPoly& gp, const Integer& p) {
  const int d = gp.degree();
  require(d == 2 || d == 4 || d == 6, Err::Unsupported, "degree 2, 4 or 6 required");
  require(gp.coeff(0) == 1, Err::PreconditionFailed, "constant term must be 1");
  for (int k = 0; k <= d; ++k)
    require(is_integer(gp.coeff(k)), Err::PreconditionFailed, "integer coefficients required");
  require(is_prime(p), Err::PreconditionFailed, "p must be prime");
  Rational pw(1);
  for (int j = 0; j <= d / 2; ++j) {
    if (gp(pw) == 0 || gp(-pw) == 0) return false;  // rational root +-1/p^j
    pw /= Rational(p);
  }
  if (d == 2) return true;
  Integer bound;
  {
    Integer fourp = 4 * p;
    mpz_sqrt(bound.get_mpz_t(), fourp.get_mpz_t());
  }
  for (Integer b = -bound; b <= bound; ++b)
    for (int s : {1, -1}) {
      RatPoly quad{{Rational(1), Rational(b), Rational(s * p)}};
      if (divides(quad, gp)) return false;
    }
  return true;
}

RatPoly real_subfield_poly(const RatPoly& gp, const Integer& p) {
  const int d = gp.degree();
  require(d == 4 || d == 6, Err::Unsupported, "quartic or sextic input required");
  check_plus_type(gp, p);
  Rational P(p), a1 = gp.coeff(1), a2 = gp.coeff(2);
  if (d == 4) return RatPoly{{a2 - 2 * P, a1, Rational(1)}};
  Rational a3 = gp.coeff(3);
  Rational e1 = -a1, e2 = a2 - 3 * P, e3 = -a3 + 2 * P * a1;
  return RatPoly{{-e3, e2, -e1, Rational(1)}};
}

std::vector<Integer> quadratic_subfield_kernels(const RatPoly& gp, const Integer& p) {
  require(gp.degree() == 4, Err::Unsupported, "quartic input required");
  check_plus_type(gp, p);
  Rational P(p), a1 = gp.coeff(1), a2 = gp.coeff(2);
  Rational u = a1 / 2;
  std::set<Integer> out;
  auto push = [&](const Rational& dv) {
    if (dv == 0) return;
    auto k = signed_kernel(dv);
    require(k.has_value(), Err::InternalError, "kernel factorization incomplete");
    if (*k != 1) out.insert(*k);
  };
  // real subfield: halves x^2 - s x + p with s rational over Q(sqrt(m))
  push(u * u + 2 * P - a2);
  if (u == 0) {
    // conjugate halves with constant -p, and halves rational apart from the constant
    push(-a2 - 2 * P);
    Rational w = a2 / 2;
    push(w * w - P * P);
  } else {
    // other halvings need w with 2w^2 + (2p - a2)w + (2u^2 - a2)p = 0
    Rational B = 2 * P - a2, C = (2 * u * u - a2) * P;
    Rational disc = B * B - 8 * C, sq;
    if (disc >= 0 && is_rational_square(disc, &sq)) {
      for (int sgn : {1, -1}) {
        Rational w = (-B + Rational(sgn) * sq) / 4;
        if (w == P || w == -P) continue;
        Rational dv = u * u + 2 * w - a2, dz = w * w - P * P;
        if (dv == 0 || dz == 0) continue;
        auto kv = signed_kernel(dv), kz = signed_kernel(dz);
        require(kv.has_value() && kz.has_value(), Err::InternalError,
                "kernel factorization incomplete");
        if (*kv == *kz && *kv != 1) out.insert(*kv);
      }
    }
  }
  return std::vector<Integer>(out.begin(), out.end());
}

CenterCertificate center_certificate(const RatPoly& g1, const Integer& p1, const RatPoly& g2,
                                     const Integer& p2) {
  const int d = g1.degree();
  require(d == g2.degree(), Err::DegenerateInput, "degrees must match");
  require(d == 4 || d == 6, Err::Unsupported, "quartic or sextic input required");
  require(weil_irreducible(g1, p1), Err::NotSimpleInput, "first polynomial is reducible");
  require(weil_irreducible(g2, p2), Err::NotSimpleInput, "second polynomial is reducible");
  CenterCertificate cert;
  cert.real_subfield_1 = real_subfield_poly(g1, p1);
  cert.real_subfield_2 = real_subfield_poly(g2, p2);
  auto k1 = signed_kernel(discriminant(cert.real_subfield_1));
  auto k2 = signed_kernel(discriminant(cert.real_subfield_2));
  if (!k1 || !k2) {
    cert.reason = "real subfield discriminant kernel not determined";
    return cert;
  }
  cert.real_kernel_1 = *k1;
  cert.real_kernel_2 = *k2;
  auto w = scan_splitting_witnesses(g1, g2);
  cert.witness_not_isomorphic = w.not_isomorphic;
  cert.witness_no_common_quadratic = w.no_common_quadratic;
  cert.witness_no_common_cubic = w.no_common_cubic;
  if (d == 4) {
    cert.quadratic_subfields_1 = quadratic_subfield_kernels(g1, p1);
    cert.quadratic_subfields_2 = quadratic_subfield_kernels(g2, p2);
    bool disjoint = true;
    for (const Integer& m : cert.quadratic_subfields_1)
      if (std::find(cert.quadratic_subfields_2.begin(), cert.quadratic_subfields_2.end(), m) !=
          cert.quadratic_subfields_2.end())
        disjoint = false;
    require(!(w.no_common_quadratic.has_value() && !disjoint), Err::InternalError,
            "splitting witness contradicts a shared quadratic subfield kernel");
    // Disjoint kernel sets exclude common quadratics outright, and isomorphic
    // quartic fields would share their real kernel, so disjointness certifies
    // alone. Otherwise both pattern witnesses are needed.
    cert.certified =
        disjoint || (w.not_isomorphic.has_value() && w.no_common_quadratic.has_value());
    if (!cert.certified) cert.reason = "shared quadratic subfield kernels";
  } else {
    cert.certified = w.not_isomorphic.has_value() && w.no_common_quadratic.has_value() &&
                     w.no_common_cubic.has_value();
    if (!cert.certified) {
      cert.reason = "missing splitting witness:";
      if (!w.not_isomorphic) cert.reason += " isomorphism";
      if (!w.no_common_quadratic) cert.reason += " quadratic";
      if (!w.no_common_cubic) cert.reason += " cubic";
    }
  }
  return cert;
}

EndoVerdict endo_algebra_verdict(const LPolynomialReport& r1, const LPolynomialReport& r2,
                                 const CenterCertificate& center) {
  if (!center.certified) return EndoVerdict::Inconclusive;
  if (r1.c.degree() != r2.c.degree() || r1.c.degree() % 2 != 0) return EndoVerdict::Inconclusive;
  const long g = r1.c.degree() / 2;
  for (const LPolynomialReport* r : {&r1, &r2}) {
    if (r->endo_field_degree < 1) return EndoVerdict::Inconclusive;
    auto it = r->endo_dims.find(unsigned(r->endo_field_degree));
    if (it == r->endo_dims.end() || it->second != 4 * g) return EndoVerdict::Inconclusive;
  }
  return EndoVerdict::QuaternionAlgebraOverQ;
}

EndoVerdict endo_algebra_verdict(const LPolynomialReport&) { return EndoVerdict::Inconclusive; }

}  // namespace q8
