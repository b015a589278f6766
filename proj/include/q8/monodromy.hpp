#pragma once
#include <optional>
#include <string>
#include <vector>

#include "q8/algebra.hpp"
#include "q8/frobenius.hpp"

namespace q8 {

// Similitude character at a good split prime (p = 1 mod 4), read off the top
// coefficient of the half L-polynomial: +1 if it is +p^(g/2), -1 if -p^(g/2).
int omega_of_frobenius(const RatPoly& gp, const Integer& p, int g);

struct OmegaDatum {
  Integer p;
  int omega;  // +1 or -1
  RatPoly source_gp;
};

// Quadratic extension Q(i, sqrt(beta)) with beta = m or m*i, m an odd
// squarefree product of ramified primes. Only fields Galois over Q survive the
// enumeration, which forces this beta shape.
struct CandidateField {
  Integer m;
  bool times_i;
  std::string beta_tag() const;    // "i", "3", "3i", ...
  std::string field_name() const;  // "Q(zeta8)", "Q(i,sqrt(3))", ...
};
bool operator==(const CandidateField& a, const CandidateField& b);

// All candidates for the given set of bad primes: beta ranges over the group
// generated by i, 1+i and the odd bad primes, modulo squares, Galois-filtered.
std::vector<CandidateField> candidate_fields(const std::vector<Integer>& bad_primes);

// Splitting law: p = 1 mod 4 and beta a square mod p (i realized as a square
// root of -1 mod p). Ramified p is rejected, p = 3 mod 4 never splits.
bool splits_completely(const Integer& p, const CandidateField& field);

enum class IdentifyStatus { Identified, Inconclusive, NoCandidate };

struct EliminationRecord {
  CandidateField field;
  Integer witness_p;  // datum prime whose omega contradicts the splitting law
};

struct MonodromyIdentification {
  IdentifyStatus status;
  std::optional<CandidateField> field;  // set when status == Identified
  std::vector<CandidateField> survivors;
  std::vector<EliminationRecord> eliminated;
};

// Keeps exactly the candidates with splits_completely(p, field) <=> omega = +1
// for every datum.
MonodromyIdentification identify_connected_monodromy_field(
    const std::vector<OmegaDatum>& data, const std::vector<CandidateField>& candidates);

// True when gp admits no factorization over Q compatible with inverse roots of
// absolute value sqrt(p). Complete for degrees 2, 4 and 6: any rational factor
// would have a quadratic subfactor 1 + bT +- pT^2 with |b| <= 2 sqrt(p), or a
// rational root +-1/p^j.
bool weil_irreducible(const RatPoly& gp, const Integer& p);

// Minimal polynomial of x + p/x on the inverse roots: the totally real
// subfield of Q[T]/(gp). Quadratic for quartic input, cubic for sextic.
// Requires the plus-type functional equation.
RatPoly real_subfield_poly(const RatPoly& gp, const Integer& p);

// Signed squarefree kernels m of all quadratic subfields Q(sqrt(m)) of
// Q[T]/(gp), found by factoring into conjugate halves over Q(sqrt(m)).
// Complete for irreducible quartic input with the plus-type equation.
std::vector<Integer> quadratic_subfield_kernels(const RatPoly& gp, const Integer& p);

struct CenterCertificate {
  bool certified = false;
  std::string reason;  // explanation when not certified
  RatPoly real_subfield_1, real_subfield_2;
  Integer real_kernel_1, real_kernel_2;  // squarefree kernels of the real-subfield discs
  // Auxiliary primes whose unramified factor patterns exclude shared structure.
  std::optional<Integer> witness_not_isomorphic;    // patterns differ mod this prime
  std::optional<Integer> witness_no_common_quadratic;
  std::optional<Integer> witness_no_common_cubic;   // sextic input only
  std::vector<Integer> quadratic_subfields_1, quadratic_subfields_2;  // quartic input only
};

// Certifies that Q[T]/(g1) and Q[T]/(g2) share no subfield larger than Q.
// An unramified auxiliary prime constrains any common subfield of degree d:
// its residue degrees in Q[T]/(gi) must arise from one splitting type of the
// degree-d subfield. A prime admitting no common type for degree d rules out
// all common subfields of that degree; scanning the first 200 auxiliary primes
// collects one witness per proper degree plus a pattern mismatch against
// isomorphism. For quartics, disjoint quadratic-subfield kernel sets give an
// independent complete certificate.
CenterCertificate center_certificate(const RatPoly& g1, const Integer& p1, const RatPoly& g2,
                                     const Integer& p2);

enum class EndoVerdict { QuaternionAlgebraOverQ, Inconclusive };

// Combines two Frobenius reports with a trivial-center certificate: if both
// bound the endomorphism algebra dimension at their field degree by 4g and the
// center is Q, the algebra is the definite quaternion algebra (-1,-1 | Q).
EndoVerdict endo_algebra_verdict(const LPolynomialReport& r1, const LPolynomialReport& r2,
                                 const CenterCertificate& center);
// One prime alone never suffices in this logic.
EndoVerdict endo_algebra_verdict(const LPolynomialReport& r1);

}  // namespace q8
