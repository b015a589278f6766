#pragma once
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "q8/algebra.hpp"
#include "q8/finite_field.hpp"

namespace q8 {

struct CountOptions {
  Integer budget = Integer(1) << 32;       // max field size p^r
  std::shared_ptr<const FqContext> field;  // override the modulus (testing)
  int threads = 0;                         // 0 = auto
};

// #C(F_{p^r}) for y^2 = f(x), f the family member at (g, a): the affine count
// 1 + chi(f(x)) summed over x, plus the single point at infinity.
Integer count_points(int g, const std::vector<Rational>& a, const Integer& p, unsigned r,
                     const CountOptions& opts = {});

enum class FitAnsatz { Generic, Square };

struct LPolynomialReport {
  Integer p;
  int g = 0;
  std::map<unsigned, Integer> counts;  // r -> #C(F_{p^r})
  RatPoly c;                           // degree 2g, integer coefficients, c(0) = 1
  std::optional<RatPoly> gp;           // square root when fitted with the square ansatz
  bool ordinary = false;
  std::map<unsigned, int> tensor_kset;  // cyclotomic orders k -> multiplicity
  RatPoly h;                            // non-cyclotomic part, variable U = pT
  std::map<unsigned, long> endo_dims;   // r -> dim of the endomorphism algebra over F_{p^r}
  long endo_field_degree = 0;           // lcm of the k_i
};

// Newton-identity fit from point counts. Generic needs counts at r = 1..g;
// Square needs r = 1..g/2 and fits g_p with c = g_p^2, using a count at
// r = g/2 + 1 to fix the functional-equation sign when the middle coefficient
// of g_p vanishes. Any counts beyond the required range are verified against
// the fitted polynomial.
LPolynomialReport fit_l_polynomial(const std::map<unsigned, Integer>& counts, const Integer& p,
                                   int g, FitAnsatz ansatz);

// Full report: fit + tensor square + cyclotomic split + dimension table.
LPolynomialReport analyze_frobenius(const std::map<unsigned, Integer>& counts, const Integer& p,
                                    int g, FitAnsatz ansatz, unsigned dims_r_max = 12);

// Res_z(c(z), z^{2g} c(T/z)): inverse roots are all pairwise products of
// inverse roots of c; degree 4g^2, computed by evaluation and interpolation.
RatPoly tensor_square(const RatPoly& c, int g);

struct CyclotomicSplit {
  std::map<unsigned, int> kset;  // k -> multiplicity of the inverse-root factor of Phi_k
  RatPoly h;                     // remainder in U = pT, h(0) = 1, no root-of-unity inverse roots
};

// Substitute U = pT and divide out every reversed cyclotomic C_k(U) with
// phi(k) <= deg; exhaustive, so the remainder has no root-of-unity inverse
// roots (each would contribute an irreducible C_k factor in range).
CyclotomicSplit cyclotomic_factorization(const RatPoly& ct, const Integer& p);

struct EndoDimensionReport {
  std::map<unsigned, long> dims;  // r -> sum of phi(k_i) over k_i | r
  long k_lcm = 0;                 // degree of the endomorphism field
};
EndoDimensionReport endo_dimension_report(const std::map<unsigned, int>& kset, unsigned r_max);

// True iff the middle coefficient is a p-unit (even degree required).
bool ordinarity_check(const RatPoly& gp, const Integer& p);

// Power sums of the inverse roots of c (c(0) = 1), extended to any length.
std::vector<Rational> power_sums_from_poly(const RatPoly& c, unsigned r_max);

// max over inverse roots alpha of | |alpha|/sqrt(p) - 1 |, via eigenvalues of
// the companion matrix of c(S/sqrt(p)), which is well scaled when c is Weil.
double weil_residual(const RatPoly& c, const Integer& p);

}  // namespace q8
