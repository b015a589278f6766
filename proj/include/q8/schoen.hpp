#pragma once
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "q8/gaussian.hpp"
#include "q8/rational.hpp"

namespace q8 {

// Exact data for the fourth-power certificate on the symmetric power of the
// quotient line: branch parameters beta_j (d = (g-2)/2 of them, with
// delta_j = -beta_j), the auxiliary offset gamma, the degree-g form
// q1(X,Y) = XY prod_j (X - beta_j Y)(X - Y/beta_j), and the linear-relation
// coefficients c_0..c_g read off from its middle coefficient.
struct SchoenContext {
  int g = 0;                   // even genus, at least 4
  std::vector<Rational> beta;  // d parameters; nonzero, not +-1, no collisions among beta, 1/beta
  Rational gamma;              // offset, distinct from every branch value
  std::vector<Rational> q1;    // coefficients of q1(u,1) by power of u, degree g-1
  Rational zg2;                // middle coefficient Z_{g/2} of q1, nonzero
  std::vector<Rational> c;     // c_0..c_g with sum_j c_j u^j = (2/zg2) q1(u,1)
};

// Point of the linear subspace cut out by e_i + e_{g-i} = (-1)^{g/2+i} c_i e_{g/2}.
// Stores all g+1 elementary symmetric coordinates e_0..e_g; e_1..e_{g/2} are
// free and the rest are derived (e_0 = 1, e_g = -1).
struct P0Point {
  std::vector<Rational> e;
};

// Coefficients c_j of (2 / Z_{g/2}(q1)) q1(u,1). Requires the beta_j pairwise
// distinct from each other and from every 1/beta_k, none of them 0 or +-1, and
// a nonzero middle coefficient; violations raise PreconditionFailed.
std::vector<Rational> compute_c_coefficients(int g, const std::vector<Rational>& beta);

// Builds the full context. With no gamma given, picks the smallest positive
// integer distinct from all branch values {0, +-1, beta_j, 1/beta_j}; an
// explicit gamma colliding with a branch value raises PreconditionFailed.
SchoenContext make_schoen_context(int g, const std::vector<Rational>& beta,
                                  const std::optional<Rational>& gamma = std::nullopt);

// Completes free coordinates e_1..e_{g/2} to a full point of the subspace.
P0Point p0_point(const SchoenContext& ctx, const std::vector<Rational>& free_coords);

// True iff sum_i c_i (-delta_j)^i vanishes exactly for every j, i.e. each
// beta_j is a root of the c-generating polynomial.
bool surprising_symmetry_check(const SchoenContext& ctx);

// prod_i (t_i - beta)(t_i - 1/beta) over the g values t_i encoded by the
// elementary symmetric coordinates e_0..e_g, computed from the trace
// s = beta + 1/beta alone so the result stays rational even when beta itself
// is irrational or complex (s = 0 covers the conjugate pair {i, -i}).
Rational pair_product_from_trace(const std::vector<Rational>& e, const Rational& s);

// Same product evaluated literally over Q(i); cross-check for the trace path.
GaussianRational pair_product_gaussian(const std::vector<Rational>& e,
                                       const GaussianRational& beta);

// Value of prod_i f(t_i) * prod_i (t_i - gamma)^(2g+4) at the point, where f
// is the quartic-model right-hand side with offset gamma. The offset factors
// cancel, leaving e_g * P(-1)^2 P(1)^2 * prod_j [pair_j]^2 with
// P(r) = prod_i (t_i - r). Points on the hyperplane t = gamma raise
// DegeneratePoint (the original product has a pole there); zeros coming from
// vanishing numerator factors are returned as ordinary zeros.
Rational restrict_fhat_to_P0(const SchoenContext& ctx, const P0Point& pt);

// Same value assembled from the factored decomposition
// -(e_{g/2} R prod_j bracket_j / Z)^4 with R = prod_j (s_j^2 - 4); agrees with
// the direct product at every point of the subspace.
Rational restrict_fhat_factored(const SchoenContext& ctx, const P0Point& pt);

// Candidate fourth root |e_{g/2} R prod_j bracket_j / Z| of minus the value.
Rational fourth_root_candidate(const SchoenContext& ctx, const P0Point& pt);

// Checks the closed form of the middle factor at the point:
// (sum_i e_i)(sum_i (-1)^i e_i) = (-1)^{d+1} prod_j (delta_j - 1/delta_j)^2
//                                 * e_{g/2}^2 / Z^2.
bool middle_factor_identity(const SchoenContext& ctx, const P0Point& pt);

struct FourthPowerTrial {
  std::vector<Rational> free_coords;
  Rational value;  // restricted product, direct evaluation
  Rational root;   // fourth root of -value when the trial passes
  bool pass = false;
};

struct FourthPowerReport {
  std::vector<FourthPowerTrial> trials;
  int degenerate_redraws = 0;  // draws rejected for a vanishing factor
  int sign_control_passes = 0; // trials where +value was also a fourth power (expect 0)
  bool all_pass = false;
  bool symbolic_checked = false;
  bool symbolic_pass = false;
};

// Seeded randomized certification that -(restricted value) is a rational
// fourth power, with the direct and factored evaluations compared exactly on
// every trial. For g = 4 the identity is additionally verified symbolically in
// the polynomial ring Q[e_1, e_2]; for larger g the symbolic pass is opt-in
// via symbolic_beyond_g4 (term counts grow quickly).
FourthPowerReport verify_fourth_power_identity(const SchoenContext& ctx, int trials,
                                               std::uint64_t seed,
                                               bool symbolic_beyond_g4 = false);

}  // namespace q8
