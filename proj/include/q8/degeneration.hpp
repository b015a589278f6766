#pragma once
#include <map>
#include <string>
#include <vector>

#include "q8/gaussian.hpp"

namespace q8 {

// Exact Laurent polynomial in the uniformizer, exponent -> coefficient.
using Laurent = std::map<int, GaussianRational>;

// Valuation context for root sets: exact t-adic arithmetic on Laurent
// polynomials, or the p-adic valuation on Q(i) at an odd prime. When p splits
// (p = 1 mod 4) the branch picks one of the two primes above p; for inert p
// the branch is ignored.
struct ValuationContext {
  bool t_adic = true;
  Integer p = 0;
  int branch = 0;
};

struct ValuedPoint {
  std::string label;
  GaussianRational value;  // p-adic case
  Laurent series;          // t-adic case
};

ValuedPoint valued_point(std::string label, GaussianRational value);
ValuedPoint valued_point(std::string label, Laurent series);

// Valuation of a nonzero element of Q(i), normalized with v(p) = 1. Inert p:
// min of the coordinate valuations. Split p: exact division count by the
// branch prime pi = s+ti (branch 0) or t+si (branch 1), s^2+t^2 = p, s < t.
Rational gaussian_valuation(const GaussianRational& x, const Integer& p,
                            int branch = 0);
// Smallest exponent with nonzero coefficient of a nonzero Laurent polynomial.
Rational laurent_valuation(const Laurent& x);

struct Cluster {
  std::vector<int> members;  // root indices, ascending
  Rational depth;            // min pairwise valuation of member differences
  int parent = -1;           // index into ClusterTree::clusters, -1 at the top
};

// Laminar family of root subsets cut out by discs: the full root set plus
// every proper subset of size >= 2 realized as an equivalence class of
// v(r - r') >= threshold. Child depth strictly exceeds parent depth.
struct ClusterTree {
  std::vector<std::string> labels;
  std::vector<Cluster> clusters;  // clusters[0] = all roots
  std::vector<std::vector<Rational>> pairwise;  // valuations of differences
  Rational leading_coeff_valuation;
  ValuationContext context;
};

ClusterTree build_cluster_tree(const std::vector<ValuedPoint>& roots,
                               const ValuationContext& ctx,
                               const Rational& leading_coeff_valuation = 0);

std::vector<std::string> cluster_labels(const ClusterTree& tree, int k);

enum class ReductionVerdict {
  GoodReduction,
  PotentiallyGood,
  NotPotentiallyGood,
  Inconclusive,
};

struct ReductionReport {
  ReductionVerdict verdict;
  std::string reason;
  std::vector<Rational> nu;  // parallel to tree.clusters
};

// Good-reduction test for the Jacobian over the given local field: all proper
// non-root clusters odd, and every proper cluster principal with even
// nu = v(leading coeff) + sum over roots of the joined-cluster depth. An even
// proper non-root cluster obstructs even potential good reduction; when only
// the nu/principality step fails, a ramified base change can repair it and
// the verdict is PotentiallyGood. Configurations outside these patterns
// (all children even) return Inconclusive.
ReductionReport reduction_verdict(const ClusterTree& tree);

// Finite branch x-values {0, +-1, +-i, +-t^e, +-t^-e} of the genus-4 factored
// family along the parameter curve b = t^e, with the leading-coefficient
// valuation -2e of the normalized model. e = 1 is the bare parameter line,
// e = 2 the square pullback that removes the obstruction to good reduction.
struct DegeneratingFiber {
  std::vector<ValuedPoint> roots;
  Rational leading_coeff_valuation;
};
DegeneratingFiber genus4_degenerating_roots(int exponent);

// Parameters b_1..b_(g-2)/2 whose expanded branch locus has exactly the four
// depth-1 twin pairs {b_1,b_2}, {-b_1,-b_2}, {1/b_1,1/b_2}, {-1/b_1,-1/b_2}
// close at p and all other pairwise distances exact units, on every branch.
// Greedy over small integers with b_2 = b_1 + p; the resulting Jacobian has
// bad, not potentially good, reduction at p.
std::vector<Rational> bad_parameter_constructor(int g, const Integer& p);

// Branch x-values {0, +-1, +-i, +-b_j, +-1/b_j} as p-adic valued points.
std::vector<ValuedPoint> expanded_branch_points(const std::vector<Rational>& b);

// Exact check that (u, w) = (z + c/z, i*v*(z +- sqrt(c))/z^2) maps the curve
// v^2 = -z(z^2-1)(z^2-c^2) to w^2 = (u +- 2 sqrt(c))(u^2-(c+1)^2), as a
// polynomial identity over Q[z, c, sqrt(c)]. Dropping the factor i from w
// (include_i_factor = false) breaks the identity and returns false.
bool genus2_splitting_identity(int sign, bool include_i_factor = true);

// j-invariant 1728 (c+1/3)^3 (c+3)^3 / ((c-1)^4 (c+1)^2) of the elliptic
// quotients of v^2 = -z(z^2-1)(z^2-c^2); invariant under c -> 1/c.
Rational splitting_j_invariant(const Rational& c);

}  // namespace q8
