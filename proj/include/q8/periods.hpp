#pragma once
#include <array>
#include <complex>
#include <string>
#include <vector>

#include "q8/common.hpp"
#include "q8/torsion_lattice.hpp"

namespace q8 {

using Cx = std::complex<double>;

// One smooth piece of a path in the x-plane, parametrized over t in [0, 1].
// Endpoints flagged singular sit on ramification x-values; their
// parametrization absorbs the square-root vanishing of y so the pulled-back
// differentials stay bounded.
struct PathSegment {
  enum class Kind { Line, Arc };
  Kind kind = Kind::Line;
  Cx p0, p1;         // line endpoints, traversed p0 -> p1
  Cx center;         // arc data: center + radius * exp(i angle)
  double radius = 0.0;
  double angle0 = 0.0, angle1 = 0.0;
  bool singular_start = false;
  bool singular_end = false;

  Cx point(double t) const;
  Cx derivative(double t) const;
  Cx start() const { return point(0.0); }
  Cx end() const { return point(1.0); }
};

// A path between two ramification x-values together with the data selecting
// one of the two lifts to the curve. sheet_sign +1 picks the branch of y with
// positive imaginary part just after the start; a nonzero initial_y_hint
// overrides that rule and picks the branch nearest the hint, which is how
// alpha-image and reversed paths inherit their sheet. The lift of a path
// joining two ramification points closes up, so such paths carry closed=true
// and their period is twice the plane integral along the path.
struct BranchPath {
  std::vector<PathSegment> segments;
  int sheet_sign = +1;
  Cx initial_y_hint{0.0, 0.0};
  bool closed = true;
  std::string label;
};

struct PeriodOptions {
  double tol = 1e-10;      // absolute error target per period entry
  int nodes = 24;          // Gauss-Legendre nodes per panel (doubled for the error estimate)
  int max_panels = 4096;   // refinement budget per segment
  double clearance = 0.1;  // required distance from branch points not on the path
};

struct PeriodMatrix {
  std::array<std::array<Cx, 8>, 4> entries{};       // row l-1: integrals of x^{l-1} dx / y
  std::array<std::array<double, 8>, 4> error_bounds{};
  std::string basis_tag;
};

struct PathIntegral {
  std::array<Cx, 4> value{};  // closed-lift periods of x^{l-1} dx / y, l = 1..4
  std::array<double, 4> error{};
  Cx start_y, end_y;          // continued branch of y just inside each endpoint
};

// The nine finite branch x-values of y^2 = x (x^4 - 1) (x^4 + 2 a x^2 + 1);
// the tenth ramification point lies over infinity.
std::vector<Cx> finite_branch_points(Cx a);

// Eight closed lifts spanning homology, ordered (g0, a.g0, g1, a.g1, g2, a.g2,
// g3, a.g3): g0 lifts the segment [0, 1], g1..g3 lift arc paths just outside
// the unit circle joining 1 to the first quartic root, that root to i, and i
// to the second quartic root. The a.gk are the images under (x, y) -> (-x, iy),
// realized as the negated paths started on the i*y sheet. Requires the branch
// points pairwise separated by at least 1e-6, else IllConditioned.
std::vector<BranchPath> build_homology_basis(Cx a, const PeriodOptions& opt = {});

// Adaptive Gauss-Legendre integration of the four differentials along one
// lifted path. The branch of y is continued along a midpoint walk whose steps
// keep |arg f(x_{k+1}) - arg f(x_k)| below pi/2, refining the walk until that
// holds (ContinuationFailed if a cap is hit because the path crawls past a
// branch point). Panels split until the summed node-doubling discrepancy is
// below tol.
PathIntegral integrate_basis_differentials(const BranchPath& path, Cx a,
                                           const PeriodOptions& opt = {});

// Period matrix over exactly eight paths. Postconditions checked here: every
// error bound is at most tol and the sixteen real/imaginary column vectors
// span an 8-dimensional real lattice (SVD rank 8, else IllConditioned).
// Requires tol >= 1e-12.
PeriodMatrix compute_period_matrix(const std::vector<BranchPath>& paths, Cx a,
                                   const PeriodOptions& opt = {});
PeriodMatrix compute_period_matrix(const std::vector<BranchPath>& paths, Cx a, double tol);

// Same geometric path traversed backward on the same sheet; its periods are
// the negatives of the original. Needs a to continue y to the far endpoint.
BranchPath reversed_path(const BranchPath& path, Cx a, const PeriodOptions& opt = {});

// Image under the hyperelliptic involution (x, y) -> (x, -y): same segments,
// opposite sheet. Periods negate.
BranchPath iota_image(const BranchPath& path);

// max |M Pi - Pi R| / max |Pi| for a 4x4 analytic representative M and an 8x8
// integer homology representative R. Identity pair gives exactly zero.
double verify_analytic_rational(const PeriodMatrix& pi, const GaussMatrix& m,
                                const IntMatrix& r, double tol);

struct RiemannReport {
  double residual;                    // max |Pi E^-1 Pi^T| / max|Pi|^2
  bool positive;                      // i Pi E^-1 conj(Pi)^T positive definite
  std::array<double, 4> eigenvalues;  // of that Hermitian form, ascending
};

// Bilinear relations against the intersection Gram matrix e. The Hermitian
// form i Pi E^-1 conj(Pi)^T is definite for period matrices; the positive sign
// is the one realized by this family's basis and is asserted stable by tests.
RiemannReport verify_riemann_relations(const PeriodMatrix& pi, const IntMatrix& e, double tol);

// Rank of the 8x8 real matrix stacking real and imaginary parts of the rows.
int period_lattice_rank(const PeriodMatrix& pi);

}  // namespace q8
