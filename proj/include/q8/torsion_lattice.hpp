#pragma once
#include <array>
#include <string>
#include <vector>

#include "q8/common.hpp"
#include "q8/gaussian.hpp"
#include "q8/quaternion.hpp"
#include "q8/rational.hpp"

namespace q8 {

using F2Matrix = std::vector<std::vector<int>>;  // entries 0/1
using IntMatrix = std::vector<std::vector<long>>;
using GaussMatrix = std::vector<std::vector<GaussianRational>>;
using RatMatrix = std::vector<std::vector<Rational>>;

int f2_rank(F2Matrix m);

struct TwoTorsionAction {
  int g;
  std::vector<std::string> basis_labels;  // the 2g nonzero branch labels
  F2Matrix alpha, beta;                   // 2g x 2g over F_2
};

// Generator action on the 2-torsion of the family Jacobian. The basis is
// indexed by the nonzero finite branch x-coordinates; alpha sends e_x to
// e_{-x} and beta sends e_x to e_{1/x} + e_0, where e_0 equals the sum of
// all basis vectors. Both matrices are involutions and commute, since the
// central element acts trivially on 2-torsion.
TwoTorsionAction two_torsion_action(int g);

struct HurwitzObstruction {
  bool nontrivial;
  int rank;  // F_2-rank of Id + alpha + beta + alpha*beta
};

// Action of twice the half-integral quaternion (-1+i+j+k)/2 on 2-torsion,
// where -1 acts as the identity. A nonzero operator obstructs extending the
// endomorphism ring past the integer quaternion span.
HurwitzObstruction hurwitz_obstruction(int g);

struct HomologyData {
  IntMatrix r_alpha, r_beta;    // 8x8 action on the genus-4 homology basis
  IntMatrix e;                  // Gram matrix of the intersection form
  GaussMatrix m_alpha, m_beta;  // 4x4 analytic representations
};

// Exact genus-4 matrices. Structural identities are checked at construction
// (squares equal -Id, anticommutation, symplectic invariance of e, det e = 1,
// and the same quaternion relations for the analytic representations); any
// failure raises InternalError.
HomologyData homology_data();

struct RationalRepReport {
  RatMatrix matrix;  // (-Id + R(i) + R(j) + R(i)R(j)) / 2
  bool integral;
};

// Rational representation of the half-integral quaternion. Non-integrality
// shows the homology lattice carries no action of a larger order.
RationalRepReport hurwitz_rational_rep();

enum class FreenessVerdict { NotLocallyFree, Free };

struct NonfreenessReport {
  int dim_jl;        // F_2-dim of (radical) * lattice / 2 * lattice
  int dim_quotient;  // matrix size - dim_jl
  FreenessVerdict verdict;
};

// Nakayama-type test: the radical of the 2-adic quaternion order is
// (1+i, 1+j, 1+k), so the radical image mod 2 is spanned by the columns of
// Id+R(i), Id+R(j), Id+R(k). A free module of rank n has quotient dimension
// exactly n with 4n equal to the lattice rank; any other quotient dimension
// certifies NotLocallyFree.
NonfreenessReport nonfreeness_check();
NonfreenessReport nonfreeness_check(const IntMatrix& ri, const IntMatrix& rj,
                                    const IntMatrix& rk);

// Images of i, j, k in the left regular representation of the integer
// quaternion order acting on two free copies of itself: a known-free control
// for the Nakayama test.
std::array<IntMatrix, 3> lipschitz_regular_rep();

struct QuaternionGram {
  std::array<std::array<Quaternion, 2>, 2> t;
  std::array<int, 2> generators;  // 0-based homology basis indices
};

// Gram matrix of the intersection form pulled back through the quaternion
// module map sending the unit vectors to two homology generators, recovered
// coefficient-by-coefficient from the trace expansion
// 2a = trd(a) + trd(-ai)i + trd(-aj)j + trd(-ak)k. The result is
// anti-Hermitian (conjugate transpose equals -T); a violation raises
// InternalError. The default generator pair is chosen so the Gram matrix is
// the standard diagonal representative; other pairs differ by unit
// conjugation. Pairs whose translates fail to span raise DegenerateInput.
QuaternionGram t_matrix();
QuaternionGram t_matrix(int gen1, int gen2);

}  // namespace q8
