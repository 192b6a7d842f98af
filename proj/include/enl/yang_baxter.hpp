#ifndef ENL_YANG_BAXTER_HPP
#define ENL_YANG_BAXTER_HPP

#include "enl/doubles.hpp"
#include "enl/lie.hpp"
#include "enl/matrix.hpp"
#include "enl/operators.hpp"
#include "enl/representations.hpp"
#include "enl/verdict.hpp"

#include <utility>

namespace enl {

/// Schouten bracket [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23] of
/// r = sum r^{ij} e_i (x) e_j, componentwise:
///   [r12,r13]^{abc} = sum r^{ib} r^{jc} c_{ij}^a
///   [r12,r23]^{abc} = sum r^{ai} r^{jc} c_{ij}^b
///   [r13,r23]^{abc} = sum r^{ai} r^{bj} c_{ij}^c
Tensor3Q schouten(const LieAlgebra& g, const MatrixQ& r);

/// EN r-matrix: [[r,r]] = 0 and E r = r E^T. Requires check_equivariant(g,E)
/// (PrereqFailed otherwise).
Verdict check_en_rmatrix(const LieAlgebra& g, const MatrixQ& r,
                         const MatrixQ& E);

/// The weaker equivariance identity for coboundary cobrackets:
/// ad_{Ex} r + r ad_{Ex}^T = E (ad_x r + r ad_x^T) for every basis x.
/// Checked separately; not asserted equivalent to check_en_rmatrix.
Verdict check_en_rmatrix_weak(const LieAlgebra& g, const MatrixQ& r,
                              const MatrixQ& E);

/// Coboundary cobracket Delta_r(x) = (ad_x (x) Id + Id (x) ad_x)(r), i.e.
/// d(k,i,j) = sum_m (c(k,m,i) r(m,j) + c(k,m,j) r(i,m)). Throws
/// SymmetricPartNotInvariant unless r + r^T is ad-invariant.
Cobracket cobracket_from_r(const LieAlgebra& g, const MatrixQ& r);

struct DualBracketReport {
  LieAlgebra gstar;    ///< [xi,eta]_r = ad*_{r_+ xi} eta - ad*_{r_- eta} xi
  Verdict factorizable; ///< I = r + r^T nondegenerate and intertwining ad
};

/// Requires [[r,r]] = 0 and ad-invariant symmetric part (PrereqFailed).
DualBracketReport dual_bracket_from_r(const LieAlgebra& g, const MatrixQ& r);

/// The r-matrix of a quadratic Rota-Baxter structure:
/// r_+ = (1/lambda)(B + lambda Id) o (S#)^{-1}, returned as the tensor
/// r = (1/lambda) S^{-1} (B^T + lambda Id). Throws PrereqFailed unless
/// check_enl_rb passes.
MatrixQ rb_to_rmatrix(const QuadraticENLRB& input);

/// A linear map K: W -> g against a representation with T.
struct RelativeRB {
  Representation rep;
  MatrixQ K; ///< dim(g) x dimW
};

enum class RelRBLevel { plain, en };

/// O-operator identity [Ku,Kv] = K(rho(Ku)v - rho(Kv)u) on all W-basis
/// pairs; the en level additionally requires T (MissingT), E equivariant on
/// g (PrereqFailed), and checks E K = K T.
Verdict check_relative_rb(const RelativeRB& rb, const MatrixQ& E,
                          RelRBLevel level);

struct DescendentENL {
  LieAlgebra W;     ///< bracket [u,v]_K = rho(Ku)v - rho(Kv)u
  MatrixQ T;
  Verdict hom;      ///< K [u,v]_K = [Ku,Kv] and E K = K T
};

/// Throws PrereqFailed unless check_relative_rb(en) passes.
DescendentENL descendent_enl(const RelativeRB& rb, const MatrixQ& E);

/// Matched pair (g, W_K; rho, mu) with mu(u)x = K(rho(x)u) - [x,Ku],
/// Eg = E, Eh = T. Throws PrereqFailed unless check_relative_rb(en) passes.
MatchedPair matched_pair_from_relrb(const RelativeRB& rb, const MatrixQ& E);

struct LiftResult {
  LieAlgebra dbl;  ///< g x|_{rho*} W*
  MatrixQ Ehat;    ///< E (+) T^T
  MatrixQ rK;      ///< K block in the (g,W*) corner, -K^T in the (W*,g) corner
  Verdict verdict; ///< schouten(rK) = 0 and Ehat rK = rK Ehat^T
};

/// Skew solution of the CYBE on the semidirect double. Throws PrereqFailed
/// unless check_relative_rb(en) passes. The verdict tests the two defining
/// identities directly.
LiftResult lift_r_from_relrb(const RelativeRB& rb, const MatrixQ& E);

enum class CoadjointDirection { K_to_B, B_to_K };

struct CorrespondenceResult {
  MatrixQ out;     ///< B = K S (direction K_to_B) or K = B S^{-1} (B_to_K)
  Verdict verdict; ///< the two check suites agree on this instance
};

/// The bijection B = K o S# between relative Rota-Baxter operators on the
/// coadjoint representation (T = E^T) and weight-0 Rota-Baxter operators
/// commuting with E. Requires (g,S,E) quadratic (PrereqFailed); the verdict
/// records that check_relative_rb(en) on K agrees with
/// check_rota_baxter(B,0) && EB = BE.
CorrespondenceResult coadjoint_correspondence(const LieAlgebra& g,
                                              const MatrixQ& E,
                                              const MatrixQ& S,
                                              const MatrixQ& K_or_B,
                                              CoadjointDirection direction);

} // namespace enl

#endif
