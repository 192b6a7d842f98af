#ifndef ENL_OPERATORS_HPP
#define ENL_OPERATORS_HPP

#include "enl/lie.hpp"
#include "enl/matrix.hpp"
#include "enl/verdict.hpp"

#include <utility>
#include <vector>

namespace enl {

/// Nijenhuis torsion T_N(e_i, e_j) =
///   [Ne_i, Ne_j] - N([Ne_i, e_j] + [e_i, Ne_j] - N[e_i, e_j]),
/// returned as the rank-3 tensor t(i,j,k) of its components.
Tensor3Q nijenhuis_torsion(const LieAlgebra& g, const MatrixQ& N);

/// Equivariance of a linear operator with respect to the bracket:
/// E[e_i,e_j] = [Ee_i,e_j] = [e_i,Ee_j] over the mixed basis pairs i < j.
/// Diagonal instances are not imposed; they are vacuous for the bracket
/// arguments themselves and excluding them keeps the notion closed under
/// the operator families this library constructs.
Verdict check_equivariant(const LieAlgebra& g, const MatrixQ& E);

/// Averaging operator: [Pe_i, Pe_j] = P[Pe_i, e_j] over all ordered basis
/// pairs, diagonal included.
Verdict check_averaging(const LieAlgebra& g, const MatrixQ& P);

/// How to deform a bracket by an operator.
enum class DeformMode {
  general,     ///< [x,y]_N = [Nx,y] + [x,Ny] - N[x,y]; requires zero torsion
  equivariant, ///< [x,y]_E = [Ex,y] on pairs i<j; requires equivariance
};

/// Deformed bracket on the same underlying space. Throws PrereqFailed when
/// the mode's precondition (vanishing Nijenhuis torsion, respectively
/// equivariance) does not hold. In equivariant mode the i<j values are
/// extended antisymmetrically. For an equivariant operator both modes agree.
LieAlgebra deformed_bracket(const LieAlgebra& g, const MatrixQ& E,
                            DeformMode mode);

/// Levels k = 1..K of the deformation family: the bracket deformed by E^k
/// together with E^k itself. Requires E equivariant for g.
std::vector<std::pair<LieAlgebra, MatrixQ>>
hierarchy(const LieAlgebra& g, const MatrixQ& E, int levels);

/// Rota-Baxter operator of weight lambda:
/// [Be_i, Be_j] = B([Be_i, e_j] + [e_i, Be_j] + lambda [e_i, e_j]).
Verdict check_rota_baxter(const LieAlgebra& g, const MatrixQ& B,
                          const Rat& lambda);

/// Descendent bracket [x,y]_B = [Bx,y] + [x,By] + lambda [x,y]. Throws
/// PrereqFailed unless B is a Rota-Baxter operator of that weight, which is
/// exactly when the descendent satisfies Jacobi and B becomes a morphism
/// from it to the original bracket.
LieAlgebra descendent_bracket(const LieAlgebra& g, const MatrixQ& B,
                              const Rat& lambda);

/// Clause-level view of the quadratic structure conditions, in order:
/// "invariant_form" (S symmetric nondegenerate invariant), "equivariance"
/// (E equivariant), "s_symmetry" (S E = E^T S, i.e. E self-adjoint for S).
Verdict quadratic_enl_clauses(const LieAlgebra& g, const MatrixQ& E,
                              const MatrixQ& S);

/// Quadratic structure check. The first two clauses are prerequisites:
/// their failure throws PrereqFailed naming the failed one; the verdict
/// itself reports the S-symmetry of E.
Verdict check_quadratic_enl(const LieAlgebra& g, const MatrixQ& E,
                            const MatrixQ& S);

/// A bracket with a quadratic structure, an equivariant operator and a
/// candidate Rota-Baxter operator of nonzero weight.
struct QuadraticENLRB {
  LieAlgebra g;
  MatrixQ B;      ///< candidate Rota-Baxter operator
  MatrixQ S;      ///< invariant form
  MatrixQ E;      ///< equivariant operator
  Rat lambda;     ///< Rota-Baxter weight, must be nonzero
};

/// Checks, in order: the Rota-Baxter identity for B, the quadratic
/// compatibility S B + B^T S + lambda S = 0, the quadratic structure
/// (check_quadratic_enl), and E B = B E. Throws ValidationError when
/// lambda = 0.
Verdict check_enl_rb(const QuadraticENLRB& input);

/// Basis of the space of operators equivariant for the bracket (solutions
/// of the linear system from check_equivariant), as matrices read off the
/// reduced echelon kernel of the vectorised system.
std::vector<MatrixQ> centroid_basis(const LieAlgebra& g);

/// Inverse of an equivariant operator; the inverse is again equivariant.
/// Throws NotEquivariant or SingularMatrix.
MatrixQ operator_inverse(const LieAlgebra& g, const MatrixQ& E);

} // namespace enl

#endif
