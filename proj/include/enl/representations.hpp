#ifndef ENL_REPRESENTATIONS_HPP
#define ENL_REPRESENTATIONS_HPP

#include "enl/lie.hpp"
#include "enl/matrix.hpp"
#include "enl/verdict.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace enl {

/// A representation of g on a space W: one matrix per basis element of g,
/// with an optional compatibility endomorphism T on W.
struct Representation {
  LieAlgebra algebra;
  int dimW = 0;
  std::vector<std::string> wbasis;
  std::vector<MatrixQ> rho; ///< rho[i] = action of e_i on W
  std::optional<MatrixQ> T;

  /// rho extended linearly: rho_vec(x) = sum_i x_i rho[i].
  MatrixQ rho_vec(const std::vector<Rat>& x) const;
};

/// Homomorphism law rho([e_i,e_j]) = rho(e_i)rho(e_j) - rho(e_j)rho(e_i)
/// over basis pairs i < j.
Verdict check_representation(const Representation& rep);

/// Compatibility modes between T (on W) and an operator E on g.
enum class ENMode {
  equivariant,          ///< T rho(x) = rho(Ex) = rho(x) T as matrices, all x
  n_compatible,         ///< T^2 rho(x) + rho(Ex)T - T rho(Ex) - T rho(x) T = 0
  averaging_compatible, ///< T rho(Ex) = rho(Ex) T, all x
};

/// Checks the selected compatibility identity for every basis element of g.
/// Throws MissingT when the representation carries no T and PrereqFailed
/// when the homomorphism law itself fails.
Verdict check_en_representation(const Representation& rep, const MatrixQ& E,
                                ENMode mode);

/// Dual representation on W*: rho*(x) = -rho(x)^T, T* = T^T, dual basis
/// names with "*" appended. Throws PrereqFailed if rep is not a
/// representation.
Representation dual_representation(const Representation& rep);

/// Adjoint representation (W = g, rho(e_i) = ad_{e_i}) and its dual, the
/// coadjoint representation. Throws InvalidAlgebra when check_lie fails.
std::pair<Representation, Representation>
canonical_representations(const LieAlgebra& g);

Representation adjoint_rep(const LieAlgebra& g);
Representation coadjoint_rep(const LieAlgebra& g);

/// Semidirect sum g x| W with W abelian: [x+u, y+v] = [x,y] + rho(x)v -
/// rho(y)u amid basis ordering (g block, then W block). This raw builder
/// imposes no compatibility preconditions.
LieAlgebra semidirect_raw(const Representation& rep);

/// Semidirect sum with the lifted operator E(+)T. Requires
/// check_equivariant(g,E) and check_en_representation(rep,E,equivariant);
/// throws PrereqFailed otherwise.
std::pair<LieAlgebra, MatrixQ> semidirect_sum(const LieAlgebra& g,
                                              const MatrixQ& E,
                                              const Representation& rep);

} // namespace enl

#endif
