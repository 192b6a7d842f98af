#ifndef ENL_PRELIE_HPP
#define ENL_PRELIE_HPP

#include "enl/lie.hpp"
#include "enl/matrix.hpp"
#include "enl/representations.hpp"
#include "enl/tensor3.hpp"
#include "enl/verdict.hpp"
#include "enl/yang_baxter.hpp"

#include <optional>
#include <string>
#include <vector>

namespace enl {

/// A pre-Lie algebra: product {e_i,e_j} = sum_k m(i,j,k) e_k whose
/// associator is symmetric in the first two arguments.
struct PreLieAlgebra {
  int dim = 0;
  std::vector<std::string> basis;
  Tensor3Q m;

  std::vector<Rat> product(const std::vector<Rat>& x,
                           const std::vector<Rat>& y) const;

  /// Left multiplication L(e_i): L(i).at(k,j) = m(i,j,k).
  MatrixQ L(int i) const;
};

PreLieAlgebra make_prelie(int dim, std::vector<std::string> names,
                          const std::vector<SparseEntry>& entries);

/// Associator symmetry {{x,y},z} - {x,{y,z}} = {{y,x},z} - {y,{x,z}} on all
/// basis triples.
Verdict check_prelie(const PreLieAlgebra& p);

/// Commutator Lie algebra: [x,y] = {x,y} - {y,x}.
LieAlgebra subadjacent(const PreLieAlgebra& p);

enum class PreENLMode {
  weak,   ///< E equivariant for the subadjacent bracket (mixed pairs)
  strong, ///< E{x,y} = {Ex,y} = {x,Ey} on all ordered pairs, diagonal included
};

/// Throws PrereqFailed unless check_prelie passes.
Verdict check_pre_enl(const PreLieAlgebra& p, const MatrixQ& E,
                      PreENLMode mode);

/// Basis of the space of strong operators (solutions of the strong
/// compatibility system), echelon-normalized via kernel_basis.
std::vector<MatrixQ> prelie_strong_basis(const PreLieAlgebra& p);

struct SubadjacentENL {
  LieAlgebra g;       ///< the commutator algebra
  Representation L;   ///< left multiplications with T = E
  Verdict relrb;      ///< K = Id passes check_relative_rb(en) against (g;E,L)
};

/// Throws PrereqFailed unless check_prelie and check_pre_enl(strong) pass.
SubadjacentENL subadjacent_enl(const PreLieAlgebra& p, const MatrixQ& E);

struct PreLieTorsion {
  Tensor3Q torsion; ///< {Nx,Ny} - N({Nx,y} + {x,Ny} - N{x,y}) componentwise
  std::optional<PreLieAlgebra> deformed; ///< present iff torsion vanishes
};

/// Pre-Lie Nijenhuis torsion and, when it vanishes, the deformed product
/// {x,y}_N = {Nx,y} + {x,Ny} - N{x,y}.
PreLieTorsion prelie_nijenhuis(const PreLieAlgebra& p, const MatrixQ& N);

/// Product {u,v}_K = rho(Ku)v on W, with operator T. Throws PrereqFailed
/// unless check_relative_rb(en) passes.
PreLieAlgebra prelie_from_relrb(const RelativeRB& rb, const MatrixQ& E);

/// Transported product {x,y}_K = K(rho(x) K^{-1} y) on g for invertible K.
/// Throws SingularMatrix or PrereqFailed.
PreLieAlgebra prelie_transport(const RelativeRB& rb, const MatrixQ& E);

struct CanonicalR {
  LieAlgebra dbl;  ///< g x|_{L*} g*
  MatrixQ Ehat;    ///< E (+) E^T
  MatrixQ r;       ///< identity block in (g,g*), minus identity in (g*,g)
  Verdict verdict; ///< schouten(r) = 0 and Ehat r = r Ehat^T
};

/// The canonical skew r-matrix of a strong pre-ENL algebra; coincides with
/// lift_r_from_relrb at K = Id over the L-representation. Throws
/// PrereqFailed unless check_pre_enl(strong) passes.
CanonicalR canonical_r_prelie(const PreLieAlgebra& p, const MatrixQ& E);

} // namespace enl

#endif
