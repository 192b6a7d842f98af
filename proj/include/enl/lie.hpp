#ifndef ENL_LIE_HPP
#define ENL_LIE_HPP

#include "enl/matrix.hpp"
#include "enl/rational.hpp"
#include "enl/tensor3.hpp"
#include "enl/verdict.hpp"

#include <string>
#include <vector>

namespace enl {

/// One sparse entry of a rank-3 structure tensor. The meaning of the index
/// triple (a,b,c) depends on the tensor being described:
///  - Lie brackets:   [e_a, e_b] has coefficient `value` on e_c, a < b.
///  - Cobrackets:     Delta(e_a) has coefficient `value` on e_b (x) e_c, b < c.
///  - Pre-Lie products: e_a * e_b has coefficient `value` on e_c (no order).
struct SparseEntry {
  int a = 0;
  int b = 0;
  int c = 0;
  Rat value;
};

/// A finite-dimensional algebra with an antisymmetric bracket, stored by
/// structure constants c(i,j,k) with [e_i, e_j] = sum_k c(i,j,k) e_k.
/// Validity as a Lie algebra is a separate check (check_lie), so deformed
/// or otherwise non-Jacobi brackets can be represented too.
struct LieAlgebra {
  int dim = 0;
  std::vector<std::string> basis;
  Tensor3Q c;

  /// Bracket of coordinate vectors.
  std::vector<Rat> bracket(const std::vector<Rat>& x,
                           const std::vector<Rat>& y) const;

  /// Adjoint action of e_i as a matrix: ad(i).at(k, j) = c(i, j, k).
  MatrixQ ad(int i) const;

  /// Adjoint action of an arbitrary element x = sum x_i e_i.
  MatrixQ ad_vec(const std::vector<Rat>& x) const;
};

/// Build an algebra from sparse bracket entries [a,b,c,value] with a < b;
/// the antisymmetric counterpart c(b,a,k) = -c(a,b,k) is filled in.
/// Throws ValidationError on bad indices or a >= b, ShapeMismatch on a
/// name/dim mismatch. An empty `names` list defaults to e1..en.
LieAlgebra make_lie(int dim, std::vector<std::string> names,
                    const std::vector<SparseEntry>& entries);

/// The abelian Lie algebra of dimension n (all brackets zero).
LieAlgebra abelian(int n);

/// Direct sum; blocks do not interact. Colliding names in the second
/// summand get primes appended until unique.
LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2);

/// Checks antisymmetry of the stored tensor and then the Jacobi identity
/// over all basis triples, reporting the first failure in lexicographic
/// order of (i, j, l) with the offending output component k.
Verdict check_lie(const LieAlgebra& g);

/// Left Leibniz identity x*(y*z) = (x*y)*z + y*(x*z) for the bilinear
/// product m(i,j,k), checked over all ordered basis triples.
Verdict check_leibniz(const Tensor3Q& m, const std::vector<std::string>& names);

/// Invariant (ad-invariant) symmetric nondegenerate bilinear form check,
/// in the order: symmetry, nondegeneracy, invariance
/// S([x,y],z) + S(y,[x,z]) = 0 over basis triples.
Verdict check_invariant_form(const LieAlgebra& g, const MatrixQ& S);

/// A cobracket Delta on an n-dimensional space, stored as d(k,i,j) with
/// Delta(e_k) = sum_{i,j} d(k,i,j) e_i (x) e_j.
struct Cobracket {
  int dim = 0;
  std::vector<std::string> basis;
  Tensor3Q d;

  /// Component matrix of Delta(e_k): delta_of(k).at(i, j) = d(k, i, j).
  MatrixQ delta_of(int k) const;
};

/// Build a cobracket from sparse entries [k,i,j,value] with i < j; the
/// wedge counterpart d(k,j,i) = -d(k,i,j) is filled in.
Cobracket make_cobracket(int dim, std::vector<std::string> names,
                         const std::vector<SparseEntry>& entries);

/// Co-antisymmetry and the co-Jacobi identity
/// sum_cyc(a,b,c) sum_j d(k,a,j) d(j,b,c) = 0 over all (k; a,b,c).
Verdict check_cobracket(const Cobracket& delta);

/// The Lie algebra structure induced on the dual space: [e_a*, e_b*] =
/// sum_k d(k,a,b) e_k*, on basis names with "*" appended. Throws
/// InvalidCobracket if the cobracket is not a valid Lie cobracket.
LieAlgebra dualize(const Cobracket& delta);

} // namespace enl

#endif
