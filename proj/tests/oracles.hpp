#ifndef ENL_TESTS_ORACLES_HPP
#define ENL_TESTS_ORACLES_HPP

// Naive reference implementations, written as direct nested-loop
// translations of the defining formulas. They deliberately avoid the
// library's matrix compositions and accumulation strategies so that the
// two routes to each quantity stay independent.

#include "enl/doubles.hpp"
#include "enl/lie.hpp"
#include "enl/tensor3.hpp"

namespace enl::oracle {

/// [[r,r]]^{abc} = sum_{i,j} ( r^{ib} r^{jc} c_{ij}^a
///                           + r^{ai} r^{jc} c_{ij}^b
///                           + r^{ai} r^{bj} c_{ij}^c )
inline Tensor3Q schouten(const LieAlgebra& g, const MatrixQ& r) {
  const int n = g.dim;
  Tensor3Q t(n, n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        Rat sum = 0;
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            sum += r.at(i, b) * r.at(j, c) * g.c.at(i, j, a);
            sum += r.at(a, i) * r.at(j, c) * g.c.at(i, j, b);
            sum += r.at(a, i) * r.at(b, j) * g.c.at(i, j, c);
          }
        }
        t.at(a, b, c) = sum;
      }
    }
  }
  return t;
}

/// T_N(e_i,e_j) = [Ne_i,Ne_j] - N([Ne_i,e_j] + [e_i,Ne_j] - N[e_i,e_j]),
/// evaluated through coordinate vectors and LieAlgebra::bracket.
inline Tensor3Q nijenhuis_torsion(const LieAlgebra& g, const MatrixQ& N) {
  const int n = g.dim;
  Tensor3Q t(n, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::vector<Rat> ei = basis_vec(n, i);
      const std::vector<Rat> ej = basis_vec(n, j);
      const std::vector<Rat> Ni = N.apply(ei);
      const std::vector<Rat> Nj = N.apply(ej);
      std::vector<Rat> inner =
          vec_sub(vec_add(g.bracket(Ni, ej), g.bracket(ei, Nj)),
                  N.apply(g.bracket(ei, ej)));
      std::vector<Rat> val = vec_sub(g.bracket(Ni, Nj), N.apply(inner));
      for (int k = 0; k < n; ++k) t.at(i, j, k) = val[k];
    }
  }
  return t;
}

/// Defect of the 1-cocycle identity for the adjoint action, stored as
/// t(i, j, a*n+b): the (a,b) component of
/// Delta([e_i,e_j]) - (ad_i (x) 1 + 1 (x) ad_i) Delta(e_j)
///                  + (ad_j (x) 1 + 1 (x) ad_j) Delta(e_i).
inline Tensor3Q cocycle_defect(const LieAlgebra& g, const Cobracket& delta) {
  const int n = g.dim;
  Tensor3Q t(n, n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          Rat lhs = 0;
          for (int k = 0; k < n; ++k) lhs += g.c.at(i, j, k) * delta.d.at(k, a, b);
          Rat rhs = 0;
          for (int m = 0; m < n; ++m) {
            rhs += g.c.at(i, m, a) * delta.d.at(j, m, b);
            rhs += g.c.at(i, m, b) * delta.d.at(j, a, m);
            rhs -= g.c.at(j, m, a) * delta.d.at(i, m, b);
            rhs -= g.c.at(j, m, b) * delta.d.at(i, a, m);
          }
          t.at(i, j, a * n + b) = lhs - rhs;
        }
      }
    }
  }
  return t;
}

/// Jacobi defect J(i,j,l)_k of [e_i,[e_j,e_l]] + [e_j,[e_l,e_i]] +
/// [e_l,[e_i,e_j]] through coordinate brackets.
inline bool jacobi_holds(const LieAlgebra& g) {
  const int n = g.dim;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        const std::vector<Rat> ei = basis_vec(n, i);
        const std::vector<Rat> ej = basis_vec(n, j);
        const std::vector<Rat> el = basis_vec(n, l);
        std::vector<Rat> sum = g.bracket(ei, g.bracket(ej, el));
        sum = vec_add(sum, g.bracket(ej, g.bracket(el, ei)));
        sum = vec_add(sum, g.bracket(el, g.bracket(ei, ej)));
        if (!vec_is_zero(sum)) return false;
      }
    }
  }
  return true;
}

/// Co-Jacobi through the dual route: transpose the cobracket into
/// structure constants on the dual space and test Jacobi there.
inline bool cojacobi_holds(const Cobracket& delta) {
  const int n = delta.dim;
  LieAlgebra dual;
  dual.dim = n;
  dual.basis = delta.basis;
  dual.c = Tensor3Q(n, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) dual.c.at(a, b, k) = delta.d.at(k, a, b);
  // co-antisymmetry must hold for the dual bracket to make sense
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k)
        if (dual.c.at(a, b, k) != -dual.c.at(b, a, k)) return false;
  return jacobi_holds(dual);
}

/// The concomitant C(Delta,N)(i,j,a,b) written out as scalar sums:
///   iota_phi(P) = phi^T P + P phi,  ad*_i(a,b) = -c(i,a,b),
///   entry = [iota_{N^T ad*_i} D_j - iota_{N^T ad*_j} D_i
///            - iota_{ad*_i} D_{Ne_j} + iota_{ad*_j} D_{Ne_i}](a,b).
inline Tensor4Q concomitant(const Bialgebra& bia, const MatrixQ& N) {
  const LieAlgebra& g = bia.g;
  const int n = g.dim;
  const auto adstar = [&](int i, int a, int b) -> Rat { return -g.c.at(i, a, b); };
  const auto D = [&](int k, int a, int b) -> Rat { return bia.delta.d.at(k, a, b); };
  // phi = N^T ad*_i : phi(a,b) = sum_m N(m,a) * ad*_i(m,b)
  const auto phiN = [&](int i, int a, int b) -> Rat {
    Rat s = 0;
    for (int m = 0; m < n; ++m) s += N.at(m, a) * adstar(i, m, b);
    return s;
  };
  // D_{Ne_j}(a,b) = sum_k N(k,j) D_k(a,b)
  const auto DN = [&](int j, int a, int b) -> Rat {
    Rat s = 0;
    for (int k = 0; k < n; ++k) s += N.at(k, j) * D(k, a, b);
    return s;
  };
  Tensor4Q t(n, n, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          Rat val = 0;
          for (int m = 0; m < n; ++m) {
            // iota_{phiN(i)} D_j = phiN^T D_j + D_j phiN
            val += phiN(i, m, a) * D(j, m, b) + D(j, a, m) * phiN(i, m, b);
            val -= phiN(j, m, a) * D(i, m, b) + D(i, a, m) * phiN(j, m, b);
            // iota_{ad*_i} D_{Ne_j}
            val -= adstar(i, m, a) * DN(j, m, b) + DN(j, a, m) * adstar(i, m, b);
            val += adstar(j, m, a) * DN(i, m, b) + DN(i, a, m) * adstar(j, m, b);
          }
          t.at(i, j, a, b) = val;
        }
      }
    }
  }
  return t;
}

} // namespace enl::oracle

#endif
