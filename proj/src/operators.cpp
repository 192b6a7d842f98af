#include "enl/operators.hpp"

#include <utility>

namespace enl {

namespace {

std::vector<Rat> column(const MatrixQ& m, int j) {
  std::vector<Rat> v(m.rows());
  for (int i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

void require_operator_shape(const LieAlgebra& g, const MatrixQ& m,
                            const char* what) {
  if (m.rows() != g.dim || m.cols() != g.dim) {
    throw EnlError(ErrorKind::ShapeMismatch, what);
  }
}

Witness pair_witness(const LieAlgebra& g, int i, int j,
                     const std::vector<Rat>& lhs,
                     const std::vector<Rat>& rhs) {
  Witness w;
  w.indices = {i, j};
  w.names = {g.basis[i], g.basis[j]};
  w.lhs = lincomb_str(lhs, g.basis);
  w.rhs = lincomb_str(rhs, g.basis);
  return w;
}

} // namespace

Tensor3Q nijenhuis_torsion(const LieAlgebra& g, const MatrixQ& N) {
  require_operator_shape(g, N, "operator shape does not match algebra");
  const int n = g.dim;
  Tensor3Q t(n, n, n);
  for (int i = 0; i < n; ++i) {
    const std::vector<Rat> Ni = column(N, i);
    for (int j = 0; j < n; ++j) {
      const std::vector<Rat> Nj = column(N, j);
      const std::vector<Rat> ei = basis_vec(n, i);
      const std::vector<Rat> ej = basis_vec(n, j);
      std::vector<Rat> inner = vec_add(g.bracket(Ni, ej), g.bracket(ei, Nj));
      inner = vec_sub(inner, N.apply(g.bracket(ei, ej)));
      const std::vector<Rat> value =
          vec_sub(g.bracket(Ni, Nj), N.apply(inner));
      for (int k = 0; k < n; ++k) t.at(i, j, k) = value[k];
    }
  }
  return t;
}

Verdict check_equivariant(const LieAlgebra& g, const MatrixQ& E) {
  require_operator_shape(g, E, "operator shape does not match algebra");
  const int n = g.dim;
  for (int i = 0; i < n; ++i) {
    const std::vector<Rat> Ei = column(E, i);
    const std::vector<Rat> ei = basis_vec(n, i);
    for (int j = i + 1; j < n; ++j) {
      const std::vector<Rat> ej = basis_vec(n, j);
      const std::vector<Rat> lhs = E.apply(g.bracket(ei, ej));
      const std::vector<Rat> left = g.bracket(Ei, ej);
      if (lhs != left) {
        return Verdict::fail("not_equivariant", pair_witness(g, i, j, lhs, left));
      }
      const std::vector<Rat> right = g.bracket(ei, column(E, j));
      if (lhs != right) {
        return Verdict::fail("not_equivariant",
                             pair_witness(g, i, j, lhs, right));
      }
    }
  }
  return Verdict::ok();
}

Verdict check_averaging(const LieAlgebra& g, const MatrixQ& P) {
  require_operator_shape(g, P, "operator shape does not match algebra");
  const int n = g.dim;
  for (int i = 0; i < n; ++i) {
    const std::vector<Rat> Pi = column(P, i);
    for (int j = 0; j < n; ++j) {
      const std::vector<Rat> lhs = g.bracket(Pi, column(P, j));
      const std::vector<Rat> rhs = P.apply(g.bracket(Pi, basis_vec(n, j)));
      if (lhs != rhs) {
        return Verdict::fail("not_averaging", pair_witness(g, i, j, lhs, rhs));
      }
    }
  }
  return Verdict::ok();
}

LieAlgebra deformed_bracket(const LieAlgebra& g, const MatrixQ& E,
                            DeformMode mode) {
  require_operator_shape(g, E, "operator shape does not match algebra");
  const int n = g.dim;
  LieAlgebra out;
  out.dim = n;
  out.basis = g.basis;
  out.c = Tensor3Q(n, n, n);
  if (mode == DeformMode::general) {
    if (!nijenhuis_torsion(g, E).is_zero()) {
      throw EnlError(ErrorKind::NotNijenhuis,
                     "nonzero Nijenhuis torsion in general deformation");
    }
    for (int i = 0; i < n; ++i) {
      const std::vector<Rat> Ni = column(E, i);
      const std::vector<Rat> ei = basis_vec(n, i);
      for (int j = 0; j < n; ++j) {
        const std::vector<Rat> ej = basis_vec(n, j);
        std::vector<Rat> value =
            vec_add(g.bracket(Ni, ej), g.bracket(ei, column(E, j)));
        value = vec_sub(value, E.apply(g.bracket(ei, ej)));
        for (int k = 0; k < n; ++k) out.c.at(i, j, k) = value[k];
      }
    }
  } else {
    if (!check_equivariant(g, E)) {
      throw EnlError(ErrorKind::NotEquivariant,
                     "operator not equivariant in equivariant deformation");
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const std::vector<Rat> value =
            g.bracket(column(E, i), basis_vec(n, j));
        for (int k = 0; k < n; ++k) {
          out.c.at(i, j, k) = value[k];
          out.c.at(j, i, k) = -value[k];
        }
      }
    }
  }
  return out;
}

std::vector<std::pair<LieAlgebra, MatrixQ>>
hierarchy(const LieAlgebra& g, const MatrixQ& E, int levels) {
  require_operator_shape(g, E, "operator shape does not match algebra");
  if (!check_equivariant(g, E)) {
    throw EnlError(ErrorKind::NotEquivariant,
                   "operator not equivariant; no hierarchy");
  }
  const int n = g.dim;
  std::vector<std::pair<LieAlgebra, MatrixQ>> out;
  MatrixQ Ek = MatrixQ::identity(n);
  for (int level = 1; level <= levels; ++level) {
    Ek = Ek * E;
    LieAlgebra deformed;
    deformed.dim = n;
    deformed.basis = g.basis;
    deformed.c = Tensor3Q(n, n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const std::vector<Rat> value =
            g.bracket(column(Ek, i), basis_vec(n, j));
        for (int k = 0; k < n; ++k) {
          deformed.c.at(i, j, k) = value[k];
          deformed.c.at(j, i, k) = -value[k];
        }
      }
    }
    out.emplace_back(std::move(deformed), Ek);
  }
  return out;
}

Verdict check_rota_baxter(const LieAlgebra& g, const MatrixQ& B,
                          const Rat& lambda) {
  require_operator_shape(g, B, "operator shape does not match algebra");
  const int n = g.dim;
  for (int i = 0; i < n; ++i) {
    const std::vector<Rat> Bi = column(B, i);
    const std::vector<Rat> ei = basis_vec(n, i);
    for (int j = 0; j < n; ++j) {
      const std::vector<Rat> Bj = column(B, j);
      const std::vector<Rat> ej = basis_vec(n, j);
      const std::vector<Rat> lhs = g.bracket(Bi, Bj);
      std::vector<Rat> inner = vec_add(g.bracket(Bi, ej), g.bracket(ei, Bj));
      inner = vec_add(inner, vec_scale(lambda, g.bracket(ei, ej)));
      const std::vector<Rat> rhs = B.apply(inner);
      if (lhs != rhs) {
        return Verdict::fail("rota_baxter", pair_witness(g, i, j, lhs, rhs));
      }
    }
  }
  return Verdict::ok();
}

LieAlgebra descendent_bracket(const LieAlgebra& g, const MatrixQ& B,
                              const Rat& lambda) {
  if (!check_rota_baxter(g, B, lambda)) {
    throw EnlError(ErrorKind::NotRotaBaxter,
                   "not a Rota-Baxter operator of the given weight");
  }
  const int n = g.dim;
  LieAlgebra out;
  out.dim = n;
  out.basis = g.basis;
  out.c = Tensor3Q(n, n, n);
  for (int i = 0; i < n; ++i) {
    const std::vector<Rat> Bi = column(B, i);
    const std::vector<Rat> ei = basis_vec(n, i);
    for (int j = 0; j < n; ++j) {
      const std::vector<Rat> ej = basis_vec(n, j);
      std::vector<Rat> value =
          vec_add(g.bracket(Bi, ej), g.bracket(ei, column(B, j)));
      value = vec_add(value, vec_scale(lambda, g.bracket(ei, ej)));
      for (int k = 0; k < n; ++k) out.c.at(i, j, k) = value[k];
    }
  }
  return out;
}

Verdict quadratic_enl_clauses(const LieAlgebra& g, const MatrixQ& E,
                              const MatrixQ& S) {
  require_operator_shape(g, E, "operator shape does not match algebra");
  require_operator_shape(g, S, "form shape does not match algebra");
  const Verdict form = check_invariant_form(g, S);
  if (!form) {
    Verdict v = form;
    v.code = "invariant_form:" + form.code;
    return v;
  }
  const Verdict equi = check_equivariant(g, E);
  if (!equi) {
    Verdict v = equi;
    v.code = "equivariance";
    return v;
  }
  const MatrixQ lhs = S * E;
  const MatrixQ rhs = E.transpose() * S;
  if (lhs != rhs) {
    for (int i = 0; i < g.dim; ++i) {
      for (int j = 0; j < g.dim; ++j) {
        if (lhs.at(i, j) != rhs.at(i, j)) {
          Witness w;
          w.indices = {i, j};
          w.names = {g.basis[i], g.basis[j]};
          w.lhs = rat_str(lhs.at(i, j));
          w.rhs = rat_str(rhs.at(i, j));
          return Verdict::fail("s_symmetry", std::move(w));
        }
      }
    }
  }
  return Verdict::ok();
}

Verdict check_quadratic_enl(const LieAlgebra& g, const MatrixQ& E,
                            const MatrixQ& S) {
  const Verdict clauses = quadratic_enl_clauses(g, E, S);
  if (!clauses && clauses.code != "s_symmetry") {
    throw EnlError(ErrorKind::PrereqFailed,
                   "quadratic ENL prerequisite failed: " + clauses.code);
  }
  return clauses;
}

Verdict check_enl_rb(const QuadraticENLRB& input) {
  if (input.lambda == 0) {
    throw EnlError(ErrorKind::ValidationError,
                   "Rota-Baxter weight must be nonzero");
  }
  const LieAlgebra& g = input.g;
  require_operator_shape(g, input.B, "operator shape does not match algebra");

  const Verdict rb = check_rota_baxter(g, input.B, input.lambda);
  if (!rb) return rb;

  // Quadratic compatibility S(Bx,y) + S(x,By) + lambda S(x,y) = 0,
  // componentwise (B^T S + S B + lambda S)(i,j) = 0.
  const MatrixQ compat = input.B.transpose() * input.S + input.S * input.B +
                         input.lambda * input.S;
  for (int i = 0; i < g.dim; ++i) {
    for (int j = 0; j < g.dim; ++j) {
      if (compat.at(i, j) != 0) {
        Witness w;
        w.indices = {i, j};
        w.names = {g.basis[i], g.basis[j]};
        w.lhs = rat_str(compat.at(i, j));
        w.rhs = "0";
        return Verdict::fail("quadratic_compat", std::move(w));
      }
    }
  }

  const Verdict quad = quadratic_enl_clauses(g, input.E, input.S);
  if (!quad) return quad;

  const MatrixQ eb = input.E * input.B;
  const MatrixQ be = input.B * input.E;
  for (int i = 0; i < g.dim; ++i) {
    for (int j = 0; j < g.dim; ++j) {
      if (eb.at(i, j) != be.at(i, j)) {
        Witness w;
        w.indices = {i, j};
        w.names = {g.basis[i], g.basis[j]};
        w.lhs = rat_str(eb.at(i, j));
        w.rhs = rat_str(be.at(i, j));
        return Verdict::fail("commute", std::move(w));
      }
    }
  }
  return Verdict::ok();
}

std::vector<MatrixQ> centroid_basis(const LieAlgebra& g) {
  const int n = g.dim;
  const int unknowns = n * n;
  std::vector<std::vector<Rat>> rows;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        // Form A: sum_m c(i,j,m) E_{km} - sum_m E_{mi} c(m,j,k) = 0.
        std::vector<Rat> rowA(unknowns);
        for (int m = 0; m < n; ++m) {
          rowA[k * n + m] += g.c.at(i, j, m);
          rowA[m * n + i] -= g.c.at(m, j, k);
        }
        rows.push_back(std::move(rowA));
        // Form B: sum_m c(i,j,m) E_{km} - sum_m E_{mj} c(i,m,k) = 0.
        std::vector<Rat> rowB(unknowns);
        for (int m = 0; m < n; ++m) {
          rowB[k * n + m] += g.c.at(i, j, m);
          rowB[m * n + j] -= g.c.at(i, m, k);
        }
        rows.push_back(std::move(rowB));
      }
    }
  }
  MatrixQ system(static_cast<int>(rows.size()), unknowns);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (int cidx = 0; cidx < unknowns; ++cidx)
      system.at(r, cidx) = rows[r][cidx];

  std::vector<MatrixQ> basis;
  for (const std::vector<Rat>& v : kernel_basis(system)) {
    MatrixQ E(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) E.at(i, j) = v[i * n + j];
    basis.push_back(std::move(E));
  }
  return basis;
}

MatrixQ operator_inverse(const LieAlgebra& g, const MatrixQ& E) {
  if (!check_equivariant(g, E)) {
    throw EnlError(ErrorKind::NotEquivariant, "operator not equivariant");
  }
  return invert(E);
}

} // namespace enl
