#include "enl/prelie.hpp"

#include <set>
#include <tuple>
#include <utility>

namespace enl {

namespace {

std::vector<Rat> column(const MatrixQ& m, int j) {
  std::vector<Rat> v(m.rows());
  for (int i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

Witness pair_witness(const std::vector<std::string>& names, int i, int j,
                     const std::vector<Rat>& lhs,
                     const std::vector<Rat>& rhs) {
  Witness w;
  w.indices = {i, j};
  w.names = {names[i], names[j]};
  w.lhs = lincomb_str(lhs, names);
  w.rhs = lincomb_str(rhs, names);
  return w;
}

void require_operator_shape(const PreLieAlgebra& p, const MatrixQ& m) {
  if (m.rows() != p.dim || m.cols() != p.dim) {
    throw EnlError(ErrorKind::ShapeMismatch,
                   "operator shape does not match algebra");
  }
}

} // namespace

std::vector<Rat> PreLieAlgebra::product(const std::vector<Rat>& x,
                                        const std::vector<Rat>& y) const {
  std::vector<Rat> out(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      const Rat xy = x[i] * y[j];
      for (int k = 0; k < dim; ++k) {
        if (m.at(i, j, k) != 0) out[k] += xy * m.at(i, j, k);
      }
    }
  }
  return out;
}

MatrixQ PreLieAlgebra::L(int i) const {
  MatrixQ out(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) out.at(k, j) = m.at(i, j, k);
  return out;
}

PreLieAlgebra make_prelie(int dim, std::vector<std::string> names,
                          const std::vector<SparseEntry>& entries) {
  if (dim < 0) throw EnlError(ErrorKind::ValidationError, "negative dim");
  PreLieAlgebra p;
  p.dim = dim;
  if (names.empty()) {
    for (int i = 1; i <= dim; ++i) p.basis.push_back("e" + std::to_string(i));
  } else if (static_cast<int>(names.size()) != dim) {
    throw EnlError(ErrorKind::ShapeMismatch,
                   "basis name count does not match dim");
  } else {
    p.basis = std::move(names);
  }
  p.m = Tensor3Q(dim, dim, dim);
  std::set<std::tuple<int, int, int>> seen;
  for (const SparseEntry& e : entries) {
    if (e.a < 0 || e.a >= dim || e.b < 0 || e.b >= dim || e.c < 0 ||
        e.c >= dim) {
      throw EnlError(ErrorKind::ValidationError,
                     "product entry index out of range");
    }
    if (!seen.insert({e.a, e.b, e.c}).second) {
      throw EnlError(ErrorKind::ValidationError,
                     "duplicate product entry");
    }
    p.m.at(e.a, e.b, e.c) = e.value;
  }
  return p;
}

Verdict check_prelie(const PreLieAlgebra& p) {
  if (p.m.d0() != p.dim || p.m.d1() != p.dim || p.m.d2() != p.dim) {
    throw EnlError(ErrorKind::ShapeMismatch,
                   "product tensor shape does not match dim");
  }
  const int n = p.dim;
  const auto assoc = [&](int i, int j, int l, int k) {
    Rat value = 0;
    for (int q = 0; q < n; ++q) {
      value += p.m.at(i, j, q) * p.m.at(q, l, k);
      value -= p.m.at(j, l, q) * p.m.at(i, q, k);
    }
    return value;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        for (int k = 0; k < n; ++k) {
          const Rat lhs = assoc(i, j, l, k);
          const Rat rhs = assoc(j, i, l, k);
          if (lhs != rhs) {
            Witness w;
            w.indices = {i, j, l, k};
            w.names = {p.basis[i], p.basis[j], p.basis[l]};
            w.lhs = rat_str(lhs);
            w.rhs = rat_str(rhs);
            return Verdict::fail("associator_symmetry", std::move(w));
          }
        }
      }
    }
  }
  return Verdict::ok();
}

LieAlgebra subadjacent(const PreLieAlgebra& p) {
  LieAlgebra g;
  g.dim = p.dim;
  g.basis = p.basis;
  g.c = Tensor3Q(p.dim, p.dim, p.dim);
  for (int i = 0; i < p.dim; ++i)
    for (int j = 0; j < p.dim; ++j)
      for (int k = 0; k < p.dim; ++k)
        g.c.at(i, j, k) = p.m.at(i, j, k) - p.m.at(j, i, k);
  return g;
}

Verdict check_pre_enl(const PreLieAlgebra& p, const MatrixQ& E,
                      PreENLMode mode) {
  require_operator_shape(p, E);
  if (!check_prelie(p)) {
    throw EnlError(ErrorKind::PrereqFailed, "not a pre-Lie algebra");
  }
  const int n = p.dim;
  if (mode == PreENLMode::weak) {
    const LieAlgebra g = subadjacent(p);
    for (int i = 0; i < n; ++i) {
      const std::vector<Rat> ei = basis_vec(n, i);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const std::vector<Rat> lhs = E.apply(g.bracket(ei, basis_vec(n, j)));
        const std::vector<Rat> rhs = g.bracket(ei, column(E, j));
        if (lhs != rhs) {
          return Verdict::fail("weak", pair_witness(p.basis, i, j, lhs, rhs));
        }
      }
    }
    return Verdict::ok();
  }
  for (int i = 0; i < n; ++i) {
    const std::vector<Rat> ei = basis_vec(n, i);
    const std::vector<Rat> Ei = column(E, i);
    for (int j = 0; j < n; ++j) {
      const std::vector<Rat> ej = basis_vec(n, j);
      const std::vector<Rat> lhs = E.apply(p.product(ei, ej));
      const std::vector<Rat> left = p.product(Ei, ej);
      if (lhs != left) {
        return Verdict::fail("strong", pair_witness(p.basis, i, j, lhs, left));
      }
      const std::vector<Rat> right = p.product(ei, column(E, j));
      if (lhs != right) {
        return Verdict::fail("strong",
                             pair_witness(p.basis, i, j, lhs, right));
      }
    }
  }
  return Verdict::ok();
}

std::vector<MatrixQ> prelie_strong_basis(const PreLieAlgebra& p) {
  const int n = p.dim;
  const int unknowns = n * n;
  std::vector<std::vector<Rat>> rows;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        // E{e_i,e_j} - {Ee_i,e_j} = 0, component k.
        std::vector<Rat> rowA(unknowns);
        for (int q = 0; q < n; ++q) {
          rowA[k * n + q] += p.m.at(i, j, q);
          rowA[q * n + i] -= p.m.at(q, j, k);
        }
        rows.push_back(std::move(rowA));
        // E{e_i,e_j} - {e_i,Ee_j} = 0, component k.
        std::vector<Rat> rowB(unknowns);
        for (int q = 0; q < n; ++q) {
          rowB[k * n + q] += p.m.at(i, j, q);
          rowB[q * n + j] -= p.m.at(i, q, k);
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

namespace {

Representation left_multiplication_rep(const PreLieAlgebra& p,
                                       const LieAlgebra& sub,
                                       const MatrixQ& E) {
  Representation rep;
  rep.algebra = sub;
  rep.dimW = p.dim;
  rep.wbasis = p.basis;
  rep.rho.reserve(p.dim);
  for (int i = 0; i < p.dim; ++i) rep.rho.push_back(p.L(i));
  rep.T = E;
  return rep;
}

} // namespace

SubadjacentENL subadjacent_enl(const PreLieAlgebra& p, const MatrixQ& E) {
  require_operator_shape(p, E);
  if (!check_prelie(p)) {
    throw EnlError(ErrorKind::PrereqFailed, "not a pre-Lie algebra");
  }
  if (!check_pre_enl(p, E, PreENLMode::strong)) {
    throw EnlError(ErrorKind::PrereqFailed,
                   "operator is not strongly compatible");
  }
  SubadjacentENL out;
  out.g = subadjacent(p);
  out.L = left_multiplication_rep(p, out.g, E);
  RelativeRB rb;
  rb.rep = out.L;
  rb.K = MatrixQ::identity(p.dim);
  out.relrb = check_relative_rb(rb, E, RelRBLevel::en);
  return out;
}

PreLieTorsion prelie_nijenhuis(const PreLieAlgebra& p, const MatrixQ& N) {
  require_operator_shape(p, N);
  const int n = p.dim;
  PreLieTorsion out;
  out.torsion = Tensor3Q(n, n, n);
  Tensor3Q deformed(n, n, n);
  for (int i = 0; i < n; ++i) {
    const std::vector<Rat> ei = basis_vec(n, i);
    const std::vector<Rat> Ni = column(N, i);
    for (int j = 0; j < n; ++j) {
      const std::vector<Rat> ej = basis_vec(n, j);
      const std::vector<Rat> Nj = column(N, j);
      std::vector<Rat> inner = vec_add(p.product(Ni, ej), p.product(ei, Nj));
      inner = vec_sub(inner, N.apply(p.product(ei, ej)));
      const std::vector<Rat> torsion =
          vec_sub(p.product(Ni, Nj), N.apply(inner));
      for (int k = 0; k < n; ++k) {
        out.torsion.at(i, j, k) = torsion[k];
        deformed.at(i, j, k) = inner[k];
      }
    }
  }
  if (out.torsion.is_zero()) {
    PreLieAlgebra d;
    d.dim = n;
    d.basis = p.basis;
    d.m = std::move(deformed);
    out.deformed = std::move(d);
  }
  return out;
}

PreLieAlgebra prelie_from_relrb(const RelativeRB& rb, const MatrixQ& E) {
  const Verdict en = check_relative_rb(rb, E, RelRBLevel::en);
  if (!en) {
    throw EnlError(ErrorKind::PrereqFailed,
                   "not a relative Rota-Baxter operator: " + en.code);
  }
  const int m = rb.rep.dimW;
  PreLieAlgebra p;
  p.dim = m;
  p.basis = rb.rep.wbasis;
  p.m = Tensor3Q(m, m, m);
  for (int a = 0; a < m; ++a) {
    const MatrixQ rhoKa = rb.rep.rho_vec(column(rb.K, a));
    for (int b = 0; b < m; ++b)
      for (int k = 0; k < m; ++k) p.m.at(a, b, k) = rhoKa.at(k, b);
  }
  return p;
}

PreLieAlgebra prelie_transport(const RelativeRB& rb, const MatrixQ& E) {
  const Verdict en = check_relative_rb(rb, E, RelRBLevel::en);
  if (!en) {
    throw EnlError(ErrorKind::PrereqFailed,
                   "not a relative Rota-Baxter operator: " + en.code);
  }
  if (rb.K.rows() != rb.K.cols()) {
    throw EnlError(ErrorKind::ShapeMismatch,
                   "transport requires a square K");
  }
  const MatrixQ kinv = invert(rb.K);
  const LieAlgebra& g = rb.rep.algebra;
  const int n = g.dim;
  PreLieAlgebra p;
  p.dim = n;
  p.basis = g.basis;
  p.m = Tensor3Q(n, n, n);
  for (int i = 0; i < n; ++i) {
    const MatrixQ op = rb.K * rb.rep.rho[i] * kinv;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) p.m.at(i, j, k) = op.at(k, j);
  }
  return p;
}

CanonicalR canonical_r_prelie(const PreLieAlgebra& p, const MatrixQ& E) {
  require_operator_shape(p, E);
  if (!check_prelie(p)) {
    throw EnlError(ErrorKind::PrereqFailed, "not a pre-Lie algebra");
  }
  if (!check_pre_enl(p, E, PreENLMode::strong)) {
    throw EnlError(ErrorKind::PrereqFailed,
                   "operator is not strongly compatible");
  }
  const LieAlgebra sub = subadjacent(p);
  RelativeRB rb;
  rb.rep = left_multiplication_rep(p, sub, E);
  rb.K = MatrixQ::identity(p.dim);
  const LiftResult lift = lift_r_from_relrb(rb, E);
  CanonicalR out;
  out.dbl = lift.dbl;
  out.Ehat = lift.Ehat;
  out.r = lift.rK;
  out.verdict = lift.verdict;
  return out;
}

} // namespace enl
