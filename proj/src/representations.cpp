#include "enl/representations.hpp"

#include "enl/operators.hpp"

#include <set>
#include <utility>

namespace enl {

namespace {

std::vector<Rat> column(const MatrixQ& m, int j) {
  std::vector<Rat> v(m.rows());
  for (int i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

Witness matrix_witness(const std::vector<std::string>& names, int who,
                       const MatrixQ& lhs, const MatrixQ& rhs) {
  Witness w;
  w.indices = {who};
  w.names = {names[who]};
  for (int a = 0; a < lhs.rows(); ++a) {
    for (int b = 0; b < lhs.cols(); ++b) {
      if (lhs.at(a, b) != rhs.at(a, b)) {
        w.indices.push_back(a);
        w.indices.push_back(b);
        w.lhs = rat_str(lhs.at(a, b));
        w.rhs = rat_str(rhs.at(a, b));
        return w;
      }
    }
  }
  w.lhs = "0";
  w.rhs = "0";
  return w;
}

void require_rep_shape(const Representation& rep) {
  if (static_cast<int>(rep.rho.size()) != rep.algebra.dim) {
    throw EnlError(ErrorKind::ShapeMismatch,
                   "representation has wrong number of action matrices");
  }
  for (const MatrixQ& m : rep.rho) {
    if (m.rows() != rep.dimW || m.cols() != rep.dimW) {
      throw EnlError(ErrorKind::ShapeMismatch,
                     "action matrix shape does not match module dimension");
    }
  }
  if (rep.T && (rep.T->rows() != rep.dimW || rep.T->cols() != rep.dimW)) {
    throw EnlError(ErrorKind::ShapeMismatch,
                   "T shape does not match module dimension");
  }
}

} // namespace

MatrixQ Representation::rho_vec(const std::vector<Rat>& x) const {
  MatrixQ out(dimW, dimW);
  for (int i = 0; i < algebra.dim; ++i) {
    if (x[i] == 0) continue;
    out = out + x[i] * rho[i];
  }
  return out;
}

Verdict check_representation(const Representation& rep) {
  require_rep_shape(rep);
  const int n = rep.algebra.dim;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<Rat> bij(n);
      for (int k = 0; k < n; ++k) bij[k] = rep.algebra.c.at(i, j, k);
      const MatrixQ lhs = rep.rho_vec(bij);
      const MatrixQ rhs = rep.rho[i] * rep.rho[j] - rep.rho[j] * rep.rho[i];
      if (lhs != rhs) {
        Witness w = matrix_witness(rep.algebra.basis, i, lhs, rhs);
        w.indices.insert(w.indices.begin() + 1, j);
        w.names.push_back(rep.algebra.basis[j]);
        return Verdict::fail("representation", std::move(w));
      }
    }
  }
  return Verdict::ok();
}

Verdict check_en_representation(const Representation& rep, const MatrixQ& E,
                                ENMode mode) {
  require_rep_shape(rep);
  if (!rep.T) {
    throw EnlError(ErrorKind::MissingT,
                   "representation carries no operator T");
  }
  if (E.rows() != rep.algebra.dim || E.cols() != rep.algebra.dim) {
    throw EnlError(ErrorKind::ShapeMismatch,
                   "operator shape does not match algebra");
  }
  const Verdict hom = check_representation(rep);
  if (!hom) {
    throw EnlError(ErrorKind::PrereqFailed,
                   "rho is not a representation: " + hom.code);
  }

  const MatrixQ& T = *rep.T;
  const int n = rep.algebra.dim;
  for (int i = 0; i < n; ++i) {
    const MatrixQ rhoEi = rep.rho_vec(column(E, i));
    const MatrixQ& rhoi = rep.rho[i];
    switch (mode) {
      case ENMode::equivariant: {
        const MatrixQ lhs = T * rhoi;
        if (lhs != rhoEi) {
          return Verdict::fail(
              "equivariant", matrix_witness(rep.algebra.basis, i, lhs, rhoEi));
        }
        const MatrixQ rhs = rhoi * T;
        if (lhs != rhs) {
          return Verdict::fail(
              "equivariant", matrix_witness(rep.algebra.basis, i, lhs, rhs));
        }
        break;
      }
      case ENMode::n_compatible: {
        const MatrixQ lhs = T * T * rhoi + rhoEi * T;
        const MatrixQ rhs = T * rhoEi + T * rhoi * T;
        if (lhs != rhs) {
          return Verdict::fail(
              "n_compatible", matrix_witness(rep.algebra.basis, i, lhs, rhs));
        }
        break;
      }
      case ENMode::averaging_compatible: {
        const MatrixQ lhs = T * rhoEi;
        const MatrixQ rhs = rhoEi * T;
        if (lhs != rhs) {
          return Verdict::fail(
              "averaging_compatible",
              matrix_witness(rep.algebra.basis, i, lhs, rhs));
        }
        break;
      }
    }
  }
  return Verdict::ok();
}

Representation dual_representation(const Representation& rep) {
  if (!check_representation(rep)) {
    throw EnlError(ErrorKind::PrereqFailed,
                   "dual of a non-representation requested");
  }
  Representation dual;
  dual.algebra = rep.algebra;
  dual.dimW = rep.dimW;
  dual.wbasis.reserve(rep.dimW);
  for (const std::string& name : rep.wbasis) dual.wbasis.push_back(name + "*");
  dual.rho.reserve(rep.rho.size());
  for (const MatrixQ& m : rep.rho) dual.rho.push_back(-m.transpose());
  if (rep.T) dual.T = rep.T->transpose();
  return dual;
}

Representation adjoint_rep(const LieAlgebra& g) {
  Representation rep;
  rep.algebra = g;
  rep.dimW = g.dim;
  rep.wbasis = g.basis;
  rep.rho.reserve(g.dim);
  for (int i = 0; i < g.dim; ++i) rep.rho.push_back(g.ad(i));
  return rep;
}

Representation coadjoint_rep(const LieAlgebra& g) {
  Representation rep = adjoint_rep(g);
  rep.wbasis.clear();
  for (const std::string& name : g.basis) rep.wbasis.push_back(name + "*");
  for (MatrixQ& m : rep.rho) m = -m.transpose();
  return rep;
}

std::pair<Representation, Representation>
canonical_representations(const LieAlgebra& g) {
  const Verdict lie = check_lie(g);
  if (!lie) {
    throw EnlError(ErrorKind::InvalidAlgebra,
                   "structure constants fail check_lie: " + lie.code);
  }
  return {adjoint_rep(g), coadjoint_rep(g)};
}

LieAlgebra semidirect_raw(const Representation& rep) {
  require_rep_shape(rep);
  const int n = rep.algebra.dim;
  const int m = rep.dimW;
  LieAlgebra out;
  out.dim = n + m;
  out.basis = rep.algebra.basis;
  std::set<std::string> used(out.basis.begin(), out.basis.end());
  for (std::string name : rep.wbasis) {
    while (used.count(name)) name += "'";
    used.insert(name);
    out.basis.push_back(name);
  }
  out.c = Tensor3Q(n + m, n + m, n + m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) out.c.at(i, j, k) = rep.algebra.c.at(i, j, k);
    }
    for (int b = 0; b < m; ++b) {
      for (int a = 0; a < m; ++a) {
        // [e_i, w_b] = rho(e_i) w_b, [w_b, e_i] = -rho(e_i) w_b.
        out.c.at(i, n + b, n + a) = rep.rho[i].at(a, b);
        out.c.at(n + b, i, n + a) = -rep.rho[i].at(a, b);
      }
    }
  }
  return out;
}

std::pair<LieAlgebra, MatrixQ> semidirect_sum(const LieAlgebra& g,
                                              const MatrixQ& E,
                                              const Representation& rep) {
  if (!check_equivariant(g, E)) {
    throw EnlError(ErrorKind::PrereqFailed,
                   "semidirect sum requires an equivariant operator on g");
  }
  const Verdict en = check_en_representation(rep, E, ENMode::equivariant);
  if (!en) {
    throw EnlError(ErrorKind::PrereqFailed,
                   "semidirect sum requires an equivariant representation: " +
                       en.code);
  }
  const LieAlgebra total = semidirect_raw(rep);
  const int n = g.dim;
  const int m = rep.dimW;
  MatrixQ hat(n + m, n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) hat.at(i, j) = E.at(i, j);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) hat.at(n + a, n + b) = rep.T->at(a, b);
  return {total, hat};
}

} // namespace enl
