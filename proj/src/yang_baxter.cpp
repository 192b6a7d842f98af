#include "enl/yang_baxter.hpp"

#include <utility>

namespace enl {

namespace {

std::vector<Rat> column(const MatrixQ& m, int j) {
  std::vector<Rat> v(m.rows());
  for (int i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

Witness entry_witness(const std::vector<std::string>& names,
                      const std::vector<int>& indices, const Rat& lhs,
                      const Rat& rhs) {
  Witness w;
  w.indices = indices;
  for (int i : indices) w.names.push_back(names[i]);
  w.lhs = rat_str(lhs);
  w.rhs = rat_str(rhs);
  return w;
}

Witness matrix_entry_witness(const std::vector<std::string>& names, int who,
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

void require_square_on(const LieAlgebra& g, const MatrixQ& m,
                       const char* what) {
  if (m.rows() != g.dim || m.cols() != g.dim) {
    throw EnlError(ErrorKind::ShapeMismatch, what);
  }
}

/// First failing position of lhs == rhs as matrices, reported as a verdict.
Verdict matrices_equal(const std::vector<std::string>& names,
                       const std::string& code, const MatrixQ& lhs,
                       const MatrixQ& rhs) {
  for (int i = 0; i < lhs.rows(); ++i) {
    for (int j = 0; j < lhs.cols(); ++j) {
      if (lhs.at(i, j) != rhs.at(i, j)) {
        Witness w;
        w.indices = {i, j};
        if (i < static_cast<int>(names.size()) &&
            j < static_cast<int>(names.size())) {
          w.names = {names[i], names[j]};
        }
        w.lhs = rat_str(lhs.at(i, j));
        w.rhs = rat_str(rhs.at(i, j));
        return Verdict::fail(code, std::move(w));
      }
    }
  }
  return Verdict::ok();
}

} // namespace

Tensor3Q schouten(const LieAlgebra& g, const MatrixQ& r) {
  require_square_on(g, r, "r-matrix shape does not match algebra");
  const int n = g.dim;
  Tensor3Q t(n, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (g.c.at(i, j, k) == 0) continue;
        const Rat& cijk = g.c.at(i, j, k);
        for (int b = 0; b < n; ++b) {
          for (int c = 0; c < n; ++c) {
            // [r12,r13]^{kbc} += r^{ib} r^{jc} c_{ij}^k
            t.at(k, b, c) += r.at(i, b) * r.at(j, c) * cijk;
            // [r12,r23]^{bkc} += r^{bi} r^{jc} c_{ij}^k
            t.at(b, k, c) += r.at(b, i) * r.at(j, c) * cijk;
            // [r13,r23]^{bck} += r^{bi} r^{cj} c_{ij}^k
            t.at(b, c, k) += r.at(b, i) * r.at(c, j) * cijk;
          }
        }
      }
    }
  }
  return t;
}

Verdict check_en_rmatrix(const LieAlgebra& g, const MatrixQ& r,
                         const MatrixQ& E) {
  require_square_on(g, r, "r-matrix shape does not match algebra");
  require_square_on(g, E, "operator shape does not match algebra");
  if (!check_equivariant(g, E)) {
    throw EnlError(ErrorKind::PrereqFailed,
                   "operator is not equivariant on g");
  }
  const Tensor3Q s = schouten(g, r);
  for (int a = 0; a < g.dim; ++a) {
    for (int b = 0; b < g.dim; ++b) {
      for (int c = 0; c < g.dim; ++c) {
        if (s.at(a, b, c) != 0) {
          return Verdict::fail(
              "schouten",
              entry_witness(g.basis, {a, b, c}, s.at(a, b, c), Rat(0)));
        }
      }
    }
  }
  return matrices_equal(g.basis, "en_condition", E * r, r * E.transpose());
}

Verdict check_en_rmatrix_weak(const LieAlgebra& g, const MatrixQ& r,
                              const MatrixQ& E) {
  require_square_on(g, r, "r-matrix shape does not match algebra");
  require_square_on(g, E, "operator shape does not match algebra");
  for (int i = 0; i < g.dim; ++i) {
    const MatrixQ adE = g.ad_vec(column(E, i));
    const MatrixQ adi = g.ad(i);
    const MatrixQ lhs = adE * r + r * adE.transpose();
    const MatrixQ rhs = E * (adi * r + r * adi.transpose());
    if (lhs != rhs) {
      return Verdict::fail("weak_en",
                           matrix_entry_witness(g.basis, i, lhs, rhs));
    }
  }
  return Verdict::ok();
}

Cobracket cobracket_from_r(const LieAlgebra& g, const MatrixQ& r) {
  require_square_on(g, r, "r-matrix shape does not match algebra");
  const int n = g.dim;
  const MatrixQ sym = r + r.transpose();
  for (int i = 0; i < n; ++i) {
    const MatrixQ adi = g.ad(i);
    if (!(adi * sym + sym * adi.transpose()).is_zero()) {
      throw EnlError(ErrorKind::SymmetricPartNotInvariant,
                     "symmetric part of r is not ad-invariant");
    }
  }
  Cobracket delta;
  delta.dim = n;
  delta.basis = g.basis;
  delta.d = Tensor3Q(n, n, n);
  for (int k = 0; k < n; ++k) {
    const MatrixQ adk = g.ad(k);
    const MatrixQ dk = adk * r + r * adk.transpose();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) delta.d.at(k, i, j) = dk.at(i, j);
  }
  return delta;
}

DualBracketReport dual_bracket_from_r(const LieAlgebra& g, const MatrixQ& r) {
  require_square_on(g, r, "r-matrix shape does not match algebra");
  if (!schouten(g, r).is_zero()) {
    throw EnlError(ErrorKind::PrereqFailed,
                   "r does not satisfy the classical Yang-Baxter equation");
  }
  const int n = g.dim;
  const MatrixQ sym = r + r.transpose();
  for (int i = 0; i < n; ++i) {
    const MatrixQ adi = g.ad(i);
    if (!(adi * sym + sym * adi.transpose()).is_zero()) {
      throw EnlError(ErrorKind::PrereqFailed,
                     "symmetric part of r is not ad-invariant");
    }
  }
  DualBracketReport out;
  out.gstar.dim = n;
  out.gstar.basis.reserve(n);
  for (const std::string& name : g.basis) out.gstar.basis.push_back(name + "*");
  out.gstar.c = Tensor3Q(n, n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int k = 0; k < n; ++k) {
        Rat value = 0;
        for (int j = 0; j < n; ++j) {
          value -= r.at(a, j) * g.c.at(j, k, b) + r.at(j, b) * g.c.at(j, k, a);
        }
        out.gstar.c.at(a, b, k) = value;
      }
    }
  }
  if (det(sym) == 0) {
    Witness w;
    w.lhs = "det(I) = 0";
    w.rhs = "nonzero";
    out.factorizable = Verdict::fail("nondegenerate", std::move(w));
    return out;
  }
  for (int i = 0; i < n; ++i) {
    const MatrixQ adi = g.ad(i);
    const MatrixQ lhs = sym * (-adi.transpose());
    const MatrixQ rhs = adi * sym;
    if (lhs != rhs) {
      out.factorizable = Verdict::fail(
          "intertwining", matrix_entry_witness(g.basis, i, lhs, rhs));
      return out;
    }
  }
  out.factorizable = Verdict::ok();
  return out;
}

MatrixQ rb_to_rmatrix(const QuadraticENLRB& input) {
  const Verdict v = check_enl_rb(input);
  if (!v) {
    throw EnlError(ErrorKind::PrereqFailed,
                   "not a quadratic Rota-Baxter structure: " + v.code);
  }
  const int n = input.g.dim;
  MatrixQ shifted = input.B.transpose();
  for (int i = 0; i < n; ++i) shifted.at(i, i) += input.lambda;
  const Rat inv_lambda = Rat(1) / input.lambda;
  return inv_lambda * (invert(input.S) * shifted);
}

namespace {

void require_relrb_shapes(const RelativeRB& rb) {
  if (rb.K.rows() != rb.rep.algebra.dim || rb.K.cols() != rb.rep.dimW) {
    throw EnlError(ErrorKind::ShapeMismatch,
                   "K must map the module space into the algebra");
  }
}

} // namespace

Verdict check_relative_rb(const RelativeRB& rb, const MatrixQ& E,
                          RelRBLevel level) {
  require_relrb_shapes(rb);
  if (!check_representation(rb.rep)) {
    throw EnlError(ErrorKind::PrereqFailed, "rho is not a representation");
  }
  if (level == RelRBLevel::en) {
    if (!rb.rep.T) {
      throw EnlError(ErrorKind::MissingT,
                     "en level requires the representation operator T");
    }
    if (E.rows() != rb.rep.algebra.dim || E.cols() != rb.rep.algebra.dim) {
      throw EnlError(ErrorKind::ShapeMismatch,
                     "operator shape does not match algebra");
    }
    if (!check_equivariant(rb.rep.algebra, E)) {
      throw EnlError(ErrorKind::PrereqFailed,
                     "operator is not equivariant on g");
    }
  }
  const LieAlgebra& g = rb.rep.algebra;
  const int m = rb.rep.dimW;
  for (int a = 0; a < m; ++a) {
    const std::vector<Rat> Ka = column(rb.K, a);
    const MatrixQ rhoKa = rb.rep.rho_vec(Ka);
    for (int b = 0; b < m; ++b) {
      const std::vector<Rat> Kb = column(rb.K, b);
      const std::vector<Rat> lhs = g.bracket(Ka, Kb);
      const std::vector<Rat> inner =
          vec_sub(column(rhoKa, b), column(rb.rep.rho_vec(Kb), a));
      const std::vector<Rat> rhs = rb.K.apply(inner);
      if (lhs != rhs) {
        Witness w;
        w.indices = {a, b};
        w.names = {rb.rep.wbasis[a], rb.rep.wbasis[b]};
        w.lhs = lincomb_str(lhs, g.basis);
        w.rhs = lincomb_str(rhs, g.basis);
        return Verdict::fail("o_operator", std::move(w));
      }
    }
  }
  if (level == RelRBLevel::en) {
    const Verdict compat =
        matrices_equal(g.basis, "en_compat", E * rb.K, rb.K * *rb.rep.T);
    if (!compat) return compat;
  }
  return Verdict::ok();
}

DescendentENL descendent_enl(const RelativeRB& rb, const MatrixQ& E) {
  const Verdict en = check_relative_rb(rb, E, RelRBLevel::en);
  if (!en) {
    throw EnlError(ErrorKind::PrereqFailed,
                   "not a relative Rota-Baxter operator: " + en.code);
  }
  const LieAlgebra& g = rb.rep.algebra;
  const int m = rb.rep.dimW;
  DescendentENL out;
  out.W.dim = m;
  out.W.basis = rb.rep.wbasis;
  out.W.c = Tensor3Q(m, m, m);
  for (int a = 0; a < m; ++a) {
    const MatrixQ rhoKa = rb.rep.rho_vec(column(rb.K, a));
    for (int b = 0; b < m; ++b) {
      const std::vector<Rat> value =
          vec_sub(column(rhoKa, b), column(rb.rep.rho_vec(column(rb.K, b)), a));
      for (int k = 0; k < m; ++k) out.W.c.at(a, b, k) = value[k];
    }
  }
  out.T = *rb.rep.T;
  out.hom = Verdict::ok();
  for (int a = 0; a < m && out.hom.pass; ++a) {
    for (int b = 0; b < m; ++b) {
      std::vector<Rat> kv(m);
      for (int k = 0; k < m; ++k) kv[k] = out.W.c.at(a, b, k);
      const std::vector<Rat> lhs = rb.K.apply(kv);
      const std::vector<Rat> rhs =
          g.bracket(column(rb.K, a), column(rb.K, b));
      if (lhs != rhs) {
        Witness w;
        w.indices = {a, b};
        w.names = {rb.rep.wbasis[a], rb.rep.wbasis[b]};
        w.lhs = lincomb_str(lhs, g.basis);
        w.rhs = lincomb_str(rhs, g.basis);
        out.hom = Verdict::fail("hom", std::move(w));
        break;
      }
    }
  }
  if (out.hom) {
    out.hom = matrices_equal(g.basis, "en_compat", E * rb.K, rb.K * out.T);
  }
  return out;
}

MatchedPair matched_pair_from_relrb(const RelativeRB& rb, const MatrixQ& E) {
  const Verdict en = check_relative_rb(rb, E, RelRBLevel::en);
  if (!en) {
    throw EnlError(ErrorKind::PrereqFailed,
                   "not a relative Rota-Baxter operator: " + en.code);
  }
  const DescendentENL desc = descendent_enl(rb, E);
  const LieAlgebra& g = rb.rep.algebra;
  const int n = g.dim;
  const int m = rb.rep.dimW;
  MatchedPair mp;
  mp.g = g;
  mp.h = desc.W;
  mp.rho = rb.rep.rho;
  mp.mu.reserve(m);
  for (int a = 0; a < m; ++a) {
    // mu(u)x = K(rho(x)u) - [x, Ku].
    MatrixQ mu(n, n);
    const std::vector<Rat> Ka = column(rb.K, a);
    for (int i = 0; i < n; ++i) {
      const std::vector<Rat> img = vec_sub(
          rb.K.apply(column(rb.rep.rho[i], a)),
          g.bracket(basis_vec(n, i), Ka));
      for (int k = 0; k < n; ++k) mu.at(k, i) = img[k];
    }
    mp.mu.push_back(std::move(mu));
  }
  mp.Eg = E;
  mp.Eh = desc.T;
  return mp;
}

LiftResult lift_r_from_relrb(const RelativeRB& rb, const MatrixQ& E) {
  const Verdict en = check_relative_rb(rb, E, RelRBLevel::en);
  if (!en) {
    throw EnlError(ErrorKind::PrereqFailed,
                   "not a relative Rota-Baxter operator: " + en.code);
  }
  const int n = rb.rep.algebra.dim;
  const int m = rb.rep.dimW;
  LiftResult out;
  out.dbl = semidirect_raw(dual_representation(rb.rep));
  out.Ehat = MatrixQ(n + m, n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.Ehat.at(i, j) = E.at(i, j);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) out.Ehat.at(n + a, n + b) = rb.rep.T->at(b, a);
  out.rK = MatrixQ(n + m, n + m);
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < m; ++a) {
      out.rK.at(i, n + a) = rb.K.at(i, a);
      out.rK.at(n + a, i) = -rb.K.at(i, a);
    }
  }
  if (!schouten(out.dbl, out.rK).is_zero()) {
    out.verdict = Verdict::fail("schouten");
  } else {
    out.verdict = matrices_equal(out.dbl.basis, "en_condition",
                                 out.Ehat * out.rK,
                                 out.rK * out.Ehat.transpose());
  }
  return out;
}

CorrespondenceResult coadjoint_correspondence(const LieAlgebra& g,
                                              const MatrixQ& E,
                                              const MatrixQ& S,
                                              const MatrixQ& K_or_B,
                                              CoadjointDirection direction) {
  require_square_on(g, E, "operator shape does not match algebra");
  require_square_on(g, S, "form shape does not match algebra");
  require_square_on(g, K_or_B, "map shape does not match algebra");
  const Verdict quad = quadratic_enl_clauses(g, E, S);
  if (!quad) {
    throw EnlError(ErrorKind::PrereqFailed,
                   "(g, E, S) is not quadratic: " + quad.code);
  }
  CorrespondenceResult out;
  MatrixQ K(g.dim, g.dim), B(g.dim, g.dim);
  if (direction == CoadjointDirection::K_to_B) {
    K = K_or_B;
    B = K * S;
    out.out = B;
  } else {
    B = K_or_B;
    K = B * invert(S);
    out.out = K;
  }
  RelativeRB relrb;
  relrb.rep = coadjoint_rep(g);
  relrb.rep.T = E.transpose();
  relrb.K = K;
  const bool k_side = static_cast<bool>(
      check_relative_rb(relrb, E, RelRBLevel::en));
  const bool b_side = static_cast<bool>(check_rota_baxter(g, B, Rat(0))) &&
                      E * B == B * E;
  if (k_side == b_side) {
    out.verdict = Verdict::ok();
  } else {
    Witness w;
    w.lhs = k_side ? "relative check passes" : "relative check fails";
    w.rhs = b_side ? "Rota-Baxter check passes" : "Rota-Baxter check fails";
    out.verdict = Verdict::fail("mismatch", std::move(w));
  }
  return out;
}

} // namespace enl
