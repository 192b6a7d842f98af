#include "enl/doubles.hpp"

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

/// rho extended linearly to a coefficient vector: sum_i x_i rho[i].
MatrixQ action_of(const std::vector<MatrixQ>& rho, const std::vector<Rat>& x) {
  MatrixQ out(rho.front().rows(), rho.front().cols());
  for (size_t i = 0; i < rho.size(); ++i) {
    if (x[i] == 0) continue;
    out = out + x[i] * rho[i];
  }
  return out;
}

Representation as_representation(const LieAlgebra& actor,
                                 const LieAlgebra& space,
                                 const std::vector<MatrixQ>& action) {
  Representation rep;
  rep.algebra = actor;
  rep.dimW = space.dim;
  rep.wbasis = space.basis;
  rep.rho = action;
  return rep;
}

void require_mp_shapes(const MatchedPair& mp) {
  if (static_cast<int>(mp.rho.size()) != mp.g.dim ||
      static_cast<int>(mp.mu.size()) != mp.h.dim) {
    throw EnlError(ErrorKind::ShapeMismatch,
                   "matched pair action count does not match algebra size");
  }
  for (const MatrixQ& m : mp.rho) {
    if (m.rows() != mp.h.dim || m.cols() != mp.h.dim) {
      throw EnlError(ErrorKind::ShapeMismatch, "rho matrix shape");
    }
  }
  for (const MatrixQ& m : mp.mu) {
    if (m.rows() != mp.g.dim || m.cols() != mp.g.dim) {
      throw EnlError(ErrorKind::ShapeMismatch, "mu matrix shape");
    }
  }
  if (mp.Eg && (mp.Eg->rows() != mp.g.dim || mp.Eg->cols() != mp.g.dim)) {
    throw EnlError(ErrorKind::ShapeMismatch, "Eg shape");
  }
  if (mp.Eh && (mp.Eh->rows() != mp.h.dim || mp.Eh->cols() != mp.h.dim)) {
    throw EnlError(ErrorKind::ShapeMismatch, "Eh shape");
  }
}

Witness triple_witness(const std::vector<std::string>& n0, int i0,
                       const std::vector<std::string>& n1, int i1,
                       const std::vector<std::string>& n2, int i2,
                       const std::vector<Rat>& lhs, const std::vector<Rat>& rhs,
                       const std::vector<std::string>& value_names) {
  Witness w;
  w.indices = {i0, i1, i2};
  w.names = {n0[i0], n1[i1], n2[i2]};
  w.lhs = lincomb_str(lhs, value_names);
  w.rhs = lincomb_str(rhs, value_names);
  return w;
}

Witness entry_witness(const std::vector<std::string>& names, int who,
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

std::vector<std::string> merged_names(const std::vector<std::string>& first,
                                      const std::vector<std::string>& second) {
  std::vector<std::string> out = first;
  std::set<std::string> used(first.begin(), first.end());
  for (std::string name : second) {
    while (used.count(name)) name += "'";
    used.insert(name);
    out.push_back(name);
  }
  return out;
}

} // namespace

Verdict check_matched_pair(const MatchedPair& mp, MPLevel level) {
  require_mp_shapes(mp);
  if (!check_lie(mp.g) || !check_lie(mp.h)) {
    throw EnlError(ErrorKind::PrereqFailed,
                   "matched pair requires two valid Lie algebras");
  }
  if (!check_representation(as_representation(mp.g, mp.h, mp.rho))) {
    throw EnlError(ErrorKind::PrereqFailed,
                   "rho is not a representation of g");
  }
  if (!check_representation(as_representation(mp.h, mp.g, mp.mu))) {
    throw EnlError(ErrorKind::PrereqFailed,
                   "mu is not a representation of h");
  }
  if (level == MPLevel::enl && (!mp.Eg || !mp.Eh)) {
    throw EnlError(ErrorKind::MissingOperator,
                   "enl level requires both Eg and Eh");
  }

  const int n = mp.g.dim;
  const int m = mp.h.dim;
  // eq:mp1 — rho(x)[xi,eta] = [rho(x)xi,eta] + [xi,rho(x)eta]
  //          + rho(mu(eta)x)xi - rho(mu(xi)x)eta.
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < m; ++a) {
      const std::vector<Rat> fa = basis_vec(m, a);
      for (int b = 0; b < m; ++b) {
        const std::vector<Rat> fb = basis_vec(m, b);
        const std::vector<Rat> lhs = mp.rho[i].apply(mp.h.bracket(fa, fb));
        std::vector<Rat> rhs = mp.h.bracket(column(mp.rho[i], a), fb);
        rhs = vec_add(rhs, mp.h.bracket(fa, column(mp.rho[i], b)));
        rhs = vec_add(rhs, column(action_of(mp.rho, column(mp.mu[b], i)), a));
        rhs = vec_sub(rhs, column(action_of(mp.rho, column(mp.mu[a], i)), b));
        if (lhs != rhs) {
          return Verdict::fail(
              "mp1", triple_witness(mp.g.basis, i, mp.h.basis, a, mp.h.basis,
                                    b, lhs, rhs, mp.h.basis));
        }
      }
    }
  }
  // eq:mp2 — mu(xi)[x,y] = [mu(xi)x,y] + [x,mu(xi)y]
  //          + mu(rho(y)xi)x - mu(rho(x)xi)y.
  for (int a = 0; a < m; ++a) {
    for (int i = 0; i < n; ++i) {
      const std::vector<Rat> ei = basis_vec(n, i);
      for (int j = 0; j < n; ++j) {
        const std::vector<Rat> ej = basis_vec(n, j);
        const std::vector<Rat> lhs = mp.mu[a].apply(mp.g.bracket(ei, ej));
        std::vector<Rat> rhs = mp.g.bracket(column(mp.mu[a], i), ej);
        rhs = vec_add(rhs, mp.g.bracket(ei, column(mp.mu[a], j)));
        rhs = vec_add(rhs, column(action_of(mp.mu, column(mp.rho[j], a)), i));
        rhs = vec_sub(rhs, column(action_of(mp.mu, column(mp.rho[i], a)), j));
        if (lhs != rhs) {
          return Verdict::fail(
              "mp2", triple_witness(mp.h.basis, a, mp.g.basis, i, mp.g.basis,
                                    j, lhs, rhs, mp.g.basis));
        }
      }
    }
  }
  if (level == MPLevel::lie) return Verdict::ok();

  const Verdict eg = check_equivariant(mp.g, *mp.Eg);
  if (!eg) {
    Verdict v = eg;
    v.code = "Eg_equivariant";
    return v;
  }
  const Verdict eh = check_equivariant(mp.h, *mp.Eh);
  if (!eh) {
    Verdict v = eh;
    v.code = "Eh_equivariant";
    return v;
  }
  // Equ-1: Eh rho(x) = rho(Eg x) = rho(x) Eh for every basis x of g.
  for (int i = 0; i < n; ++i) {
    const MatrixQ rhoE = action_of(mp.rho, column(*mp.Eg, i));
    const MatrixQ lhs = *mp.Eh * mp.rho[i];
    if (lhs != rhoE) {
      return Verdict::fail("equ1", entry_witness(mp.g.basis, i, lhs, rhoE));
    }
    const MatrixQ rhs = mp.rho[i] * *mp.Eh;
    if (lhs != rhs) {
      return Verdict::fail("equ1", entry_witness(mp.g.basis, i, lhs, rhs));
    }
  }
  // Equ-2: Eg mu(xi) = mu(Eh xi) = mu(xi) Eg for every basis xi of h.
  for (int a = 0; a < m; ++a) {
    const MatrixQ muE = action_of(mp.mu, column(*mp.Eh, a));
    const MatrixQ lhs = *mp.Eg * mp.mu[a];
    if (lhs != muE) {
      return Verdict::fail("equ2", entry_witness(mp.h.basis, a, lhs, muE));
    }
    const MatrixQ rhs = mp.mu[a] * *mp.Eg;
    if (lhs != rhs) {
      return Verdict::fail("equ2", entry_witness(mp.h.basis, a, lhs, rhs));
    }
  }
  return Verdict::ok();
}

std::pair<LieAlgebra, std::optional<MatrixQ>>
bicrossed_product(const MatchedPair& mp) {
  const Verdict lie = check_matched_pair(mp, MPLevel::lie);
  if (!lie) {
    throw EnlError(ErrorKind::NotMatchedPair,
                   "matched pair identities fail: " + lie.code);
  }
  const int n = mp.g.dim;
  const int m = mp.h.dim;
  LieAlgebra out;
  out.dim = n + m;
  out.basis = merged_names(mp.g.basis, mp.h.basis);
  out.c = Tensor3Q(n + m, n + m, n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out.c.at(i, j, k) = mp.g.c.at(i, j, k);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int k = 0; k < m; ++k)
        out.c.at(n + a, n + b, n + k) = mp.h.c.at(a, b, k);
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < m; ++a) {
      // [e_i, f_a] = -mu(f_a)e_i + rho(e_i)f_a.
      for (int k = 0; k < n; ++k) {
        out.c.at(i, n + a, k) = -mp.mu[a].at(k, i);
        out.c.at(n + a, i, k) = mp.mu[a].at(k, i);
      }
      for (int b = 0; b < m; ++b) {
        out.c.at(i, n + a, n + b) = mp.rho[i].at(b, a);
        out.c.at(n + a, i, n + b) = -mp.rho[i].at(b, a);
      }
    }
  }

  std::optional<MatrixQ> op;
  if (mp.Eg && mp.Eh && check_matched_pair(mp, MPLevel::enl)) {
    MatrixQ hat(n + m, n + m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) hat.at(i, j) = mp.Eg->at(i, j);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) hat.at(n + a, n + b) = mp.Eh->at(a, b);
    op = std::move(hat);
  }
  return {std::move(out), std::move(op)};
}

DeformedMatchedPair deform_matched_pair(const MatchedPair& mp) {
  const Verdict enl = check_matched_pair(mp, MPLevel::enl);
  if (!enl) {
    throw EnlError(ErrorKind::NotMatchedPair,
                   "not an enl matched pair: " + enl.code);
  }
  DeformedMatchedPair out;
  out.deformed.g = deformed_bracket(mp.g, *mp.Eg, DeformMode::equivariant);
  out.deformed.h = deformed_bracket(mp.h, *mp.Eh, DeformMode::equivariant);
  out.deformed.rho.reserve(mp.g.dim);
  for (int i = 0; i < mp.g.dim; ++i)
    out.deformed.rho.push_back(action_of(mp.rho, column(*mp.Eg, i)));
  out.deformed.mu.reserve(mp.h.dim);
  for (int a = 0; a < mp.h.dim; ++a)
    out.deformed.mu.push_back(action_of(mp.mu, column(*mp.Eh, a)));
  out.deformed.Eg = mp.Eg;
  out.deformed.Eh = mp.Eh;

  const LieAlgebra lhs = bicrossed_product(out.deformed).first;
  auto [big, hat] = bicrossed_product(mp);
  const LieAlgebra rhs =
      deformed_bracket(big, *hat, DeformMode::equivariant);
  out.iso = Verdict::ok();
  for (int i = 0; i < lhs.dim && out.iso.pass; ++i) {
    for (int j = 0; j < lhs.dim && out.iso.pass; ++j) {
      for (int k = 0; k < lhs.dim; ++k) {
        if (lhs.c.at(i, j, k) != rhs.c.at(i, j, k)) {
          Witness w;
          w.indices = {i, j, k};
          w.names = {lhs.basis[i], lhs.basis[j], lhs.basis[k]};
          w.lhs = rat_str(lhs.c.at(i, j, k));
          w.rhs = rat_str(rhs.c.at(i, j, k));
          out.iso = Verdict::fail("isomorphism", std::move(w));
          break;
        }
      }
    }
  }
  return out;
}

MatrixQ standard_pairing(int n) {
  MatrixQ s(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    s.at(i, n + i) = 1;
    s.at(n + i, i) = 1;
  }
  return s;
}

namespace {

/// Coordinates of w in the span of the columns of basis, if any.
std::optional<std::vector<Rat>> coords_in_span(const MatrixQ& basisCols,
                                               const std::vector<Rat>& w) {
  const int n = basisCols.rows();
  const int m = basisCols.cols();
  MatrixQ aug(n, m + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) aug.at(i, j) = basisCols.at(i, j);
    aug.at(i, m) = w[i];
  }
  std::vector<int> pivots;
  const MatrixQ r = rref(aug, &pivots);
  std::vector<Rat> x(m);
  for (size_t p = 0; p < pivots.size(); ++p) {
    if (pivots[p] == m) return std::nullopt;
    x[pivots[p]] = r.at(static_cast<int>(p), m);
  }
  return x;
}

MatrixQ columns_matrix(int dim, const std::vector<std::vector<Rat>>& cols) {
  MatrixQ m(dim, static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    if (static_cast<int>(cols[j].size()) != dim) {
      throw EnlError(ErrorKind::ShapeMismatch,
                     "sub-basis vector length does not match algebra");
    }
    for (int i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

} // namespace

ManinReport check_manin_triple(const ManinTripleInput& input) {
  const LieAlgebra& d = input.d;
  if (!check_invariant_form(d, input.S)) {
    throw EnlError(ErrorKind::PrereqFailed,
                   "S is not an invariant form on the ambient algebra");
  }
  const Verdict quad = quadratic_enl_clauses(d, input.Ed, input.S);
  if (!quad) {
    throw EnlError(ErrorKind::PrereqFailed,
                   "(d, Ed, S) is not quadratic: " + quad.code);
  }
  const MatrixQ gCols = columns_matrix(d.dim, input.gBasis);
  const MatrixQ hCols = columns_matrix(d.dim, input.hBasis);
  if (gCols.cols() + hCols.cols() != d.dim) {
    throw EnlError(ErrorKind::NotComplementary,
                   "sub-basis sizes do not add up to dim");
  }
  MatrixQ all(d.dim, d.dim);
  for (int i = 0; i < d.dim; ++i) {
    for (int j = 0; j < gCols.cols(); ++j) all.at(i, j) = gCols.at(i, j);
    for (int j = 0; j < hCols.cols(); ++j)
      all.at(i, gCols.cols() + j) = hCols.at(i, j);
  }
  if (rank(all) != d.dim) {
    throw EnlError(ErrorKind::NotComplementary,
                   "the two spans do not decompose the ambient algebra");
  }

  ManinReport report;
  const auto factor_name = [](bool isG) { return isG ? "g" : "h"; };
  for (bool isG : {true, false}) {
    const MatrixQ& cols = isG ? gCols : hCols;
    const std::vector<std::vector<Rat>>& vecs =
        isG ? input.gBasis : input.hBasis;
    const int m = cols.cols();
    // Bracket closure.
    for (int p = 0; p < m; ++p) {
      for (int q = p + 1; q < m; ++q) {
        const std::vector<Rat> br = d.bracket(vecs[p], vecs[q]);
        if (!coords_in_span(cols, br)) {
          Witness w;
          w.indices = {p, q};
          w.names = {lincomb_str(vecs[p], d.basis),
                     lincomb_str(vecs[q], d.basis)};
          w.lhs = lincomb_str(br, d.basis);
          w.rhs = std::string("element of span(") + factor_name(isG) + ")";
          report.verdict = Verdict::fail(
              std::string(factor_name(isG)) + "_closed", std::move(w));
          return report;
        }
      }
    }
    // Ed stability; collect the restriction matrix.
    MatrixQ restriction(m, m);
    for (int p = 0; p < m; ++p) {
      const std::vector<Rat> image = input.Ed.apply(vecs[p]);
      const auto coords = coords_in_span(cols, image);
      if (!coords) {
        Witness w;
        w.indices = {p};
        w.names = {lincomb_str(vecs[p], d.basis)};
        w.lhs = lincomb_str(image, d.basis);
        w.rhs = std::string("element of span(") + factor_name(isG) + ")";
        report.verdict = Verdict::fail(
            std::string(factor_name(isG)) + "_stable", std::move(w));
        return report;
      }
      for (int i = 0; i < m; ++i) restriction.at(i, p) = (*coords)[i];
    }
    if (isG) report.Eg = std::move(restriction);
    else report.Eh = std::move(restriction);
    // Isotropy.
    for (int p = 0; p < m; ++p) {
      for (int q = p; q < m; ++q) {
        Rat value = 0;
        for (int i = 0; i < d.dim; ++i)
          for (int j = 0; j < d.dim; ++j)
            value += vecs[p][i] * input.S.at(i, j) * vecs[q][j];
        if (value != 0) {
          Witness w;
          w.indices = {p, q};
          w.names = {lincomb_str(vecs[p], d.basis),
                     lincomb_str(vecs[q], d.basis)};
          w.lhs = rat_str(value);
          w.rhs = "0";
          report.verdict = Verdict::fail(
              std::string(factor_name(isG)) + "_isotropic", std::move(w));
          return report;
        }
      }
    }
  }
  report.verdict = Verdict::ok();
  return report;
}

namespace {

/// Component matrix of the cocycle identity for the pair (i,j) against a
/// bracket tensor: LHS - RHS where LHS = Delta([e_i,e_j]) and RHS is the
/// adjoint-action side.
bool cocycle_holds(const LieAlgebra& g, const Cobracket& delta, int i, int j,
                   MatrixQ* lhs_out, MatrixQ* rhs_out) {
  const int n = g.dim;
  MatrixQ lhs(n, n);
  for (int k = 0; k < n; ++k) {
    if (g.c.at(i, j, k) == 0) continue;
    lhs = lhs + g.c.at(i, j, k) * delta.delta_of(k);
  }
  const MatrixQ di = delta.delta_of(i);
  const MatrixQ dj = delta.delta_of(j);
  const MatrixQ adi = g.ad(i);
  const MatrixQ adj = g.ad(j);
  const MatrixQ rhs = adi * dj + dj * adi.transpose() - adj * di -
                      di * adj.transpose();
  if (lhs == rhs) return true;
  if (lhs_out) *lhs_out = lhs;
  if (rhs_out) *rhs_out = rhs;
  return false;
}

Verdict cocycle_verdict(const LieAlgebra& g, const Cobracket& delta,
                        const std::string& code) {
  for (int i = 0; i < g.dim; ++i) {
    for (int j = i + 1; j < g.dim; ++j) {
      MatrixQ lhs, rhs;
      if (!cocycle_holds(g, delta, i, j, &lhs, &rhs)) {
        Witness w;
        w.indices = {i, j};
        w.names = {g.basis[i], g.basis[j]};
        for (int a = 0; a < g.dim && w.lhs.empty(); ++a) {
          for (int b = 0; b < g.dim; ++b) {
            if (lhs.at(a, b) != rhs.at(a, b)) {
              w.indices.push_back(a);
              w.indices.push_back(b);
              w.lhs = rat_str(lhs.at(a, b));
              w.rhs = rat_str(rhs.at(a, b));
              break;
            }
          }
        }
        return Verdict::fail(code, std::move(w));
      }
    }
  }
  return Verdict::ok();
}

} // namespace

Verdict check_bialgebra(const Bialgebra& b, BialgLevel level) {
  if (b.delta.dim != b.g.dim) {
    throw EnlError(ErrorKind::ShapeMismatch,
                   "cobracket dimension does not match algebra");
  }
  const Verdict lie = check_lie(b.g);
  if (!lie) {
    Verdict v = lie;
    v.code = "lie:" + lie.code;
    return v;
  }
  const Verdict co = check_cobracket(b.delta);
  if (!co) {
    Verdict v = co;
    v.code = "cobracket:" + co.code;
    return v;
  }
  const Verdict cocycle = cocycle_verdict(b.g, b.delta, "cocycle");
  if (!cocycle) return cocycle;
  if (level == BialgLevel::lie) return Verdict::ok();

  if (!b.E) {
    throw EnlError(ErrorKind::MissingOperator,
                   "nl/enl level requires an operator");
  }
  if (level == BialgLevel::nl) {
    if (!nijenhuis_torsion(b.g, *b.E).is_zero()) {
      return Verdict::fail("torsion");
    }
    const LieAlgebra deformed =
        deformed_bracket(b.g, *b.E, DeformMode::general);
    const Verdict dc = cocycle_verdict(deformed, b.delta, "deformed_cocycle");
    if (!dc) return dc;
    if (!concomitant(b, *b.E).is_zero()) {
      return Verdict::fail("concomitant");
    }
    return Verdict::ok();
  }

  const Verdict equi = check_equivariant(b.g, *b.E);
  if (!equi) {
    Verdict v = equi;
    v.code = "equivariance";
    return v;
  }
  const Verdict dual = check_equivariant(dualize(b.delta), b.E->transpose());
  if (!dual) {
    Verdict v = dual;
    v.code = "dual_equivariance";
    return v;
  }
  return Verdict::ok();
}

Tensor4Q concomitant(const Bialgebra& b, const MatrixQ& N) {
  const int n = b.g.dim;
  if (b.delta.dim != n || N.rows() != n || N.cols() != n) {
    throw EnlError(ErrorKind::ShapeMismatch,
                   "concomitant requires matching dimensions");
  }
  std::vector<MatrixQ> D;
  std::vector<MatrixQ> adstar;
  D.reserve(n);
  adstar.reserve(n);
  for (int k = 0; k < n; ++k) {
    D.push_back(b.delta.delta_of(k));
    adstar.push_back(-b.g.ad(k).transpose());
  }
  std::vector<MatrixQ> DN(n, MatrixQ(n, n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (N.at(k, j) == 0) continue;
      DN[j] = DN[j] + N.at(k, j) * D[k];
    }
  }
  const MatrixQ Nt = N.transpose();
  const auto iota = [](const MatrixQ& phi, const MatrixQ& P) {
    return phi.transpose() * P + P * phi;
  };
  Tensor4Q out(n, n, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const MatrixQ entry = iota(Nt * adstar[i], D[j]) -
                            iota(Nt * adstar[j], D[i]) -
                            iota(adstar[i], DN[j]) + iota(adstar[j], DN[i]);
      for (int a = 0; a < n; ++a)
        for (int bb = 0; bb < n; ++bb) out.at(i, j, a, bb) = entry.at(a, bb);
    }
  }
  return out;
}

DoubleResult drinfeld_double(const Bialgebra& b) {
  const Verdict lie = check_bialgebra(b, BialgLevel::lie);
  if (!lie) {
    throw EnlError(ErrorKind::NotBialgebra,
                   "not a Lie bialgebra: " + lie.code);
  }
  const int n = b.g.dim;
  const LieAlgebra gstar = dualize(b.delta);
  DoubleResult out;
  out.d.dim = 2 * n;
  out.d.basis = b.g.basis;
  out.d.basis.insert(out.d.basis.end(), gstar.basis.begin(),
                     gstar.basis.end());
  out.d.c = Tensor3Q(2 * n, 2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out.d.c.at(i, j, k) = b.g.c.at(i, j, k);
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb)
      for (int k = 0; k < n; ++k)
        out.d.c.at(n + a, n + bb, n + k) = gstar.c.at(a, bb, k);
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < n; ++a) {
      // [e_i, e_a*] = ad*_{e_i} e_a* - add*_{e_a*} e_i.
      for (int bb = 0; bb < n; ++bb) {
        out.d.c.at(i, n + a, bb) = b.delta.d.at(i, a, bb);
        out.d.c.at(n + a, i, bb) = -b.delta.d.at(i, a, bb);
        out.d.c.at(i, n + a, n + bb) = -b.g.c.at(i, bb, a);
        out.d.c.at(n + a, i, n + bb) = b.g.c.at(i, bb, a);
      }
    }
  }
  out.S = standard_pairing(n);
  if (b.E && check_bialgebra(b, BialgLevel::enl)) {
    MatrixQ hat(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        hat.at(i, j) = b.E->at(i, j);
        hat.at(n + i, n + j) = b.E->at(j, i);
      }
    }
    out.Ehat = std::move(hat);
  }
  return out;
}

QuasiResult double_quasitriangular(const Bialgebra& b) {
  DoubleResult dr = drinfeld_double(b);
  if (!dr.Ehat) {
    throw EnlError(ErrorKind::NotENLBialgebra,
                   "the double carries no operator");
  }
  const int n = b.g.dim;
  QuasiResult out;
  out.r = MatrixQ(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) out.r.at(i, n + i) = 1;

  const LieAlgebra gstar = dualize(b.delta);
  out.dual_r.dim = 2 * n;
  out.dual_r.basis = gstar.basis;
  out.dual_r.basis.insert(out.dual_r.basis.end(), b.g.basis.begin(),
                          b.g.basis.end());
  out.dual_r.c = Tensor3Q(2 * n, 2 * n, 2 * n);
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb)
      for (int k = 0; k < n; ++k)
        out.dual_r.c.at(a, bb, k) = -gstar.c.at(a, bb, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        out.dual_r.c.at(n + i, n + j, n + k) = b.g.c.at(i, j, k);

  MatrixQ op(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      op.at(i, j) = b.E->at(j, i);
      op.at(n + i, n + j) = b.E->at(i, j);
    }
  }
  out.verdict = check_equivariant(out.dual_r, op);
  return out;
}

std::vector<Verdict> bialgebra_hierarchy(const Bialgebra& b, int levels) {
  if (!b.E) {
    throw EnlError(ErrorKind::NotENLBialgebra,
                   "hierarchy requires an enl bialgebra with operator");
  }
  if (!check_bialgebra(b, BialgLevel::enl)) {
    throw EnlError(ErrorKind::NotENLBialgebra,
                   "hierarchy requires an enl bialgebra");
  }
  std::vector<Verdict> out;
  out.reserve(levels);
  for (auto& [gk, Ek] : hierarchy(b.g, *b.E, levels)) {
    (void)Ek;
    Bialgebra level;
    level.g = gk;
    level.delta = b.delta;
    out.push_back(check_bialgebra(level, BialgLevel::lie));
  }
  return out;
}

MatchedPair bialgebra_matched_pair(const Bialgebra& b) {
  MatchedPair mp;
  mp.g = b.g;
  mp.h = dualize(b.delta);
  mp.rho.reserve(b.g.dim);
  for (int i = 0; i < b.g.dim; ++i) mp.rho.push_back(-b.g.ad(i).transpose());
  mp.mu.reserve(mp.h.dim);
  for (int a = 0; a < mp.h.dim; ++a) mp.mu.push_back(-mp.h.ad(a).transpose());
  if (b.E) {
    mp.Eg = *b.E;
    mp.Eh = b.E->transpose();
  }
  return mp;
}

} // namespace enl
