#include "enl/lie.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

namespace enl {

namespace {

std::vector<std::string> default_names(int dim, const char* stem) {
  std::vector<std::string> names;
  names.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    names.push_back(stem + std::to_string(i + 1));
  }
  return names;
}

void validate_names(int dim, std::vector<std::string>& names,
                    const char* stem) {
  if (names.empty()) {
    names = default_names(dim, stem);
  } else if (static_cast<int>(names.size()) != dim) {
    throw EnlError(ErrorKind::ShapeMismatch,
                   "basis name count does not match dim");
  }
}

} // namespace

std::vector<Rat> LieAlgebra::bracket(const std::vector<Rat>& x,
                                     const std::vector<Rat>& y) const {
  std::vector<Rat> z(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      const Rat xy = x[i] * y[j];
      for (int k = 0; k < dim; ++k) {
        const Rat& cijk = c.at(i, j, k);
        if (cijk != 0) z[k] += xy * cijk;
      }
    }
  }
  return z;
}

MatrixQ LieAlgebra::ad(int i) const {
  MatrixQ m(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) m.at(k, j) = c.at(i, j, k);
  return m;
}

MatrixQ LieAlgebra::ad_vec(const std::vector<Rat>& x) const {
  MatrixQ m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) m.at(k, j) += x[i] * c.at(i, j, k);
  }
  return m;
}

LieAlgebra make_lie(int dim, std::vector<std::string> names,
                    const std::vector<SparseEntry>& entries) {
  if (dim < 0) {
    throw EnlError(ErrorKind::ValidationError, "negative dimension");
  }
  validate_names(dim, names, "e");
  LieAlgebra g{dim, std::move(names), Tensor3Q(dim, dim, dim)};
  std::set<std::tuple<int, int, int>> seen;
  for (const SparseEntry& e : entries) {
    if (e.a < 0 || e.a >= dim || e.b < 0 || e.b >= dim || e.c < 0 ||
        e.c >= dim) {
      throw EnlError(ErrorKind::ValidationError,
                     "bracket entry index out of range");
    }
    if (e.a >= e.b) {
      throw EnlError(ErrorKind::ValidationError,
                     "bracket entries require i < j");
    }
    if (!seen.insert({e.a, e.b, e.c}).second) {
      throw EnlError(ErrorKind::ValidationError,
                     "duplicate bracket entry");
    }
    g.c.at(e.a, e.b, e.c) = e.value;
    g.c.at(e.b, e.a, e.c) = -e.value;
  }
  return g;
}

LieAlgebra abelian(int n) { return make_lie(n, {}, {}); }

LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2) {
  const int n1 = g1.dim;
  const int n2 = g2.dim;
  LieAlgebra sum;
  sum.dim = n1 + n2;
  sum.basis = g1.basis;
  std::set<std::string> used(g1.basis.begin(), g1.basis.end());
  for (const std::string& name : g2.basis) {
    std::string candidate = name;
    while (used.count(candidate)) candidate += "'";
    used.insert(candidate);
    sum.basis.push_back(candidate);
  }
  sum.c = Tensor3Q(sum.dim, sum.dim, sum.dim);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j)
      for (int k = 0; k < n1; ++k) sum.c.at(i, j, k) = g1.c.at(i, j, k);
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j)
      for (int k = 0; k < n2; ++k)
        sum.c.at(n1 + i, n1 + j, n1 + k) = g2.c.at(i, j, k);
  return sum;
}

Verdict check_lie(const LieAlgebra& g) {
  const int n = g.dim;
  if (g.c.d0() != n || g.c.d1() != n || g.c.d2() != n) {
    throw EnlError(ErrorKind::ShapeMismatch,
                   "structure tensor shape does not match dim");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (g.c.at(i, j, k) + g.c.at(j, i, k) != 0) {
          Witness w;
          w.indices = {i, j, k};
          w.names = {g.basis[i], g.basis[j]};
          std::vector<Rat> lhs(n), rhs(n);
          for (int l = 0; l < n; ++l) {
            lhs[l] = g.c.at(i, j, l);
            rhs[l] = -g.c.at(j, i, l);
          }
          w.lhs = lincomb_str(lhs, g.basis);
          w.rhs = lincomb_str(rhs, g.basis);
          return Verdict::fail("antisymmetry", std::move(w));
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        std::vector<Rat> jac(n);
        for (int l = 0; l < n; ++l) {
          Rat acc = 0;
          for (int m = 0; m < n; ++m) {
            acc += g.c.at(i, j, m) * g.c.at(m, k, l);
            acc += g.c.at(j, k, m) * g.c.at(m, i, l);
            acc += g.c.at(k, i, m) * g.c.at(m, j, l);
          }
          jac[l] = std::move(acc);
        }
        for (int l = 0; l < n; ++l) {
          if (jac[l] != 0) {
            Witness w;
            w.indices = {i, j, k, l};
            w.names = {g.basis[i], g.basis[j], g.basis[k]};
            w.lhs = lincomb_str(jac, g.basis);
            w.rhs = "0";
            return Verdict::fail("jacobi", std::move(w));
          }
        }
      }
    }
  }
  return Verdict::ok();
}

Verdict check_leibniz(const Tensor3Q& m, const std::vector<std::string>& names) {
  const int n = m.d0();
  if (m.d1() != n || m.d2() != n) {
    throw EnlError(ErrorKind::ShapeMismatch, "product tensor not cubic");
  }
  std::vector<std::string> display = names;
  if (static_cast<int>(display.size()) != n) display = default_names(n, "e");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        std::vector<Rat> lhs(n), rhs(n);
        for (int k = 0; k < n; ++k) {
          Rat left = 0, right = 0;
          for (int p = 0; p < n; ++p) {
            left += m.at(j, l, p) * m.at(i, p, k);
            right += m.at(i, j, p) * m.at(p, l, k);
            right += m.at(i, l, p) * m.at(j, p, k);
          }
          lhs[k] = std::move(left);
          rhs[k] = std::move(right);
        }
        if (lhs != rhs) {
          Witness w;
          w.indices = {i, j, l};
          w.names = {display[i], display[j], display[l]};
          w.lhs = lincomb_str(lhs, display);
          w.rhs = lincomb_str(rhs, display);
          return Verdict::fail("leibniz", std::move(w));
        }
      }
    }
  }
  return Verdict::ok();
}

Verdict check_invariant_form(const LieAlgebra& g, const MatrixQ& S) {
  const int n = g.dim;
  if (S.rows() != n || S.cols() != n) {
    throw EnlError(ErrorKind::ShapeMismatch, "form shape does not match dim");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (S.at(i, j) != S.at(j, i)) {
        Witness w;
        w.indices = {i, j};
        w.names = {g.basis[i], g.basis[j]};
        w.lhs = rat_str(S.at(i, j));
        w.rhs = rat_str(S.at(j, i));
        return Verdict::fail("symmetry", std::move(w));
      }
    }
  }
  if (det(S) == 0) {
    Witness w;
    w.lhs = "0";
    w.rhs = "nonzero determinant";
    return Verdict::fail("nondegeneracy", std::move(w));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Rat acc = 0;
        for (int m = 0; m < n; ++m) {
          acc += g.c.at(i, j, m) * S.at(m, k); // S([e_i,e_j], e_k)
          acc += g.c.at(i, k, m) * S.at(j, m); // S(e_j, [e_i,e_k])
        }
        if (acc != 0) {
          Witness w;
          w.indices = {i, j, k};
          w.names = {g.basis[i], g.basis[j], g.basis[k]};
          w.lhs = rat_str(acc);
          w.rhs = "0";
          return Verdict::fail("invariance", std::move(w));
        }
      }
    }
  }
  return Verdict::ok();
}

MatrixQ Cobracket::delta_of(int k) const {
  MatrixQ m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = d.at(k, i, j);
  return m;
}

Cobracket make_cobracket(int dim, std::vector<std::string> names,
                         const std::vector<SparseEntry>& entries) {
  if (dim < 0) {
    throw EnlError(ErrorKind::ValidationError, "negative dimension");
  }
  validate_names(dim, names, "e");
  Cobracket delta{dim, std::move(names), Tensor3Q(dim, dim, dim)};
  std::set<std::tuple<int, int, int>> seen;
  for (const SparseEntry& e : entries) {
    if (e.a < 0 || e.a >= dim || e.b < 0 || e.b >= dim || e.c < 0 ||
        e.c >= dim) {
      throw EnlError(ErrorKind::ValidationError,
                     "cobracket entry index out of range");
    }
    if (e.b >= e.c) {
      throw EnlError(ErrorKind::ValidationError,
                     "cobracket entries require i < j");
    }
    if (!seen.insert({e.a, e.b, e.c}).second) {
      throw EnlError(ErrorKind::ValidationError, "duplicate cobracket entry");
    }
    delta.d.at(e.a, e.b, e.c) = e.value;
    delta.d.at(e.a, e.c, e.b) = -e.value;
  }
  return delta;
}

Verdict check_cobracket(const Cobracket& delta) {
  const int n = delta.dim;
  if (delta.d.d0() != n || delta.d.d1() != n || delta.d.d2() != n) {
    throw EnlError(ErrorKind::ShapeMismatch,
                   "cobracket tensor shape does not match dim");
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (delta.d.at(k, i, j) + delta.d.at(k, j, i) != 0) {
          Witness w;
          w.indices = {k, i, j};
          w.names = {delta.basis[k], delta.basis[i], delta.basis[j]};
          w.lhs = rat_str(delta.d.at(k, i, j));
          w.rhs = rat_str(-delta.d.at(k, j, i));
          return Verdict::fail("coantisymmetry", std::move(w));
        }
      }
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int cc = 0; cc < n; ++cc) {
          Rat acc = 0;
          for (int j = 0; j < n; ++j) {
            acc += delta.d.at(k, a, j) * delta.d.at(j, b, cc);
            acc += delta.d.at(k, b, j) * delta.d.at(j, cc, a);
            acc += delta.d.at(k, cc, j) * delta.d.at(j, a, b);
          }
          if (acc != 0) {
            Witness w;
            w.indices = {k, a, b, cc};
            w.names = {delta.basis[k], delta.basis[a], delta.basis[b],
                       delta.basis[cc]};
            w.lhs = rat_str(acc);
            w.rhs = "0";
            return Verdict::fail("co_jacobi", std::move(w));
          }
        }
      }
    }
  }
  return Verdict::ok();
}

LieAlgebra dualize(const Cobracket& delta) {
  const Verdict valid = check_cobracket(delta);
  if (!valid) {
    throw EnlError(ErrorKind::InvalidCobracket,
                   "cobracket fails " + valid.code);
  }
  LieAlgebra gstar;
  gstar.dim = delta.dim;
  gstar.basis.reserve(delta.dim);
  for (const std::string& name : delta.basis) gstar.basis.push_back(name + "*");
  gstar.c = Tensor3Q(delta.dim, delta.dim, delta.dim);
  for (int a = 0; a < delta.dim; ++a)
    for (int b = 0; b < delta.dim; ++b)
      for (int k = 0; k < delta.dim; ++k)
        gstar.c.at(a, b, k) = delta.d.at(k, a, b);
  return gstar;
}

} // namespace enl
