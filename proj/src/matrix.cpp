#include "enl/matrix.hpp"

#include "enl/verdict.hpp"

#include <utility>

namespace enl {

namespace {

void require_same_shape(const MatrixQ& a, const MatrixQ& b,
                        const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw EnlError(ErrorKind::ShapeMismatch, what);
  }
}

} // namespace

MatrixQ MatrixQ::identity(int n) {
  MatrixQ m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::unit(int n, int i, int j) {
  MatrixQ m(n, n);
  m.at(i, j) = 1;
  return m;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(m_cols, m_rows);
  for (int i = 0; i < m_rows; ++i)
    for (int j = 0; j < m_cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool MatrixQ::is_zero() const {
  for (const Rat& v : m_a)
    if (v != 0) return false;
  return true;
}

std::vector<Rat> MatrixQ::apply(const std::vector<Rat>& x) const {
  if (static_cast<int>(x.size()) != m_cols) {
    throw EnlError(ErrorKind::ShapeMismatch, "matrix-vector size mismatch");
  }
  std::vector<Rat> y(m_rows);
  for (int i = 0; i < m_rows; ++i) {
    Rat acc = 0;
    for (int j = 0; j < m_cols; ++j) acc += at(i, j) * x[j];
    y[i] = std::move(acc);
  }
  return y;
}

MatrixQ operator+(const MatrixQ& a, const MatrixQ& b) {
  require_same_shape(a, b, "matrix addition shape mismatch");
  MatrixQ c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

MatrixQ operator-(const MatrixQ& a, const MatrixQ& b) {
  require_same_shape(a, b, "matrix subtraction shape mismatch");
  MatrixQ c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols() != b.rows()) {
    throw EnlError(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
  }
  MatrixQ c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j) == 0) continue;
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return c;
}

MatrixQ operator*(const Rat& s, const MatrixQ& a) {
  MatrixQ c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = s * a.at(i, j);
  return c;
}

MatrixQ operator-(const MatrixQ& a) { return Rat(-1) * a; }

MatrixQ rref(MatrixQ a, std::vector<int>* pivots) {
  const int rows = a.rows();
  const int cols = a.cols();
  int lead = 0;
  for (int col = 0; col < cols && lead < rows; ++col) {
    int pivot = -1;
    for (int r = lead; r < rows; ++r) {
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead) {
      for (int j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(lead, j));
    }
    const Rat inv = Rat(1) / a.at(lead, col);
    for (int j = col; j < cols; ++j) a.at(lead, j) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == lead) continue;
      const Rat factor = a.at(r, col);
      if (factor == 0) continue;
      for (int j = col; j < cols; ++j) a.at(r, j) -= factor * a.at(lead, j);
    }
    if (pivots) pivots->push_back(col);
    ++lead;
  }
  return a;
}

int rank(const MatrixQ& a) {
  std::vector<int> pivots;
  rref(a, &pivots);
  return static_cast<int>(pivots.size());
}

Rat det(MatrixQ a) {
  if (!a.is_square()) {
    throw EnlError(ErrorKind::ShapeMismatch, "determinant of non-square matrix");
  }
  const int n = a.rows();
  Rat result = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      result = -result;
    }
    result *= a.at(col, col);
    const Rat inv = Rat(1) / a.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      const Rat factor = a.at(r, col) * inv;
      if (factor == 0) continue;
      for (int j = col; j < n; ++j) a.at(r, j) -= factor * a.at(col, j);
    }
  }
  return result;
}

std::vector<std::vector<Rat>> kernel_basis(const MatrixQ& a) {
  const int cols = a.cols();
  std::vector<int> pivots;
  const MatrixQ r = rref(a, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (int col : pivots) is_pivot[col] = true;

  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols);
    v[free] = 1;
    for (size_t p = 0; p < pivots.size(); ++p) {
      v[pivots[p]] = -r.at(static_cast<int>(p), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

MatrixQ invert(const MatrixQ& a) {
  if (!a.is_square()) {
    throw EnlError(ErrorKind::ShapeMismatch, "inverse of non-square matrix");
  }
  const int n = a.rows();
  if (n == 0) return a;
  MatrixQ work(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) work.at(i, j) = a.at(i, j);
    work.at(i, n + i) = 1;
  }
  std::vector<int> pivots;
  work = rref(std::move(work), &pivots);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) {
    throw EnlError(ErrorKind::SingularMatrix, "matrix is singular");
  }
  MatrixQ inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = work.at(i, n + j);
  return inv;
}

std::vector<Rat> vec_add(const std::vector<Rat>& x, const std::vector<Rat>& y) {
  std::vector<Rat> z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}

std::vector<Rat> vec_sub(const std::vector<Rat>& x, const std::vector<Rat>& y) {
  std::vector<Rat> z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
  return z;
}

std::vector<Rat> vec_scale(const Rat& s, const std::vector<Rat>& x) {
  std::vector<Rat> z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = s * x[i];
  return z;
}

bool vec_is_zero(const std::vector<Rat>& x) {
  for (const Rat& v : x)
    if (v != 0) return false;
  return true;
}

std::vector<Rat> basis_vec(int n, int i) {
  std::vector<Rat> v(n);
  v[i] = 1;
  return v;
}

} // namespace enl
