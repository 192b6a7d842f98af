#ifndef ENL_MATRIX_HPP
#define ENL_MATRIX_HPP

#include "enl/rational.hpp"
#include "enl/verdict.hpp"

#include <vector>

namespace enl {

/// Dense exact rational matrix, row-major. The library-wide convention for
/// operators is column action: M.at(i,j) is the coefficient of basis vector
/// e_i in the image of e_j.
class MatrixQ {
public:
  MatrixQ() = default;
  MatrixQ(int rows, int cols) : m_rows(rows), m_cols(cols), m_a(static_cast<size_t>(rows) * cols) {}

  static MatrixQ identity(int n);
  /// n x n with a single 1 at (i,j).
  static MatrixQ unit(int n, int i, int j);

  int rows() const { return m_rows; }
  int cols() const { return m_cols; }

  Rat& at(int i, int j) { return m_a[static_cast<size_t>(i) * m_cols + j]; }
  const Rat& at(int i, int j) const { return m_a[static_cast<size_t>(i) * m_cols + j]; }

  MatrixQ transpose() const;
  bool is_zero() const;
  bool is_square() const { return m_rows == m_cols; }

  /// Matrix-vector product (column action on coordinates).
  std::vector<Rat> apply(const std::vector<Rat>& x) const;

  friend bool operator==(const MatrixQ&, const MatrixQ&) = default;

private:
  int m_rows = 0, m_cols = 0;
  std::vector<Rat> m_a;
};

MatrixQ operator+(const MatrixQ& a, const MatrixQ& b);
MatrixQ operator-(const MatrixQ& a, const MatrixQ& b);
MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
MatrixQ operator*(const Rat& s, const MatrixQ& a);
MatrixQ operator-(const MatrixQ& a);

/// Reduced row echelon form; pivot column indices appended to *pivots if given.
MatrixQ rref(MatrixQ a, std::vector<int>* pivots = nullptr);

int rank(const MatrixQ& a);

Rat det(MatrixQ a);

/// Exact basis of {v : Av = 0} from the reduced echelon form, one vector per
/// pivot-free column in ascending column order. A matrix with no rows (or all
/// zero rows) yields the full standard basis.
std::vector<std::vector<Rat>> kernel_basis(const MatrixQ& a);

/// Exact inverse via Gauss-Jordan. Throws ShapeMismatch if non-square,
/// SingularMatrix if rank-deficient.
MatrixQ invert(const MatrixQ& a);

// Small vector helpers shared across modules.
std::vector<Rat> vec_add(const std::vector<Rat>& x, const std::vector<Rat>& y);
std::vector<Rat> vec_sub(const std::vector<Rat>& x, const std::vector<Rat>& y);
std::vector<Rat> vec_scale(const Rat& s, const std::vector<Rat>& x);
bool vec_is_zero(const std::vector<Rat>& x);
std::vector<Rat> basis_vec(int n, int i);

} // namespace enl

#endif
