#ifndef ENL_TENSOR3_HPP
#define ENL_TENSOR3_HPP

#include "enl/matrix.hpp"
#include "enl/rational.hpp"

#include <string>
#include <variant>
#include <vector>

namespace enl {

/// Dense rank-3 exact tensor. Lie structure constants are stored as
/// c(i,j,k) with [e_i,e_j] = sum_k c(i,j,k) e_k; cobrackets as d(k,i,j)
/// with Delta(e_k) = sum_{i,j} d(k,i,j) e_i (x) e_j.
class Tensor3Q {
public:
  Tensor3Q() = default;
  Tensor3Q(int d0, int d1, int d2)
      : m_d0(d0), m_d1(d1), m_d2(d2),
        m_a(static_cast<size_t>(d0) * d1 * d2) {}

  int d0() const { return m_d0; }
  int d1() const { return m_d1; }
  int d2() const { return m_d2; }

  Rat& at(int i, int j, int k) {
    return m_a[(static_cast<size_t>(i) * m_d1 + j) * m_d2 + k];
  }
  const Rat& at(int i, int j, int k) const {
    return m_a[(static_cast<size_t>(i) * m_d1 + j) * m_d2 + k];
  }

  bool is_zero() const;

  friend bool operator==(const Tensor3Q&, const Tensor3Q&) = default;

private:
  int m_d0 = 0, m_d1 = 0, m_d2 = 0;
  std::vector<Rat> m_a;
};

/// Dense rank-4 exact tensor (concomitants).
class Tensor4Q {
public:
  Tensor4Q() = default;
  Tensor4Q(int d0, int d1, int d2, int d3)
      : m_d{d0, d1, d2, d3},
        m_a(static_cast<size_t>(d0) * d1 * d2 * d3) {}

  int dim(int axis) const { return m_d[axis]; }

  Rat& at(int i, int j, int k, int l) {
    return m_a[((static_cast<size_t>(i) * m_d[1] + j) * m_d[2] + k) * m_d[3] + l];
  }
  const Rat& at(int i, int j, int k, int l) const {
    return m_a[((static_cast<size_t>(i) * m_d[1] + j) * m_d[2] + k) * m_d[3] + l];
  }

  bool is_zero() const;

  friend bool operator==(const Tensor4Q&, const Tensor4Q&) = default;

private:
  int m_d[4] = {0, 0, 0, 0};
  std::vector<Rat> m_a;
};

/// An operand for contract(): a vector, matrix, or rank-3 tensor.
using ContractOperand = std::variant<std::vector<Rat>, MatrixQ, Tensor3Q>;

/// Exact einsum-style contraction, e.g. contract("ijk,i,j->k", {c, x, y})
/// evaluates the bracket of coordinate vectors x,y against structure
/// constants c. Index labels are single letters; repeated labels are summed
/// unless they appear in the output. The result is the naive nested-loop sum
/// over all contracted indices. Output rank decides the variant returned:
/// rank 0 is encoded as a 1-element vector.
ContractOperand contract(const std::string& plan,
                         const std::vector<ContractOperand>& operands);

} // namespace enl

#endif
