#ifndef ENL_TESTS_FIXTURES_HPP
#define ENL_TESTS_FIXTURES_HPP

#include "enl/lie.hpp"
#include "enl/matrix.hpp"

#include <random>
#include <string>
#include <vector>

namespace enl::fixtures {

/// [X1,X2] = X2 (the nonabelian dim-2 algebra).
inline LieAlgebra aff1() {
  return make_lie(2, {"X1", "X2"}, {{0, 1, 1, Rat(1)}});
}

/// [X1,X2] = X3.
inline LieAlgebra heis3() {
  return make_lie(3, {"X1", "X2", "X3"}, {{0, 1, 2, Rat(1)}});
}

/// [X1,X3] = X1, [X2,X3] = X2.
inline LieAlgebra book3() {
  return make_lie(3, {"X1", "X2", "X3"},
                  {{0, 2, 0, Rat(1)}, {1, 2, 1, Rat(1)}});
}

/// [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline LieAlgebra sl2() {
  return make_lie(3, {"h", "e", "f"},
                  {{0, 1, 1, Rat(2)}, {0, 2, 2, Rat(-2)}, {1, 2, 0, Rat(1)}});
}

/// [X1,X2] = X3, [X2,X3] = X1, [X1,X3] = -X2.
inline LieAlgebra so3() {
  return make_lie(3, {"X1", "X2", "X3"},
                  {{0, 1, 2, Rat(1)}, {1, 2, 0, Rat(1)}, {0, 2, 1, Rat(-1)}});
}

/// [X1,X2] = X2, [X3,X4] = X4 (two commuting aff(1) blocks).
inline LieAlgebra g4() {
  return make_lie(4, {"X1", "X2", "X3", "X4"},
                  {{0, 1, 1, Rat(1)}, {2, 3, 3, Rat(1)}});
}

/// Algebras of dim <= 6 used by the operator-family sweeps.
inline std::vector<LieAlgebra> catalogue() {
  return {aff1(),
          heis3(),
          book3(),
          sl2(),
          g4(),
          direct_sum(sl2(), aff1()),
          direct_sum(aff1(), direct_sum(aff1(), aff1()))};
}

/// Rationals with numerator in [-9,9] and denominator in [1,9].
inline Rat rand_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rat(num(rng), den(rng));
}

inline MatrixQ rand_matrix(std::mt19937_64& rng, int rows, int cols) {
  MatrixQ m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rand_rat(rng);
  return m;
}

inline MatrixQ rand_skew(std::mt19937_64& rng, int n) {
  MatrixQ m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      m.at(i, j) = rand_rat(rng);
      m.at(j, i) = -m.at(i, j);
    }
  }
  return m;
}

/// A random cobracket on n letters (co-antisymmetric by construction).
inline Cobracket rand_cobracket(std::mt19937_64& rng, int n,
                                const std::vector<std::string>& names) {
  std::vector<SparseEntry> entries;
  std::uniform_int_distribution<int> coin(0, 2);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (coin(rng) == 0) entries.push_back({k, i, j, rand_rat(rng)});
      }
    }
  }
  return make_cobracket(n, names, entries);
}

} // namespace enl::fixtures

#endif
