#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "enl/operators.hpp"
#include "enl/prelie.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <functional>

using namespace enl;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const EnlError& e) {
    return e.kind();
  }
  FAIL("expected an EnlError");
  return ErrorKind::ValidationError;
}

/// {X1,X2} = X2, all other products zero; subadjacent algebra is aff(1).
PreLieAlgebra p2() {
  return make_prelie(2, {"X1", "X2"}, {{0, 1, 1, Rat(1)}});
}

PreLieAlgebra abelian_prelie(int n) { return make_prelie(n, {}, {}); }

/// X1 -> X2, X2 -> 0.
MatrixQ n0() {
  MatrixQ n(2, 2);
  n.at(1, 0) = 1;
  return n;
}

} // namespace

TEST_CASE("make_prelie validation") {
  PreLieAlgebra p = p2();
  CHECK(p.dim == 2);
  CHECK(p.m.at(0, 1, 1) == 1);
  CHECK(p.basis == std::vector<std::string>{"X1", "X2"});
  CHECK(abelian_prelie(3).basis[2] == "e3");

  CHECK(kind_of([] { make_prelie(-1, {}, {}); }) == ErrorKind::ValidationError);
  CHECK(kind_of([] { make_prelie(2, {"a"}, {}); }) == ErrorKind::ShapeMismatch);
  CHECK(kind_of([] {
          make_prelie(2, {}, {{0, 1, 1, Rat(1)}, {0, 1, 1, Rat(2)}});
        }) == ErrorKind::ValidationError);
  CHECK(kind_of([] { make_prelie(2, {}, {{0, 1, 2, Rat(1)}}); }) ==
        ErrorKind::ValidationError);
}

TEST_CASE("check_prelie verdicts") {
  CHECK(check_prelie(p2()).pass);
  CHECK(check_prelie(abelian_prelie(4)).pass);

  // an associative commutative product is pre-Lie
  CHECK(check_prelie(make_prelie(2, {}, {{0, 0, 0, Rat(1)}})).pass);

  // {X1,X1} = X2, {X2,X1} = X1 violates the symmetry of the associator
  PreLieAlgebra bad =
      make_prelie(2, {"X1", "X2"}, {{0, 0, 1, Rat(1)}, {1, 0, 0, Rat(1)}});
  Verdict v = check_prelie(bad);
  REQUIRE_FALSE(v.pass);
  CHECK(v.code == "associator_symmetry");
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->indices == std::vector<int>{0, 1, 0, 1});
  CHECK(v.witness->lhs == "-1");
  CHECK(v.witness->rhs == "1");

  PreLieAlgebra shape = p2();
  shape.dim = 3;
  CHECK(kind_of([&] { check_prelie(shape); }) == ErrorKind::ShapeMismatch);
}

TEST_CASE("subadjacent commutator algebra") {
  LieAlgebra g = subadjacent(p2());
  CHECK(g.c == fixtures::aff1().c);
  CHECK(check_lie(g).pass);
  CHECK(subadjacent(abelian_prelie(3)).c.is_zero());
}

TEST_CASE("weak and strong operator compatibility") {
  PreLieAlgebra p = p2();

  // the nilpotent N0 is weakly but not strongly compatible
  CHECK(check_pre_enl(p, n0(), PreENLMode::weak).pass);
  Verdict v = check_pre_enl(p, n0(), PreENLMode::strong);
  REQUIRE_FALSE(v.pass);
  CHECK(v.code == "strong");
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->names == std::vector<std::string>{"X1", "X1"});
  CHECK(v.witness->lhs == "0");
  CHECK(v.witness->rhs == "X2");

  // scalars are strongly compatible, and strong implies weak
  for (int c : {-3, 0, 1, 2}) {
    MatrixQ E = Rat(c) * MatrixQ::identity(2);
    CHECK(check_pre_enl(p, E, PreENLMode::strong).pass);
    CHECK(check_pre_enl(p, E, PreENLMode::weak).pass);
  }

  // a non-centroid diagonal fails weak mode with a pair witness
  MatrixQ d(2, 2);
  d.at(0, 0) = 1;
  d.at(1, 1) = 2;
  Verdict w = check_pre_enl(p, d, PreENLMode::weak);
  REQUIRE_FALSE(w.pass);
  CHECK(w.code == "weak");
  CHECK(w.witness->names == std::vector<std::string>{"X2", "X1"});

  PreLieAlgebra bad =
      make_prelie(2, {}, {{0, 0, 1, Rat(1)}, {1, 0, 0, Rat(1)}});
  CHECK(kind_of([&] {
          check_pre_enl(bad, MatrixQ::identity(2), PreENLMode::weak);
        }) == ErrorKind::PrereqFailed);
}

TEST_CASE("strong operator space") {
  // on the dim-2 example the strong operators are exactly the scalars
  std::vector<MatrixQ> basis = prelie_strong_basis(p2());
  REQUIRE(basis.size() == 1);
  const MatrixQ id = MatrixQ::identity(2);
  CHECK((basis[0] == id || basis[0] == Rat(-1) * id));
  for (const MatrixQ& E : basis) {
    CHECK(check_pre_enl(p2(), E, PreENLMode::strong).pass);
  }

  // on an abelian product every operator is strong
  CHECK(prelie_strong_basis(abelian_prelie(3)).size() == 9);
}

TEST_CASE("subadjacent enl structure") {
  PreLieAlgebra p = p2();
  SubadjacentENL out = subadjacent_enl(p, MatrixQ::identity(2));
  CHECK(out.g.c == fixtures::aff1().c);
  CHECK(out.relrb.pass);
  CHECK(check_representation(out.L).pass);
  REQUIRE(out.L.T.has_value());
  CHECK(*out.L.T == MatrixQ::identity(2));
  // L(X1) = diag(0,1), L(X2) = 0
  CHECK(out.L.rho[0].at(1, 1) == 1);
  CHECK(out.L.rho[0].at(0, 0) == 0);
  CHECK(out.L.rho[1].is_zero());

  SubadjacentENL scaled = subadjacent_enl(p, Rat(2) * MatrixQ::identity(2));
  CHECK(scaled.relrb.pass);

  std::mt19937_64 rng(7);
  SubadjacentENL ab =
      subadjacent_enl(abelian_prelie(3), fixtures::rand_matrix(rng, 3, 3));
  CHECK(ab.g.c.is_zero());
  CHECK(ab.relrb.pass);

  CHECK(kind_of([&] { subadjacent_enl(p, n0()); }) == ErrorKind::PrereqFailed);
}

TEST_CASE("pre-Lie Nijenhuis torsion and deformation") {
  PreLieAlgebra p = p2();

  PreLieTorsion ident = prelie_nijenhuis(p, MatrixQ::identity(2));
  CHECK(ident.torsion.is_zero());
  REQUIRE(ident.deformed.has_value());
  CHECK(ident.deformed->m == p.m);

  // N0 deforms to the product {X1,X1}_N = X2 (all other products zero)
  PreLieTorsion def = prelie_nijenhuis(p, n0());
  CHECK(def.torsion.is_zero());
  REQUIRE(def.deformed.has_value());
  CHECK(def.deformed->m.at(0, 0, 1) == 1);
  Rat rest = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        if (!(i == 0 && j == 0 && k == 1)) rest += abs(def.deformed->m.at(i, j, k));
  CHECK(rest == 0);
  CHECK(check_prelie(*def.deformed).pass);

  // the commutator of the deformed product is the deformed commutator
  LieAlgebra lie_def =
      deformed_bracket(subadjacent(p), n0(), DeformMode::general);
  CHECK(subadjacent(*def.deformed).c == lie_def.c);

  // the transpose of N0 has nonzero torsion: no deformation is returned
  MatrixQ up(2, 2);
  up.at(0, 1) = 1;
  PreLieTorsion bad = prelie_nijenhuis(p, up);
  CHECK(bad.torsion.at(1, 1, 0) == -1);
  CHECK_FALSE(bad.deformed.has_value());

  CHECK(kind_of([&] { prelie_nijenhuis(p, MatrixQ::identity(3)); }) ==
        ErrorKind::ShapeMismatch);
}

TEST_CASE("pre-Lie products from relative Rota-Baxter operators") {
  PreLieAlgebra p = p2();
  SubadjacentENL sub = subadjacent_enl(p, MatrixQ::identity(2));

  RelativeRB rb;
  rb.rep = sub.L;
  rb.K = MatrixQ::identity(2);
  PreLieAlgebra rec = prelie_from_relrb(rb, MatrixQ::identity(2));
  CHECK(rec.m == p.m); // K = Id recovers the original product

  rb.K = MatrixQ(2, 2);
  CHECK(prelie_from_relrb(rb, MatrixQ::identity(2)).m.is_zero());

  // the Borel instance on sl2*: product passes check_prelie and its
  // commutator is the descendent bracket
  LieAlgebra s = fixtures::sl2();
  RelativeRB borel;
  borel.rep = coadjoint_rep(s);
  borel.rep.T = MatrixQ::identity(3);
  borel.K = MatrixQ(3, 3);
  borel.K.at(0, 1) = 1;
  borel.K.at(1, 0) = -1;
  PreLieAlgebra star = prelie_from_relrb(borel, MatrixQ::identity(3));
  CHECK(check_prelie(star).pass);
  CHECK(subadjacent(star).c ==
        descendent_enl(borel, MatrixQ::identity(3)).W.c);

  RelativeRB bad;
  bad.rep = adjoint_rep(fixtures::aff1());
  bad.rep.T = MatrixQ::identity(2);
  bad.K = MatrixQ::identity(2);
  CHECK(kind_of([&] { prelie_from_relrb(bad, MatrixQ::identity(2)); }) ==
        ErrorKind::PrereqFailed);
}

TEST_CASE("transported pre-Lie structure on g") {
  PreLieAlgebra p = p2();
  SubadjacentENL sub = subadjacent_enl(p, MatrixQ::identity(2));

  RelativeRB rb;
  rb.rep = sub.L;
  for (int c : {1, 2, -3}) {
    rb.K = Rat(c) * MatrixQ::identity(2);
    PreLieAlgebra back = prelie_transport(rb, MatrixQ::identity(2));
    CHECK(back.m == p.m); // scalars cancel
    CHECK(subadjacent(back).c == sub.g.c);
  }

  // a non-scalar invertible O-operator also transports cleanly
  rb.K = MatrixQ(2, 2);
  rb.K.at(0, 0) = 1;
  rb.K.at(1, 1) = 2;
  PreLieAlgebra t = prelie_transport(rb, MatrixQ::identity(2));
  CHECK(check_prelie(t).pass);
  CHECK(subadjacent(t).c == sub.g.c);

  // singular K is rejected after the relative check
  rb.K = n0();
  CHECK(kind_of([&] { prelie_transport(rb, MatrixQ::identity(2)); }) ==
        ErrorKind::SingularMatrix);
}

TEST_CASE("canonical r-matrix of a strong pre-enl algebra") {
  PreLieAlgebra p = p2();
  CanonicalR one = canonical_r_prelie(p, MatrixQ::identity(2));
  CHECK(one.verdict.pass);
  CHECK(one.dbl.dim == 4);
  CHECK(check_lie(one.dbl).pass);
  CHECK(one.Ehat == MatrixQ::identity(4));
  for (int i = 0; i < 2; ++i) {
    CHECK(one.r.at(i, 2 + i) == 1);
    CHECK(one.r.at(2 + i, i) == -1);
  }
  CHECK(oracle::schouten(one.dbl, one.r).is_zero());

  CHECK(canonical_r_prelie(p, Rat(3) * MatrixQ::identity(2)).verdict.pass);

  // abelian products accept any operator and always lift
  std::mt19937_64 rng(11);
  PreLieAlgebra ab = abelian_prelie(3);
  for (int trial = 0; trial < 5; ++trial) {
    MatrixQ E = fixtures::rand_matrix(rng, 3, 3);
    CanonicalR out = canonical_r_prelie(ab, E);
    CHECK(out.verdict.pass);
    CHECK(out.dbl.c.is_zero());
  }

  CHECK(kind_of([&] { canonical_r_prelie(p, n0()); }) ==
        ErrorKind::PrereqFailed);
}
