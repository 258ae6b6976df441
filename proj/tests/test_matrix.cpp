#include "doctest.h"
#include "frtlab/matrix.hpp"

using namespace frtlab;

namespace {

Scalar rat(long long n, long long d = 1) { return Scalar::rational(n, d); }

Matrix random_matrix(RandomSource& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m.at(i, j) = rat(rng.next_int(-6, 6), rng.next_int(1, 4));
  return m;
}

}  // namespace

TEST_CASE("rref ranks") {
  CHECK(rref(Matrix::identity(4)).rank == 4);
  Matrix z(3, 3);
  CHECK(rref(z).rank == 0);
  Matrix m = Matrix::from_rows({{rat(1), rat(2)}, {rat(2), rat(4)}});
  RrefResult r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0});
}

TEST_CASE("rank-nullity on random matrices") {
  RandomSource rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = static_cast<std::size_t>(rng.next_int(1, 6));
    std::size_t c = static_cast<std::size_t>(rng.next_int(1, 6));
    Matrix m = random_matrix(rng, r, c);
    RrefResult red = rref(m);
    Subspace ker = kernel(m);
    CHECK(red.rank + ker.dim() == c);
    for (std::size_t i = 0; i < ker.basis().rows(); ++i) {
      Vec v = ker.basis().row(i);
      for (const Scalar& s : m.apply(v)) CHECK(s.is_zero());
    }
  }
}

TEST_CASE("kernel of identity is zero") {
  CHECK(kernel(Matrix::identity(5)).dim() == 0);
}

TEST_CASE("kron bilinearity (AxB)(CxD) = AC x BD") {
  RandomSource rng(777);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
    Matrix c = random_matrix(rng, 2, 2), d = random_matrix(rng, 2, 2);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    CHECK(tensor_operator({a, b}) * tensor_operator({c, d}) ==
          tensor_operator({a * c, b * d}));
  }
}

TEST_CASE("kron with the 1x1 identity is a no-op") {
  RandomSource rng(5);
  Matrix a = random_matrix(rng, 3, 3);
  Matrix one = Matrix::identity(1);
  CHECK(kron(a, one) == a);
  CHECK(kron(one, a) == a);
  CHECK(kron(Matrix::identity(2), Matrix::identity(2)) == Matrix::identity(4));
}

TEST_CASE("tensor_operator uses the first-slot-fastest basis order") {
  // With basis {w1w1, w2w1, w1w2, w2w2}, (A x B) acts with A on the fast index.
  Matrix a = Matrix::from_rows({{rat(0), rat(1)}, {rat(0), rat(0)}});  // a w2 -> w1
  Matrix idm = Matrix::identity(2);
  Matrix op = tensor_operator({a, idm});
  // a x id sends w2 x w1 (index 1) to w1 x w1 (index 0)
  CHECK(op.at(0, 1).is_one());
  CHECK(op.at(2, 3).is_one());
  CHECK(op.at(0, 3).is_zero());
}

TEST_CASE("embed_pair matches the flip-conjugation route") {
  RandomSource rng(4242);
  Matrix m = random_matrix(rng, 4, 4);
  CHECK(embed_pair(m, 1, 2, 2) == m);

  Matrix tau = flip_matrix(2);
  Matrix t23 = embed_pair(tau, 2, 3, 3);
  Matrix t12 = embed_pair(tau, 1, 2, 3);
  // slots (1,3) embedding via conjugation with the slot flips
  CHECK(embed_pair(tau, 1, 3, 3) == t23 * t12 * t23);
  CHECK(embed_pair(m, 1, 3, 3) == t23 * embed_pair(m, 1, 2, 3) * t23);

  Matrix n = random_matrix(rng, 4, 4);
  CHECK(embed_pair(m * n, 1, 3, 3) == embed_pair(m, 1, 3, 3) * embed_pair(n, 1, 3, 3));
  CHECK_THROWS_AS(embed_pair(m, 2, 2, 3), IndexError);
}

TEST_CASE("invariant_closure fixpoint and trivial seed") {
  RandomSource rng(11);
  Matrix op = random_matrix(rng, 4, 4);
  Vec zero(4, rat(0));
  CHECK(invariant_closure(zero, {op}).dim() == 0);

  Vec e0(4, rat(0));
  e0[0] = rat(1);
  Subspace s = invariant_closure(e0, {op});
  // re-application is a fixpoint
  for (std::size_t r = 0; r < s.basis().rows(); ++r)
    CHECK(s.contains(op.apply(s.basis().row(r))));
}

TEST_CASE("algebra_span of the identity alone") {
  CHECK(algebra_span_dim({Matrix::identity(3)}) == 1);
}

TEST_CASE("algebra_span of the full matrix pair") {
  // Shift + diagonal generate all of M_3.
  Matrix shift(3, 3);
  shift.at(0, 1) = rat(1);
  shift.at(1, 2) = rat(1);
  shift.at(2, 0) = rat(1);
  Matrix diag(3, 3);
  diag.at(0, 0) = rat(1);
  diag.at(1, 1) = rat(2);
  diag.at(2, 2) = rat(4);
  CHECK(algebra_span_dim({shift, diag}) == 9);
}

TEST_CASE("weight_invariant_subspaces with distinct weights and no ops") {
  Matrix diag(3, 3);
  diag.at(0, 0) = rat(1);
  diag.at(1, 1) = rat(2);
  diag.at(2, 2) = rat(3);
  auto subs = weight_invariant_subspaces({diag}, {});
  CHECK(subs.size() == 8);  // all coordinate subspaces

  Matrix offdiag = diag;
  offdiag.at(0, 1) = rat(5);
  CHECK_THROWS_AS(weight_invariant_subspaces({offdiag}, {}), NotDiagonal);
}

TEST_CASE("weight_invariant_subspaces filtered by an op") {
  Matrix diag(2, 2);
  diag.at(0, 0) = rat(1);
  diag.at(1, 1) = rat(2);
  Matrix raise(2, 2);
  raise.at(0, 1) = rat(1);  // e_0 <- e_1
  auto subs = weight_invariant_subspaces({diag}, {raise});
  // invariant coordinate subspaces: 0, span{e0}, full
  CHECK(subs.size() == 3);
  CHECK(subs[0].dim() == 0);
  CHECK(subs[1].dim() == 1);
  Vec e0 = {rat(1), rat(0)};
  CHECK(subs[1].contains(e0));
  CHECK(subs[2].dim() == 2);
}

TEST_CASE("determinant") {
  Matrix m = Matrix::from_rows({{rat(2), rat(1)}, {rat(7), rat(4)}});
  CHECK(m.det() == rat(1));
  CHECK(Matrix::identity(4).det() == rat(1));
  Matrix s(2, 2);
  s.at(0, 1) = rat(1);
  s.at(1, 0) = rat(1);
  CHECK(s.det() == rat(-1));
}

TEST_CASE("solve") {
  Matrix m = Matrix::from_rows({{rat(1), rat(2)}, {rat(3), rat(4)}});
  Vec b = {rat(5), rat(11)};
  auto x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == b);

  Matrix sing = Matrix::from_rows({{rat(1), rat(2)}, {rat(2), rat(4)}});
  CHECK(!solve(sing, {rat(1), rat(0)}).has_value());
}
