#include "doctest.h"
#include "frtlab/scalar.hpp"

using namespace frtlab;

namespace {

Scalar rat(long long n, long long d) { return Scalar::rational(n, d); }

// Independent route for [n]_q: the telescoping sum q^{n-1} + q^{n-3} + ... + q^{1-n}.
Scalar q_int_oracle(int n, const Scalar& q) {
  Scalar acc = Scalar::zero(q.field());
  for (int e = n - 1; e >= 1 - n; e -= 2) acc += q.pow(e);
  return acc;
}

// Independent route for the quantum binomial via the Pascal-type recurrence
// B(n,m) = q^m B(n-1,m) + q^{m-n} B(n-1,m-1).
Scalar q_binomial_oracle(int n, int m, const Scalar& q) {
  if (m == 0 || m == n) return Scalar::one(q.field());
  return q.pow(m) * q_binomial_oracle(n - 1, m, q) +
         q.pow(m - n) * q_binomial_oracle(n - 1, m - 1, q);
}

}  // namespace

TEST_CASE("rational arithmetic basics") {
  CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
  CHECK(rat(2, 4) == rat(1, 2));  // canonical form
  CHECK((rat(3, 7) * rat(7, 3)).is_one());
  CHECK(rat(-4, -6) == rat(2, 3));
  CHECK(rat(1, -2) == rat(-1, 2));
  CHECK(rat(0, 5).is_zero());
}

TEST_CASE("gaussian arithmetic basics") {
  Scalar i = Scalar::i();
  CHECK(i * i == Scalar::integer(-1, Field::GaussianRational));
  Scalar z = Scalar::gaussian(1, 2, 3);
  CHECK((z * z.inv()).is_one());
  CHECK(z.conj() == Scalar::gaussian(1, -2, 3));
  CHECK((z + z.conj()) == Scalar::rational(2, 3, Field::GaussianRational));
}

TEST_CASE("pow and inverse") {
  Scalar q = rat(5, 3);
  CHECK((q.pow(-2) * q.pow(2)).is_one());
  CHECK(q.pow(0).is_one());
  CHECK(q.pow(3) == q * q * q);
  CHECK_THROWS_AS(Scalar::zero(Field::Rational).inv(), DivisionByZero);
}

TEST_CASE("field modes do not mix") {
  CHECK_THROWS_AS(rat(1, 2) + Scalar::i(), FieldMismatch);
  CHECK_THROWS_AS(rat(1, 2) * Scalar::one(Field::GaussianRational), FieldMismatch);
}

TEST_CASE("field axioms on randomized triples") {
  RandomSource rng(20240521);
  for (int trial = 0; trial < 1000; ++trial) {
    Scalar a = rat(rng.next_int(-20, 20), rng.next_int(1, 12));
    Scalar b = rat(rng.next_int(-20, 20), rng.next_int(1, 12));
    Scalar c = rat(rng.next_int(-20, 20), rng.next_int(1, 12));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK((a * a.inv()).is_one());
  }
}

TEST_CASE("canonical form makes equal values identical") {
  Scalar a = rat(6, 4) - rat(1, 1);
  Scalar b = rat(1, 2);
  CHECK(a == b);
  CHECK(a.num_real() == b.num_real());
  CHECK(a.den() == b.den());
  CHECK(a.str() == b.str());
}

TEST_CASE("string round trips") {
  CHECK(rat(-3, 4).str() == "-3/4");
  CHECK(rat(5, 1).str() == "5");
  CHECK(Scalar::gaussian(1, -2, 7).str() == "(1-2i)/7");
  CHECK(Scalar::parse("-3/4", Field::Rational) == rat(-3, 4));
  CHECK(Scalar::parse("(1-2i)/7", Field::GaussianRational) == Scalar::gaussian(1, -2, 7));
  CHECK(Scalar::parse("i", Field::GaussianRational) == Scalar::i());
  CHECK_THROWS_AS(Scalar::parse("x", Field::Rational), ConfigError);
  CHECK_THROWS_AS(Scalar::parse("(1+2i)/7", Field::Rational), FieldMismatch);
}

TEST_CASE("quantum integers") {
  Scalar q = rat(7, 2);
  CHECK(q_int(0, q).is_zero());
  CHECK(q_int(1, q).is_one());
  CHECK(q_int(2, rat(3, 1)) == rat(10, 3));
  CHECK(q_int(3, rat(2, 1)) == rat(21, 4));
  CHECK(q_int(3, rat(2, 1)) == q_int_oracle(3, rat(2, 1)));
  CHECK_THROWS_AS(q_int(2, rat(1, 1)), DegenerateQ);
  CHECK_THROWS_AS(q_int(2, rat(-1, 1)), DegenerateQ);

  RandomSource rng(7);
  Scalar qq = random_generic(rng, q_power_avoid_list(rat(1, 1), 1));
  for (int n = 0; n <= 12; ++n) {
    CHECK(q_int(n, qq) * (qq - qq.inv()) == qq.pow(n) - qq.pow(-n));
    CHECK(q_int(n, qq) == q_int_oracle(n, qq));
  }
}

TEST_CASE("quantum binomials") {
  Scalar q = rat(3, 2);
  CHECK(q_binomial(5, 0, q).is_one());
  CHECK(q_binomial(2, 1, rat(2, 1)) == rat(5, 2));
  for (int n = 1; n <= 8; ++n)
    for (int m = 0; m <= n; ++m) {
      CHECK(q_binomial(n, m, q) == q_binomial_oracle(n, m, q));
      CHECK(q_binomial(n, m, q) == q_binomial(n, n - m, q));
    }
  CHECK_THROWS_AS(q_binomial(3, -1, q), IndexError);
  CHECK_THROWS_AS(q_binomial(3, 4, q), IndexError);
}

TEST_CASE("generic q guard") {
  CHECK_NOTHROW(QSpecialization::checked(rat(3, 2)));
  CHECK_THROWS_AS(QSpecialization::checked(rat(0, 1)), DegenerateQ);
  CHECK_THROWS_AS(QSpecialization::checked(rat(-1, 1)), DegenerateQ);
  // i is a 4th root of unity, so it fails the generic guard
  CHECK_THROWS_AS(QSpecialization::checked(Scalar::i()), DegenerateQ);
}

TEST_CASE("random_generic avoids the exclusion list and is deterministic") {
  Scalar q = rat(2, 1);
  std::vector<Scalar> avoid = q_power_avoid_list(q, 8);
  RandomSource r1(99), r2(99);
  for (int k = 0; k < 50; ++k) {
    Scalar a = random_generic(r1, avoid);
    Scalar b = random_generic(r2, avoid);
    CHECK(a == b);
    CHECK(!a.is_zero());
    for (const Scalar& bad : avoid) CHECK(a != bad);
  }
}
