#include "doctest.h"
#include "frtlab/rmatrix.hpp"

using namespace frtlab;

namespace {

Scalar rat(long long n, long long d = 1) { return Scalar::rational(n, d); }

Matrix tau_restricted() {
  // flip on two 2-dim slots in the fixed tensor order
  return flip_matrix(2);
}

}  // namespace

TEST_CASE("group law: identity, closure, associativity, inverses") {
  RandomSource rng(101);
  GammaElement e = GammaElement::identity();
  for (int trial = 0; trial < 100; ++trial) {
    GammaElement x = random_gamma(rng);
    GammaElement y = random_gamma(rng);
    GammaElement w = random_gamma(rng);

    CHECK(gamma_mul(x, e) == x);
    CHECK(gamma_mul(e, x) == x);

    // closure: the product is validated on construction, but re-check the
    // constraint explicitly
    GammaElement z = gamma_mul(x, y);
    CHECK(z.c1 * z.c2 - z.a1 * z.a2 - z.b1 * z.b2 == rat(0));

    CHECK(gamma_mul(gamma_mul(x, y), w) == gamma_mul(x, gamma_mul(y, w)));
    CHECK(gamma_mul(x, gamma_inv(x)) == e);
    CHECK(gamma_inv(gamma_inv(x)) == x);
  }
  CHECK(gamma_inv(e) == e);
}

TEST_CASE("group law against the 2x2 block model") {
  // x -> ([[a1, b2], [-b1, a2]], c1, c2) must be a homomorphism
  RandomSource rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    GammaElement x = random_gamma(rng);
    GammaElement y = random_gamma(rng);
    Matrix bx = Matrix::from_rows({{x.a1, x.b2}, {-x.b1, x.a2}});
    Matrix by = Matrix::from_rows({{y.a1, y.b2}, {-y.b1, y.a2}});
    GammaElement z = gamma_mul(x, y);
    Matrix bz = Matrix::from_rows({{z.a1, z.b2}, {-z.b1, z.a2}});
    CHECK(bx * by == bz);
    CHECK(bz.det() == z.c1 * z.c2);
  }
}

TEST_CASE("gamma validation errors") {
  CHECK_THROWS_AS(GammaElement::checked(rat(1), rat(1), rat(1), rat(1), rat(1), rat(1)),
                  NotFreeFermionic);
  CHECK_THROWS_AS(GammaElement::checked(rat(0), rat(0), rat(1), rat(0), rat(0), rat(1)),
                  Singular);
}

TEST_CASE("affine solution: shape and degeneracies") {
  Scalar q = rat(3);
  Matrix r1 = r_affine_sl2(q, rat(1)).matrix;
  CHECK(r1 == tau_restricted().scaled(q - q.inv()));

  CHECK(rref(r_affine_sl2(q, rat(9)).matrix).rank == 1);
  CHECK(rref(r_affine_sl2(q, rat(1, 9)).matrix).rank == 3);
  // any other spectral point leaves it invertible
  CHECK(rref(r_affine_sl2(q, rat(5, 7)).matrix).rank == 4);

  CHECK_THROWS_AS(r_affine_sl2(rat(1), rat(2)), DegenerateQ);
}

TEST_CASE("affine solution is free-fermionic exactly at q = +-i") {
  Field g = Field::GaussianRational;
  for (Scalar q : {Scalar::i(), -Scalar::i()}) {
    for (long long xi : {2, 3, 7}) {
      Scalar x = Scalar::rational(xi, 5, g);
      Scalar lhs = (q - x * q.inv()).pow(2) + (Scalar::one(g) - x).pow(2);
      Scalar rhs = x * (q - q.inv()).pow(2);
      CHECK(lhs == rhs);
      CHECK_NOTHROW(affine_sl2_gamma(q, x));
    }
  }
  // at a rational q the same weights fail the constraint
  CHECK_THROWS_AS(affine_sl2_gamma(rat(3), rat(2)), NotFreeFermionic);
}

TEST_CASE("free-fermion solution: identity element and determinant") {
  GammaElement e = GammaElement::identity();
  CHECK(r_free_fermion(e).matrix == tau_restricted());

  RandomSource rng(555);
  Matrix tau = tau_restricted();
  for (int trial = 0; trial < 100; ++trial) {
    GammaElement x = random_gamma(rng);
    Matrix tr = tau * r_free_fermion(x).matrix;
    CHECK(tr.det() == x.a1.pow(2) * x.a2.pow(2));
  }
}

TEST_CASE("Perk-Schultz weights") {
  Scalar q = rat(5, 2);
  RandomSource rng(606);
  for (int trial = 0; trial < 20; ++trial) {
    Scalar x = random_generic(rng, {});
    Matrix m = r_perk_schultz(q, x).matrix;
    // free-fermionic identity (q - xq^-1)(-q^-1 + xq) + (1-x)^2 = x(q - q^-1)^2
    CHECK(m.at(0, 0) * m.at(3, 3) + m.at(1, 1) * m.at(2, 2) == m.at(1, 2) * m.at(2, 1));
    CHECK_NOTHROW(perk_schultz_gamma(q, x));
  }
  Matrix at1 = r_perk_schultz(q, rat(1)).matrix;
  CHECK(at1.at(0, 0) == q - q.inv());
  CHECK(at1.at(1, 1).is_zero());
  CHECK(at1.at(2, 2).is_zero());
  CHECK(at1.at(3, 3) == q - q.inv());
  CHECK(at1.at(1, 2) == q - q.inv());
  CHECK(at1.at(2, 1) == q - q.inv());
}

TEST_CASE("ice weights") {
  Scalar z = rat(4, 3);
  Matrix t0 = r_gamma_ice(rat(0), z).matrix;
  CHECK(t0.at(0, 0).is_one());
  CHECK(t0.at(1, 1).is_zero());
  CHECK(t0.at(1, 2) == z);
  CHECK(t0.at(2, 1).is_one());
  CHECK(t0.at(2, 2) == z);
  CHECK(t0.at(3, 3) == z);

  RandomSource rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Scalar t = random_generic(rng, {rat(-1)});
    Scalar zz = random_generic(rng, {});
    Matrix m = r_gamma_ice(t, zz).matrix;
    CHECK(m.at(0, 0) * m.at(3, 3) + m.at(1, 1) * m.at(2, 2) == m.at(1, 2) * m.at(2, 1));
  }
}

TEST_CASE("parametrized YBE: affine family over the multiplicative group") {
  Scalar q = rat(3, 2);
  RandomSource rng(2024);
  std::vector<Scalar> avoid = {rat(0)};
  std::vector<std::pair<ParamPoint, ParamPoint>> samples;
  for (int k = 0; k < 50; ++k) {
    samples.emplace_back(random_generic(rng, avoid), random_generic(rng, avoid));
  }
  // degenerate spectral ratios stay solutions
  samples.emplace_back(q.pow(2), rat(5));
  samples.emplace_back(q.pow(-2), rat(5));
  samples.emplace_back(rat(5), q.pow(2));
  PybeReport rep = check_pybe(provider_affine_sl2(q), samples);
  CHECK(rep.pass);
  for (const auto& s : rep.samples) CHECK(s.zero_residual);
}

TEST_CASE("parametrized YBE: free-fermion family over the parameter group") {
  RandomSource rng(99);
  std::vector<std::pair<ParamPoint, ParamPoint>> samples;
  for (int k = 0; k < 50; ++k) {
    samples.emplace_back(random_gamma(rng), random_gamma(rng));
  }
  // degenerate pairs included
  samples.emplace_back(random_gamma_degenerate(rng, true, true),
                       random_gamma(rng));
  PybeReport rep = check_pybe(provider_free_fermion(), samples);
  CHECK(rep.pass);
}

TEST_CASE("parametrized YBE: perturbed entry is reported") {
  Scalar q = rat(3, 2);
  RProvider bad = [q](const ParamPoint& p) {
    Matrix m = r_affine_sl2(q, std::get<Scalar>(p)).matrix;
    m.at(0, 1) += Scalar::one(Field::Rational);
    return m;
  };
  PybeReport rep = check_pybe(bad, {{rat(2), rat(3)}});
  CHECK(!rep.pass);
  REQUIRE(rep.samples.size() == 1);
  CHECK(!rep.samples[0].zero_residual);
  CHECK(!rep.samples[0].residual.is_zero());
}

TEST_CASE("parametrized YBE: embedded specializations") {
  // affine solution at q = i, embedded into the parameter group
  RandomSource rng(3);
  Field g = Field::GaussianRational;
  Scalar qi = Scalar::i();
  std::vector<std::pair<ParamPoint, ParamPoint>> samples;
  for (int k = 0; k < 10; ++k) {
    Scalar x = Scalar::rational(rng.next_int(1, 9), rng.next_int(1, 4), g);
    Scalar y = Scalar::rational(rng.next_int(1, 9), rng.next_int(1, 4), g);
    samples.emplace_back(affine_sl2_gamma(qi, x), affine_sl2_gamma(qi, y));
  }
  CHECK(check_pybe(provider_free_fermion(), samples).pass);

  // Perk-Schultz at a rational q, same embedding
  Scalar q = rat(7, 3);
  std::vector<std::pair<ParamPoint, ParamPoint>> ps;
  RandomSource rng2(4);
  for (int k = 0; k < 10; ++k) {
    Scalar x = rat(rng2.next_int(1, 9), rng2.next_int(1, 4));
    Scalar y = rat(rng2.next_int(1, 9), rng2.next_int(1, 4));
    ps.emplace_back(perk_schultz_gamma(q, x), perk_schultz_gamma(q, y));
  }
  CHECK(check_pybe(provider_free_fermion(), ps).pass);

  // ice weights within their own two-parameter family
  std::vector<std::pair<ParamPoint, ParamPoint>> ice;
  RandomSource rng3(5);
  for (int k = 0; k < 10; ++k) {
    auto el = [&](void) {
      Scalar t = rat(rng3.next_int(1, 6), rng3.next_int(1, 3));
      Scalar z = rat(rng3.next_int(1, 6), rng3.next_int(1, 3));
      Matrix m = r_gamma_ice(t, z).matrix;
      return gamma_from_weights(m.at(0, 0), m.at(3, 3), m.at(1, 1), m.at(2, 2),
                                m.at(1, 2), m.at(2, 1));
    };
    ice.emplace_back(el(), el());
  }
  CHECK(check_pybe(provider_free_fermion(), ice).pass);
}
