#include "frtlab/gamma.hpp"

#include <sstream>

namespace frtlab {

GammaElement GammaElement::checked(const Scalar& a1, const Scalar& a2, const Scalar& b1,
                                   const Scalar& b2, const Scalar& c1, const Scalar& c2) {
  GammaElement g{a1, a2, b1, b2, c1, c2};
  if (a1 * a2 + b1 * b2 != c1 * c2) {
    throw NotFreeFermionic("a1 a2 + b1 b2 != c1 c2 for " + g.str());
  }
  // det of the GL(2) block is a1 a2 + b1 b2 = c1 c2, so the block and the
  // GL(1) parts are invertible together.
  if (c1.is_zero() || c2.is_zero()) {
    throw Singular("c-weights must be nonzero in " + g.str());
  }
  return g;
}

GammaElement GammaElement::identity(Field f) {
  Scalar one = Scalar::one(f), zero = Scalar::zero(f);
  return GammaElement{one, one, zero, zero, one, one};
}

bool GammaElement::operator==(const GammaElement& o) const {
  return a1 == o.a1 && a2 == o.a2 && b1 == o.b1 && b2 == o.b2 && c1 == o.c1 && c2 == o.c2;
}

std::string GammaElement::str() const {
  std::ostringstream out;
  out << "{a1=" << a1.str() << ", a2=" << a2.str() << ", b1=" << b1.str()
      << ", b2=" << b2.str() << ", c1=" << c1.str() << ", c2=" << c2.str() << "}";
  return out.str();
}

GammaElement gamma_mul(const GammaElement& x, const GammaElement& y) {
  GammaElement z;
  z.a1 = x.a1 * y.a1 - x.b2 * y.b1;
  z.a2 = x.a2 * y.a2 - x.b1 * y.b2;
  z.b1 = x.b1 * y.a1 + x.a2 * y.b1;
  z.b2 = x.a1 * y.b2 + x.b2 * y.a2;
  z.c1 = x.c1 * y.c1;
  z.c2 = x.c2 * y.c2;
  return GammaElement::checked(z.a1, z.a2, z.b1, z.b2, z.c1, z.c2);
}

GammaElement gamma_inv(const GammaElement& x) {
  if (x.c1.is_zero() || x.c2.is_zero()) throw Singular("gamma_inv: " + x.str());
  Scalar det = x.c1 * x.c2;  // equals the block determinant
  GammaElement z;
  z.a1 = x.a2 / det;
  z.a2 = x.a1 / det;
  z.b1 = -x.b1 / det;
  z.b2 = -x.b2 / det;
  z.c1 = x.c1.inv();
  z.c2 = x.c2.inv();
  return GammaElement::checked(z.a1, z.a2, z.b1, z.b2, z.c1, z.c2);
}

namespace {

Scalar small_scalar(RandomSource& rng, Field f, bool nonzero) {
  for (;;) {
    long long n = rng.next_int(-5, 5);
    if (nonzero && n == 0) continue;
    long long d = rng.next_int(1, 3);
    return Scalar::rational(n, d, f);
  }
}

}  // namespace

GammaElement random_gamma(RandomSource& rng, Field f) {
  for (;;) {
    Scalar a1 = small_scalar(rng, f, true);
    Scalar a2 = small_scalar(rng, f, true);
    Scalar b1 = small_scalar(rng, f, false);
    Scalar b2 = small_scalar(rng, f, false);
    Scalar c1 = small_scalar(rng, f, true);
    Scalar prod = a1 * a2 + b1 * b2;
    if (prod.is_zero()) continue;
    return GammaElement::checked(a1, a2, b1, b2, c1, prod / c1);
  }
}

GammaElement random_gamma_degenerate(RandomSource& rng, bool a1_zero, bool a2_zero, Field f) {
  if (!a1_zero && !a2_zero) throw WrongCase("random_gamma_degenerate: nothing degenerate");
  Scalar zero = Scalar::zero(f);
  Scalar b1 = small_scalar(rng, f, true);
  Scalar c1 = small_scalar(rng, f, true);
  Scalar c2 = small_scalar(rng, f, true);
  Scalar b2 = c1 * c2 / b1;  // a1 a2 = 0, so b1 b2 = c1 c2 closes the constraint
  Scalar a1 = a1_zero ? zero : small_scalar(rng, f, true);
  Scalar a2 = a2_zero ? zero : small_scalar(rng, f, true);
  return GammaElement::checked(a1, a2, b1, b2, c1, c2);
}

}  // namespace frtlab
