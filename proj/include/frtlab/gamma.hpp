#pragma once

#include <string>

#include "frtlab/scalar.hpp"

namespace frtlab {

/// Element of the six-vertex parameter group: six weights subject to the
/// free-fermionic condition a1 a2 + b1 b2 = c1 c2, with c1, c2 nonzero and
/// the 2x2 block [[a1, b2], [-b1, a2]] invertible. The group is isomorphic
/// to GL(2) x GL(1) via (block, c1).
struct GammaElement {
  Scalar a1, a2, b1, b2, c1, c2;

  static GammaElement checked(const Scalar& a1, const Scalar& a2, const Scalar& b1,
                              const Scalar& b2, const Scalar& c1, const Scalar& c2);
  static GammaElement identity(Field f = Field::Rational);

  Field field() const { return c1.field(); }
  bool operator==(const GammaElement& o) const;
  std::string str() const;
};

GammaElement gamma_mul(const GammaElement& x, const GammaElement& y);
GammaElement gamma_inv(const GammaElement& x);

/// Uniform-ish random group element: a1, a2, b1, b2, c1 sampled small,
/// c2 solved from the constraint (resampling while it lands on zero).
GammaElement random_gamma(RandomSource& rng, Field f = Field::Rational);

/// Random element with a1 = 0 and/or a2 = 0: b1, c1, c2 sampled nonzero and
/// b2 = c1 c2 / b1 solves the constraint.
GammaElement random_gamma_degenerate(RandomSource& rng, bool a1_zero, bool a2_zero,
                                     Field f = Field::Rational);

}  // namespace frtlab
