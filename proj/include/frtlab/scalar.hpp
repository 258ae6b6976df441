#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "frtlab/error.hpp"

namespace frtlab {

using Int = boost::multiprecision::cpp_int;

enum class Field : std::uint8_t { Rational, GaussianRational };

/// Exact field element of Q or Q(i), stored as (re + im*i)/den in lowest
/// terms with den > 0. The imaginary part is identically zero in Rational
/// mode; arithmetic never crosses between the two modes.
class Scalar {
 public:
  Scalar() : re_(0), im_(0), den_(1), field_(Field::Rational) {}

  static Scalar integer(long long v, Field f = Field::Rational);
  static Scalar rational(Int num, Int den, Field f = Field::Rational);
  static Scalar gaussian(Int re, Int im, Int den);
  static Scalar i();  // the imaginary unit, Gaussian mode
  static Scalar zero(Field f) { return integer(0, f); }
  static Scalar one(Field f) { return integer(1, f); }

  const Int& num_real() const { return re_; }
  const Int& num_imag() const { return im_; }
  const Int& den() const { return den_; }
  Field field() const { return field_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return im_ == 0 && re_ == den_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inv() const;
  Scalar pow(long long e) const;
  Scalar conj() const;

  bool operator==(const Scalar& o) const {
    return field_ == o.field_ && re_ == o.re_ && im_ == o.im_ && den_ == o.den_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  // Total order on the canonical representation; used for map keys only.
  bool operator<(const Scalar& o) const;

  /// "p", "p/q" or "(a+bi)/q" in lowest terms.
  std::string str() const;
  static Scalar parse(const std::string& text, Field f);

 private:
  Scalar(Int re, Int im, Int den, Field f);
  void normalize();

  Int re_, im_, den_;
  Field field_;
};

/// Generic-parameter wrapper: q nonzero and q^m != 1 for 1 <= m <= guard.
struct QSpecialization {
  Scalar q;
  int guard_bound = 64;

  static QSpecialization checked(const Scalar& q, int guard_bound = 64);
};

/// Quantum integer [n]_q = (q^n - q^-n)/(q - q^-1); [0]_q = 0.
Scalar q_int(int n, const Scalar& q);

/// Quantum factorial [n]_q! = [1]_q [2]_q ... [n]_q.
Scalar q_factorial(int n, const Scalar& q);

/// Quantum binomial in the factorial convention [n]!/([m]![n-m]!).
Scalar q_binomial(int n, int m, const Scalar& q);

/// Deterministic generator for sampling exact values. mt19937_64 drives it,
/// but all range mapping is done here so streams are identical across
/// standard libraries.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next_u64();
  /// Uniform integer in [lo, hi].
  long long next_int(long long lo, long long hi);

 private:
  std::uint64_t state_;
};

/// Deterministic nonzero rational (small numerator/denominator) avoiding an
/// exclusion list; repeated calls with the same source continue one stream.
Scalar random_generic(RandomSource& rng, const std::vector<Scalar>& avoid,
                      Field f = Field::Rational);

/// Exclusion list {q^-bound, ..., q^-1, 1, q, ..., q^bound} used when a
/// sample must stay away from small q-powers.
std::vector<Scalar> q_power_avoid_list(const Scalar& q, int bound);

}  // namespace frtlab
