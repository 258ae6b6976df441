#include "frtlab/scalar.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <sstream>

namespace frtlab {

namespace {

Int gcd3(const Int& a, const Int& b, const Int& c) {
  using boost::multiprecision::gcd;
  return gcd(gcd(a, b), c);
}

void require_same_field(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) {
    throw FieldMismatch("scalar arithmetic across field modes: " + a.str() +
                        " vs " + b.str());
  }
}

}  // namespace

Scalar::Scalar(Int re, Int im, Int den, Field f)
    : re_(std::move(re)), im_(std::move(im)), den_(std::move(den)), field_(f) {
  normalize();
}

void Scalar::normalize() {
  if (den_ == 0) throw DivisionByZero("zero denominator");
  if (field_ == Field::Rational && im_ != 0) {
    throw FieldMismatch("imaginary part in rational mode");
  }
  if (den_ < 0) {
    den_ = -den_;
    re_ = -re_;
    im_ = -im_;
  }
  Int g = gcd3(abs(re_), abs(im_), den_);
  if (g > 1) {
    re_ /= g;
    im_ /= g;
    den_ /= g;
  }
}

Scalar Scalar::integer(long long v, Field f) { return Scalar(Int(v), Int(0), Int(1), f); }

Scalar Scalar::rational(Int num, Int den, Field f) {
  return Scalar(std::move(num), Int(0), std::move(den), f);
}

Scalar Scalar::gaussian(Int re, Int im, Int den) {
  return Scalar(std::move(re), std::move(im), std::move(den), Field::GaussianRational);
}

Scalar Scalar::i() { return gaussian(0, 1, 1); }

Scalar Scalar::operator-() const { return Scalar(-re_, -im_, den_, field_); }

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(*this, o);
  return Scalar(re_ * o.den_ + o.re_ * den_, im_ * o.den_ + o.im_ * den_,
                den_ * o.den_, field_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(*this, o);
  return Scalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_,
                den_ * o.den_, field_);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  // 1/(re + im i) = den (re - im i) / (re^2 + im^2)
  Int nrm = re_ * re_ + im_ * im_;
  return Scalar(den_ * re_, -den_ * im_, nrm, field_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar acc = Scalar::one(field_);
  Scalar base = *this;
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k) {
    if (k & 1ULL) acc *= base;
    base *= base;
    k >>= 1ULL;
  }
  return acc;
}

Scalar Scalar::conj() const { return Scalar(re_, -im_, den_, field_); }

bool Scalar::operator<(const Scalar& o) const {
  if (field_ != o.field_) return field_ < o.field_;
  if (re_ != o.re_) return re_ < o.re_;
  if (im_ != o.im_) return im_ < o.im_;
  return den_ < o.den_;
}

std::string Scalar::str() const {
  std::ostringstream out;
  if (im_ == 0) {
    out << re_;
  } else {
    out << "(" << re_ << (im_ < 0 ? "-" : "+") << abs(im_) << "i)";
  }
  if (den_ != 1) out << "/" << den_;
  return out.str();
}

namespace {

// Parses an optionally signed integer starting at pos; advances pos.
Int parse_int_at(const std::string& s, size_t& pos) {
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = (s[pos] == '-');
    ++pos;
  }
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw ConfigError("bad scalar literal: '" + s + "'");
  Int v(s.substr(start, pos - start));
  return negative ? Int(-v) : v;
}

}  // namespace

Scalar Scalar::parse(const std::string& text, Field f) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ConfigError("empty scalar literal");

  Int re = 0, im = 0, den = 1;
  size_t pos = 0;
  if (s[pos] == '(') {
    // (a+bi) or (a-bi)
    ++pos;
    re = parse_int_at(s, pos);
    if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-'))
      throw ConfigError("bad gaussian literal: '" + text + "'");
    im = parse_int_at(s, pos);
    if (pos >= s.size() || s[pos] != 'i')
      throw ConfigError("bad gaussian literal: '" + text + "'");
    ++pos;
    if (pos >= s.size() || s[pos] != ')')
      throw ConfigError("bad gaussian literal: '" + text + "'");
    ++pos;
  } else if (s[pos] == 'i' || ((s[pos] == '+' || s[pos] == '-') && pos + 1 < s.size() && s[pos + 1] == 'i')) {
    im = (s[pos] == '-') ? -1 : 1;
    pos = s.find('i', pos) + 1;
  } else {
    re = parse_int_at(s, pos);
    if (pos < s.size() && s[pos] == 'i') {
      im = re;
      re = 0;
      ++pos;
    }
  }
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    den = parse_int_at(s, pos);
  }
  if (pos != s.size()) throw ConfigError("trailing characters in scalar literal: '" + text + "'");
  if (im != 0 && f == Field::Rational)
    throw FieldMismatch("gaussian literal in rational mode: '" + text + "'");
  return Scalar(std::move(re), std::move(im), std::move(den), f);
}

QSpecialization QSpecialization::checked(const Scalar& q, int guard_bound) {
  if (q.is_zero()) throw DegenerateQ("q = 0");
  Scalar p = Scalar::one(q.field());
  for (int m = 1; m <= guard_bound; ++m) {
    p *= q;
    if (p.is_one()) {
      throw DegenerateQ("q^" + std::to_string(m) + " = 1 inside the guard bound");
    }
  }
  return QSpecialization{q, guard_bound};
}

Scalar q_int(int n, const Scalar& q) {
  if (n < 0) throw IndexError("q_int: negative n");
  if (q.is_zero() || q.pow(2).is_one()) throw DegenerateQ("q_int needs q^2 != 1, q != 0");
  if (n == 0) return Scalar::zero(q.field());
  return (q.pow(n) - q.pow(-n)) / (q - q.inv());
}

Scalar q_factorial(int n, const Scalar& q) {
  Scalar acc = Scalar::one(q.field());
  for (int k = 1; k <= n; ++k) acc *= q_int(k, q);
  return acc;
}

Scalar q_binomial(int n, int m, const Scalar& q) {
  if (m < 0 || m > n) throw IndexError("q_binomial: need 0 <= m <= n");
  return q_factorial(n, q) / (q_factorial(m, q) * q_factorial(n - m, q));
}

std::uint64_t RandomSource::next_u64() {
  // splitmix64; chosen for bit-exact reproducibility everywhere.
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long long RandomSource::next_int(long long lo, long long hi) {
  if (hi < lo) throw IndexError("RandomSource::next_int: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1ULL;
  return lo + static_cast<long long>(next_u64() % span);
}

Scalar random_generic(RandomSource& rng, const std::vector<Scalar>& avoid, Field f) {
  for (int attempt = 0; attempt < 4096; ++attempt) {
    long long num = rng.next_int(-12, 12);
    long long den = rng.next_int(1, 9);
    if (num == 0) continue;
    Scalar cand = Scalar::rational(num, den, f);
    bool bad = false;
    for (const Scalar& a : avoid)
      if (a == cand) {
        bad = true;
        break;
      }
    if (!bad) return cand;
  }
  throw Error("random_generic: exclusion list too dense");
}

std::vector<Scalar> q_power_avoid_list(const Scalar& q, int bound) {
  std::vector<Scalar> out;
  for (int m = -bound; m <= bound; ++m) out.push_back(q.pow(m));
  return out;
}

}  // namespace frtlab
