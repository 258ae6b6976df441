#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "frtlab/matrix.hpp"
#include "frtlab/scalar.hpp"

namespace frtlab {

/// Generator alphabet of the quantized affine enveloping algebra.
enum class ULetter : std::uint8_t { K0, K0inv, K1, K1inv, E0, E1, F0, F1 };

constexpr std::array<ULetter, 8> kULetters = {ULetter::K0, ULetter::K0inv, ULetter::K1,
                                              ULetter::K1inv, ULetter::E0, ULetter::E1,
                                              ULetter::F0, ULetter::F1};

std::string letter_name(ULetter l);
ULetter letter_from_name(const std::string& name);

using UWord = std::vector<ULetter>;

/// Finite linear combination of free words in the generators. Words are
/// never rewritten: every check factors through representations, so no
/// normal form is needed on this side.
class UElement {
 public:
  UElement() = default;
  explicit UElement(Field f) : field_(f) {}
  static UElement word(const UWord& w, Field f = Field::Rational);
  static UElement unit(Field f = Field::Rational) { return word({}, f); }

  void add_term(const UWord& w, const Scalar& c);
  const std::map<UWord, Scalar>& terms() const { return terms_; }
  Field field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }

  UElement operator+(const UElement& o) const;
  UElement operator-(const UElement& o) const;
  UElement operator*(const UElement& o) const;  // concatenation product
  UElement scaled(const Scalar& s) const;
  bool operator==(const UElement& o) const;

  std::string str() const;

 private:
  Field field_ = Field::Rational;
  std::map<UWord, Scalar> terms_;
};

/// Element of the n-fold tensor power, kept as words per leg.
using UTensorWord = std::vector<UWord>;
using UTensorElement = std::map<UTensorWord, Scalar>;

/// Iterated comultiplication: legs = 1 is the identity, legs = 2 the
/// comultiplication, higher legs the left-nested composition.
UTensorElement coproduct(const UElement& u, int legs, const Scalar& q);

Scalar counit(const UElement& u);
UElement antipode_U(const UElement& u);

/// The (r+1)-dimensional evaluation representation at spectral point a:
/// one matrix per generator letter.
struct EvalRep {
  Scalar a;
  int r = 0;
  Scalar q;
  std::map<ULetter, Matrix> action;

  const Matrix& mat(ULetter l) const { return action.at(l); }
};

EvalRep eval_rep(const Scalar& a, int r, const Scalar& q);

struct RelationCheck {
  std::string name;
  bool pass = false;
};

struct UqRelationReport {
  bool pass = false;
  std::vector<RelationCheck> checks;
};

/// Exact check of every defining relation (Cartan commutation, e-f
/// commutators, both Serre relations) on a candidate representation.
UqRelationReport check_uq_relations(const std::map<ULetter, Matrix>& action,
                                    const Scalar& q);
UqRelationReport check_uq_relations(const EvalRep& rep);

/// One factor t_{ij}(x) of a quadratic-algebra monomial.
struct MonoFactor {
  int i = 1, j = 1;  // indices in {1, 2}
  Scalar point;      // spectral parameter
};

using Monomial = std::vector<MonoFactor>;

/// Generator table of the duality pairing at spectral point x: a 2x2 matrix
/// per letter, extended multiplicatively over words.
Matrix pairing_generator_matrix(ULetter l, const Scalar& x, const Scalar& q);

/// The tensor representation of the pairing at a fixed point sequence:
/// rho(letter) = (pi_{x1} x ... x pi_{xn}) of the letter's iterated
/// coproduct. Word representations are memoized.
class TensorPairing {
 public:
  TensorPairing(const std::vector<Scalar>& points, const Scalar& q);

  const Matrix& rho(ULetter l) const { return rho_.at(l); }
  const Matrix& word_rep(const UWord& w);
  std::size_t legs() const { return points_.size(); }

 private:
  std::vector<Scalar> points_;
  Scalar q_;
  std::map<ULetter, Matrix> rho_;
  std::map<UWord, Matrix> memo_;
};

/// <u, t_{i1 j1}(x1) ... t_{in jn}(xn)>, the multi-entry of the tensor
/// representation applied to the iterated coproduct; <u, 1> is the counit.
Scalar pairing(const UElement& u, const Monomial& mono, const Scalar& q);
Scalar pairing_word(const UWord& w, const Monomial& mono, const Scalar& q);

/// Same pairing but with the leg representation reused across calls whose
/// monomials share a point sequence.
class PairingCache {
 public:
  explicit PairingCache(const Scalar& q) : q_(q) {}
  Scalar pair(const UElement& u, const Monomial& mono);
  Scalar pair_word(const UWord& w, const Monomial& mono);

 private:
  TensorPairing& rep_for(const std::vector<Scalar>& points);
  Scalar q_;
  std::map<std::vector<Scalar>, TensorPairing> reps_;
};

/// All words of length <= max_len whose e/f letter multiplicities stay <= 2.
/// Used as the probe set for well-definedness sweeps.
std::vector<UWord> capped_words(int max_len, bool cap_ef = true);

}  // namespace frtlab
