#include "doctest.h"
#include "frtlab/uq.hpp"

using namespace frtlab;

namespace {

Scalar rat(long long n, long long d = 1) { return Scalar::rational(n, d); }

UElement w(std::initializer_list<ULetter> ls) { return UElement::word(UWord(ls)); }

// Independent pairing route: expand the iterated coproduct symbolically and
// pair leg by leg against single factors.
Scalar pairing_via_coproduct(const UElement& u, const Monomial& mono, const Scalar& q) {
  if (mono.empty()) return counit(u);
  int n = static_cast<int>(mono.size());
  UTensorElement cp = coproduct(u, n, q);
  Scalar acc = Scalar::zero(q.field());
  for (const auto& [tw, c] : cp) {
    Scalar prod = c;
    for (int k = 0; k < n && !prod.is_zero(); ++k)
      prod *= pairing_word(tw[k], {mono[k]}, q);
    acc += prod;
  }
  return acc;
}

UTensorWord tw3(UWord a, UWord b, UWord c) { return {a, b, c}; }

}  // namespace

TEST_CASE("coproduct of generators") {
  Scalar q = rat(3, 2);
  UTensorElement k = coproduct(w({ULetter::K1}), 2, q);
  REQUIRE(k.size() == 1);
  CHECK(k.begin()->first == UTensorWord{{ULetter::K1}, {ULetter::K1}});

  UTensorElement e = coproduct(w({ULetter::E1}), 3, q);
  REQUIRE(e.size() == 3);
  CHECK(e.count(tw3({}, {}, {ULetter::E1})) == 1);
  CHECK(e.count(tw3({}, {ULetter::E1}, {ULetter::K1})) == 1);
  CHECK(e.count(tw3({ULetter::E1}, {ULetter::K1}, {ULetter::K1})) == 1);

  UTensorElement f = coproduct(w({ULetter::F0}), 3, q);
  REQUIRE(f.size() == 3);
  CHECK(f.count(tw3({ULetter::F0}, {}, {})) == 1);
  CHECK(f.count(tw3({ULetter::K0inv}, {ULetter::F0}, {})) == 1);
  CHECK(f.count(tw3({ULetter::K0inv}, {ULetter::K0inv}, {ULetter::F0})) == 1);
}

TEST_CASE("coassociativity on random words") {
  Scalar q = rat(3, 2);
  RandomSource rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    UWord word;
    for (int k = 0; k < 3; ++k)
      word.push_back(kULetters[static_cast<std::size_t>(rng.next_int(0, 7))]);
    UElement u = UElement::word(word);

    UTensorElement direct = coproduct(u, 3, q);

    // (Delta x 1) Delta and (1 x Delta) Delta via two-leg expansion
    UTensorElement two = coproduct(u, 2, q);
    UTensorElement left, right;
    for (const auto& [tw, c] : two) {
      UTensorElement inner = coproduct(UElement::word(tw[0]), 2, q);
      for (const auto& [itw, ic] : inner) {
        UTensorWord out = {itw[0], itw[1], tw[1]};
        left[out] = (left.count(out) ? left[out] : Scalar::zero(q.field())) + c * ic;
        if (left[out].is_zero()) left.erase(out);
      }
      UTensorElement inner2 = coproduct(UElement::word(tw[1]), 2, q);
      for (const auto& [itw, ic] : inner2) {
        UTensorWord out = {tw[0], itw[0], itw[1]};
        right[out] = (right.count(out) ? right[out] : Scalar::zero(q.field())) + c * ic;
        if (right[out].is_zero()) right.erase(out);
      }
    }
    CHECK(direct == left);
    CHECK(direct == right);
  }
}

TEST_CASE("counit and antipode on generators") {
  CHECK(counit(w({ULetter::E0})).is_zero());
  CHECK(counit(w({ULetter::K1})).is_one());
  CHECK(counit(w({ULetter::K0, ULetter::K1inv})).is_one());

  CHECK(antipode_U(w({ULetter::K1})) == w({ULetter::K1inv}));
  CHECK(antipode_U(antipode_U(w({ULetter::K1}))) == w({ULetter::K1}));

  UElement se = antipode_U(w({ULetter::E1}));
  UElement expect_e;
  expect_e.add_term({ULetter::E1, ULetter::K1inv}, rat(-1));
  CHECK(se == expect_e);

  UElement sf = antipode_U(w({ULetter::F0}));
  UElement expect_f;
  expect_f.add_term({ULetter::K0, ULetter::F0}, rat(-1));
  CHECK(sf == expect_f);

  // anti-multiplicativity: S(ab) = S(b) S(a)
  UElement a = w({ULetter::E1, ULetter::K0});
  UElement b = w({ULetter::F1});
  CHECK(antipode_U(a * b) == antipode_U(b) * antipode_U(a));
}

TEST_CASE("evaluation representation at r = 1") {
  Scalar q = rat(3, 2), a = rat(5, 7);
  EvalRep rep = eval_rep(a, 1, q);
  CHECK(rep.mat(ULetter::K1).at(0, 0) == q);
  CHECK(rep.mat(ULetter::K1).at(1, 1) == q.inv());
  // e0 v0 = q^-1 a v1 and f0 v1 = q a^-1 v0
  CHECK(rep.mat(ULetter::E0).at(1, 0) == q.inv() * a);
  CHECK(rep.mat(ULetter::F0).at(0, 1) == q * a.inv());
  CHECK(rep.mat(ULetter::E1).at(0, 1).is_one());
  CHECK(rep.mat(ULetter::F1).at(1, 0).is_one());
}

TEST_CASE("K1 K0 is the identity on evaluation representations") {
  Scalar q = rat(3, 2), a = rat(2, 9);
  for (int r = 0; r <= 4; ++r) {
    EvalRep rep = eval_rep(a, r, q);
    CHECK(rep.mat(ULetter::K1) * rep.mat(ULetter::K0) ==
          Matrix::identity(static_cast<std::size_t>(r + 1)));
  }
}

TEST_CASE("defining relations hold on evaluation representations") {
  Scalar q = rat(3, 2);
  RandomSource rng(77);
  for (int r : {1, 2, 3}) {
    Scalar a = random_generic(rng, {});
    UqRelationReport rep = check_uq_relations(eval_rep(a, r, q));
    for (const auto& c : rep.checks) {
      INFO(c.name);
      CHECK(c.pass);
    }
    CHECK(rep.pass);
  }
}

TEST_CASE("perturbed representation fails with the violated relation named") {
  Scalar q = rat(3, 2);
  EvalRep rep = eval_rep(rat(2), 1, q);
  rep.action[ULetter::E1].at(0, 1) += rat(1);
  UqRelationReport out = check_uq_relations(rep);
  CHECK(!out.pass);
  bool found = false;
  for (const auto& c : out.checks)
    if (!c.pass && c.name.find("e1") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("pairing generator table") {
  Scalar q = rat(3, 2), x = rat(7, 5);
  CHECK(pairing_word({ULetter::E0}, {{2, 1, x}}, q) == q.inv() * x);
  CHECK(pairing_word({ULetter::F0}, {{1, 2, x}}, q) == q * x.inv());
  CHECK(pairing_word({ULetter::E1}, {{1, 2, x}}, q).is_one());
  CHECK(pairing_word({ULetter::F1}, {{2, 1, x}}, q).is_one());
  CHECK(pairing_word({ULetter::K1}, {{1, 1, x}}, q) == q);
  CHECK(pairing_word({ULetter::K1}, {{2, 2, x}}, q) == q.inv());
  CHECK(pairing_word({ULetter::K0}, {{1, 1, x}}, q) == q.inv());
  CHECK(pairing_word({ULetter::K1}, {{1, 2, x}}, q).is_zero());
  CHECK(pairing_word({}, {{1, 1, x}}, q).is_one());
  CHECK(pairing_word({}, {{1, 2, x}}, q).is_zero());
}

TEST_CASE("pairing with the empty monomial is the counit") {
  Scalar q = rat(3, 2);
  CHECK(pairing(w({ULetter::K0, ULetter::K1}), {}, q).is_one());
  CHECK(pairing(w({ULetter::E0}), {}, q).is_zero());
}

TEST_CASE("K1 K0 pairs as the counit on monomials") {
  Scalar q = rat(3, 2);
  RandomSource rng(5150);
  UElement k1k0 = w({ULetter::K1, ULetter::K0});
  for (int deg = 1; deg <= 3; ++deg) {
    for (int trial = 0; trial < 20; ++trial) {
      Monomial m;
      bool diag = true;
      for (int k = 0; k < deg; ++k) {
        int i = static_cast<int>(rng.next_int(1, 2));
        int j = static_cast<int>(rng.next_int(1, 2));
        if (i != j) diag = false;
        m.push_back({i, j, random_generic(rng, {})});
      }
      Scalar got = pairing(k1k0, m, q);
      CHECK(got == (diag ? rat(1) : rat(0)));
    }
  }
}

TEST_CASE("pairing agrees with the explicit coproduct route") {
  Scalar q = rat(3, 2);
  RandomSource rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    UWord word;
    int len = static_cast<int>(rng.next_int(0, 3));
    for (int k = 0; k < len; ++k)
      word.push_back(kULetters[static_cast<std::size_t>(rng.next_int(0, 7))]);
    Monomial m;
    int deg = static_cast<int>(rng.next_int(1, 3));
    for (int k = 0; k < deg; ++k)
      m.push_back({static_cast<int>(rng.next_int(1, 2)), static_cast<int>(rng.next_int(1, 2)),
                   random_generic(rng, {})});
    UElement u = UElement::word(word);
    CHECK(pairing(u, m, q) == pairing_via_coproduct(u, m, q));
  }
}

TEST_CASE("pairing satisfies the product axiom <uv, t> = <u, t1><v, t2>") {
  Scalar q = rat(3, 2);
  RandomSource rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    UWord wu, wv;
    for (int k = 0; k < static_cast<int>(rng.next_int(1, 2)); ++k)
      wu.push_back(kULetters[static_cast<std::size_t>(rng.next_int(0, 7))]);
    for (int k = 0; k < static_cast<int>(rng.next_int(1, 2)); ++k)
      wv.push_back(kULetters[static_cast<std::size_t>(rng.next_int(0, 7))]);
    Monomial m;
    int deg = static_cast<int>(rng.next_int(1, 2));
    for (int k = 0; k < deg; ++k)
      m.push_back({static_cast<int>(rng.next_int(1, 2)), static_cast<int>(rng.next_int(1, 2)),
                   random_generic(rng, {})});

    UWord uv = wu;
    uv.insert(uv.end(), wv.begin(), wv.end());
    Scalar lhs = pairing_word(uv, m, q);

    // comultiplication of the monomial: sum over intermediate index tuples
    Scalar rhs = Scalar::zero(Field::Rational);
    std::size_t combos = std::size_t{1} << m.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
      Monomial first = m, second = m;
      for (std::size_t k = 0; k < m.size(); ++k) {
        int mid = static_cast<int>((mask >> k) & 1) + 1;
        first[k].j = mid;
        second[k].i = mid;
      }
      rhs += pairing_word(wu, first, q) * pairing_word(wv, second, q);
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("capped word enumeration") {
  auto words = capped_words(2);
  // length 0: 1, length 1: 8, length 2: 8*8 minus the four ee/ff squares... none
  // are excluded at multiplicity 2, so 64.
  CHECK(words.size() == 1 + 8 + 64);
  auto words3 = capped_words(3);
  for (const UWord& ww : words3) {
    int ecount = 0;
    for (ULetter l : ww)
      if (l == ULetter::E0) ++ecount;
    CHECK(ecount <= 2);
  }
}
