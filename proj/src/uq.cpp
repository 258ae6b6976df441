#include "frtlab/uq.hpp"

#include <sstream>

namespace frtlab {

std::string letter_name(ULetter l) {
  switch (l) {
    case ULetter::K0: return "K0";
    case ULetter::K0inv: return "K0^-1";
    case ULetter::K1: return "K1";
    case ULetter::K1inv: return "K1^-1";
    case ULetter::E0: return "e0";
    case ULetter::E1: return "e1";
    case ULetter::F0: return "f0";
    case ULetter::F1: return "f1";
  }
  throw Error("unreachable");
}

ULetter letter_from_name(const std::string& name) {
  for (ULetter l : kULetters)
    if (letter_name(l) == name) return l;
  throw ConfigError("unknown generator letter: '" + name + "'");
}

UElement UElement::word(const UWord& w, Field f) {
  UElement u(f);
  u.add_term(w, Scalar::one(f));
  return u;
}

void UElement::add_term(const UWord& w, const Scalar& c) {
  if (c.is_zero()) return;
  field_ = c.field();
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UElement UElement::operator+(const UElement& o) const {
  UElement out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, c);
  return out;
}

UElement UElement::operator-(const UElement& o) const {
  UElement out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, -c);
  return out;
}

UElement UElement::operator*(const UElement& o) const {
  UElement out(field_);
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) {
      UWord w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      out.add_term(w, c1 * c2);
    }
  return out;
}

UElement UElement::scaled(const Scalar& s) const {
  UElement out(field_);
  for (const auto& [w, c] : terms_) out.add_term(w, c * s);
  return out;
}

bool UElement::operator==(const UElement& o) const { return terms_ == o.terms_; }

std::string UElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.str() << "*";
    if (w.empty()) out << "1";
    for (ULetter l : w) out << letter_name(l) << " ";
  }
  return out.str();
}

namespace {

bool is_k_letter(ULetter l) {
  return l == ULetter::K0 || l == ULetter::K0inv || l == ULetter::K1 || l == ULetter::K1inv;
}

ULetter cartan_of(ULetter l) {
  switch (l) {
    case ULetter::E0: case ULetter::F0: return ULetter::K0;
    case ULetter::E1: case ULetter::F1: return ULetter::K1;
    default: throw Error("cartan_of: not a root letter");
  }
}

ULetter inverse_cartan_of(ULetter l) {
  return cartan_of(l) == ULetter::K0 ? ULetter::K0inv : ULetter::K1inv;
}

// Iterated coproduct of a single letter over `legs` legs.
UTensorElement letter_coproduct(ULetter l, int legs, Field f) {
  UTensorElement out;
  Scalar one = Scalar::one(f);
  if (is_k_letter(l)) {
    out[UTensorWord(legs, UWord{l})] = one;
    return out;
  }
  bool is_e = (l == ULetter::E0 || l == ULetter::E1);
  for (int k = 0; k < legs; ++k) {
    UTensorWord tw(legs);
    for (int m = 0; m < legs; ++m) {
      if (m == k) {
        tw[m] = UWord{l};
      } else if (is_e) {
        // unit before the root letter, Cartan letter after it
        tw[m] = (m < k) ? UWord{} : UWord{cartan_of(l)};
      } else {
        // inverse Cartan before, unit after
        tw[m] = (m < k) ? UWord{inverse_cartan_of(l)} : UWord{};
      }
    }
    out[tw] = one;
  }
  return out;
}

void tensor_add(UTensorElement& acc, const UTensorWord& w, const Scalar& c) {
  auto it = acc.find(w);
  if (it == acc.end()) {
    if (!c.is_zero()) acc.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace

UTensorElement coproduct(const UElement& u, int legs, const Scalar& q) {
  (void)q;
  if (legs < 1) throw IndexError("coproduct: legs >= 1");
  Field f = u.field();
  UTensorElement out;
  for (const auto& [word, coeff] : u.terms()) {
    UTensorElement acc;
    acc[UTensorWord(legs)] = Scalar::one(f);
    for (ULetter l : word) {
      UTensorElement next;
      UTensorElement lc = letter_coproduct(l, legs, f);
      for (const auto& [tw1, c1] : acc)
        for (const auto& [tw2, c2] : lc) {
          UTensorWord tw = tw1;
          for (int m = 0; m < legs; ++m)
            tw[m].insert(tw[m].end(), tw2[m].begin(), tw2[m].end());
          tensor_add(next, tw, c1 * c2);
        }
      acc.swap(next);
    }
    for (const auto& [tw, c] : acc) tensor_add(out, tw, coeff * c);
  }
  return out;
}

Scalar counit(const UElement& u) {
  Field f = u.field();
  Scalar out = Scalar::zero(f);
  for (const auto& [word, coeff] : u.terms()) {
    bool killed = false;
    for (ULetter l : word)
      if (!is_k_letter(l)) {
        killed = true;
        break;
      }
    if (!killed) out += coeff;
  }
  return out;
}

UElement antipode_U(const UElement& u) {
  Field f = u.field();
  auto letter_antipode = [&](ULetter l) {
    UElement out(f);
    Scalar one = Scalar::one(f);
    switch (l) {
      case ULetter::K0: out.add_term({ULetter::K0inv}, one); break;
      case ULetter::K0inv: out.add_term({ULetter::K0}, one); break;
      case ULetter::K1: out.add_term({ULetter::K1inv}, one); break;
      case ULetter::K1inv: out.add_term({ULetter::K1}, one); break;
      case ULetter::E0: out.add_term({ULetter::E0, ULetter::K0inv}, -one); break;
      case ULetter::E1: out.add_term({ULetter::E1, ULetter::K1inv}, -one); break;
      case ULetter::F0: out.add_term({ULetter::K0, ULetter::F0}, -one); break;
      case ULetter::F1: out.add_term({ULetter::K1, ULetter::F1}, -one); break;
    }
    return out;
  };
  UElement out(f);
  for (const auto& [word, coeff] : u.terms()) {
    UElement acc = UElement::unit(f);
    // anti-multiplicative: S(ab) = S(b) S(a)
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = acc * letter_antipode(*it);
    out = out + acc.scaled(coeff);
  }
  return out;
}

EvalRep eval_rep(const Scalar& a, int r, const Scalar& q) {
  if (a.is_zero()) throw DegenerateQ("evaluation point must be nonzero");
  if (r < 0) throw IndexError("eval_rep: r >= 0");
  Field f = q.field();
  int d = r + 1;
  EvalRep rep{a, r, q, {}};
  Matrix k1(d, d, f), k0(d, d, f), k1i(d, d, f), k0i(d, d, f);
  Matrix e1(d, d, f), f1(d, d, f), e0(d, d, f), f0(d, d, f);
  for (int j = 0; j <= r; ++j) {
    k1.at(j, j) = q.pow(r - 2 * j);
    k0.at(j, j) = q.pow(2 * j - r);
    k1i.at(j, j) = q.pow(2 * j - r);
    k0i.at(j, j) = q.pow(r - 2 * j);
    if (j >= 1) {
      e1.at(j - 1, j) = q_int(r - j + 1, q);
      f0.at(j - 1, j) = q * a.inv() * q_int(r - j + 1, q);
    }
    if (j < r) {
      f1.at(j + 1, j) = q_int(j + 1, q);
      e0.at(j + 1, j) = q.inv() * a * q_int(j + 1, q);
    }
  }
  rep.action[ULetter::K1] = k1;
  rep.action[ULetter::K0] = k0;
  rep.action[ULetter::K1inv] = k1i;
  rep.action[ULetter::K0inv] = k0i;
  rep.action[ULetter::E1] = e1;
  rep.action[ULetter::F1] = f1;
  rep.action[ULetter::E0] = e0;
  rep.action[ULetter::F0] = f0;
  return rep;
}

namespace {

int cartan_entry(int i, int j) { return i == j ? 2 : -2; }

}  // namespace

UqRelationReport check_uq_relations(const std::map<ULetter, Matrix>& action, const Scalar& q) {
  UqRelationReport report;
  report.pass = true;
  const Matrix& k0 = action.at(ULetter::K0);
  const Matrix& k1 = action.at(ULetter::K1);
  const Matrix& k0i = action.at(ULetter::K0inv);
  const Matrix& k1i = action.at(ULetter::K1inv);
  std::size_t d = k0.rows();
  Field f = q.field();
  Matrix idm = Matrix::identity(d, f);

  auto record = [&](const std::string& name, bool ok) {
    report.checks.push_back({name, ok});
    if (!ok) report.pass = false;
  };

  record("K0 K0^-1 = 1", k0 * k0i == idm && k0i * k0 == idm);
  record("K1 K1^-1 = 1", k1 * k1i == idm && k1i * k1 == idm);
  record("K0 K1 = K1 K0", k0 * k1 == k1 * k0);

  const Matrix ks[2] = {k0, k1};
  const Matrix kis[2] = {k0i, k1i};
  const Matrix es[2] = {action.at(ULetter::E0), action.at(ULetter::E1)};
  const Matrix fs[2] = {action.at(ULetter::F0), action.at(ULetter::F1)};

  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Scalar qa = q.pow(cartan_entry(i, j));
      record("K" + std::to_string(i) + " e" + std::to_string(j) + " K" +
                 std::to_string(i) + "^-1 = q^a e" + std::to_string(j),
             ks[i] * es[j] * kis[i] == es[j].scaled(qa));
      record("K" + std::to_string(i) + " f" + std::to_string(j) + " K" +
                 std::to_string(i) + "^-1 = q^-a f" + std::to_string(j),
             ks[i] * fs[j] * kis[i] == fs[j].scaled(qa.inv()));
    }

  Scalar denom = q - q.inv();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Matrix lhs = es[i] * fs[j] - fs[j] * es[i];
      Matrix rhs(d, d, f);
      if (i == j) rhs = (ks[i] - kis[i]).scaled(denom.inv());
      record("e" + std::to_string(i) + " f" + std::to_string(j) + " - f" +
                 std::to_string(j) + " e" + std::to_string(i) + " = delta (K-K^-1)/(q-q^-1)",
             lhs == rhs);
    }

  // Serre relations, with the alternating sign the q-binomial expansion needs.
  auto serre = [&](const Matrix& xi, const Matrix& xj) {
    Matrix acc(d, d, f);
    for (int s = 0; s <= 3; ++s) {
      Matrix term = idm;
      for (int p = 0; p < 3 - s; ++p) term = term * xi;
      term = term * xj;
      for (int p = 0; p < s; ++p) term = term * xi;
      Scalar coeff = q_binomial(3, s, q);
      if (s % 2 == 1) coeff = -coeff;
      acc = acc + term.scaled(coeff);
    }
    return acc.is_zero();
  };
  record("Serre e0 e1", serre(es[0], es[1]));
  record("Serre e1 e0", serre(es[1], es[0]));
  record("Serre f0 f1", serre(fs[0], fs[1]));
  record("Serre f1 f0", serre(fs[1], fs[0]));

  return report;
}

UqRelationReport check_uq_relations(const EvalRep& rep) {
  return check_uq_relations(rep.action, rep.q);
}

Matrix pairing_generator_matrix(ULetter l, const Scalar& x, const Scalar& q) {
  Field f = q.field();
  Matrix m(2, 2, f);
  switch (l) {
    case ULetter::K1:
      m.at(0, 0) = q;
      m.at(1, 1) = q.inv();
      break;
    case ULetter::K0:
      m.at(0, 0) = q.inv();
      m.at(1, 1) = q;
      break;
    case ULetter::K1inv:
      m.at(0, 0) = q.inv();
      m.at(1, 1) = q;
      break;
    case ULetter::K0inv:
      m.at(0, 0) = q;
      m.at(1, 1) = q.inv();
      break;
    case ULetter::E1:
      m.at(0, 1) = Scalar::one(f);
      break;
    case ULetter::E0:
      m.at(1, 0) = q.inv() * x;
      break;
    case ULetter::F1:
      m.at(1, 0) = Scalar::one(f);
      break;
    case ULetter::F0:
      m.at(0, 1) = q * x.inv();
      break;
  }
  return m;
}

TensorPairing::TensorPairing(const std::vector<Scalar>& points, const Scalar& q)
    : points_(points), q_(q) {
  if (points.empty()) throw IndexError("TensorPairing: need at least one leg");
  Field f = q.field();
  std::size_t n = points.size();
  Matrix id2 = Matrix::identity(2, f);
  for (ULetter l : kULetters) {
    if (is_k_letter(l)) {
      std::vector<Matrix> slots;
      for (std::size_t k = 0; k < n; ++k)
        slots.push_back(pairing_generator_matrix(l, points[k], q));
      rho_[l] = tensor_operator(slots);
      continue;
    }
    bool is_e = (l == ULetter::E0 || l == ULetter::E1);
    std::size_t dim = std::size_t{1} << n;
    Matrix acc(dim, dim, f);
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Matrix> slots;
      for (std::size_t m = 0; m < n; ++m) {
        if (m == k) {
          slots.push_back(pairing_generator_matrix(l, points[m], q));
        } else if (is_e) {
          slots.push_back(m < k ? id2 : pairing_generator_matrix(cartan_of(l), points[m], q));
        } else {
          slots.push_back(m < k ? pairing_generator_matrix(inverse_cartan_of(l), points[m], q)
                                : id2);
        }
      }
      acc = acc + tensor_operator(slots);
    }
    rho_[l] = acc;
  }
}

const Matrix& TensorPairing::word_rep(const UWord& w) {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  Matrix m;
  if (w.empty()) {
    m = Matrix::identity(std::size_t{1} << points_.size(), q_.field());
  } else {
    UWord prefix(w.begin(), w.end() - 1);
    m = word_rep(prefix) * rho_.at(w.back());
  }
  return memo_.emplace(w, std::move(m)).first->second;
}

namespace {

Scalar pairing_with_rep(TensorPairing& rep, const UWord& w, const Monomial& mono) {
  std::size_t row = 0, col = 0;
  for (std::size_t k = 0; k < mono.size(); ++k) {
    if (mono[k].i < 1 || mono[k].i > 2 || mono[k].j < 1 || mono[k].j > 2)
      throw IndexError("monomial indices must be 1 or 2");
    row += static_cast<std::size_t>(mono[k].i - 1) << k;  // first leg fastest
    col += static_cast<std::size_t>(mono[k].j - 1) << k;
  }
  return rep.word_rep(w).at(row, col);
}

}  // namespace

Scalar pairing_word(const UWord& w, const Monomial& mono, const Scalar& q) {
  if (mono.empty()) return counit(UElement::word(w, q.field()));
  std::vector<Scalar> points;
  for (const MonoFactor& mf : mono) points.push_back(mf.point);
  TensorPairing rep(points, q);
  return pairing_with_rep(rep, w, mono);
}

Scalar pairing(const UElement& u, const Monomial& mono, const Scalar& q) {
  Scalar acc = Scalar::zero(q.field());
  for (const auto& [w, c] : u.terms()) acc += c * pairing_word(w, mono, q);
  return acc;
}

TensorPairing& PairingCache::rep_for(const std::vector<Scalar>& points) {
  auto it = reps_.find(points);
  if (it == reps_.end()) it = reps_.emplace(points, TensorPairing(points, q_)).first;
  return it->second;
}

Scalar PairingCache::pair_word(const UWord& w, const Monomial& mono) {
  if (mono.empty()) return counit(UElement::word(w, q_.field()));
  std::vector<Scalar> points;
  for (const MonoFactor& mf : mono) points.push_back(mf.point);
  return pairing_with_rep(rep_for(points), w, mono);
}

Scalar PairingCache::pair(const UElement& u, const Monomial& mono) {
  Scalar acc = Scalar::zero(q_.field());
  for (const auto& [w, c] : u.terms()) acc += c * pair_word(w, mono);
  return acc;
}

std::vector<UWord> capped_words(int max_len, bool cap_ef) {
  std::vector<UWord> out;
  out.push_back({});
  std::vector<UWord> frontier = {{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<UWord> next;
    for (const UWord& w : frontier)
      for (ULetter l : kULetters) {
        if (cap_ef && !is_k_letter(l)) {
          int count = 0;
          for (ULetter m : w)
            if (m == l) ++count;
          if (count >= 2) continue;
        }
        UWord ext = w;
        ext.push_back(l);
        next.push_back(ext);
      }
    for (const UWord& w : next) out.push_back(w);
    frontier.swap(next);
  }
  return out;
}

}  // namespace frtlab
