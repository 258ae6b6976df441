#include "frtlab/frt.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace frtlab {

ParamSlate ParamSlate::of_scalars(const std::vector<Scalar>& xs) {
  ParamSlate s;
  for (const Scalar& x : xs) s.points.emplace_back(x);
  return s;
}

ParamSlate ParamSlate::of_gammas(const std::vector<GammaElement>& xs) {
  ParamSlate s;
  for (const GammaElement& x : xs) s.points.emplace_back(x);
  return s;
}

ParamPoint frt_ratio(const ParamPoint& x, const ParamPoint& y) {
  // Ratio of the ordered pair (x, y); composes inverse-first, consistent
  // with the pybe_middle order (abelian families cannot see the choice).
  return param_compose(param_inverse(x), y);
}

std::string word_str(const AlgWord& w, const std::vector<ParamPoint>& points) {
  if (w.empty()) return "1";
  std::ostringstream out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out << " ";
    out << "t" << int(w[k].row) << int(w[k].col) << "(" << param_str(points[w[k].point])
        << ")";
  }
  return out.str();
}

namespace {

std::size_t pair_idx(int i, int j) {
  // tensor basis order {(1,1),(2,1),(1,2),(2,2)}: first index fastest
  return static_cast<std::size_t>(i - 1) + 2 * static_cast<std::size_t>(j - 1);
}

void element_add(AlgElement& e, const Scalar& c, const AlgWord& w) {
  if (!c.is_zero()) e.emplace_back(c, w);
}

AlgElement element_normalize(const AlgElement& e) {
  std::map<AlgWord, Scalar> acc;
  for (const auto& [c, w] : e) {
    auto it = acc.find(w);
    if (it == acc.end()) {
      if (!c.is_zero()) acc.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
  AlgElement out;
  for (auto& [w, c] : acc) out.emplace_back(c, w);
  return out;
}

std::vector<ParamPoint> dedup_points(const ParamSlate& slate, std::vector<int>* mult) {
  std::vector<ParamPoint> unique;
  for (const ParamPoint& p : slate.points) {
    std::size_t id = unique.size();
    for (std::size_t k = 0; k < unique.size(); ++k)
      if (param_equal(unique[k], p)) {
        id = k;
        break;
      }
    if (id == unique.size()) {
      unique.push_back(p);
      if (mult) mult->push_back(0);
    }
    if (mult) (*mult)[id] += 1;
  }
  return unique;
}

// The 16 relation elements for the ordered pair (x, y) placed at adjacent
// slots, with fixed padding factors around them.
void pair_relations(const Matrix& R, std::uint16_t px, std::uint16_t py,
                    const std::vector<WordFactor>& pad_before,
                    const std::vector<WordFactor>& pad_after,
                    std::vector<AlgElement>& out) {
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int c = 1; c <= 2; ++c)
        for (int d = 1; d <= 2; ++d) {
          AlgElement e;
          for (int k = 1; k <= 2; ++k)
            for (int l = 1; l <= 2; ++l) {
              const Scalar& coeff = R.at(pair_idx(a, b), pair_idx(k, l));
              if (!coeff.is_zero()) {
                AlgWord w = pad_before;
                w.push_back({std::uint8_t(c), std::uint8_t(k), px});
                w.push_back({std::uint8_t(d), std::uint8_t(l), py});
                w.insert(w.end(), pad_after.begin(), pad_after.end());
                element_add(e, coeff, w);
              }
              const Scalar& coeff2 = R.at(pair_idx(k, l), pair_idx(c, d));
              if (!coeff2.is_zero()) {
                AlgWord w = pad_before;
                w.push_back({std::uint8_t(l), std::uint8_t(b), py});
                w.push_back({std::uint8_t(k), std::uint8_t(a), px});
                w.insert(w.end(), pad_after.begin(), pad_after.end());
                element_add(e, -coeff2, w);
              }
            }
          out.push_back(element_normalize(e));
        }
}

}  // namespace

RelationSet generate_relations(const RProvider& provider, const ParamSlate& slate) {
  if (slate.points.empty()) throw CompositionError("empty slate");
  RelationSet rs;
  rs.points = dedup_points(slate, nullptr);
  for (std::size_t ix = 0; ix < rs.points.size(); ++ix)
    for (std::size_t iy = 0; iy < rs.points.size(); ++iy) {
      Matrix r = provider(frt_ratio(rs.points[ix], rs.points[iy]));
      pair_relations(r, std::uint16_t(ix), std::uint16_t(iy), {}, {}, rs.relations);
    }
  return rs;
}

std::string GradedComponent::block_key_of_word(const AlgWord& w) const {
  // Relations preserve the point multiset and both index charges: the
  // six-vertex R only connects words with equal index multisets.
  std::vector<int> counts(points_.size(), 0);
  int row_charge = 0, col_charge = 0;
  for (const WordFactor& f : w) {
    counts[f.point] += 1;
    if (f.row == 2) ++row_charge;
    if (f.col == 2) ++col_charge;
  }
  std::ostringstream key;
  for (int c : counts) key << c << ",";
  key << "|" << row_charge << "|" << col_charge;
  return key.str();
}

GradedComponent::GradedComponent(const RProvider& provider, const ParamSlate& slate,
                                 int degree, Quotient quo, int degree_cap)
    : degree_(degree), quotient_(quo) {
  if (degree < 0) throw IndexError("degree must be nonnegative");
  if (degree > degree_cap)
    throw DegreeTooLarge("degree " + std::to_string(degree) + " above cap " +
                         std::to_string(degree_cap));
  if (slate.points.empty()) throw CompositionError("empty slate");
  points_ = dedup_points(slate, &multiplicity_);
  field_ = std::holds_alternative<Scalar>(points_[0])
               ? std::get<Scalar>(points_[0]).field()
               : std::get<GammaElement>(points_[0]).field();

  auto struck = [&](int row, int col) {
    if (row == col || quotient_ == Quotient::Full) return false;
    if (quotient_ == Quotient::Diagonal) return true;
    if (quotient_ == Quotient::BPlus) return row == 2 && col == 1;
    return row == 1 && col == 2;  // BMinus strikes t12
  };

  // Size-n sub-multisets of the slate.
  std::vector<std::vector<int>> submultisets;
  std::vector<int> cur(points_.size(), 0);
  std::function<void(std::size_t, int)> pick = [&](std::size_t at, int left) {
    if (at == points_.size()) {
      if (left == 0) submultisets.push_back(cur);
      return;
    }
    for (int take = 0; take <= std::min(left, multiplicity_[at]); ++take) {
      cur[at] = take;
      pick(at + 1, left - take);
    }
    cur[at] = 0;
  };
  pick(0, degree);

  auto for_each_arrangement =
      [&](const std::vector<int>& counts,
          const std::function<void(const std::vector<std::uint16_t>&)>& fn) {
        std::vector<std::uint16_t> arrangement;
        std::vector<int> remaining = counts;
        std::function<void()> rec = [&]() {
          if (static_cast<int>(arrangement.size()) == degree) {
            fn(arrangement);
            return;
          }
          for (std::size_t pid = 0; pid < points_.size(); ++pid) {
            if (remaining[pid] == 0) continue;
            remaining[pid] -= 1;
            arrangement.push_back(std::uint16_t(pid));
            rec();
            arrangement.pop_back();
            remaining[pid] += 1;
          }
        };
        rec();
      };

  auto expand_slots = [&](const std::vector<std::uint16_t>& slot_points) {
    std::vector<AlgWord> partial = {AlgWord{}};
    for (std::uint16_t pid : slot_points) {
      std::vector<AlgWord> next;
      for (const AlgWord& w : partial)
        for (int row = 1; row <= 2; ++row)
          for (int col = 1; col <= 2; ++col) {
            if (struck(row, col)) continue;
            AlgWord ext = w;
            ext.push_back({std::uint8_t(row), std::uint8_t(col), pid});
            next.push_back(ext);
          }
      partial.swap(next);
    }
    return partial;
  };

  for (const std::vector<int>& counts : submultisets) {
    for_each_arrangement(counts, [&](const std::vector<std::uint16_t>& arrangement) {
      for (AlgWord& w : expand_slots(arrangement)) {
        if (index_.count(w)) continue;
        index_.emplace(w, words_.size());
        words_.push_back(w);
      }
    });
  }

  for (std::size_t idx = 0; idx < words_.size(); ++idx) {
    std::string key = block_key_of_word(words_[idx]);
    blocks_[key].cols.push_back(idx);
    block_of_word_.emplace(idx, key);
  }
  for (auto& [key, block] : blocks_) {
    std::sort(block.cols.begin(), block.cols.end());
    for (std::size_t local = 0; local < block.cols.size(); ++local)
      block.col_of.emplace(block.cols[local], local);
  }

  if (degree >= 2) {
    std::set<std::string> seen;
    for (const std::vector<int>& counts : submultisets) {
      for_each_arrangement(counts, [&](const std::vector<std::uint16_t>& arrangement) {
        for (int s = 0; s + 1 < degree; ++s) {
          std::uint16_t px = arrangement[s], py = arrangement[s + 1];
          Matrix r = provider(frt_ratio(points_[px], points_[py]));
          std::vector<std::uint16_t> other;
          for (int m = 0; m < degree; ++m)
            if (m != s && m != s + 1) other.push_back(arrangement[m]);
          for (const AlgWord& pad : expand_slots(other)) {
            std::vector<WordFactor> before(pad.begin(), pad.begin() + s);
            std::vector<WordFactor> after(pad.begin() + s, pad.end());
            std::vector<AlgElement> rels;
            pair_relations(r, px, py, before, after, rels);
            for (AlgElement& e : rels) {
              AlgElement kept;
              for (auto& [c, w] : e) {
                bool drop = false;
                for (const WordFactor& fac : w)
                  if (struck(fac.row, fac.col)) drop = true;
                if (!drop) kept.emplace_back(c, w);
              }
              kept = element_normalize(kept);
              if (kept.empty()) continue;
              Scalar lead = kept.front().first;
              std::ostringstream sig;
              for (auto& [c, w] : kept) {
                sig << (c / lead).str() << ";";
                for (const WordFactor& fac : w)
                  sig << int(fac.row) << int(fac.col) << "." << fac.point << " ";
              }
              if (!seen.insert(sig.str()).second) continue;
              insert_relation_row(kept);
            }
          }
        }
      });
    }
  }

  for (std::size_t idx = 0; idx < words_.size(); ++idx) {
    const Block& b = blocks_.at(block_of_word_.at(idx));
    std::size_t local = b.col_of.at(idx);
    if (!b.pivot_rows.count(local)) {
      basis_pos_.emplace(idx, basis_words_.size());
      basis_words_.push_back(idx);
    }
  }
}

void GradedComponent::insert_relation_row(const AlgElement& element) {
  const std::string& key = block_of_word_.at(index_.at(element.front().second));
  Block& block = blocks_.at(key);
  Vec row(block.cols.size(), Scalar::zero(field_));
  for (const auto& [c, w] : element) {
    std::size_t idx = index_.at(w);
    if (block_of_word_.at(idx) != key) throw Error("relation crosses charge blocks");
    row[block.col_of.at(idx)] += c;
  }
  for (const auto& [pcol, prow] : block.pivot_rows) {
    if (row[pcol].is_zero()) continue;
    Scalar factor = row[pcol];
    for (std::size_t c = pcol; c < row.size(); ++c)
      if (!prow[c].is_zero()) row[c] -= factor * prow[c];
  }
  std::size_t lead = row.size();
  for (std::size_t c = 0; c < row.size(); ++c)
    if (!row[c].is_zero()) {
      lead = c;
      break;
    }
  if (lead == row.size()) return;
  Scalar pin = row[lead].inv();
  for (std::size_t c = lead; c < row.size(); ++c) row[c] *= pin;
  for (auto& [pcol, prow] : block.pivot_rows) {
    if (prow[lead].is_zero()) continue;
    Scalar factor = prow[lead];
    for (std::size_t c = lead; c < row.size(); ++c)
      if (!row[c].is_zero()) prow[c] -= factor * row[c];
  }
  block.pivot_rows.emplace(lead, std::move(row));
  ++relation_rank_;
}

std::optional<std::size_t> GradedComponent::word_index(const AlgWord& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

AlgWord GradedComponent::make_word(
    const std::vector<std::tuple<int, int, ParamPoint>>& factors) const {
  AlgWord w;
  for (const auto& [row, col, p] : factors) {
    std::size_t pid = points_.size();
    for (std::size_t k = 0; k < points_.size(); ++k)
      if (param_equal(points_[k], p)) {
        pid = k;
        break;
      }
    if (pid == points_.size()) throw BasisMismatch("point not in slate: " + param_str(p));
    w.push_back({std::uint8_t(row), std::uint8_t(col), std::uint16_t(pid)});
  }
  return w;
}

Vec GradedComponent::normal_form(const AlgElement& element) const {
  Vec out(basis_words_.size(), Scalar::zero(field_));
  for (const auto& [coeff, w] : element) {
    if (coeff.is_zero()) continue;
    auto idx = word_index(w);
    if (!idx.has_value()) {
      bool has_offdiag = false;
      for (const WordFactor& f : w)
        if (f.row != f.col) has_offdiag = true;
      if (quotient_ != Quotient::Full && has_offdiag) continue;  // struck, so zero
      throw BasisMismatch("word outside the component: " + word_str(w, points_));
    }
    const Block& block = blocks_.at(block_of_word_.at(*idx));
    std::size_t local = block.col_of.at(*idx);
    auto pivot = block.pivot_rows.find(local);
    if (pivot == block.pivot_rows.end()) {
      out[basis_pos_.at(*idx)] += coeff;
    } else {
      const Vec& row = pivot->second;
      for (std::size_t c = local + 1; c < row.size(); ++c) {
        if (row[c].is_zero()) continue;
        out[basis_pos_.at(block.cols[c])] -= coeff * row[c];
      }
    }
  }
  return out;
}

bool GradedComponent::in_ideal(const AlgElement& element) const {
  for (const Scalar& s : normal_form(element))
    if (!s.is_zero()) return false;
  return true;
}

CoactionMatrixSet coaction_matrices(const std::shared_ptr<const GradedComponent>& gc,
                                    const ParamSlate& slate) {
  if (static_cast<int>(slate.points.size()) != gc->degree())
    throw BasisMismatch("slot count must equal the component degree");
  std::size_t n = slate.points.size();
  std::size_t dim = std::size_t{1} << n;
  Field f = std::holds_alternative<Scalar>(gc->points()[0])
                ? std::get<Scalar>(gc->points()[0]).field()
                : std::get<GammaElement>(gc->points()[0]).field();
  CoactionMatrixSet cm;
  cm.gc = gc;
  cm.dim = dim;
  for (std::size_t I = 0; I < dim; ++I)
    for (std::size_t J = 0; J < dim; ++J) {
      std::vector<std::tuple<int, int, ParamPoint>> factors;
      for (std::size_t k = 0; k < n; ++k) {
        int row = static_cast<int>((I >> k) & 1) + 1;  // first slot fastest
        int col = static_cast<int>((J >> k) & 1) + 1;
        factors.emplace_back(row, col, slate.points[k]);
      }
      AlgWord w = gc->make_word(factors);
      Vec nf = gc->normal_form({{Scalar::one(f), w}});
      for (std::size_t k = 0; k < nf.size(); ++k) {
        if (nf[k].is_zero()) continue;
        auto it = cm.coeff.find(k);
        if (it == cm.coeff.end()) it = cm.coeff.emplace(k, Matrix(dim, dim, f)).first;
        it->second.at(I, J) += nf[k];
      }
    }
  return cm;
}

bool CoactionMatrixSet::consistent_with(const std::vector<Vec>& comodule_basis,
                                        const CoactionMatrixSet& ambient) const {
  if (ambient.gc != gc) return false;
  std::size_t m = comodule_basis.size();
  if (m == 0 || comodule_basis[0].empty()) return false;
  Field f = comodule_basis[0][0].field();
  for (std::size_t k = 0; k < gc->basis_dim(); ++k) {
    auto ita = ambient.coeff.find(k);
    auto itr = coeff.find(k);
    for (std::size_t i = 0; i < m; ++i) {
      Vec lhs(ambient.dim, Scalar::zero(f));
      if (ita != ambient.coeff.end()) lhs = ita->second.transpose().apply(comodule_basis[i]);
      Vec rhs(ambient.dim, Scalar::zero(f));
      if (itr != coeff.end())
        for (std::size_t j = 0; j < m; ++j) {
          const Scalar& c = itr->second.at(i, j);
          if (c.is_zero()) continue;
          for (std::size_t t = 0; t < ambient.dim; ++t) rhs[t] += c * comodule_basis[j][t];
        }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::optional<CoactionMatrixSet> restrict_comodule(const CoactionMatrixSet& ambient,
                                                   const std::vector<Vec>& basis_vectors) {
  if (basis_vectors.empty()) throw BasisMismatch("empty comodule basis");
  std::size_t m = basis_vectors.size();
  std::size_t n = ambient.dim;
  Field f = basis_vectors[0][0].field();
  Matrix bmat(n, m, f);
  for (std::size_t j = 0; j < m; ++j) {
    if (basis_vectors[j].size() != n) throw BasisMismatch("comodule vector of wrong length");
    for (std::size_t t = 0; t < n; ++t) bmat.at(t, j) = basis_vectors[j][t];
  }
  CoactionMatrixSet out;
  out.gc = ambient.gc;
  out.dim = m;
  for (const auto& [k, mk] : ambient.coeff) {
    Matrix nk(m, m, f);
    bool nonzero = false;
    Matrix mt = mk.transpose();
    for (std::size_t i = 0; i < m; ++i) {
      auto sol = solve(bmat, mt.apply(basis_vectors[i]));
      if (!sol.has_value()) return std::nullopt;  // span not closed
      for (std::size_t j = 0; j < m; ++j) {
        nk.at(i, j) = (*sol)[j];
        if (!(*sol)[j].is_zero()) nonzero = true;
      }
    }
    if (nonzero) out.coeff.emplace(k, nk);
  }
  return out;
}

namespace {

// ---- common invariant lines of a small matrix family ----

using Poly = std::vector<Scalar>;  // ascending degree

void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
  poly_trim(a);
  while (!b.empty() && a.size() >= b.size()) {
    Scalar factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= factor * b[k];
    poly_trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a.swap(b);
    b.swap(r);
  }
  if (!a.empty()) {
    Scalar lead = a.back().inv();
    for (Scalar& c : a) c *= lead;
  }
  return a;
}

std::optional<Scalar> rational_sqrt(const Scalar& s) {
  if (s.num_imag() != 0 || s.num_real() < 0) return std::nullopt;
  Int num = boost::multiprecision::sqrt(s.num_real());
  Int den = boost::multiprecision::sqrt(s.den());
  if (num * num != s.num_real() || den * den != s.den()) return std::nullopt;
  return Scalar::rational(num, den, s.field());
}

std::vector<Scalar> poly_rational_roots(const Poly& p) {
  std::vector<Scalar> roots;
  Poly q = p;
  poly_trim(q);
  if (q.size() <= 1) return roots;
  Field f = q[0].field();
  if (q.size() == 2) {
    roots.push_back(-q[0] / q[1]);
    return roots;
  }
  if (q.size() == 3) {
    Scalar disc = q[1] * q[1] - Scalar::integer(4, f) * q[2] * q[0];
    auto root = rational_sqrt(disc);
    if (!root.has_value()) return roots;
    Scalar two_a = Scalar::integer(2, f) * q[2];
    roots.push_back((-q[1] + *root) / two_a);
    if (!root->is_zero()) roots.push_back((-q[1] - *root) / two_a);
    return roots;
  }
  throw Error("poly_rational_roots: degree too high");
}

bool is_scalar_matrix(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j) {
        if (!m.at(i, j).is_zero()) return false;
      } else if (m.at(i, i) != m.at(0, 0)) {
        return false;
      }
    }
  return true;
}

struct LineSearch {
  std::vector<Vec> lines;
  bool continuum = false;
};

LineSearch lines_dim2(const std::vector<Matrix>& family, Field f) {
  LineSearch out;
  std::vector<Poly> polys;
  bool e1_ok = true;  // the coordinate line (0, 1)
  for (const Matrix& b : family) {
    // span{(1, s)} fixed by b iff b10 + (b11 - b00) s - b01 s^2 = 0
    Poly p = {b.at(1, 0), b.at(1, 1) - b.at(0, 0), -b.at(0, 1)};
    poly_trim(p);
    if (!p.empty()) polys.push_back(p);
    if (!b.at(0, 1).is_zero()) e1_ok = false;
  }
  if (polys.empty()) {
    out.continuum = true;  // every member scalar
    return out;
  }
  Poly g = polys[0];
  for (std::size_t k = 1; k < polys.size(); ++k) g = poly_gcd(g, polys[k]);
  for (const Scalar& s : poly_rational_roots(g)) out.lines.push_back({Scalar::one(f), s});
  if (e1_ok) out.lines.push_back({Scalar::zero(f), Scalar::one(f)});
  return out;
}

std::vector<Int> small_divisors(Int v) {
  std::vector<Int> out;
  v = abs(v);
  if (v == 0) return out;
  for (Int d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      out.push_back(v / d);
    }
    if (d > 200000) throw Error("divisor search out of desk range");
  }
  return out;
}

std::vector<Scalar> rational_eigenvalues_3x3(const Matrix& b) {
  Field f = b.field();
  Scalar tr = b.at(0, 0) + b.at(1, 1) + b.at(2, 2);
  Scalar m2 = b.at(0, 0) * b.at(1, 1) - b.at(0, 1) * b.at(1, 0) + b.at(0, 0) * b.at(2, 2) -
              b.at(0, 2) * b.at(2, 0) + b.at(1, 1) * b.at(2, 2) - b.at(1, 2) * b.at(2, 1);
  Scalar det = b.det();
  // char poly x^3 - tr x^2 + m2 x - det, cleared to integer coefficients
  using boost::multiprecision::lcm;
  Int l = 1;
  for (const Scalar& s : {tr, m2, det}) l = lcm(l, s.den());
  Int a3 = l;
  Int a2 = -tr.num_real() * (l / tr.den());
  Int a1 = m2.num_real() * (l / m2.den());
  Int a0 = -det.num_real() * (l / det.den());
  auto value = [&](const Scalar& x) {
    Scalar acc = Scalar::rational(a3, 1, f);
    for (const Int& c : {a2, a1, a0}) acc = acc * x + Scalar::rational(c, 1, f);
    return acc;
  };
  std::vector<Scalar> roots;
  auto consider = [&](const Scalar& cand) {
    if (value(cand).is_zero()) {
      for (const Scalar& r : roots)
        if (r == cand) return;
      roots.push_back(cand);
    }
  };
  if (a0 == 0) {
    consider(Scalar::zero(f));
    Poly quad = {Scalar::rational(a1, 1, f), Scalar::rational(a2, 1, f),
                 Scalar::rational(a3, 1, f)};
    for (const Scalar& s : poly_rational_roots(quad)) consider(s);
    return roots;
  }
  for (const Int& p : small_divisors(a0))
    for (const Int& r : small_divisors(a3))
      for (int sign : {1, -1}) consider(Scalar::rational(sign * p, r, f));
  return roots;
}

Vec cross3(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

LineSearch lines_dim3(const std::vector<Matrix>& family, Field f) {
  LineSearch out;
  const Matrix* pivot = nullptr;
  for (const Matrix& b : family)
    if (!is_scalar_matrix(b)) {
      pivot = &b;
      break;
    }
  if (!pivot) {
    out.continuum = true;
    return out;
  }
  // Every common eigenvector sits in a rational eigenspace of the pivot.
  for (const Scalar& lam : rational_eigenvalues_3x3(*pivot)) {
    Matrix shifted = *pivot - Matrix::identity(3, f).scaled(lam);
    Subspace eig = kernel(shifted);
    if (eig.dim() == 0) continue;
    if (eig.dim() == 1) {
      out.lines.push_back(eig.basis().row(0));
      continue;
    }
    // Search inside the plane: v = e1 + s e2 (and v = e2) must satisfy
    // (B v) x v = 0 for every member; each cross component is a quadratic
    // in s. The plane itself need not be invariant.
    Vec e1 = eig.basis().row(0), e2 = eig.basis().row(1);
    std::vector<Poly> polys;
    bool e2_ok = true;
    for (const Matrix& b : family) {
      Vec b1 = b.apply(e1), b2 = b.apply(e2);
      Vec c0 = cross3(b1, e1);
      Vec c1a = cross3(b1, e2), c1b = cross3(b2, e1);
      Vec c2 = cross3(b2, e2);
      for (int comp = 0; comp < 3; ++comp) {
        Poly p = {c0[comp], c1a[comp] + c1b[comp], c2[comp]};
        poly_trim(p);
        if (!p.empty()) polys.push_back(p);
      }
      for (int comp = 0; comp < 3; ++comp)
        if (!c2[comp].is_zero()) e2_ok = false;
    }
    if (polys.empty()) {
      out.continuum = true;  // every line of the plane is a common eigenline
    } else {
      Poly g = polys[0];
      for (std::size_t k = 1; k < polys.size(); ++k) g = poly_gcd(g, polys[k]);
      if (g.empty()) {
        out.continuum = true;
      } else {
        for (const Scalar& s : poly_rational_roots(g)) {
          Vec v(3, Scalar::zero(f));
          for (int comp = 0; comp < 3; ++comp) v[comp] = e1[comp] + s * e2[comp];
          out.lines.push_back(v);
        }
      }
    }
    if (e2_ok) out.lines.push_back(e2);
  }
  std::vector<Vec> kept;
  for (const Vec& v : out.lines) {
    Subspace line = Subspace::span(3, {v}, f);
    bool ok = true;
    for (const Matrix& b : family)
      if (!line.contains(b.apply(v))) {
        ok = false;
        break;
      }
    bool dup = false;
    for (const Vec& w : kept)
      if (Subspace::span(3, {w}, f) == line) dup = true;
    if (ok && !dup) kept.push_back(v);
  }
  out.lines = kept;
  return out;
}

LineSearch common_invariant_lines(const std::vector<Matrix>& family, Field f) {
  if (family.empty()) return {{}, true};
  std::size_t m = family[0].rows();
  if (m == 2) return lines_dim2(family, f);
  if (m == 3) return lines_dim3(family, f);
  throw Error("common_invariant_lines: cluster size above desk scale");
}

}  // namespace

SubcomoduleLattice subcomodule_solve(const CoactionMatrixSet& cm,
                                     const CoactionMatrixSet& diag_part) {
  std::size_t d = cm.dim;
  if (diag_part.dim != d) throw DimensionMismatch("subcomodule_solve: dim mismatch");
  Field f = cm.coeff.empty() ? Field::Rational : cm.coeff.begin()->second.field();

  std::size_t diag_basis = diag_part.gc->basis_dim();
  std::vector<Vec> weights(d, Vec(diag_basis, Scalar::zero(f)));
  for (const auto& [k, mk] : diag_part.coeff)
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j)
        if (i != j && !mk.at(i, j).is_zero())
          throw NotDiagonal("diagonal quotient coaction has off-diagonal entries");
      weights[i][k] = mk.at(i, i);
    }

  std::vector<std::vector<std::size_t>> clusters;
  {
    std::vector<Vec> reps;
    for (std::size_t i = 0; i < d; ++i) {
      bool placed = false;
      for (std::size_t k = 0; k < reps.size(); ++k)
        if (reps[k] == weights[i]) {
          clusters[k].push_back(i);
          placed = true;
          break;
        }
      if (!placed) {
        reps.push_back(weights[i]);
        clusters.push_back({i});
      }
    }
  }

  std::vector<Matrix> ops;
  for (const auto& [k, mk] : cm.coeff) ops.push_back(mk.transpose());
  if (ops.empty()) ops.push_back(Matrix::identity(d, f));
  AlgebraSpan alg = algebra_span(ops);

  SubcomoduleLattice out;

  struct Candidate {
    std::vector<Vec> gens;
  };
  std::vector<std::vector<Candidate>> cluster_cands(clusters.size());
  for (std::size_t ci = 0; ci < clusters.size(); ++ci) {
    const auto& coords = clusters[ci];
    std::size_t m = coords.size();
    auto& cands = cluster_cands[ci];
    cands.push_back({});  // zero
    Candidate full;
    for (std::size_t c : coords) {
      Vec e(d, Scalar::zero(f));
      e[c] = Scalar::one(f);
      full.gens.push_back(e);
    }
    if (m == 1) {
      cands.push_back(full);
      continue;
    }
    std::vector<Matrix> compressed;
    for (const Matrix& b : alg.basis) {
      Matrix sub(m, m, f);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) sub.at(i, j) = b.at(coords[i], coords[j]);
      compressed.push_back(sub);
    }
    LineSearch ls = common_invariant_lines(compressed, f);
    if (ls.continuum) out.complete = false;
    for (const Vec& lv : ls.lines) {
      Candidate c;
      Vec v(d, Scalar::zero(f));
      for (std::size_t k = 0; k < m; ++k) v[coords[k]] = lv[k];
      c.gens.push_back(v);
      cands.push_back(c);
    }
    if (m == 3) {
      std::vector<Matrix> transposed;
      for (const Matrix& b : compressed) transposed.push_back(b.transpose());
      LineSearch dual = common_invariant_lines(transposed, f);
      if (dual.continuum) out.complete = false;
      for (const Vec& lv : dual.lines) {
        Matrix row(1, 3, f);
        for (std::size_t k = 0; k < 3; ++k) row.at(0, k) = lv[k];
        Subspace ann = kernel(row);
        Candidate c;
        for (std::size_t r = 0; r < ann.dim(); ++r) {
          Vec v(d, Scalar::zero(f));
          for (std::size_t k = 0; k < m; ++k) v[coords[k]] = ann.basis().at(r, k);
          c.gens.push_back(v);
        }
        cands.push_back(c);
      }
    }
    cands.push_back(full);
  }

  std::vector<Subspace> found;
  std::vector<std::size_t> choice(clusters.size(), 0);
  std::function<void(std::size_t)> enumerate = [&](std::size_t at) {
    if (at == clusters.size()) {
      std::vector<Vec> gens;
      for (std::size_t ci = 0; ci < clusters.size(); ++ci)
        for (const Vec& v : cluster_cands[ci][choice[ci]].gens) gens.push_back(v);
      Subspace cand = Subspace::span(d, gens, f);
      for (const Subspace& s : found)
        if (s == cand) return;
      for (const Matrix& op : ops)
        for (std::size_t r = 0; r < cand.basis().rows(); ++r)
          if (!cand.contains(op.apply(cand.basis().row(r)))) return;
      found.push_back(cand);
      return;
    }
    for (std::size_t k = 0; k < cluster_cands[at].size(); ++k) {
      choice[at] = k;
      enumerate(at + 1);
    }
  };
  enumerate(0);

  std::sort(found.begin(), found.end(),
            [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
  out.members = found;
  return out;
}

bool comodule_hom_check(const Matrix& fmat, const CoactionMatrixSet& src,
                        const CoactionMatrixSet& dst) {
  if (src.gc != dst.gc) throw BasisMismatch("comodule_hom_check: different components");
  if (fmat.cols() != src.dim || fmat.rows() != dst.dim)
    throw BasisMismatch("comodule_hom_check: map of wrong shape");
  Matrix ft = fmat.transpose();
  Field f = fmat.field();
  for (std::size_t k = 0; k < src.gc->basis_dim(); ++k) {
    Matrix lhs(src.dim, dst.dim, f), rhs(src.dim, dst.dim, f);
    auto its = src.coeff.find(k);
    if (its != src.coeff.end()) lhs = its->second * ft;
    auto itd = dst.coeff.find(k);
    if (itd != dst.coeff.end()) rhs = ft * itd->second;
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<AlgElement> detq_expressions(const Scalar& q) {
  auto wf = [](int r, int c, int p) {
    return WordFactor{std::uint8_t(r), std::uint8_t(c), std::uint16_t(p)};
  };
  Scalar one = Scalar::one(q.field());
  std::vector<AlgElement> out;
  // point 0 = x, point 1 = q^2 x
  out.push_back({{one, {wf(2, 2, 0), wf(1, 1, 1)}}, {-q, {wf(2, 1, 0), wf(1, 2, 1)}}});
  out.push_back({{one, {wf(1, 1, 1), wf(2, 2, 0)}}, {-q.inv(), {wf(2, 1, 1), wf(1, 2, 0)}}});
  out.push_back({{one, {wf(2, 2, 1), wf(1, 1, 0)}}, {-q, {wf(1, 2, 1), wf(2, 1, 0)}}});
  out.push_back({{one, {wf(1, 1, 0), wf(2, 2, 1)}}, {-q.inv(), {wf(1, 2, 0), wf(2, 1, 1)}}});
  return out;
}

Eq10Report verify_eq10_relations(const Scalar& q, const Scalar& x) {
  Eq10Report report;
  Scalar y = q.pow(2) * x;
  GradedComponent gc(provider_affine_sl2(q), ParamSlate::of_scalars({x, y}), 2);
  Scalar one = Scalar::one(q.field());
  auto wf = [](int r, int c, int p) {
    return WordFactor{std::uint8_t(r), std::uint8_t(c), std::uint16_t(p)};
  };
  struct Line {
    std::string label;
    AlgElement element;
  };
  std::vector<Line> lines = {
      {"t12(x) t11(q2x) = q t11(x) t12(q2x)",
       {{one, {wf(1, 2, 0), wf(1, 1, 1)}}, {-q, {wf(1, 1, 0), wf(1, 2, 1)}}}},
      {"t21(q2x) t11(x) = q t11(q2x) t21(x)",
       {{one, {wf(2, 1, 1), wf(1, 1, 0)}}, {-q, {wf(1, 1, 1), wf(2, 1, 0)}}}},
      {"t22(q2x) t12(x) = q t12(q2x) t22(x)",
       {{one, {wf(2, 2, 1), wf(1, 2, 0)}}, {-q, {wf(1, 2, 1), wf(2, 2, 0)}}}},
  };
  report.lines_pass = true;
  for (const Line& l : lines) {
    bool ok = gc.in_ideal(l.element);
    report.lines.push_back({l.label, ok});
    if (!ok) report.lines_pass = false;
  }

  AlgElement printed4 = {{one, {wf(2, 2, 0), wf(2, 1, 1)}}, {-q, {wf(2, 2, 0), wf(2, 2, 1)}}};
  report.printed_line4_in_ideal = gc.in_ideal(printed4);
  report.lines.push_back(
      {"printed: t22(x) t21(q2x) = q t22(x) t22(q2x)", report.printed_line4_in_ideal});

  Vec lhs = gc.normal_form({{one, {wf(2, 2, 0), wf(2, 1, 1)}}});
  Vec rhs = gc.normal_form({{one, {wf(2, 1, 0), wf(2, 2, 1)}}});
  Scalar ratio = Scalar::zero(q.field());
  bool proportional = true;
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    if (rhs[k].is_zero()) {
      if (!lhs[k].is_zero()) proportional = false;
      continue;
    }
    Scalar r = lhs[k] / rhs[k];
    if (ratio.is_zero())
      ratio = r;
    else if (ratio != r)
      proportional = false;
  }
  if (proportional && !ratio.is_zero()) {
    report.derived_line4 = "t22(x) t21(q2x) = " + ratio.str() + " t21(x) t22(q2x)";
    AlgElement corrected = {{one, {wf(2, 2, 0), wf(2, 1, 1)}},
                            {-ratio, {wf(2, 1, 0), wf(2, 2, 1)}}};
    report.lines.push_back({"derived: " + report.derived_line4, gc.in_ideal(corrected)});
  }

  auto dets = detq_expressions(q);
  report.detq_equal = true;
  for (std::size_t i = 0; i < dets.size(); ++i)
    for (std::size_t j = i + 1; j < dets.size(); ++j) {
      AlgElement diff = dets[i];
      for (const auto& [c, w] : dets[j]) diff.emplace_back(-c, w);
      if (!gc.in_ideal(diff)) report.detq_equal = false;
    }
  return report;
}

}  // namespace frtlab
