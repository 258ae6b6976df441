#include "frtlab/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace frtlab {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, Field f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix();
  Field f = rows[0].empty() ? Field::Rational : rows[0][0].field();
  Matrix m(rows.size(), rows[0].size(), f);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw DimensionMismatch("ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec v(cols_, Scalar::zero(field_));
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add");
  Matrix m(rows_, cols_, field_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] + o.data_[k];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sub");
  Matrix m(rows_, cols_, field_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] - o.data_[k];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix mul");
  Matrix m(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        m.at(i, j) += a * b;
      }
    }
  }
  return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m(rows_, cols_, field_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] * s;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix apply");
  Vec out(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Scalar Matrix::det() const {
  if (rows_ != cols_) throw DimensionMismatch("det of non-square matrix");
  Matrix work = *this;
  Scalar result = Scalar::one(field_);
  std::size_t n = rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && work.at(piv, col).is_zero()) ++piv;
    if (piv == n) return Scalar::zero(field_);
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(work.at(piv, c), work.at(col, c));
      result = -result;
    }
    result *= work.at(col, col);
    Scalar pin = work.at(col, col).inv();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work.at(r, col).is_zero()) continue;
      Scalar factor = work.at(r, col) * pin;
      for (std::size_t c = col; c < n; ++c)
        work.at(r, c) -= factor * work.at(col, c);
    }
  }
  return result;
}

std::string Matrix::str() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << ", ";
      out << at(r, c).str();
    }
    out << "]\n";
  }
  return out.str();
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.reduced = m;
  Matrix& a = res.reduced;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(piv, c), a.at(lead, c));
    Scalar pin = a.at(lead, col).inv();
    for (std::size_t c = col; c < a.cols(); ++c) a.at(lead, c) *= pin;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a.at(r, col).is_zero()) continue;
      Scalar factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) -= factor * a.at(lead, c);
    }
    res.pivot_cols.push_back(col);
    ++lead;
  }
  res.rank = res.pivot_cols.size();
  return res;
}

Subspace::Subspace(std::size_t ambient_dim, Field f)
    : ambient_(ambient_dim), field_(f), basis_(0, ambient_dim, f) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors, Field f) {
  Subspace s(ambient_dim, f);
  if (vectors.empty()) return s;
  RrefResult r = rref(Matrix::from_rows(vectors));
  Matrix basis(r.rank, ambient_dim, f);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t c = 0; c < ambient_dim; ++c) basis.at(i, c) = r.reduced.at(i, c);
  s.basis_ = basis;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim, Field f) {
  Subspace s(ambient_dim, f);
  s.basis_ = Matrix::identity(ambient_dim, f);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("Subspace::contains");
  // Reduce v by the RREF basis rows.
  Vec w = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t lead = 0;
    while (lead < ambient_ && basis_.at(r, lead).is_zero()) ++lead;
    if (lead == ambient_) continue;
    if (!w[lead].is_zero()) {
      Scalar factor = w[lead];  // pivot is 1
      for (std::size_t c = lead; c < ambient_; ++c)
        if (!basis_.at(r, c).is_zero()) w[c] -= factor * basis_.at(r, c);
    }
  }
  for (const Scalar& s : w)
    if (!s.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.basis_.rows(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

bool Subspace::insert(const Vec& v) {
  if (contains(v)) return false;
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < basis_.rows(); ++r) rows.push_back(basis_.row(r));
  rows.push_back(v);
  *this = Subspace::span(ambient_, rows, field_);
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw DimensionMismatch("Subspace::sum");
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < basis_.rows(); ++r) rows.push_back(basis_.row(r));
  for (std::size_t r = 0; r < other.basis_.rows(); ++r) rows.push_back(other.basis_.row(r));
  return Subspace::span(ambient_, rows, field_);
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivot_cols) is_pivot[p] = true;
  std::vector<Vec> basis;
  Field f = m.field();
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(m.cols(), Scalar::zero(f));
    v[free_col] = Scalar::one(f);
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = -r.reduced.at(i, free_col);
    basis.push_back(v);
  }
  return Subspace::span(m.cols(), basis, f);
}

Subspace image(const Matrix& m) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.col(c));
  return Subspace::span(m.rows(), cols, m.field());
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return m;
}

Matrix tensor_operator(const std::vector<Matrix>& slot_ops) {
  if (slot_ops.empty()) throw DimensionMismatch("tensor_operator: no slots");
  // First-slot-fastest basis order: kron with the factor list reversed.
  Matrix m = slot_ops.back();
  for (std::size_t k = slot_ops.size() - 1; k-- > 0;) m = kron(m, slot_ops[k]);
  return m;
}

Matrix flip_matrix(std::size_t d, Field f) {
  Matrix m(d * d, d * d, f);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m.at(j + d * i, i + d * j) = Scalar::one(f);
  return m;
}

Matrix embed_pair(const Matrix& m, std::size_t i, std::size_t j, std::size_t n,
                  std::size_t d) {
  if (!(1 <= i && i < j && j <= n)) throw IndexError("embed_pair: need 1 <= i < j <= n");
  if (m.rows() != d * d || m.cols() != d * d)
    throw DimensionMismatch("embed_pair: operator must act on two slots");
  std::size_t dim = 1;
  for (std::size_t k = 0; k < n; ++k) dim *= d;
  Matrix out(dim, dim, m.field());
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t rem = col;
    for (std::size_t k = 0; k < n; ++k) {  // slot 1 is the fastest index
      digits[k] = rem % d;
      rem /= d;
    }
    std::size_t ci = digits[i - 1], cj = digits[j - 1];
    for (std::size_t ri = 0; ri < d; ++ri)
      for (std::size_t rj = 0; rj < d; ++rj) {
        const Scalar& entry = m.at(ri + d * rj, ci + d * cj);
        if (entry.is_zero()) continue;
        std::size_t row = col;
        // overwrite slots i and j of the column index
        std::size_t wi = 1, wj = 1;
        for (std::size_t k = 0; k + 1 < i; ++k) wi *= d;
        for (std::size_t k = 0; k + 1 < j; ++k) wj *= d;
        row += (ri - ci) * wi + (rj - cj) * wj;
        out.at(row, col) += entry;
      }
  }
  return out;
}

Subspace invariant_closure(const Vec& v, const std::vector<Matrix>& ops) {
  std::size_t ambient = v.size();
  Field f = ambient ? v[0].field() : Field::Rational;
  for (const Matrix& op : ops)
    if (op.rows() != ambient || op.cols() != ambient)
      throw DimensionMismatch("invariant_closure: op of wrong size");
  Subspace s = Subspace::span(ambient, {v}, f);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Matrix& op : ops) {
      for (std::size_t r = 0; r < s.basis().rows(); ++r) {
        Vec img = op.apply(s.basis().row(r));
        if (s.insert(img)) grew = true;
      }
      if (grew) break;  // basis changed; restart with the new rows
    }
  }
  return s;
}

namespace {

Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  return v;
}

}  // namespace

AlgebraSpan algebra_span(const std::vector<Matrix>& ops) {
  if (ops.empty()) throw DimensionMismatch("algebra_span: no operators");
  std::size_t d = ops[0].rows();
  Field f = ops[0].field();
  for (const Matrix& op : ops)
    if (op.rows() != d || op.cols() != d)
      throw DimensionMismatch("algebra_span: operators of mixed size");

  AlgebraSpan result;
  Subspace span(d * d, f);
  std::vector<Matrix> frontier;
  auto push = [&](const Matrix& m) {
    if (span.insert(flatten(m))) {
      result.basis.push_back(m);
      frontier.push_back(m);
    }
  };
  push(Matrix::identity(d, f));
  for (const Matrix& op : ops) push(op);
  while (!frontier.empty() && span.dim() < d * d) {
    std::vector<Matrix> current;
    current.swap(frontier);
    for (const Matrix& m : current) {
      for (const Matrix& op : ops) {
        push(m * op);
        if (span.dim() == d * d) break;
      }
      if (span.dim() == d * d) break;
    }
  }
  result.dim = span.dim();
  return result;
}

std::size_t algebra_span_dim(const std::vector<Matrix>& ops) {
  return algebra_span(ops).dim;
}

std::vector<Subspace> weight_invariant_subspaces(const std::vector<Matrix>& diag_ops,
                                                 const std::vector<Matrix>& ops) {
  std::size_t d = 0;
  Field f = Field::Rational;
  if (!diag_ops.empty()) {
    d = diag_ops[0].rows();
    f = diag_ops[0].field();
  } else if (!ops.empty()) {
    d = ops[0].rows();
    f = ops[0].field();
  } else {
    return {};
  }
  for (const Matrix& m : diag_ops) {
    if (m.rows() != d || m.cols() != d) throw DimensionMismatch("weight_invariant_subspaces");
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        if (r != c && !m.at(r, c).is_zero())
          throw NotDiagonal("weight_invariant_subspaces: off-diagonal entry");
  }

  // Cluster coordinates by their joint diagonal weight vector.
  std::vector<std::vector<std::size_t>> clusters;
  std::vector<Vec> weights;
  for (std::size_t c = 0; c < d; ++c) {
    Vec w;
    for (const Matrix& m : diag_ops) w.push_back(m.at(c, c));
    bool found = false;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      if (weights[k] == w) {
        clusters[k].push_back(c);
        found = true;
        break;
      }
    }
    if (!found) {
      weights.push_back(w);
      clusters.push_back({c});
    }
  }

  std::vector<Subspace> found;
  std::size_t n_clusters = clusters.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n_clusters); ++mask) {
    std::vector<Vec> gens;
    for (std::size_t k = 0; k < n_clusters; ++k) {
      if (!(mask >> k & 1)) continue;
      for (std::size_t c : clusters[k]) {
        Vec e(d, Scalar::zero(f));
        e[c] = Scalar::one(f);
        gens.push_back(e);
      }
    }
    Subspace cand = Subspace::span(d, gens, f);
    bool invariant = true;
    for (const Matrix& op : ops) {
      for (std::size_t r = 0; r < cand.basis().rows() && invariant; ++r)
        if (!cand.contains(op.apply(cand.basis().row(r)))) invariant = false;
      if (!invariant) break;
    }
    if (invariant) found.push_back(cand);
  }
  std::sort(found.begin(), found.end(), [](const Subspace& a, const Subspace& b) {
    return a.dim() < b.dim();
  });
  return found;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve");
  Matrix aug(m.rows(), m.cols() + 1, m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  RrefResult red = rref(aug);
  for (std::size_t i = 0; i < red.pivot_cols.size(); ++i)
    if (red.pivot_cols[i] == m.cols()) return std::nullopt;  // inconsistent
  Vec x(m.cols(), Scalar::zero(m.field()));
  for (std::size_t i = 0; i < red.pivot_cols.size(); ++i)
    x[red.pivot_cols[i]] = red.reduced.at(i, m.cols());
  return x;
}

}  // namespace frtlab
