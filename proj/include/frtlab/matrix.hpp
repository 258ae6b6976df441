#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "frtlab/scalar.hpp"

namespace frtlab {

using Vec = std::vector<Scalar>;

/// Dense exact matrix, row-major. All entries share one field mode.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, Field f = Field::Rational);

  static Matrix identity(std::size_t n, Field f = Field::Rational);
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;
  Vec apply(const Vec& v) const;  // matrix * column vector

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  Scalar det() const;  // exact, via fraction elimination

  std::string str() const;

 private:
  std::size_t rows_, cols_;
  Field field_ = Field::Rational;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Exact reduced row-echelon form.
RrefResult rref(const Matrix& m);

/// Subspace of k^n held as an RREF-canonical row basis, so equal subspaces
/// compare equal entry-for-entry.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim, Field f = Field::Rational);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors,
                       Field f = Field::Rational);
  static Subspace full(std::size_t ambient_dim, Field f = Field::Rational);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Field field() const { return field_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Adds a vector to the span; returns true if the dimension grew.
  bool insert(const Vec& v);

  Subspace sum(const Subspace& other) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  std::size_t ambient_;
  Field field_;
  Matrix basis_;  // RREF rows, no zero rows
};

/// Right null space {v : M v = 0} as an RREF-canonical subspace.
Subspace kernel(const Matrix& m);

/// Column span of M.
Subspace image(const Matrix& m);

/// Kronecker product in the convention where the FIRST factor's index is
/// slowest: kron(A,B)[(i,k),(j,l)] = A[i][j] B[k][l].
Matrix kron(const Matrix& a, const Matrix& b);

/// Operator A(1)x...xA(n) on a tensor power in the fixed basis order where
/// the FIRST slot index varies fastest ({w1w1, w2w1, w1w2, w2w2} for two
/// 2-dim slots). This is kron of the reversed factor list.
Matrix tensor_operator(const std::vector<Matrix>& slot_ops);

/// The flip v_i x v_j -> v_j x v_i on two d-dim slots, same basis order.
Matrix flip_matrix(std::size_t d, Field f = Field::Rational);

/// Embeds an operator M acting on slots (i,j) of an n-fold tensor power of a
/// d-dim space (1-based, i < j), identity on the remaining slots.
Matrix embed_pair(const Matrix& m, std::size_t i, std::size_t j, std::size_t n,
                  std::size_t d = 2);

/// Smallest subspace containing v and closed under every operator.
Subspace invariant_closure(const Vec& v, const std::vector<Matrix>& ops);

struct AlgebraSpan {
  std::size_t dim = 0;
  std::vector<Matrix> basis;
};

/// Basis of the unital matrix algebra generated by the given operators
/// (iterated products + span until stable). dim == d*d certifies that no
/// common nontrivial invariant subspace exists.
AlgebraSpan algebra_span(const std::vector<Matrix>& ops);
std::size_t algebra_span_dim(const std::vector<Matrix>& ops);

/// All coordinate subspaces (grouped by the joint diagonal weight of
/// diag_ops) that are invariant under every op. diag_ops must be diagonal.
std::vector<Subspace> weight_invariant_subspaces(const std::vector<Matrix>& diag_ops,
                                                 const std::vector<Matrix>& ops);

/// Solves M x = b exactly; empty optional when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

}  // namespace frtlab
