#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frtlab/rmatrix.hpp"

namespace frtlab {

/// Ordered list of spectral points sharing one composition law.
struct ParamSlate {
  std::vector<ParamPoint> points;

  static ParamSlate of_scalars(const std::vector<Scalar>& xs);
  static ParamSlate of_gammas(const std::vector<GammaElement>& xs);
  std::size_t size() const { return points.size(); }
};

/// The spectral ratio fed to R for an ordered pair (x, y) of points. The
/// composition-order convention lives here, next to pybe_middle.
ParamPoint frt_ratio(const ParamPoint& x, const ParamPoint& y);

/// One generator factor t_{row,col}(point); point indexes a deduplicated
/// point table owned by the component or relation set.
struct WordFactor {
  std::uint8_t row = 1, col = 1;
  std::uint16_t point = 0;

  auto operator<=>(const WordFactor&) const = default;
};

using AlgWord = std::vector<WordFactor>;
using AlgElement = std::vector<std::pair<Scalar, AlgWord>>;

std::string word_str(const AlgWord& w, const std::vector<ParamPoint>& points);

/// Quadratic relation instances for every ordered pair of slate points:
/// 16 elements per pair, exact coefficients.
struct RelationSet {
  std::vector<ParamPoint> points;  // deduplicated
  std::vector<AlgElement> relations;
};

RelationSet generate_relations(const RProvider& provider, const ParamSlate& slate);

/// Graded component of the quadratic quotient algebra: every degree-n word
/// using a size-n sub-multiset of the slate (all point orders), reduced by
/// the relation span via exact RREF. Pivot words rewrite into the non-pivot
/// (basis) words, which makes normal forms canonical.
class GradedComponent {
 public:
  enum class Quotient { Full, BPlus, BMinus, Diagonal };

  GradedComponent(const RProvider& provider, const ParamSlate& slate, int degree,
                  Quotient quo = Quotient::Full, int degree_cap = 4);

  int degree() const { return degree_; }
  Quotient quotient() const { return quotient_; }
  const std::vector<ParamPoint>& points() const { return points_; }
  const std::vector<AlgWord>& words() const { return words_; }
  std::size_t ambient_dim() const { return words_.size(); }
  std::size_t relation_rank() const { return relation_rank_; }
  std::size_t basis_dim() const { return basis_words_.size(); }
  const std::vector<std::size_t>& basis_word_indices() const { return basis_words_; }

  std::optional<std::size_t> word_index(const AlgWord& w) const;
  /// Index of a word given per-factor (row, col, point value) triples.
  AlgWord make_word(const std::vector<std::tuple<int, int, ParamPoint>>& factors) const;

  /// Coordinates over the basis words; zero vector means membership in the
  /// relation ideal.
  Vec normal_form(const AlgElement& element) const;
  bool in_ideal(const AlgElement& element) const;

 private:
  struct Block {
    std::vector<std::size_t> cols;            // global word indices, sorted
    std::map<std::size_t, std::size_t> col_of;  // global -> local
    std::map<std::size_t, Vec> pivot_rows;    // local pivot col -> reduced row
  };

  std::string block_key_of_word(const AlgWord& w) const;
  void insert_relation_row(const AlgElement& element);

  int degree_;
  Quotient quotient_;
  Field field_ = Field::Rational;
  std::vector<ParamPoint> points_;           // deduplicated slate values
  std::vector<int> multiplicity_;            // per deduplicated point
  std::vector<AlgWord> words_;
  std::map<AlgWord, std::size_t> index_;
  std::map<std::string, Block> blocks_;
  std::map<std::size_t, std::string> block_of_word_;
  std::vector<std::size_t> basis_words_;
  std::map<std::size_t, std::size_t> basis_pos_;  // word index -> basis position
  std::size_t relation_rank_ = 0;
};

/// Coaction coefficients of a finite comodule over a shared graded-component
/// basis: Delta(v_i) = sum_k sum_j coeff[k]_{ij} basis_k x v_j. Zero
/// matrices are not stored.
struct CoactionMatrixSet {
  std::shared_ptr<const GradedComponent> gc;
  std::size_t dim = 0;
  std::map<std::size_t, Matrix> coeff;

  /// Reconstruction check of the defining identity against raw words.
  bool consistent_with(const std::vector<Vec>& comodule_basis,
                       const CoactionMatrixSet& ambient) const;
};

/// Standard tensor comodule on the slate, one 2-dim slot per point in slot
/// order; basis index has the first slot fastest.
CoactionMatrixSet coaction_matrices(const std::shared_ptr<const GradedComponent>& gc,
                                    const ParamSlate& slate);

/// Comodule spanned by the given vectors inside a tensor comodule; empty
/// when the span is not closed under the coaction.
std::optional<CoactionMatrixSet> restrict_comodule(const CoactionMatrixSet& ambient,
                                                   const std::vector<Vec>& basis_vectors);

/// All subcomodules: common invariant subspaces of the transposed
/// coefficient matrices, found cluster-by-cluster from the diagonal-quotient
/// weights and verified exactly. `complete` is false only if a weight
/// cluster's compressed action is scalar on a >=2-dim cluster (continuum).
struct SubcomoduleLattice {
  std::vector<Subspace> members;  // sorted by dimension, includes 0 and full
  bool complete = true;
};

SubcomoduleLattice subcomodule_solve(const CoactionMatrixSet& cm,
                                     const CoactionMatrixSet& diag_part);

/// (1 x f) Delta_src = Delta_dst f, coefficient-wise over the shared basis.
bool comodule_hom_check(const Matrix& f, const CoactionMatrixSet& src,
                        const CoactionMatrixSet& dst);

struct Eq10Line {
  std::string label;
  bool in_ideal = false;
};

struct Eq10Report {
  bool lines_pass = false;       // first three printed lines
  bool detq_equal = false;       // four expressions pairwise equal
  bool printed_line4_in_ideal = false;  // expected false
  std::string derived_line4;
  std::vector<Eq10Line> lines;
};

/// Degree-2 consequences at the slate (x, q^2 x): membership of each printed
/// commutation line, the four-fold quantum-determinant equality, and the
/// corrected form of the misprinted line.
Eq10Report verify_eq10_relations(const Scalar& q, const Scalar& x);

/// The four equal quantum-determinant expressions at the pair (x, q^2 x),
/// as elements of the degree-2 component (point 0 = x, point 1 = q^2 x).
std::vector<AlgElement> detq_expressions(const Scalar& q);

}  // namespace frtlab
