#pragma once

#include <memory>
#include <string>
#include <vector>

#include "frtlab/frt.hpp"
#include "frtlab/uq.hpp"

namespace frtlab {

/// q^p for a binary sequence, p counting the 1s to the right of each 2.
Scalar g_weight(const std::vector<int>& seq, const Scalar& q);

/// The (r+1)-dimensional highest-weight subcomodule of the staggered tensor
/// of standard comodules at q^{-r+1}a, ..., q^{r-1}a.
struct EvaluationComodule {
  Scalar a;
  int r = 0;
  Scalar q;
  std::vector<Scalar> slate;                     // staggered spectral points
  std::shared_ptr<const GradedComponent> gc;     // degree-r component
  std::vector<Vec> basis;                        // u_j over the 2^r tensor basis
  std::vector<std::vector<AlgElement>> alpha;    // coaction coefficients
  CoactionMatrixSet coaction;                    // restriction to span{u_j}

  bool closed = false;        // span is closed under the coaction
  bool alpha_matches = false; // restricted coefficients reproduce alpha
};

EvaluationComodule build_W(const Scalar& a, int r, const Scalar& q, int degree_cap = 4);

/// Dual-action matrices <x, alpha_{lj}> on the dual basis.
std::map<ULetter, Matrix> dual_action_matrices(const EvaluationComodule& w);

struct DualActionReport {
  bool formulas_match = false;       // ladder coefficients as predicted
  bool rescale_matches_eval = false; // binomial rescale lands on eval_rep
  bool k0k1_identity = false;
  UqRelationReport relations;
  bool pass() const {
    return formulas_match && rescale_matches_eval && k0k1_identity && relations.pass;
  }
};

DualActionReport dual_action_check(const EvaluationComodule& w);

struct AntipodeReport {
  bool pass = false;
  int probes = 0;
  std::vector<std::string> failures;
};

/// T(x) S(T(x)) = I = S(T(x)) T(x) against every capped word up to
/// probe_degree, through the pairing.
AntipodeReport antipode_check(const Scalar& x, const Scalar& q, int probe_degree);

struct DetqReport {
  bool counit_identity = false;  // <u, det> = eps(u)
  bool grouplike = false;        // <uv, det> = <u, det><v, det>
  int probes = 0;
};

DetqReport detq_grouplike_check(const Scalar& x, const Scalar& q, int probe_degree = 2);

struct ReduceScanEntry {
  Scalar ratio;
  bool predicted_reducible = false;
  std::size_t span_dim = 0;
  std::size_t full_dim = 0;
  bool reducible = false;
  std::vector<std::size_t> witness_dims;
};

struct ReduceScanReport {
  int m = 0, n = 0;
  std::vector<ReduceScanEntry> entries;
  bool verdicts_match_prediction = false;
};

/// Reducibility of the dual action on the tensor of evaluation modules at
/// each x/y ratio: span certificate for irreducibility, explicit invariant
/// subspace for reducibility.
ReduceScanReport reducibility_scan(int m, int n, const std::vector<Scalar>& ratios,
                                   const Scalar& q);

/// The predicted reducible ratio set {q^{+-(m+n-2p+2)} : 0 < p <= min(m,n)}.
std::vector<Scalar> predicted_reducible_ratios(int m, int n, const Scalar& q);

struct DualComoduleReport {
  bool ev_found = false;
  bool coev_found = false;
  std::size_t ev_solution_dim = 0;
  bool snake1 = false;
  bool snake2 = false;
  bool rank_one_factorization = true;  // only checked at r = 1
  bool module_model_agrees = false;    // pairing-side invariance of both maps
  Vec ev, coev;
  bool pass() const {
    return ev_found && coev_found && snake1 && snake2 && rank_one_factorization &&
           module_model_agrees;
  }
};

/// Solves for the evaluation and coevaluation homomorphisms between
/// W_{q^-2 a}(r) and W_a(r) and checks both snake identities.
DualComoduleReport dual_comodule_check(const Scalar& a, int r, const Scalar& q);

}  // namespace frtlab
