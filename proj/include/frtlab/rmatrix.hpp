#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "frtlab/gamma.hpp"
#include "frtlab/matrix.hpp"

namespace frtlab {

/// Spectral parameter: a nonzero scalar under multiplication, or a group
/// element of the six-vertex parameter group.
using ParamPoint = std::variant<Scalar, GammaElement>;

ParamPoint param_compose(const ParamPoint& x, const ParamPoint& y);
ParamPoint param_inverse(const ParamPoint& x);
bool param_equal(const ParamPoint& x, const ParamPoint& y);
std::string param_str(const ParamPoint& x);

enum class RFamily { AffineSL2, FreeFermion, PerkSchultz, GammaIce, Flip };

std::string family_name(RFamily f);
RFamily family_from_name(const std::string& name);

/// Named 4x4 solution with its parameters, in the tensor basis order
/// {w1w1, w2w1, w1w2, w2w2}.
struct RMatrix {
  RFamily family;
  ParamPoint param;
  Matrix matrix;
};

RMatrix r_affine_sl2(const Scalar& q, const Scalar& x);
RMatrix r_free_fermion(const GammaElement& x);
RMatrix r_perk_schultz(const Scalar& q, const Scalar& x);
RMatrix r_gamma_ice(const Scalar& t, const Scalar& z);

GammaElement gamma_from_weights(const Scalar& a1, const Scalar& a2, const Scalar& b1,
                                const Scalar& b2, const Scalar& c1, const Scalar& c2);

/// Six-vertex weights of the affine solution read off as a group element;
/// valid exactly when q*q = -1 (Gaussian mode).
GammaElement affine_sl2_gamma(const Scalar& q, const Scalar& x);

/// Weights of the Perk-Schultz solution as a group element; valid for any
/// generic q.
GammaElement perk_schultz_gamma(const Scalar& q, const Scalar& x);

/// R(x) provider for the verifier and the quadratic-relations engine.
using RProvider = std::function<Matrix(const ParamPoint&)>;

RProvider provider_affine_sl2(const Scalar& q);
RProvider provider_free_fermion();

struct PybeSample {
  ParamPoint alpha, beta;
  bool zero_residual = false;
  Matrix residual;  // kept only when nonzero
};

struct PybeReport {
  bool pass = false;
  std::vector<PybeSample> samples;
};

/// Parameter fed to the middle slot of the braid relation for a sample
/// (alpha, beta). All composition-order conventions live here.
ParamPoint pybe_middle(const ParamPoint& alpha, const ParamPoint& beta);

/// Exact check of R12(a) R13(m) R23(b) = R23(b) R13(m) R12(a) with
/// m = pybe_middle(a, b), over the given parameter pairs.
PybeReport check_pybe(const RProvider& provider,
                      const std::vector<std::pair<ParamPoint, ParamPoint>>& samples);

}  // namespace frtlab
