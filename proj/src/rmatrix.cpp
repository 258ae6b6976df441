#include "frtlab/rmatrix.hpp"

namespace frtlab {

ParamPoint param_compose(const ParamPoint& x, const ParamPoint& y) {
  if (std::holds_alternative<Scalar>(x) && std::holds_alternative<Scalar>(y)) {
    return std::get<Scalar>(x) * std::get<Scalar>(y);
  }
  if (std::holds_alternative<GammaElement>(x) && std::holds_alternative<GammaElement>(y)) {
    return gamma_mul(std::get<GammaElement>(x), std::get<GammaElement>(y));
  }
  throw CompositionError("parameters from different groups");
}

ParamPoint param_inverse(const ParamPoint& x) {
  if (std::holds_alternative<Scalar>(x)) {
    const Scalar& s = std::get<Scalar>(x);
    if (s.is_zero()) throw CompositionError("zero spectral parameter");
    return s.inv();
  }
  return gamma_inv(std::get<GammaElement>(x));
}

bool param_equal(const ParamPoint& x, const ParamPoint& y) {
  if (x.index() != y.index()) return false;
  if (std::holds_alternative<Scalar>(x))
    return std::get<Scalar>(x) == std::get<Scalar>(y);
  return std::get<GammaElement>(x) == std::get<GammaElement>(y);
}

std::string param_str(const ParamPoint& x) {
  if (std::holds_alternative<Scalar>(x)) return std::get<Scalar>(x).str();
  return std::get<GammaElement>(x).str();
}

std::string family_name(RFamily f) {
  switch (f) {
    case RFamily::AffineSL2: return "AffineSL2";
    case RFamily::FreeFermion: return "FreeFermion";
    case RFamily::PerkSchultz: return "PerkSchultz";
    case RFamily::GammaIce: return "GammaIce";
    case RFamily::Flip: return "Flip";
  }
  throw Error("unreachable");
}

RFamily family_from_name(const std::string& name) {
  if (name == "AffineSL2") return RFamily::AffineSL2;
  if (name == "FreeFermion") return RFamily::FreeFermion;
  if (name == "PerkSchultz") return RFamily::PerkSchultz;
  if (name == "GammaIce") return RFamily::GammaIce;
  if (name == "Flip") return RFamily::Flip;
  throw ConfigError("unknown R-matrix family: '" + name + "'");
}

namespace {

// Six-vertex layout in the basis {w1w1, w2w1, w1w2, w2w2}:
// diag(a1, [b1 c1; c2 b2], a2).
Matrix six_vertex(const Scalar& a1, const Scalar& a2, const Scalar& b1, const Scalar& b2,
                  const Scalar& c1, const Scalar& c2) {
  Matrix m(4, 4, a1.field());
  m.at(0, 0) = a1;
  m.at(1, 1) = b1;
  m.at(1, 2) = c1;
  m.at(2, 1) = c2;
  m.at(2, 2) = b2;
  m.at(3, 3) = a2;
  return m;
}

}  // namespace

RMatrix r_affine_sl2(const Scalar& q, const Scalar& x) {
  if (q.is_zero() || q.pow(2).is_one()) throw DegenerateQ("affine solution needs q^2 != 1");
  Scalar one = Scalar::one(q.field());
  Scalar qq = q - x * q.inv();
  Scalar bb = one - x;
  return RMatrix{RFamily::AffineSL2, x,
                 six_vertex(qq, qq, bb, bb, x * (q - q.inv()), q - q.inv())};
}

RMatrix r_free_fermion(const GammaElement& x) {
  return RMatrix{RFamily::FreeFermion, x,
                 six_vertex(x.a1, x.a2, x.b1, x.b2, x.c1, x.c2)};
}

RMatrix r_perk_schultz(const Scalar& q, const Scalar& x) {
  if (q.is_zero() || q.pow(2).is_one()) throw DegenerateQ("Perk-Schultz needs q^2 != 1");
  Scalar one = Scalar::one(q.field());
  Scalar bb = one - x;
  return RMatrix{RFamily::PerkSchultz, x,
                 six_vertex(q - x * q.inv(), x * q - q.inv(), bb, bb,
                            x * (q - q.inv()), q - q.inv())};
}

RMatrix r_gamma_ice(const Scalar& t, const Scalar& z) {
  Scalar one = Scalar::one(t.field());
  return RMatrix{RFamily::GammaIce, z, six_vertex(one, z, t, z, (one + t) * z, one)};
}

GammaElement gamma_from_weights(const Scalar& a1, const Scalar& a2, const Scalar& b1,
                                const Scalar& b2, const Scalar& c1, const Scalar& c2) {
  return GammaElement::checked(a1, a2, b1, b2, c1, c2);
}

GammaElement affine_sl2_gamma(const Scalar& q, const Scalar& x) {
  RMatrix r = r_affine_sl2(q, x);
  const Matrix& m = r.matrix;
  return gamma_from_weights(m.at(0, 0), m.at(3, 3), m.at(1, 1), m.at(2, 2),
                            m.at(1, 2), m.at(2, 1));
}

GammaElement perk_schultz_gamma(const Scalar& q, const Scalar& x) {
  RMatrix r = r_perk_schultz(q, x);
  const Matrix& m = r.matrix;
  return gamma_from_weights(m.at(0, 0), m.at(3, 3), m.at(1, 1), m.at(2, 2),
                            m.at(1, 2), m.at(2, 1));
}

RProvider provider_affine_sl2(const Scalar& q) {
  return [q](const ParamPoint& p) {
    if (!std::holds_alternative<Scalar>(p))
      throw CompositionError("affine family takes scalar parameters");
    return r_affine_sl2(q, std::get<Scalar>(p)).matrix;
  };
}

RProvider provider_free_fermion() {
  return [](const ParamPoint& p) {
    if (!std::holds_alternative<GammaElement>(p))
      throw CompositionError("free-fermion family takes group parameters");
    return r_free_fermion(std::get<GammaElement>(p)).matrix;
  };
}

ParamPoint pybe_middle(const ParamPoint& alpha, const ParamPoint& beta) {
  // The middle slot composes second-first under the group's own product;
  // abelian families cannot see the order, the block group fixes it.
  return param_compose(beta, alpha);
}

PybeReport check_pybe(const RProvider& provider,
                      const std::vector<std::pair<ParamPoint, ParamPoint>>& samples) {
  PybeReport report;
  report.pass = true;
  for (const auto& [alpha, beta] : samples) {
    Matrix ra = provider(alpha);
    Matrix rab = provider(pybe_middle(alpha, beta));
    Matrix rb = provider(beta);
    Matrix r12a = embed_pair(ra, 1, 2, 3);
    Matrix r13ab = embed_pair(rab, 1, 3, 3);
    Matrix r23b = embed_pair(rb, 2, 3, 3);
    Matrix residual = r12a * r13ab * r23b - r23b * r13ab * r12a;
    PybeSample s{alpha, beta, residual.is_zero(), Matrix()};
    if (!s.zero_residual) {
      s.residual = residual;
      report.pass = false;
    }
    report.samples.push_back(std::move(s));
  }
  return report;
}

}  // namespace frtlab
