#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "chambers/weyl.hpp"

namespace chambers {

using CMat = Eigen::MatrixXcd;

// Finite-dimensional representation of the extended Hecke algebra with
// numeric parameters: one matrix per simple generator and one per element of
// Omega-hat (index 0 is the identity).  Immutable after validation.
struct HeckeRep {
  std::shared_ptr<const WeylGroup> W;
  int dim = 0;
  std::vector<CMat> gen_s;
  std::vector<CMat> gen_omega;
  ParamSystem params;
};

// Checks the quadratic, braid, Omega-twist and Omega-composition relations to
// the given tolerance; throws validation_error naming the failed relation and
// the residual norm.
void validate_rep(const HeckeRep& rep, double tol = 1e-9);

// name in {trivial, steinberg, sign:<tok,...>[;omega=<+1|-1,...>]} where the
// tokens (one per parameter class) are "q"/"+" or "-1"/"-".
HeckeRep builtin_rep(std::shared_ptr<const WeylGroup> W, const std::string& name,
                     const ParamSystem& params);

// JSON file {type, dim, q: {class: value}, generators: {"s0": [[[re,im],..],..],
// "w1": ...}}; validated before returning.
HeckeRep load_rep(const std::string& path);

CMat evaluate(const HeckeRep& rep, const WeylElement& w);

bool is_unitary(const HeckeRep& rep, double tol = 1e-9);

struct PMinResult {
  double p = 1.0;              // finite value when !infinite && !above_trivial
  bool infinite = false;       // some |lambda| = q_beta_i, none above
  bool above_trivial = false;  // some |lambda| > q_beta_i (1 + tol)
  std::vector<double> q_beta;                 // numeric q_{beta_i}
  std::vector<std::vector<double>> eig_mags;  // per i, |lambda| list
};

// Smallest p with |lambda| <= q_{beta_i}^{(p-1)/p} for all eigenvalues of all
// M_{beta_i}.  Throws config_error when some q_{beta_i} = 1 (criterion
// degenerates).
PMinResult p_min(const HeckeRep& rep, double tol = 1e-9);

struct ZetaData {
  // char_polys[i][k] = coefficient of t^k in det(1 - M_{beta_i} t)
  std::vector<std::vector<std::complex<double>>> char_polys;
  std::vector<std::vector<std::complex<double>>> eigenvalues;
  std::vector<long long> l_beta;
  // |u| for the poles of det(1 - M_{beta_i} u^{l(beta_i)})^{-1} in the u-plane
  std::vector<std::vector<double>> pole_mags_u;
};

ZetaData zeta(const HeckeRep& rep);

// True iff every eigenvalue mu of every M_{beta_i} satisfies
// |mu| <= q_{beta_i}^{(p-1)/p} or |mu| = q_{beta_i}, within tol.
bool rh_check(const HeckeRep& rep, double p, double tol = 1e-9);

struct GrowthReport {
  std::vector<double> max_ratio;  // index l: max over l(w)=l of |<v*,M_w v>| q_w^{(1-p)/p}
  std::vector<bool> violation;    // ratio exceeds (1+delta)^l, l >= onset
  long long onset = 0;
  bool any_violation = false;
};

GrowthReport tempered_growth_check(const HeckeRep& rep, const Eigen::VectorXcd& v,
                                   const Eigen::VectorXcd& vstar, long long L, double p,
                                   double delta, long long onset = 0);

}  // namespace chambers
