#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chambers/weyl.hpp"

namespace chambers {

struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, double>> inputs;
  double bound = 0;
  bool has_empirical = false;
  double empirical = 0;
  double margin() const { return bound - empirical; }
};

// D(q, l) = |W0| 2^{l(w~0)} q^{4 l(w~0)} (l + 1 + l(w~0))^{l(w~0)}, exact.
Rat d_constant(const WeylGroup& W, const Rat& q_max, long long l);

// D(q_max, l(w)) q_w^{(p-1)/p}; p >= 2.
BoundReport norm_bound_hw(const WeylGroup& W, const ParamSystem& ps, double p,
                          const WeylElement& w);
// |W0| (2 q_max)^{l(w~0)} (l(beta)+1)^{l(w~0)} q_beta^{(p-1)/p}; p >= 2.
BoundReport norm_bound_hbeta(const WeylGroup& W, const ParamSystem& ps, double p,
                             const Coweight& beta);

// K0^{1/p} K1^{(p-1)/p}
double bipartite_norm_bound(double K0, double K1, double p);

// Table value p0 per affine type (rank >= 2); rank-1 types are refused.
long long oh_p0(const std::string& type_name);

struct DiameterBounds {
  double avg_upper = 0;       // (p/2) log_q N + (l(w~0)+1) log_q log_q N + 1
  double diameter_upper = 0;  // p log_q N + 2 (l(w~0)+1) log_q log_q N + 1
  double avg_lower = 0;       // log_q N - (n+1) log_q log_q N - 1
};

DiameterBounds diameter_bounds(double p, double q, double N, const WeylGroup& W);

}  // namespace chambers
