#include "chambers/bounds.hpp"

#include <cctype>
#include <cmath>

#include "chambers/errors.hpp"

namespace chambers {

namespace {

Rat rat_pow(const Rat& base, long long e) {
  Rat out = 1;
  for (long long i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

Rat d_constant(const WeylGroup& W, const Rat& q_max, long long l) {
  if (q_max < 1) throw usage_error("d_constant needs q_max >= 1");
  if (l < 0) throw usage_error("d_constant needs l >= 0");
  long long lw = W.longest_finite_length();
  Rat out = Rat((long long)W.finite_weyl().size());
  out *= rat_pow(Rat(2), lw);
  out *= rat_pow(q_max, 4 * lw);
  out *= rat_pow(Rat(l + 1 + lw), lw);
  return out;
}

namespace {

double q_max_of(const ParamSystem& ps) {
  double q = 1;
  for (const auto& v : ps.qval) q = std::max(q, to_double(v));
  return q;
}

}  // namespace

BoundReport norm_bound_hw(const WeylGroup& W, const ParamSystem& ps, double p,
                          const WeylElement& w) {
  if (p < 2) throw usage_error("norm bounds are stated for p >= 2");
  if (!ps.numeric) throw usage_error("norm bounds need numeric parameters");
  Rat qmax_r = 1;
  for (const auto& v : ps.qval) qmax_r = std::max(qmax_r, v);
  double qmax = to_double(qmax_r);
  long long l = W.length(w);
  double qw = W.q_w_numeric(w, ps);
  BoundReport r;
  r.name = "norm_bound_hw";
  double D = to_double(d_constant(W, qmax_r, l));
  r.inputs = {{"p", p}, {"q_max", qmax}, {"l(w)", (double)l}, {"q_w", qw}, {"D", D}};
  r.bound = D * std::pow(qw, (p - 1.0) / p);
  return r;
}

BoundReport norm_bound_hbeta(const WeylGroup& W, const ParamSystem& ps, double p,
                             const Coweight& beta) {
  if (p < 2) throw usage_error("norm bounds are stated for p >= 2");
  if (!ps.numeric) throw usage_error("norm bounds need numeric parameters");
  for (long long b : beta)
    if (b < 0) throw usage_error("norm_bound_hbeta needs a dominant coweight");
  double qmax = q_max_of(ps);
  long long lw = W.longest_finite_length();
  long long lb = W.translation_length(beta);
  double qb = W.q_w_numeric(W.translation(beta), ps);
  BoundReport r;
  r.name = "norm_bound_hbeta";
  r.inputs = {{"p", p},          {"q_max", qmax},     {"l(w~0)", (double)lw},
              {"l(beta)", (double)lb}, {"q_beta", qb}};
  r.bound = (double)W.finite_weyl().size() * std::pow(2.0 * qmax, (double)lw) *
            std::pow((double)(lb + 1), (double)lw) * std::pow(qb, (p - 1.0) / p);
  return r;
}

double bipartite_norm_bound(double K0, double K1, double p) {
  if (K0 < 0 || K1 < 0) throw usage_error("bipartite_norm_bound needs K0, K1 >= 0");
  if (p < 1) throw usage_error("bipartite_norm_bound needs p >= 1");
  return std::pow(K0, 1.0 / p) * std::pow(K1, (p - 1.0) / p);
}

long long oh_p0(const std::string& raw) {
  std::string name;
  for (char c : raw)
    if (!std::isspace((unsigned char)c) && c != '_') name += (char)std::toupper((unsigned char)c);
  if (name.size() < 2) throw usage_error("unknown type for oh_p0: " + raw);
  char fam = name[0];
  long long n = 0;
  try {
    n = std::stoll(name.substr(1));
  } catch (...) {
    throw usage_error("unknown type for oh_p0: " + raw);
  }
  if (n <= 1 && (fam == 'A' || fam == 'B' || fam == 'C' || fam == 'D'))
    throw usage_error("oh_p0 is tabulated for rank >= 2 only; rank-1 types are refused");
  switch (fam) {
    case 'A':
      return 2 * n;
    case 'B':
      return 2 * n;
    case 'C':
      return 2 * n;
    case 'D':
      if (n < 3) throw usage_error("oh_p0: D_n needs n >= 3");
      return n % 2 == 0 ? 2 * (n - 1) : 2 * n;
    case 'E':
      if (n == 6) return 16;
      if (n == 7) return 18;
      if (n == 8) return 29;
      throw usage_error("unknown type for oh_p0: " + raw);
    case 'F':
      if (n == 4) return 11;
      throw usage_error("unknown type for oh_p0: " + raw);
    case 'G':
      if (n == 2) return 6;
      throw usage_error("unknown type for oh_p0: " + raw);
    default:
      throw usage_error("unknown type for oh_p0: " + raw);
  }
}

DiameterBounds diameter_bounds(double p, double q, double N, const WeylGroup& W) {
  if (q <= 1) throw usage_error("diameter_bounds needs q > 1");
  if (N < q * q) throw config_error("diameter_bounds: N too small (need N >= q^2)");
  double lw = (double)W.longest_finite_length();
  double n = (double)W.rank();
  double logqN = std::log(N) / std::log(q);
  double loglog = std::log(logqN) / std::log(q);
  DiameterBounds b;
  b.avg_upper = (p / 2.0) * logqN + (lw + 1.0) * loglog + 1.0;
  b.diameter_upper = p * logqN + 2.0 * (lw + 1.0) * loglog + 1.0;
  b.avg_lower = logqN - (n + 1.0) * loglog - 1.0;
  return b;
}

}  // namespace chambers
