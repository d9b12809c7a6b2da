#pragma once

#include <map>
#include <string>
#include <vector>

#include "chambers/laurent.hpp"
#include "chambers/weyl.hpp"

namespace chambers {

// Element of the (extended) Iwahori-Hecke algebra in the T-basis {h_w}:
// finite support map from canonical Weyl elements to Laurent coefficients
// in the half-parameter variables v_c.
using HeckeElement = std::map<WeylElement, LaurentCoeff>;

struct BernsteinKey {
  WeylElement w0;  // finite part (beta = 0)
  Coweight beta;
  auto operator<=>(const BernsteinKey&) const = default;
};

// map (w0', beta') -> coefficient, for a fixed (w0, beta); see
// bernstein_coeffs.
using BernsteinTable = std::map<BernsteinKey, LaurentCoeff>;

// Exact arithmetic over the abstract parameter Laurent ring.  extra_vars
// appends formal bookkeeping variables (used by the truncated Poincare
// series, one degree slot per parameter class).
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(const WeylGroup& W, int extra_vars = 0);

  const WeylGroup& weyl() const { return *W_; }
  int nvars() const { return nv_; }
  int extra_vars() const { return extra_; }

  HeckeElement zero() const { return {}; }
  HeckeElement one() const;
  HeckeElement basis(const WeylElement& w) const;  // h_w
  HeckeElement h_gen(int s) const;                 // h_{s}
  HeckeElement h_omega(int k) const;
  HeckeElement constant(const LaurentCoeff& c) const;

  static void add_into(HeckeElement& a, const HeckeElement& b);
  static void sub_into(HeckeElement& a, const HeckeElement& b);
  HeckeElement scaled(const HeckeElement& a, const LaurentCoeff& c) const;
  bool equal(const HeckeElement& a, const HeckeElement& b) const;
  bool is_zero(const HeckeElement& a) const { return a.empty(); }

  HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;
  // a * h_s for a single generator (the workhorse rule).
  HeckeElement mult_gen_right(const HeckeElement& a, int s) const;

  HeckeElement star(const HeckeElement& a) const;  // h_w -> h_{w^{-1}}

  HeckeElement generator_inverse(int s) const;  // q_s^{-1}(h_s - (q_s-1))
  // (h_w)^{-1} for arbitrary w, via the reversed reduced word.
  HeckeElement basis_inverse(const WeylElement& w) const;

  HeckeElement x_beta(const Coweight& b) const;  // h_{b1} h_{b2}^{-1}
  HeckeElement y_beta(const Coweight& b) const;  // normalized version

  // Y_beta h_{w0} = sum alpha h_{w0'} Y_{beta'}   (unprimed)
  // Y_beta h_{w0}^{-1} = sum alpha' h_{w0'}^{-1} Y_{beta'}   (primed)
  BernsteinTable bernstein_coeffs(const WeylElement& w0, const Coweight& beta,
                                  bool primed = false) const;
  // Expand sum alpha h_{w0} Y_{beta} (resp. with h^{-1}) into the T-basis.
  HeckeElement from_bernstein(const BernsteinTable& t, bool primed = false) const;
  BernsteinTable to_bernstein(const HeckeElement& h) const;

  // Truncated generalized Poincare series (requires extra_vars ==
  // num_classes; the extra slots carry the formal u-degrees).
  HeckeElement poincare_lhs(long long L, long long cap = 14) const;
  HeckeElement poincare_rhs(long long L) const;
  bool poincare_identity_check(long long L, long long cap = 14) const;

  LaurentCoeff q_s(int s) const { return W_->q_s(s, extra_); }
  LaurentCoeff one_coeff() const { return LaurentCoeff::one(nv_); }

  std::string elem_str(const HeckeElement& a) const;

 private:
  const WeylGroup* W_;
  int extra_;
  int nv_;

  // The non-h_{s_i} terms of Y_beta h_{s_i} as (beta'', coeff) pairs.
  std::vector<std::pair<Coweight, LaurentCoeff>> relation_terms(int i, const Coweight& b) const;
  std::vector<std::pair<Coweight, LaurentCoeff>> relation_terms_primed(int i,
                                                                       const Coweight& b) const;
  Coweight simple_reflect(int i, const Coweight& b) const;
  LaurentCoeff u_monomial(const WeylElement& w) const;
  HeckeElement truncate_u(const HeckeElement& a, long long L) const;
};

}  // namespace chambers
