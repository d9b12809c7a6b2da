#pragma once

#include <map>
#include <string>
#include <vector>

#include "chambers/rational.hpp"

namespace chambers {

// Laurent polynomial with exact rational coefficients in variables
// v_0,...,v_{k-1} (and possibly further bookkeeping variables, e.g. formal
// series degrees).  By convention v_c^2 = u_c is the parameter of class c,
// so q^{1/2} factors stay exact.
struct LaurentCoeff {
  int nvars = 0;
  std::map<std::vector<int>, Rat> terms;  // exponent vector -> coefficient

  LaurentCoeff() = default;
  explicit LaurentCoeff(int nv) : nvars(nv) {}

  static LaurentCoeff zero(int nv) { return LaurentCoeff(nv); }
  static LaurentCoeff constant(int nv, const Rat& c);
  static LaurentCoeff one(int nv) { return constant(nv, 1); }
  static LaurentCoeff monomial(int nv, const std::vector<int>& exps, const Rat& c = 1);
  // c * v_var^e
  static LaurentCoeff var_pow(int nv, int var, int e, const Rat& c = 1);

  bool is_zero() const { return terms.empty(); }
  bool operator==(const LaurentCoeff& o) const {
    return nvars == o.nvars && terms == o.terms;
  }

  void add_term(const std::vector<int>& exps, const Rat& c);

  LaurentCoeff operator+(const LaurentCoeff& o) const;
  LaurentCoeff operator-(const LaurentCoeff& o) const;
  LaurentCoeff operator*(const LaurentCoeff& o) const;
  LaurentCoeff operator-() const;
  LaurentCoeff scaled(const Rat& c) const;
  LaurentCoeff& operator+=(const LaurentCoeff& o);
  LaurentCoeff& operator-=(const LaurentCoeff& o);

  // Multiplicative inverse of a single-term Laurent polynomial.
  LaurentCoeff monomial_inverse() const;

  bool is_monomial() const { return terms.size() == 1; }

  // Substitute numeric values for the v-variables (extra slots get value 1).
  double eval(const std::vector<double>& vvals) const;
  // Sum of |coefficient * monomial| at the given v-values.
  double eval_abs(const std::vector<double>& vvals) const;
  // Exact evaluation at u_c = uvals[c] (i.e. v_c^2); requires all exponents
  // in the first uvals.size() slots to be even and the rest to be zero.
  Rat eval_u_exact(const std::vector<Rat>& uvals) const;

  // Total degree in slots [from, to) (for formal series truncation).
  LaurentCoeff truncated(int from, int to, int maxdeg) const;

  std::string str() const;  // deterministic human-readable form
};

}  // namespace chambers
