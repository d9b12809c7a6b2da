#include "chambers/laurent.hpp"

#include <cmath>
#include <sstream>

#include "chambers/errors.hpp"

namespace chambers {

LaurentCoeff LaurentCoeff::constant(int nv, const Rat& c) {
  LaurentCoeff r(nv);
  if (c != 0) r.terms[std::vector<int>(nv, 0)] = c;
  return r;
}

LaurentCoeff LaurentCoeff::monomial(int nv, const std::vector<int>& exps, const Rat& c) {
  LaurentCoeff r(nv);
  if ((int)exps.size() != nv) throw internal_error("monomial: exponent size mismatch");
  if (c != 0) r.terms[exps] = c;
  return r;
}

LaurentCoeff LaurentCoeff::var_pow(int nv, int var, int e, const Rat& c) {
  std::vector<int> exps(nv, 0);
  exps.at(var) = e;
  return monomial(nv, exps, c);
}

void LaurentCoeff::add_term(const std::vector<int>& exps, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(exps);
  if (it == terms.end()) {
    terms.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

LaurentCoeff& LaurentCoeff::operator+=(const LaurentCoeff& o) {
  if (nvars != o.nvars) throw internal_error("laurent: nvars mismatch");
  for (const auto& [e, c] : o.terms) add_term(e, c);
  return *this;
}

LaurentCoeff& LaurentCoeff::operator-=(const LaurentCoeff& o) {
  if (nvars != o.nvars) throw internal_error("laurent: nvars mismatch");
  for (const auto& [e, c] : o.terms) add_term(e, -c);
  return *this;
}

LaurentCoeff LaurentCoeff::operator+(const LaurentCoeff& o) const {
  LaurentCoeff r = *this;
  r += o;
  return r;
}

LaurentCoeff LaurentCoeff::operator-(const LaurentCoeff& o) const {
  LaurentCoeff r = *this;
  r -= o;
  return r;
}

LaurentCoeff LaurentCoeff::operator-() const {
  LaurentCoeff r(nvars);
  for (const auto& [e, c] : terms) r.terms[e] = -c;
  return r;
}

LaurentCoeff LaurentCoeff::scaled(const Rat& c) const {
  LaurentCoeff r(nvars);
  if (c == 0) return r;
  for (const auto& [e, co] : terms) r.terms[e] = co * c;
  return r;
}

LaurentCoeff LaurentCoeff::operator*(const LaurentCoeff& o) const {
  if (nvars != o.nvars) throw internal_error("laurent: nvars mismatch");
  LaurentCoeff r(nvars);
  std::vector<int> e(nvars);
  for (const auto& [e1, c1] : terms)
    for (const auto& [e2, c2] : o.terms) {
      for (int i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

LaurentCoeff LaurentCoeff::monomial_inverse() const {
  if (terms.size() != 1) throw internal_error("monomial_inverse: not a monomial");
  const auto& [e, c] = *terms.begin();
  std::vector<int> ie(nvars);
  for (int i = 0; i < nvars; ++i) ie[i] = -e[i];
  return monomial(nvars, ie, Rat(1) / c);
}

double LaurentCoeff::eval(const std::vector<double>& vvals) const {
  double total = 0;
  for (const auto& [e, c] : terms) {
    double t = c.convert_to<double>();
    for (int i = 0; i < nvars; ++i) {
      double v = i < (int)vvals.size() ? vvals[i] : 1.0;
      if (e[i] != 0) t *= std::pow(v, e[i]);
    }
    total += t;
  }
  return total;
}

double LaurentCoeff::eval_abs(const std::vector<double>& vvals) const {
  double total = 0;
  for (const auto& [e, c] : terms) {
    double t = std::abs(c.convert_to<double>());
    for (int i = 0; i < nvars; ++i) {
      double v = i < (int)vvals.size() ? vvals[i] : 1.0;
      if (e[i] != 0) t *= std::pow(std::abs(v), e[i]);
    }
    total += t;
  }
  return total;
}

Rat LaurentCoeff::eval_u_exact(const std::vector<Rat>& uvals) const {
  Rat total = 0;
  for (const auto& [e, c] : terms) {
    Rat t = c;
    for (int i = 0; i < nvars; ++i) {
      if (i < (int)uvals.size()) {
        if (e[i] % 2 != 0) throw internal_error("eval_u_exact: odd exponent of v");
        int k = e[i] / 2;
        for (int j = 0; j < std::abs(k); ++j) {
          if (k > 0)
            t *= uvals[i];
          else
            t /= uvals[i];
        }
      } else if (e[i] != 0) {
        throw internal_error("eval_u_exact: unexpected extra-slot exponent");
      }
    }
    total += t;
  }
  return total;
}

LaurentCoeff LaurentCoeff::truncated(int from, int to, int maxdeg) const {
  LaurentCoeff r(nvars);
  for (const auto& [e, c] : terms) {
    int deg = 0;
    for (int i = from; i < to; ++i) deg += e[i];
    if (deg <= maxdeg) r.terms[e] = c;
  }
  return r;
}

std::string LaurentCoeff::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (int i = 0; i < nvars; ++i)
      if (e[i] != 0) os << "*v" << i << "^" << e[i];
  }
  return os.str();
}

}  // namespace chambers
