#include "chambers/hecke.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "chambers/errors.hpp"

namespace chambers {

HeckeAlgebra::HeckeAlgebra(const WeylGroup& W, int extra_vars)
    : W_(&W), extra_(extra_vars), nv_(W.num_classes() + extra_vars) {}

HeckeElement HeckeAlgebra::one() const {
  return {{W_->identity(), LaurentCoeff::one(nv_)}};
}

HeckeElement HeckeAlgebra::basis(const WeylElement& w) const {
  return {{w, LaurentCoeff::one(nv_)}};
}

HeckeElement HeckeAlgebra::h_gen(int s) const { return basis(W_->gen(s)); }

HeckeElement HeckeAlgebra::h_omega(int k) const { return basis(W_->omega_hat().at(k)); }

HeckeElement HeckeAlgebra::constant(const LaurentCoeff& c) const {
  if (c.is_zero()) return {};
  return {{W_->identity(), c}};
}

void HeckeAlgebra::add_into(HeckeElement& a, const HeckeElement& b) {
  for (const auto& [w, c] : b) {
    auto it = a.find(w);
    if (it == a.end()) {
      a.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) a.erase(it);
    }
  }
}

void HeckeAlgebra::sub_into(HeckeElement& a, const HeckeElement& b) {
  for (const auto& [w, c] : b) {
    auto it = a.find(w);
    if (it == a.end()) {
      a.emplace(w, -c);
    } else {
      it->second -= c;
      if (it->second.is_zero()) a.erase(it);
    }
  }
}

HeckeElement HeckeAlgebra::scaled(const HeckeElement& a, const LaurentCoeff& c) const {
  HeckeElement out;
  if (c.is_zero()) return out;
  for (const auto& [w, co] : a) {
    LaurentCoeff p = co * c;
    if (!p.is_zero()) out.emplace(w, std::move(p));
  }
  return out;
}

bool HeckeAlgebra::equal(const HeckeElement& a, const HeckeElement& b) const { return a == b; }

HeckeElement HeckeAlgebra::mult_gen_right(const HeckeElement& a, int s) const {
  HeckeElement out;
  LaurentCoeff qs = q_s(s);
  LaurentCoeff qs1 = qs - LaurentCoeff::one(nv_);
  for (const auto& [w, c] : a) {
    WeylElement ws = W_->multiply(w, W_->gen(s));
    if (W_->length(ws) > W_->length(w)) {
      add_into(out, {{ws, c}});
    } else {
      add_into(out, {{ws, c * qs}});
      add_into(out, {{w, c * qs1}});
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement out;
  for (const auto& [v, c] : b) {
    auto [word, om] = W_->reduced_word(v);
    HeckeElement cur = scaled(a, c);
    for (int s : word) cur = mult_gen_right(cur, s);
    if (!(om == W_->identity())) {
      HeckeElement shifted;
      for (auto& [w, co] : cur) shifted.emplace(W_->multiply(w, om), co);
      cur = std::move(shifted);
    }
    add_into(out, cur);
  }
  return out;
}

HeckeElement HeckeAlgebra::star(const HeckeElement& a) const {
  HeckeElement out;
  for (const auto& [w, c] : a) out.emplace(W_->inverse(w), c);
  return out;
}

HeckeElement HeckeAlgebra::generator_inverse(int s) const {
  LaurentCoeff qinv = q_s(s).monomial_inverse();
  HeckeElement out = {{W_->gen(s), qinv}};
  add_into(out, constant(-(qinv * (q_s(s) - LaurentCoeff::one(nv_)))));
  return out;
}

HeckeElement HeckeAlgebra::basis_inverse(const WeylElement& w) const {
  auto [word, om] = W_->reduced_word(w);
  HeckeElement out = basis(W_->inverse(om));
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = multiply(out, generator_inverse(*it));
  return out;
}

HeckeElement HeckeAlgebra::x_beta(const Coweight& b) const {
  const int n = W_->rank();
  Coweight b1(n), b2(n);
  for (int i = 0; i < n; ++i) {
    b1[i] = std::max(b[i], 0LL);
    b2[i] = std::max(-b[i], 0LL);
  }
  return multiply(basis(W_->translation(b1)), basis_inverse(W_->translation(b2)));
}

HeckeElement HeckeAlgebra::y_beta(const Coweight& b) const {
  const int n = W_->rank();
  Coweight b1(n), b2(n);
  for (int i = 0; i < n; ++i) {
    b1[i] = std::max(b[i], 0LL);
    b2[i] = std::max(-b[i], 0LL);
  }
  LaurentCoeff norm = W_->q_w_halfpow(W_->translation(b1), -1, extra_) *
                      W_->q_w_halfpow(W_->translation(b2), 1, extra_);
  return scaled(x_beta(b), norm);
}

Coweight HeckeAlgebra::simple_reflect(int i, const Coweight& b) const {
  Coweight out = b;
  long long zi = b[i - 1];
  const auto& cr = W_->roots().positive_roots[i - 1].coroot;
  for (int j = 0; j < W_->rank(); ++j) out[j] -= zi * cr[j];
  return out;
}

std::vector<std::pair<Coweight, LaurentCoeff>> HeckeAlgebra::relation_terms(
    int i, const Coweight& b) const {
  std::vector<std::pair<Coweight, LaurentCoeff>> out;
  const auto& rs = W_->roots();
  const bool bc_branch = !rs.reduced() && i == rs.rank;
  long long m = b[i - 1];  // <alpha_i, beta>
  if (m == 0) return out;
  const auto& step = rs.positive_roots[i - 1].coroot;  // alpha_i^vee
  auto shift = [&](const Coweight& base, long long k, const std::vector<long long>& dir) {
    Coweight out2 = base;
    for (int j = 0; j < rs.rank; ++j) out2[j] += k * dir[j];
    return out2;
  };
  std::vector<std::pair<Coweight, int>> geo;  // (beta'', sign)
  if (m > 0) {
    for (long long j = 0; j < m; ++j) geo.emplace_back(shift(b, -j, step), +1);
  } else {
    for (long long j = 1; j <= -m; ++j) geo.emplace_back(shift(b, j, step), -1);
  }
  if (!bc_branch) {
    LaurentCoeff coef = q_s(i) - LaurentCoeff::one(nv_);
    for (auto& [bb, sg] : geo) out.emplace_back(bb, sg > 0 ? coef : -coef);
  } else {
    // (R, i) = (BC_n, n): the geometric sum runs over Y_{beta''} and
    // Y_{beta'' - (2 alpha_n)^vee}, with the q_0-coupled coefficient on the
    // shifted copy.  (2 alpha_n)^vee is the coroot of the divisible root.
    const Root* dbl = nullptr;
    for (const auto& r : rs.positive_roots)
      if (r.divisible) dbl = &r;
    if (!dbl) throw internal_error("BC branch without divisible root");
    LaurentCoeff vn = W_->v_s(i, extra_), v0 = W_->v_s(0, extra_);
    LaurentCoeff c1 = q_s(i) - LaurentCoeff::one(nv_);           // v_n(v_n - v_n^{-1})
    LaurentCoeff c2 = vn * (v0 - v0.monomial_inverse());         // v_n(v_0 - v_0^{-1})
    for (auto& [bb, sg] : geo) {
      out.emplace_back(bb, sg > 0 ? c1 : -c1);
      Coweight bs = bb;
      for (int j = 0; j < rs.rank; ++j) bs[j] -= dbl->coroot[j];
      out.emplace_back(bs, sg > 0 ? c2 : -c2);
    }
  }
  return out;
}

std::vector<std::pair<Coweight, LaurentCoeff>> HeckeAlgebra::relation_terms_primed(
    int i, const Coweight& b) const {
  // Y_b h_s^{-1} = h_s^{-1} Y_{s(b)} + q_s^{-1} (G - (q_s-1)(Y_b - Y_{s(b)}))
  // where G is the unprimed extra part.
  std::map<Coweight, LaurentCoeff> acc;
  auto add = [&](const Coweight& bb, const LaurentCoeff& c) {
    auto it = acc.find(bb);
    if (it == acc.end()) {
      acc.emplace(bb, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) acc.erase(it);
    }
  };
  for (auto& [bb, c] : relation_terms(i, b)) add(bb, c);
  LaurentCoeff qs1 = q_s(i) - LaurentCoeff::one(nv_);
  add(b, -qs1);
  add(simple_reflect(i, b), qs1);
  LaurentCoeff qinv = q_s(i).monomial_inverse();
  std::vector<std::pair<Coweight, LaurentCoeff>> out;
  for (auto& [bb, c] : acc) out.emplace_back(bb, c * qinv);
  return out;
}

BernsteinTable HeckeAlgebra::bernstein_coeffs(const WeylElement& w0, const Coweight& beta,
                                              bool primed) const {
  auto [word, om] = W_->reduced_word(w0);
  if (!(om == W_->identity()) || !(Coweight(W_->rank(), 0) == w0.beta))
    throw usage_error("bernstein_coeffs expects a finite Weyl element");
  if (!primed) {
    BernsteinTable T = {{BernsteinKey{W_->identity(), beta}, LaurentCoeff::one(nv_)}};
    for (int i : word) {
      BernsteinTable next;
      auto add = [&](const WeylElement& u, const Coweight& bb, const LaurentCoeff& c) {
        if (c.is_zero()) return;
        BernsteinKey k{u, bb};
        auto it = next.find(k);
        if (it == next.end()) {
          next.emplace(k, c);
        } else {
          it->second += c;
          if (it->second.is_zero()) next.erase(it);
        }
      };
      LaurentCoeff qs = q_s(i), qs1 = q_s(i) - LaurentCoeff::one(nv_);
      for (const auto& [key, c] : T) {
        Coweight sb = simple_reflect(i, key.beta);
        WeylElement u = W_->multiply(key.w0, W_->gen(i));
        if (W_->length(u) > W_->length(key.w0)) {
          add(u, sb, c);
        } else {
          add(u, sb, c * qs);
          add(key.w0, sb, c * qs1);
        }
        for (auto& [bb, cc] : relation_terms(i, key.beta)) add(key.w0, bb, c * cc);
      }
      T = std::move(next);
    }
    return T;
  }
  // Primed: recursion on a right descent, Y_b h_{w0}^{-1} =
  // (Y_b h_{s_i}^{-1}) h_{w0 s_i}^{-1}.
  std::function<BernsteinTable(const Coweight&, const std::vector<int>&)> rec =
      [&](const Coweight& b, const std::vector<int>& wrd) -> BernsteinTable {
    if (wrd.empty()) return {{BernsteinKey{W_->identity(), b}, LaurentCoeff::one(nv_)}};
    int i = wrd.back();
    std::vector<int> rest(wrd.begin(), wrd.end() - 1);
    BernsteinTable out;
    auto add = [&](const WeylElement& u, const Coweight& bb, const LaurentCoeff& c) {
      if (c.is_zero()) return;
      BernsteinKey k{u, bb};
      auto it = out.find(k);
      if (it == out.end()) {
        out.emplace(k, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    };
    // extras
    for (auto& [bb, cc] : relation_terms_primed(i, b)) {
      for (const auto& [key, c] : rec(bb, rest)) add(key.w0, key.beta, c * cc);
    }
    // main term h_{s_i}^{-1} * (expansion of Y_{s_i(b)} h_{rest}^{-1})
    LaurentCoeff qinv = q_s(i).monomial_inverse();
    LaurentCoeff qs1 = q_s(i) - LaurentCoeff::one(nv_);
    for (const auto& [key, c] : rec(simple_reflect(i, b), rest)) {
      WeylElement u = W_->multiply(key.w0, W_->gen(i));
      if (W_->length(u) > W_->length(key.w0)) {
        add(u, key.beta, c);
      } else {
        add(u, key.beta, c * qinv);
        add(key.w0, key.beta, -(c * qinv * qs1));
      }
    }
    return out;
  };
  return rec(beta, word);
}

HeckeElement HeckeAlgebra::from_bernstein(const BernsteinTable& t, bool primed) const {
  HeckeElement out;
  for (const auto& [key, c] : t) {
    HeckeElement hw = primed ? basis_inverse(key.w0) : basis(key.w0);
    add_into(out, scaled(multiply(hw, y_beta(key.beta)), c));
  }
  return out;
}

BernsteinTable HeckeAlgebra::to_bernstein(const HeckeElement& h) const {
  BernsteinTable out;
  HeckeElement rem = h;
  const int n = W_->rank();
  auto key_of = [&](const WeylElement& w) {
    Coweight b1(n), b2(n);
    for (int i = 0; i < n; ++i) {
      b1[i] = std::max(w.beta[i], 0LL);
      b2[i] = std::max(-w.beta[i], 0LL);
    }
    WeylElement fin{Coweight(n, 0), w.fin};
    return W_->translation_length(b1) + W_->translation_length(b2) + W_->length(fin);
  };
  size_t guard = 0;
  while (!rem.empty()) {
    if (++guard > 200000) throw internal_error("to_bernstein failed to terminate");
    auto lead = rem.begin();
    long long best = key_of(lead->first);
    for (auto it = std::next(rem.begin()); it != rem.end(); ++it) {
      long long k = key_of(it->first);
      if (k > best || (k == best && lead->first < it->first)) {
        best = k;
        lead = it;
      }
    }
    const WeylElement w = lead->first;
    const LaurentCoeff c = lead->second;
    WeylElement fin{Coweight(n, 0), w.fin};
    // w = t_beta fin = fin t_{fin^{-1}(beta)}, so the Y-coordinate of the
    // matching basis element h_{fin} Y_{beta'} is the twisted coweight
    Coweight bp = W_->act(W_->inverse(fin), w.beta);
    HeckeElement E = multiply(basis(fin), y_beta(bp));
    auto pit = E.find(w);
    if (pit == E.end() || !pit->second.is_monomial())
      throw internal_error("to_bernstein: leading coefficient not invertible");
    LaurentCoeff factor = c * pit->second.monomial_inverse();
    BernsteinKey k{fin, bp};
    auto oit = out.find(k);
    if (oit == out.end())
      out.emplace(k, factor);
    else
      oit->second += factor;
    sub_into(rem, scaled(E, factor));
    if (rem.count(w)) throw internal_error("to_bernstein: elimination did not reduce");
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

LaurentCoeff HeckeAlgebra::u_monomial(const WeylElement& w) const {
  int ncl = W_->num_classes();
  if (extra_ != ncl) throw internal_error("u_monomial requires one extra slot per class");
  auto [word, om] = W_->reduced_word(w);
  std::vector<int> exps(nv_, 0);
  for (int s : word) exps[ncl + W_->param_class(s)] += 1;
  return LaurentCoeff::monomial(nv_, exps, 1);
}

HeckeElement HeckeAlgebra::truncate_u(const HeckeElement& a, long long L) const {
  int ncl = W_->num_classes();
  HeckeElement out;
  for (const auto& [w, c] : a) {
    LaurentCoeff t = c.truncated(ncl, nv_, (int)L);
    if (!t.is_zero()) out.emplace(w, std::move(t));
  }
  return out;
}

HeckeElement HeckeAlgebra::poincare_lhs(long long L, long long cap) const {
  HeckeElement out;
  for (const auto& w : W_->enumerate_ball(L, cap))
    add_into(out, scaled(basis(w), u_monomial(w)));
  return out;
}

HeckeElement HeckeAlgebra::poincare_rhs(long long L) const {
  HeckeElement acc;
  for (const auto& w : W_->finite_weyl()) add_into(acc, scaled(basis(w), u_monomial(w)));
  const int n = W_->rank();
  for (int i = 0; i < n; ++i) {
    Coweight bi(n, 0);
    bi[i] = 1;
    long long li = W_->translation_length(bi);
    HeckeElement mid;
    if (li == 0) throw internal_error("zero-length fundamental coweight");
    for (long long m = 0; m * li <= L; ++m) {
      Coweight mb(n, 0);
      mb[i] = m;
      WeylElement t = W_->translation(mb);
      add_into(mid, scaled(basis(t), u_monomial(t)));
    }
    acc = truncate_u(multiply(acc, mid), L);
  }
  HeckeElement box;
  for (const auto& a : W_->fundamental_box()) add_into(box, scaled(basis(a), u_monomial(a)));
  return truncate_u(multiply(acc, box), L);
}

bool HeckeAlgebra::poincare_identity_check(long long L, long long cap) const {
  return equal(poincare_lhs(L, cap), poincare_rhs(L));
}

std::string HeckeAlgebra::elem_str(const HeckeElement& a) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : a) {
    if (!first) os << "; ";
    first = false;
    os << "[" << W_->word_str(w) << "] " << c.str();
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace chambers
