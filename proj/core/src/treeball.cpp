#include "chambers/treeball.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <random>
#include <sstream>

#include "chambers/errors.hpp"

namespace chambers {

namespace {

// code arithmetic for (m, eps) = the map x -> m + eps*x
using Code = std::pair<long long, int>;

Code code_mul_gen(Code w, int s) {
  auto [m, e] = w;
  if (s == 0) return {m + 2 * e, -e};
  return {m, -e};
}

Code code_mul_omega(Code w) {
  auto [m, e] = w;
  return {m + e, -e};
}

long long code_L(Code w) {  // sector length L(w) = l(w0) - b for w = t_b * w0
  auto [m, e] = w;
  return (e < 0 ? 1 : 0) - m;
}

double vec_pnorm(const std::vector<double>& f, const std::vector<char>& mask, double p) {
  double s = 0;
  for (size_t i = 0; i < f.size(); ++i)
    if (mask[i]) s += std::pow(std::abs(f[i]), p);
  return std::pow(s, 1.0 / p);
}

}  // namespace

long long TreeBall::code_length(Code w) {
  auto [m, e] = w;
  if (e > 0) return std::llabs(m);
  return m >= 1 ? m - 1 : 1 - m;
}

TreeBall::TreeBall(int q, int radius) : q_(q), r_(radius) {
  if (q < 1) throw usage_error("TreeBall needs q >= 1");
  if (radius < 2) throw usage_error("TreeBall needs radius >= 2");
  // vertices 0 = u0 (level 0), 1 = v0 (level 1)
  vdepth_ = {0, 0};
  level_ = {0, 1};
  parent_ = {-1, -1};
  std::vector<char> on_ray = {0, 1};
  edge_a_ = {0};
  edge_b_ = {1};
  edist_ = {0};
  vedges_ = {{0}, {0}};
  std::deque<int> queue = {0, 1};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (vdepth_[v] >= r_) continue;
    for (int c = 0; c < q_; ++c) {
      int child = (int)vdepth_.size();
      vdepth_.push_back(vdepth_[v] + 1);
      parent_.push_back(v);
      bool ray = on_ray[v] && c == 0;
      on_ray.push_back(ray ? 1 : 0);
      level_.push_back(ray ? level_[v] + 1 : level_[v] - 1);
      int e = (int)edge_a_.size();
      edge_a_.push_back(v);
      edge_b_.push_back(child);
      edist_.push_back(vdepth_[v] + 1);
      vedges_.push_back({e});
      vedges_[v].push_back(e);
      queue.push_back(child);
    }
  }
  ray_ = {1};
  for (int v = 1; on_ray.size() > 0;) {
    int next = -1;
    for (int e : vedges_[v]) {
      int other = edge_a_[e] == v ? edge_b_[e] : edge_a_[e];
      if (parent_[other] == v && on_ray[other]) next = other;
    }
    if (next < 0) break;
    ray_.push_back(next);
    v = next;
  }
  // Weyl distance codes from the root chamber
  assign_codes(root_chamber(), -1, wd_m_, wd_e_);
}

int TreeBall::even_end(int e) const {
  int a = edge_a_[e], b = edge_b_[e];
  return ((level_[a] % 2) + 2) % 2 == 0 ? a : b;
}

int TreeBall::oriented_of(int e, int tail) const {
  return 2 * e + (tail == even_end(e) ? 0 : 1);
}

std::pair<int, int> TreeBall::oriented_ends(int oc) const {
  int e = oc / 2, a = edge_a_[e], b = edge_b_[e];
  int ev = even_end(e), od = (ev == a ? b : a);
  if (oc % 2 == 0) return {ev, od};
  return {od, ev};
}

std::vector<int> TreeBall::panel_neighbors(int oc, int s) const {
  auto [tail, head] = oriented_ends(oc);
  int pivot = (s == 0) ? head : tail;
  std::vector<int> out;
  out.reserve(q_);
  for (int e : vedges_[pivot]) {
    if (e == oc / 2) continue;
    int other = edge_a_[e] == pivot ? edge_b_[e] : edge_a_[e];
    // keep the pivot in the same role (head for s0, tail for s1)
    out.push_back(s == 0 ? oriented_of(e, other) : oriented_of(e, pivot));
  }
  return out;
}

void TreeBall::assign_codes(int seed_oc, long long maxlen, std::vector<long long>& m_out,
                            std::vector<signed char>& e_out) const {
  m_out.assign(noriented(), 0);
  e_out.assign(noriented(), 0);  // 0 = unassigned
  int rev = 2 * (seed_oc / 2) + 1 - (seed_oc % 2);
  std::deque<int> queue;
  m_out[seed_oc] = 0;
  e_out[seed_oc] = 1;
  queue.push_back(seed_oc);
  m_out[rev] = 1;
  e_out[rev] = -1;
  queue.push_back(rev);
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    Code w{m_out[c], e_out[c]};
    if (maxlen >= 0 && code_length(w) >= maxlen) continue;
    for (int s = 0; s < 2; ++s) {
      Code ws = code_mul_gen(w, s);
      for (int nb : panel_neighbors(c, s)) {
        if (e_out[nb] != 0) continue;
        m_out[nb] = ws.first;
        e_out[nb] = (signed char)ws.second;
        queue.push_back(nb);
      }
    }
  }
}

Code TreeBall::sector_code(int oc) const {
  auto [tail, head] = oriented_ends(oc);
  return {level_[tail], level_[head] - level_[tail]};
}

WeylElement TreeBall::code_to_elem(const WeylGroup& W, Code code) const {
  (void)W;
  return WeylElement{{code.first}, {{(long long)code.second}}};
}

std::vector<double> TreeBall::apply_gen(int s, const std::vector<double>& f) const {
  std::vector<double> out(noriented(), 0.0);
  for (int oc = 0; oc < noriented(); ++oc) {
    double acc = 0;
    for (int nb : panel_neighbors(oc, s)) acc += f[nb];
    out[oc] = acc;
  }
  return out;
}

std::vector<double> TreeBall::apply_omega(const std::vector<double>& f) const {
  std::vector<double> out(noriented());
  for (int e = 0; e < nedges(); ++e) {
    out[2 * e] = f[2 * e + 1];
    out[2 * e + 1] = f[2 * e];
  }
  return out;
}

std::vector<double> TreeBall::apply(const WeylGroup& W, const HeckeElement& h,
                                    const std::vector<double>& vvals,
                                    const std::vector<double>& f) const {
  std::vector<double> out(noriented(), 0.0);
  for (const auto& [w, c] : h) {
    double coeff = c.eval(vvals);
    if (coeff == 0.0) continue;
    auto [word, om] = W.reduced_word(w);
    std::vector<double> g = f;
    if (!(om == W.identity())) {
      if (W.omega_index(om) != 1 || W.omega_hat().size() != 2)
        throw usage_error("tree ball supports only the edge-reversing omega");
      g = apply_omega(g);
    }
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = apply_gen(*it, g);
    for (int oc = 0; oc < noriented(); ++oc) out[oc] += coeff * g[oc];
  }
  return out;
}

long long TreeBall::word_span(const WeylGroup& W, const HeckeElement& h) {
  long long span = 0;
  for (const auto& [w, c] : h) span = std::max(span, W.length(w));
  return span;
}

double TreeBall::norm2_lower(const WeylGroup& W, const HeckeAlgebra& H, const HeckeElement& h,
                             const std::vector<double>& vvals, int restrict_dist, int iters,
                             double tol) const {
  if (restrict_dist + word_span(W, h) > r_)
    throw resource_error("norm2_lower: restriction exceeds the exact interior");
  HeckeElement hstar = H.star(h);
  std::vector<char> mask(noriented(), 0);
  for (int oc = 0; oc < noriented(); ++oc)
    if (chamber_dist(oc) <= restrict_dist) mask[oc] = 1;
  auto project = [&](std::vector<double>& f) {
    for (int oc = 0; oc < noriented(); ++oc)
      if (!mask[oc]) f[oc] = 0.0;
  };
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> x(noriented(), 0.0);
  for (int oc = 0; oc < noriented(); ++oc)
    if (mask[oc]) x[oc] = uni(rng);
  double lam = 0;
  for (int it = 0; it < iters; ++it) {
    std::vector<double> y = apply(W, h, vvals, x);
    project(y);
    std::vector<double> z = apply(W, hstar, vvals, y);
    project(z);
    double num = 0, den = 0, nz = 0;
    for (int oc = 0; oc < noriented(); ++oc) {
      num += z[oc] * x[oc];
      den += x[oc] * x[oc];
      nz += z[oc] * z[oc];
    }
    double next = num / den;
    if (nz == 0) return 0.0;
    double scale = 1.0 / std::sqrt(nz);
    for (int oc = 0; oc < noriented(); ++oc) x[oc] = z[oc] * scale;
    if (it > 4 && std::abs(next - lam) < tol * std::max(1.0, std::abs(next))) {
      lam = next;
      break;
    }
    lam = next;
  }
  return std::sqrt(std::max(0.0, lam));
}

std::vector<double> TreeBall::growth_sequence(const WeylGroup& W, const HeckeElement& h,
                                              const std::vector<double>& vvals, int nmax) const {
  std::vector<double> out;
  std::vector<double> g(noriented(), 0.0);
  g[root_chamber()] = 1.0;
  for (int n = 1; n <= nmax; ++n) {
    g = apply(W, h, vvals, g);
    double s = 0;
    for (double v : g) s += v * v;
    out.push_back(std::pow(std::sqrt(s), 1.0 / (double)n));
  }
  return out;
}

Eigen::MatrixXd TreeBall::radial_matrix(const WeylGroup& W, const HeckeAlgebra& H,
                                        const HeckeElement& h, const std::vector<double>& vvals,
                                        long long L) const {
  (void)H;
  long long span = word_span(W, h);
  if (L + span + 1 > r_) throw resource_error("radial_matrix: L too large for this radius");
  auto ball = W.enumerate_ball(L);
  std::map<Code, int> idx;
  std::vector<Code> codes;
  for (const auto& w : ball) {
    Code c{w.beta[0], (int)w.fin[0][0]};
    idx[c] = (int)codes.size();
    codes.push_back(c);
  }
  // representative chamber per code, as deep inside as possible
  std::vector<int> rep(codes.size(), -1);
  for (int oc = 0; oc < noriented(); ++oc) {
    Code c{wd_m_[oc], wd_e_[oc]};
    auto it = idx.find(c);
    if (it == idx.end()) continue;
    if (rep[it->second] < 0 || chamber_dist(oc) < chamber_dist(rep[it->second]))
      rep[it->second] = oc;
  }
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero((int)codes.size(), (int)codes.size());
  for (size_t j = 0; j < codes.size(); ++j) {
    std::vector<double> ind(noriented(), 0.0);
    for (int oc = 0; oc < noriented(); ++oc)
      if (wd_m_[oc] == codes[j].first && wd_e_[oc] == codes[j].second) ind[oc] = 1.0;
    std::vector<double> g = apply(W, h, vvals, ind);
    for (size_t i = 0; i < codes.size(); ++i) {
      if (rep[i] < 0 || chamber_dist(rep[i]) + span > r_)
        throw resource_error("radial_matrix: no interior representative");
      M((int)i, (int)j) = g[rep[i]];
    }
  }
  return M;
}

std::vector<double> TreeBall::spherical_average(const std::vector<double>& f) const {
  std::map<Code, std::pair<double, long long>> acc;
  for (int oc = 0; oc < noriented(); ++oc) {
    auto& slot = acc[{wd_m_[oc], wd_e_[oc]}];
    slot.first += f[oc];
    slot.second += 1;
  }
  std::vector<double> out(noriented());
  for (int oc = 0; oc < noriented(); ++oc) {
    const auto& slot = acc[{wd_m_[oc], wd_e_[oc]}];
    out[oc] = slot.first / (double)slot.second;
  }
  return out;
}

std::vector<double> TreeBall::geometric_realization(const HeckeRep& rep) const {
  if (rep.dim != 1) throw usage_error("geometric_realization needs a 1-dimensional rep");
  const WeylGroup& W = *rep.W;
  if (W.rank() != 1) throw usage_error("geometric_realization is a rank-1 tool");
  auto scalar = [&](const CMat& m) {
    std::complex<double> v = m(0, 0);
    if (std::abs(v.imag()) > 1e-12) throw usage_error("rep scalars must be real here");
    return v.real();
  };
  std::map<Code, double> memo;
  std::vector<double> out(noriented());
  for (int oc = 0; oc < noriented(); ++oc) {
    Code c{wd_m_[oc], wd_e_[oc]};
    auto it = memo.find(c);
    if (it == memo.end()) {
      auto [word, om] = W.reduced_word(code_to_elem(W, c));
      double val = 1.0;
      for (int s : word) val *= scalar(rep.gen_s[s]) / to_double(rep.params.q_of_gen(s));
      int k = W.omega_index(om);
      val *= scalar(rep.gen_omega[k]);
      it = memo.emplace(c, val).first;
    }
    out[oc] = it->second;
  }
  return out;
}

TreeBall::WitnessReport TreeBall::approx_spectrum_witness(const HeckeRep& rep,
                                                          const HeckeElement& h,
                                                          const HeckeAlgebra& H, double p,
                                                          const std::vector<double>& deltas) const {
  const WeylGroup& W = *rep.W;
  std::vector<double> vvals = numeric_vvals(W, rep.params, H.extra_vars());
  std::vector<double> f = geometric_realization(rep);
  // scalar of h on the rep
  double lambda = 0;
  for (const auto& [w, c] : h) {
    CMat m = evaluate(rep, w);
    std::complex<double> s = m(0, 0);
    lambda += c.eval(vvals) * s.real();
  }
  long long span = word_span(W, h);
  int R = r_ - (int)span;
  std::vector<char> inner(noriented(), 0), full(noriented(), 1);
  for (int oc = 0; oc < noriented(); ++oc)
    if (chamber_dist(oc) <= R) inner[oc] = 1;
  WitnessReport rpt;
  rpt.lambda = lambda;
  for (double d : deltas) {
    std::vector<double> fd(noriented());
    std::vector<double> shell_mass(r_ + 1, 0.0);
    double total = 0;
    for (int oc = 0; oc < noriented(); ++oc) {
      long long l = code_length({wd_m_[oc], wd_e_[oc]});
      fd[oc] = std::pow(1.0 - d, (double)l) * f[oc];
      double m = std::pow(std::abs(fd[oc]), p);
      shell_mass[chamber_dist(oc)] += m;
      total += m;
    }
    double boundary = 0;
    for (int l = R + 1; l <= r_; ++l) boundary += shell_mass[l];
    double rho = shell_mass[r_ - 1] > 0 ? shell_mass[r_] / shell_mass[r_ - 1] : 0.0;
    double tail = rho < 1.0 ? shell_mass[r_] * rho / (1.0 - rho) : total;
    if (boundary + tail > 0.01 * total) {
      int extra = 0;
      if (rho > 0 && rho < 1.0) {
        double target = 0.005 * total * (1.0 - rho);
        double m = shell_mass[r_];
        while (m > target && extra < 1000) {
          m *= rho;
          ++extra;
        }
      } else {
        extra = 1000;
      }
      std::ostringstream os;
      os << "approx_spectrum_witness: boundary mass too large at delta " << d
         << "; estimated required radius >= " << (r_ + extra + (int)span);
      throw resource_error(os.str());
    }
    std::vector<double> g = apply(W, h, vvals, fd);
    for (int oc = 0; oc < noriented(); ++oc) g[oc] -= lambda * fd[oc];
    rpt.deltas.push_back(d);
    rpt.ratios.push_back(vec_pnorm(g, inner, p) / vec_pnorm(fd, inner, p));
  }
  rpt.strictly_decreasing = true;
  for (size_t i = 1; i < rpt.ratios.size(); ++i)
    if (!(rpt.ratios[i] < rpt.ratios[i - 1])) rpt.strictly_decreasing = false;
  // least-squares slope of log(ratio) against log(delta)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = (int)rpt.ratios.size();
  for (int i = 0; i < n; ++i) {
    double x = std::log(rpt.deltas[i]), y = std::log(rpt.ratios[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  if (n >= 2) rpt.loglog_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return rpt;
}

TreeBall::SectorCheck TreeBall::sectorial_count_check(const WeylGroup& W, const Coweight& beta,
                                                      long long Lmax) const {
  if (W.rank() != 1) throw usage_error("sectorial_count_check is a rank-1 tool");
  if (beta.size() != 1 || beta[0] < 0) throw usage_error("beta must be dominant");
  long long m = beta[0];
  if (m + 2 > r_) throw resource_error("sectorial_count_check: ball too small for this beta");
  HeckeAlgebra H(W);
  std::vector<Rat> uvals = {Rat(q_)};
  // sector types with |L| <= Lmax
  std::vector<Code> types;
  for (long long b = -Lmax - 1; b <= Lmax + 1; ++b)
    for (int e : {1, -1})
      if (std::llabs(code_L({b, e})) <= Lmax) types.push_back({b, e});
  // chambers per sector type
  std::map<Code, std::vector<int>> by_type;
  for (int oc = 0; oc < noriented(); ++oc) by_type[sector_code(oc)].push_back(oc);
  SectorCheck out;
  for (Code wc : types) {
    // w = gamma^{-1} w0^{-1}: gamma = -b, w0 = id or s1
    WeylElement w0 = wc.second > 0 ? W.identity() : W.gen(1);
    long long gamma = -wc.first;
    BernsteinTable table = H.bernstein_coeffs(w0, beta);
    for (Code wpc : types) {
      WeylElement w0p = wpc.second > 0 ? W.identity() : W.gen(1);
      long long gammap = -wpc.first;
      long long betap = gammap - gamma;
      LaurentCoeff alpha = LaurentCoeff::zero(1);
      auto it = table.find(BernsteinKey{w0p, {betap}});
      if (it != table.end()) alpha = it->second;
      // q_beta^{1/2} * Q_{beta'}^{1/2} * alpha, all in the exact Laurent ring
      LaurentCoeff pred = W.q_beta_halfpow(beta, 1) * W.q_beta_halfpow({betap}, -1) * alpha;
      Rat predicted = pred.eval_u_exact(uvals);
      // brute-force: for each valid C' of type w', count C of type w at
      // distance t_beta
      bool have = false;
      long long counted = -1;
      for (int cp : by_type[wpc]) {
        if (chamber_dist(cp) + m + 1 > r_) continue;
        std::vector<long long> dm;
        std::vector<signed char> de;
        assign_codes(cp, m, dm, de);
        long long count = 0;
        for (int oc = 0; oc < noriented(); ++oc) {
          if (de[oc] == 1 && dm[oc] == m && sector_code(oc) == wc) ++count;
        }
        if (!have) {
          counted = count;
          have = true;
        } else if (count != counted) {
          out.pass = false;
          std::ostringstream os;
          os << "count not constant over chambers of type (" << wpc.first << "," << wpc.second
             << ")";
          out.mismatches.push_back(os.str());
        }
      }
      if (!have) continue;
      ++out.pairs_checked;
      if (Rat(counted) != predicted) {
        out.pass = false;
        std::ostringstream os;
        os << "w=(" << wc.first << "," << wc.second << ") w'=(" << wpc.first << ","
           << wpc.second << ") beta=" << m << ": predicted " << rat_str(predicted)
           << ", counted " << counted;
        out.mismatches.push_back(os.str());
      }
    }
  }
  return out;
}

TreeBall::SectorCheck TreeBall::sector_adjacency_check(const WeylGroup& W, long long Lmax) const {
  (void)Lmax;
  SectorCheck out;
  for (int oc = 0; oc < noriented(); ++oc) {
    if (chamber_dist(oc) + 2 > r_) continue;
    Code w = sector_code(oc);
    for (int s = 0; s < 2; ++s) {
      Code ws = code_mul_gen(w, s);
      long long at_ws = 0, at_w = 0;
      for (int nb : panel_neighbors(oc, s)) {
        Code c = sector_code(nb);
        if (c == ws) ++at_ws;
        if (c == w) ++at_w;
      }
      ++out.pairs_checked;
      bool ok;
      if (code_L(ws) == code_L(w) + 1)
        ok = (at_ws == q_ && at_w == 0);
      else
        ok = (at_w == q_ - 1 && at_ws == 1);
      if (!ok) {
        out.pass = false;
        std::ostringstream os;
        os << "adjacency counts wrong at chamber " << oc << " color s" << s;
        out.mismatches.push_back(os.str());
      }
    }
  }
  return out;
}

}  // namespace chambers
