#include "chambers/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "chambers/errors.hpp"

namespace chambers {

namespace detail {
RootSystem root_system_tables(const std::string& name);
}

using Mat = std::vector<std::vector<long long>>;

static Mat mat_identity(int n) {
  Mat m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

static Mat mat_mul(const Mat& a, const Mat& b) {
  int n = (int)a.size();
  Mat c(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

static std::vector<long long> mat_vec(const Mat& a, const std::vector<long long>& v) {
  int n = (int)a.size();
  std::vector<long long> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += a[i][j] * v[j];
  return out;
}

// Inverse of an integer matrix with det = +-1 (n <= 3), via the adjugate.
static Mat mat_inv(const Mat& a) {
  int n = (int)a.size();
  long long det = 0;
  Mat adj(n, std::vector<long long>(n, 0));
  if (n == 1) {
    det = a[0][0];
    adj[0][0] = 1;
  } else if (n == 2) {
    det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    adj = {{a[1][1], -a[0][1]}, {-a[1][0], a[0][0]}};
  } else if (n == 3) {
    adj[0][0] = a[1][1] * a[2][2] - a[1][2] * a[2][1];
    adj[0][1] = -(a[0][1] * a[2][2] - a[0][2] * a[2][1]);
    adj[0][2] = a[0][1] * a[1][2] - a[0][2] * a[1][1];
    adj[1][0] = -(a[1][0] * a[2][2] - a[1][2] * a[2][0]);
    adj[1][1] = a[0][0] * a[2][2] - a[0][2] * a[2][0];
    adj[1][2] = -(a[0][0] * a[1][2] - a[0][2] * a[1][0]);
    adj[2][0] = a[1][0] * a[2][1] - a[1][1] * a[2][0];
    adj[2][1] = -(a[0][0] * a[2][1] - a[0][1] * a[2][0]);
    adj[2][2] = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    det = a[0][0] * adj[0][0] + a[0][1] * adj[1][0] + a[0][2] * adj[2][0];
  } else {
    throw internal_error("mat_inv: rank > 3 unsupported");
  }
  if (det != 1 && det != -1) throw internal_error("mat_inv: determinant not a unit");
  Mat inv = adj;
  for (auto& row : inv)
    for (auto& x : row) x *= det;  // det = +-1
  return inv;
}

WeylGroup::WeylGroup(const std::string& type_name) {
  rs_ = detail::root_system_tables(type_name);
  const int n = rs_.rank;
  id_.beta.assign(n, 0);
  id_.fin = mat_identity(n);
  maximal_roots_ = rs_.maximal_positive_roots();

  // Interior point of the fundamental alcove: p0 = (sum beta_i) / (c+1) with
  // c = <alpha_0, sum beta_i>.  All pairings with positive roots land in
  // (0,1), so p0 and its W-hat orbit avoid every reflection hyperplane.
  long long c = 0;
  for (int x : rs_.highest_root.coords) c += x;
  p0_.assign(n, Rat(1, c + 1));

  build_generators();
  build_omega();
  build_finite();
  build_box();
  build_classes();
}

void WeylGroup::build_generators() {
  const int n = rs_.rank;
  gens_.resize(n + 1);
  // s_0: x -> x - (<alpha_0, x> - 1) alpha_0^vee
  {
    WeylElement s0;
    s0.beta.assign(rs_.highest_root.coroot.begin(), rs_.highest_root.coroot.end());
    s0.fin = mat_identity(n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        s0.fin[j][k] -= rs_.highest_root.coroot[j] * rs_.highest_root.coords[k];
    gens_[0] = s0;
  }
  for (int i = 1; i <= n; ++i) {
    WeylElement s;
    s.beta.assign(n, 0);
    s.fin = mat_identity(n);
    const Root& a = rs_.positive_roots[i - 1];  // first n entries are simple
    for (int j = 0; j < n; ++j) s.fin[j][i - 1] -= a.coroot[j];
    gens_[i] = s;
  }
  // Simple roots must be the first n table entries.
  for (int i = 0; i < rs_.rank; ++i) {
    for (int j = 0; j < rs_.rank; ++j)
      if (rs_.positive_roots[i].coords[j] != (i == j ? 1 : 0))
        throw internal_error("table order: simple roots must come first");
  }
  // Coxeter matrix from generator orders.
  m_.assign(rs_.rank + 1, std::vector<int>(rs_.rank + 1, 0));
  for (int s = 0; s <= rs_.rank; ++s)
    for (int t = 0; t <= rs_.rank; ++t) {
      if (s == t) {
        m_[s][t] = 1;
        continue;
      }
      WeylElement st = multiply(gens_[s], gens_[t]);
      WeylElement cur = st;
      int order = 0;
      for (int k = 1; k <= 24; ++k) {
        if (cur == id_) {
          order = k;
          break;
        }
        cur = multiply(cur, st);
      }
      m_[s][t] = order;  // 0 = infinite
    }
}

void WeylGroup::build_omega() {
  const int n = rs_.rank;
  // Finite-part matrices, by closure.
  std::set<Mat> w0mats;
  std::vector<Mat> frontier = {mat_identity(n)};
  w0mats.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& m : frontier)
      for (int i = 1; i <= n; ++i) {
        Mat p = mat_mul(m, gens_[i].fin);
        if (w0mats.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }

  // Length-zero elements: translation part bounded because omega(p0) must
  // stay inside the fundamental parallelotope.
  std::vector<WeylElement> found;
  std::vector<long long> z(n, -3);
  while (true) {
    for (const auto& m : w0mats) {
      WeylElement w{Coweight(z.begin(), z.end()), m};
      if (length(w) == 0) found.push_back(w);
    }
    int i = 0;
    for (; i < n; ++i) {
      if (++z[i] <= 3) break;
      z[i] = -3;
    }
    if (i == n) break;
  }
  std::sort(found.begin(), found.end());
  auto it = std::find(found.begin(), found.end(), id_);
  if (it == found.end()) throw internal_error("omega search lost the identity");
  std::iter_swap(found.begin(), it);
  omegas_ = found;

  rs_.omega_hat.clear();
  rs_.good_types.clear();
  for (const auto& w : omegas_) {
    OmegaData od;
    od.beta = w.beta;
    od.fin = w.fin;
    od.perm.assign(n + 1, -1);
    WeylElement wi = inverse(w);
    for (int s = 0; s <= n; ++s) {
      WeylElement conj = multiply(multiply(w, gens_[s]), wi);
      for (int t = 0; t <= n; ++t)
        if (conj == gens_[t]) od.perm[s] = t;
      if (od.perm[s] < 0) throw internal_error("omega conjugation is not a diagram symmetry");
    }
    rs_.good_types.push_back(od.perm[0]);
    rs_.omega_hat.push_back(std::move(od));
  }
  std::sort(rs_.good_types.begin(), rs_.good_types.end());
  if (rs_.reduced() && rs_.type_name != "G2") {
    // |P/Q| = det(cartan) for the simply-connected-dual reduced families.
    long long det;
    const auto& C = rs_.cartan;
    if (n == 1)
      det = C[0][0];
    else if (n == 2)
      det = C[0][0] * C[1][1] - C[0][1] * C[1][0];
    else
      det = C[0][0] * (C[1][1] * C[2][2] - C[1][2] * C[2][1]) -
            C[0][1] * (C[1][0] * C[2][2] - C[1][2] * C[2][0]) +
            C[0][2] * (C[1][0] * C[2][1] - C[1][1] * C[2][0]);
    if ((long long)omegas_.size() != det)
      throw internal_error("|Omega-hat| != det(cartan) for " + rs_.type_name);
  }
}

void WeylGroup::build_finite() {
  std::set<WeylElement> seen;
  std::vector<WeylElement> frontier = {id_};
  seen.insert(id_);
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier)
      for (int i = 1; i <= rs_.rank; ++i) {
        WeylElement p = multiply(w, gens_[i]);
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  w0_elts_.assign(seen.begin(), seen.end());
  w0_long_len_ = -1;
  for (const auto& w : w0_elts_) {
    long long l = length(w);
    if (l > w0_long_len_) {
      w0_long_len_ = l;
      w0_long_ = w;
    }
  }
}

void WeylGroup::build_box() {
  auto in_box = [&](const WeylElement& w) {
    std::vector<Rat> x = act_point(w, p0_);
    for (const auto& xi : x)
      if (!(xi > 0 && xi < 1)) return false;
    return true;
  };
  std::set<WeylElement> seen;
  std::vector<WeylElement> frontier;
  for (const auto& o : omegas_) {
    seen.insert(o);
    frontier.push_back(o);
    if (in_box(o)) box_.push_back(o);
  }
  long long cap = 2 * w0_long_len_ + 4;
  for (long long L = 1; (long long)box_.size() < (long long)w0_elts_.size(); ++L) {
    if (L > cap) throw internal_error("fundamental box search exceeded length cap");
    std::vector<WeylElement> next;
    for (const auto& w : frontier)
      for (int s = 0; s <= rs_.rank; ++s) {
        WeylElement p = multiply(w, gens_[s]);
        if (length(p) == L && seen.insert(p).second) {
          next.push_back(p);
          if (in_box(p)) box_.push_back(p);
        }
      }
    frontier = std::move(next);
  }
  std::sort(box_.begin(), box_.end());
}

void WeylGroup::build_classes() {
  const int n = rs_.rank;
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int s = 0; s <= n; ++s)
    for (int t = s + 1; t <= n; ++t)
      if (m_[s][t] != 0 && m_[s][t] % 2 == 1) unite(s, t);
  for (const auto& od : rs_.omega_hat)
    for (int s = 0; s <= n; ++s) unite(s, od.perm[s]);
  classes_.assign(n + 1, -1);
  nclasses_ = 0;
  for (int s = 0; s <= n; ++s) {
    int r = find(s);
    bool fresh = true;
    for (int t = 0; t < s; ++t)
      if (find(t) == r) {
        classes_[s] = classes_[t];
        fresh = false;
        break;
      }
    if (fresh) classes_[s] = nclasses_++;
  }
}

WeylElement WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
  WeylElement r;
  r.fin = mat_mul(a.fin, b.fin);
  std::vector<long long> mb = mat_vec(a.fin, b.beta);
  r.beta.resize(rs_.rank);
  for (int i = 0; i < rs_.rank; ++i) r.beta[i] = a.beta[i] + mb[i];
  return r;
}

WeylElement WeylGroup::inverse(const WeylElement& a) const {
  WeylElement r;
  r.fin = mat_inv(a.fin);
  std::vector<long long> mb = mat_vec(r.fin, a.beta);
  r.beta.resize(rs_.rank);
  for (int i = 0; i < rs_.rank; ++i) r.beta[i] = -mb[i];
  return r;
}

Coweight WeylGroup::act(const WeylElement& w, const Coweight& b) const {
  std::vector<long long> mb = mat_vec(w.fin, b);
  for (int i = 0; i < rs_.rank; ++i) mb[i] += w.beta[i];
  return mb;
}

std::vector<Rat> WeylGroup::act_point(const WeylElement& w, const std::vector<Rat>& x) const {
  std::vector<Rat> out(rs_.rank, 0);
  for (int i = 0; i < rs_.rank; ++i) {
    out[i] = Rat(w.beta[i]);
    for (int j = 0; j < rs_.rank; ++j) out[i] += Rat(w.fin[i][j]) * x[j];
  }
  return out;
}

WeylElement WeylGroup::translation(const Coweight& b) const {
  return WeylElement{b, mat_identity(rs_.rank)};
}

bool WeylGroup::is_translation(const WeylElement& w) const {
  return w.fin == id_.fin;
}

int WeylGroup::omega_index(const WeylElement& w) const {
  for (size_t k = 0; k < omegas_.size(); ++k)
    if (omegas_[k] == w) return (int)k;
  return -1;
}

long long WeylGroup::wall_count(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
  long long total = 0;
  for (int idx : maximal_roots_) {
    const auto& r = rs_.positive_roots[idx].coords;
    Int fa = rat_floor(rs_.pairing_rat(r, a));
    Int fb = rat_floor(rs_.pairing_rat(r, b));
    Int d = fb - fa;
    if (d < 0) d = -d;
    total += to_ll(d);
  }
  return total;
}

long long WeylGroup::length(const WeylElement& w) const {
  return wall_count(p0_, act_point(w, p0_));
}

long long WeylGroup::translation_length(const Coweight& b) const {
  long long total = 0;
  for (int idx : maximal_roots_) {
    long long p = rs_.pairing(rs_.positive_roots[idx].coords, b);
    total += std::llabs(p);
  }
  return total;
}

std::pair<std::vector<int>, WeylElement> WeylGroup::reduced_word(const WeylElement& w) const {
  std::vector<int> word;
  WeylElement cur = w;
  long long l = length(cur);
  while (l > 0) {
    bool found = false;
    for (int s = 0; s <= rs_.rank; ++s) {
      WeylElement cand = multiply(gens_[s], cur);
      long long lc = length(cand);
      if (lc == l - 1) {
        word.push_back(s);
        cur = std::move(cand);
        l = lc;
        found = true;
        break;
      }
    }
    if (!found) throw internal_error("no left descent on a positive-length element");
  }
  if (omega_index(cur) < 0) throw internal_error("reduced_word: residue is not length zero");
  return {word, cur};
}

std::string WeylGroup::word_str(const WeylElement& w) const {
  auto [word, om] = reduced_word(w);
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << "s" << word[i];
  int k = omega_index(om);
  if (k > 0) os << (word.empty() ? "" : " ") << "w" << k;
  if (word.empty() && k == 0) os << "id";
  return os.str();
}

WeylElement WeylGroup::from_word(const std::vector<std::string>& word) const {
  WeylElement cur = id_;
  for (const auto& tok : word) {
    if (tok.empty()) continue;
    if (tok == "id") continue;
    char kind = tok[0];
    int idx;
    try {
      idx = std::stoi(tok.substr(1));
    } catch (...) {
      throw usage_error("unknown generator token: " + tok);
    }
    if (kind == 's' && idx >= 0 && idx <= rs_.rank)
      cur = multiply(cur, gens_[idx]);
    else if (kind == 'w' && idx >= 0 && idx < (int)omegas_.size())
      cur = multiply(cur, omegas_[idx]);
    else
      throw usage_error("unknown generator token: " + tok);
  }
  return cur;
}

WeylElement WeylGroup::from_word(const std::string& word) const {
  std::istringstream is(word);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return from_word(toks);
}

WeylGroup::Structure WeylGroup::structure_decompose(const WeylElement& w) const {
  Structure st;
  st.w0 = id_;
  WeylElement cur = w;
  long long l = length(cur);
  // Strip left descents in the finite generators: w = w0 * rest with rest
  // minimal in its W_0-coset.
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 1; i <= rs_.rank; ++i) {
      WeylElement cand = multiply(gens_[i], cur);
      long long lc = length(cand);
      if (lc < l) {
        st.w0 = multiply(st.w0, gens_[i]);
        cur = std::move(cand);
        l = lc;
        progress = true;
        break;
      }
    }
  }
  std::vector<Rat> y = act_point(cur, p0_);
  st.beta.resize(rs_.rank);
  for (int i = 0; i < rs_.rank; ++i) st.beta[i] = to_ll(rat_floor(y[i]));
  Coweight neg = st.beta;
  for (auto& z : neg) z = -z;
  st.a = multiply(translation(neg), cur);
  if (!is_dominant(st.beta)) throw internal_error("structure_decompose: beta not dominant");
  if (!std::binary_search(box_.begin(), box_.end(), st.a))
    throw internal_error("structure_decompose: residue not in the fundamental box");
  if (length(w) != length(st.w0) + translation_length(st.beta) + length(st.a))
    throw internal_error("structure_decompose: lengths not additive");
  return st;
}

std::vector<WeylElement> WeylGroup::enumerate_ball(long long L, long long cap) const {
  if (L > cap) throw resource_error("ball length " + std::to_string(L) +
                                    " exceeds cap " + std::to_string(cap));
  std::set<WeylElement> seen(omegas_.begin(), omegas_.end());
  std::vector<WeylElement> frontier(omegas_.begin(), omegas_.end());
  std::vector<WeylElement> out(omegas_.begin(), omegas_.end());
  for (long long l = 1; l <= L && !frontier.empty(); ++l) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier)
      for (int s = 0; s <= rs_.rank; ++s) {
        WeylElement p = multiply(w, gens_[s]);
        if (length(p) == l && seen.insert(p).second) {
          next.push_back(p);
          out.push_back(p);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

std::pair<Coweight, WeylElement> WeylGroup::dominant_rep(const Coweight& b) const {
  Coweight cur = b;
  WeylElement w0 = id_;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 1; i <= rs_.rank; ++i) {
      if (cur[i - 1] < 0) {
        // apply s_i: z -> z - z_{i-1} * alpha_i^vee
        long long zi = cur[i - 1];
        const auto& cr = rs_.positive_roots[i - 1].coroot;
        for (int j = 0; j < rs_.rank; ++j) cur[j] -= zi * cr[j];
        w0 = multiply(gens_[i], w0);
        progress = true;
        break;
      }
    }
  }
  return {cur, w0};
}

bool WeylGroup::dominant_leq(const Coweight& bp, const Coweight& b) const {
  const int n = rs_.rank;
  std::vector<Rat> d(n);
  for (int i = 0; i < n; ++i) d[i] = Rat(b[i] - bp[i]);
  if (rs_.type_name == "BC1") return b[0] - bp[0] >= 0;  // Q = Z beta_1
  // Solve C^T c = d over the rationals (n <= 3: Gaussian elimination).
  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) A[i][j] = Rat(rs_.cartan[j][i]);
    A[i][n] = d[i];
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (A[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw internal_error("singular cartan matrix");
    std::swap(A[col], A[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == col || A[r][col] == 0) continue;
      Rat f = A[r][col] / A[col][col];
      for (int j = col; j <= n; ++j) A[r][j] -= f * A[col][j];
    }
  }
  for (int i = 0; i < n; ++i) {
    Rat c = A[i][n] / A[i][i];
    if (c < 0 || denominator(c) != 1) return false;
  }
  return true;
}

bool WeylGroup::bruhat_leq(const WeylElement& u, const WeylElement& v) const {
  if (u == v) return true;
  if (length(u) >= length(v)) return false;
  auto [word, om] = reduced_word(v);
  if (!(om == id_)) throw usage_error("bruhat_leq expects finite Weyl elements");
  std::set<WeylElement> reach = {id_};
  for (int s : word) {
    std::set<WeylElement> next = reach;
    for (const auto& x : reach) next.insert(multiply(x, gens_[s]));
    reach = std::move(next);
  }
  return reach.count(u) > 0;
}

bool WeylGroup::coweight_leq(const Coweight& bp, const Coweight& b) const {
  auto [bpd, w0p] = dominant_rep(bp);
  auto [bd, w0b] = dominant_rep(b);
  if (bpd == bd) {
    if (bp == b) return true;
    // tie-break: beta' <= beta iff w0^{beta'} >= w0^{beta} in Bruhat order
    return bruhat_leq(w0b, w0p);
  }
  return dominant_leq(bpd, bd) && !(bd == bpd);
}

std::vector<WeylElement> WeylGroup::parabolic(const std::vector<int>& I) const {
  if (!is_spherical(I)) throw usage_error("parabolic subset is not spherical");
  std::set<WeylElement> seen = {id_};
  std::vector<WeylElement> frontier = {id_};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier)
      for (int s : I) {
        WeylElement p = multiply(w, gens_[s]);
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool WeylGroup::is_spherical(const std::vector<int>& I) const {
  for (int s : I)
    if (s < 0 || s > rs_.rank) return false;
  std::set<int> uniq(I.begin(), I.end());
  return (int)uniq.size() <= rs_.rank;  // proper subsets of the affine diagram
}

LaurentCoeff WeylGroup::q_s(int s, int extra) const {
  return LaurentCoeff::var_pow(nclasses_ + extra, classes_.at(s), 2);
}

LaurentCoeff WeylGroup::v_s(int s, int extra) const {
  return LaurentCoeff::var_pow(nclasses_ + extra, classes_.at(s), 1);
}

LaurentCoeff WeylGroup::q_w_halfpow(const WeylElement& w, int num, int extra) const {
  auto [word, om] = reduced_word(w);
  std::vector<int> exps(nclasses_ + extra, 0);
  for (int s : word) exps[classes_[s]] += num;
  return LaurentCoeff::monomial(nclasses_ + extra, exps, 1);
}

LaurentCoeff WeylGroup::q_w(const WeylElement& w, int extra) const {
  return q_w_halfpow(w, 2, extra);
}

LaurentCoeff WeylGroup::q_beta_halfpow(const Coweight& b, int num, int extra) const {
  // q_{beta1} / q_{beta2} for the dominant split beta = beta1 - beta2, raised
  // to num/2.  Equivalently the word-monomial of t_beta with sign exponents.
  Coweight b1(rs_.rank), b2(rs_.rank);
  for (int i = 0; i < rs_.rank; ++i) {
    b1[i] = std::max(b[i], 0LL);
    b2[i] = std::max(-b[i], 0LL);
  }
  LaurentCoeff p1 = q_w_halfpow(translation(b1), num, extra);
  LaurentCoeff p2 = q_w_halfpow(translation(b2), -num, extra);
  return p1 * p2;
}

double WeylGroup::q_w_numeric(const WeylElement& w, const ParamSystem& ps) const {
  auto [word, om] = reduced_word(w);
  double q = 1;
  for (int s : word) q *= ps.q_of_gen(s).convert_to<double>();
  return q;
}

LaurentCoeff WeylGroup::parabolic_weight(const std::vector<int>& I, const ParamSystem&) const {
  LaurentCoeff total(nclasses_);
  for (const auto& w : parabolic(I)) total += q_w(w);
  return total;
}

DistanceData WeylGroup::double_coset_min(const std::vector<int>& I1, const std::vector<int>& I2,
                                         const WeylElement& w, const ParamSystem& ps) const {
  auto W1 = parabolic(I1);
  auto W2 = parabolic(I2);
  bool have = false;
  WeylElement best;
  long long bestl = 0;
  int mincount = 0;
  for (const auto& a : W1)
    for (const auto& b : W2) {
      WeylElement x = multiply(multiply(a, w), b);
      long long l = length(x);
      if (!have || l < bestl) {
        have = true;
        best = x;
        bestl = l;
        mincount = 1;
      } else if (l == bestl && !(x == best)) {
        ++mincount;
      }
    }
  if (mincount != 1) throw internal_error("double coset minimum is not unique");
  DistanceData dd;
  dd.d_min = best;
  // I3 = I1 cap d I2 d^{-1}
  std::vector<int> I3;
  WeylElement di = inverse(best);
  for (int s : I1) {
    WeylElement conj = multiply(multiply(di, gens_[s]), best);
    for (int t : I2)
      if (conj == gens_[t]) {
        I3.push_back(s);
        break;
      }
  }
  auto W3 = parabolic(I3);
  std::set<WeylElement> W3set(W3.begin(), W3.end());
  // q_{(W_{I1})^{I3}}: sum over the minimal coset representatives.
  LaurentCoeff reps(nclasses_);
  for (const auto& a : W1) {
    bool minimal = true;
    long long la = length(a);
    for (int s : I3)
      if (length(multiply(a, gens_[s])) < la) {
        minimal = false;
        break;
      }
    if (minimal) reps += q_w(a);
  }
  dd.q_d = reps * q_w(best);
  dd.n_d = parabolic_weight(I3, ps);
  return dd;
}

std::pair<long long, LaurentCoeff> WeylGroup::sector_length(const WeylElement& w,
                                                            const ParamSystem&) const {
  // w = t_beta * w0fin with beta = w.beta; split beta = beta1 - beta2.
  Coweight b1(rs_.rank), b2(rs_.rank);
  for (int i = 0; i < rs_.rank; ++i) {
    b1[i] = std::max(w.beta[i], 0LL);
    b2[i] = std::max(-w.beta[i], 0LL);
  }
  WeylElement fin{Coweight(rs_.rank, 0), w.fin};
  long long L = length(fin) + translation_length(b2) - translation_length(b1);
  LaurentCoeff Q = q_w(fin) * q_w(translation(b2)) * q_w(translation(b1)).monomial_inverse();
  return {L, Q};
}

ParamSystem WeylGroup::abstract_params() const {
  ParamSystem ps;
  ps.class_of = classes_;
  ps.nclasses = nclasses_;
  ps.numeric = false;
  return ps;
}

ParamSystem WeylGroup::numeric_params(const std::vector<Rat>& per_class) const {
  ParamSystem ps;
  ps.class_of = classes_;
  ps.nclasses = nclasses_;
  ps.numeric = true;
  if ((int)per_class.size() == 1)
    ps.qval.assign(nclasses_, per_class[0]);
  else if ((int)per_class.size() == nclasses_)
    ps.qval = per_class;
  else
    throw usage_error("expected 1 or " + std::to_string(nclasses_) + " q values");
  for (const auto& q : ps.qval)
    if (!(q > 0)) throw usage_error("parameters must be positive");
  return ps;
}

std::string WeylGroup::elem_str(const WeylElement& w) const {
  std::ostringstream os;
  os << "{beta:[";
  for (int i = 0; i < rs_.rank; ++i) os << (i ? "," : "") << w.beta[i];
  os << "],fin:[";
  for (int i = 0; i < rs_.rank; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < rs_.rank; ++j) os << (j ? "," : "") << w.fin[i][j];
    os << "]";
  }
  os << "]}";
  return os.str();
}

std::vector<double> numeric_vvals(const WeylGroup& W, const ParamSystem& ps, int extra) {
  if (!ps.numeric) throw usage_error("numeric parameter system required");
  std::vector<double> v(W.num_classes() + extra, 1.0);
  for (int c = 0; c < W.num_classes(); ++c) v[c] = std::sqrt(ps.qval[c].convert_to<double>());
  return v;
}

RootSystem load_root_system(const std::string& type_name) {
  return WeylGroup(type_name).roots();
}

}  // namespace chambers
