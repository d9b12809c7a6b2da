#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chambers/laurent.hpp"
#include "chambers/rootsys.hpp"

namespace chambers {

// Element of the extended affine Weyl group W-hat = P x| W_0, acting on the
// coweight space by x -> beta + fin * x.  (beta, fin) is the canonical form:
// two elements are equal iff the fields match.
struct WeylElement {
  Coweight beta;
  std::vector<std::vector<long long>> fin;

  bool operator==(const WeylElement& o) const = default;
  auto operator<=>(const WeylElement& o) const = default;
};

// Parameter system q: S -> positive rationals, constant on parameter classes
// (s ~ s' when m_{s,s'} is odd or s' = omega(s) for some omega).
struct ParamSystem {
  std::vector<int> class_of;  // size n+1, values 0..nclasses-1
  int nclasses = 0;
  bool numeric = false;
  std::vector<Rat> qval;  // per class, when numeric

  Rat q_of_gen(int s) const { return qval.at(class_of.at(s)); }
};

struct DistanceData {
  WeylElement d_min;
  LaurentCoeff q_d;
  LaurentCoeff n_d;
};

// Context object: root system plus cached generator/group data.  Immutable
// after construction; safe for concurrent reads.
class WeylGroup {
 public:
  explicit WeylGroup(const std::string& type_name);

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank; }
  int num_gens() const { return rs_.rank + 1; }  // S = {s_0,...,s_n}

  const WeylElement& identity() const { return id_; }
  const WeylElement& gen(int s) const { return gens_.at(s); }  // s in 0..n
  const std::vector<WeylElement>& omega_hat() const { return omegas_; }
  // permutation of S induced by omega_hat()[k]
  const std::vector<int>& omega_perm(int k) const { return rs_.omega_hat.at(k).perm; }
  int omega_index(const WeylElement& w) const;  // -1 if not length 0

  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& a) const;
  Coweight act(const WeylElement& w, const Coweight& b) const;
  std::vector<Rat> act_point(const WeylElement& w, const std::vector<Rat>& x) const;
  WeylElement translation(const Coweight& b) const;
  bool is_translation(const WeylElement& w) const;

  // Tokens "s0".."sn" and "w1".."wk" for the non-identity Omega-hat elements
  // (in omega_hat() order), also accepted: "id".
  WeylElement from_word(const std::vector<std::string>& word) const;
  WeylElement from_word(const std::string& word) const;

  long long length(const WeylElement& w) const;
  long long translation_length(const Coweight& b) const;

  // w = s_{i1}...s_{ik} * omega with k = length(w).
  std::pair<std::vector<int>, WeylElement> reduced_word(const WeylElement& w) const;
  std::string word_str(const WeylElement& w) const;

  // w = w0 * t_beta * a, lengths additive; a lies in the fundamental box.
  struct Structure {
    WeylElement w0;
    Coweight beta;  // dominant
    WeylElement a;
  };
  Structure structure_decompose(const WeylElement& w) const;

  const std::vector<WeylElement>& fundamental_box() const { return box_; }
  const std::vector<WeylElement>& finite_weyl() const { return w0_elts_; }
  const WeylElement& longest_finite() const { return w0_long_; }
  long long longest_finite_length() const { return w0_long_len_; }

  std::vector<WeylElement> enumerate_ball(long long L, long long cap = 14) const;

  // (beta^+, minimal-length w0 with w0(beta) = beta^+)
  std::pair<Coweight, WeylElement> dominant_rep(const Coweight& b) const;
  // beta' <= beta in the coweight order (dominance of dominant parts;
  // reversed-Bruhat tie-break through the minimal w0 of dominant_rep).
  bool coweight_leq(const Coweight& bp, const Coweight& b) const;
  // difference of dominant parts lies in Q^+ (strict if ne)
  bool dominant_leq(const Coweight& bp, const Coweight& b) const;

  // Bruhat order on the finite Weyl group (elements with beta = 0).
  bool bruhat_leq(const WeylElement& u, const WeylElement& v) const;

  // m_{s,t} (order of s*t); 0 encodes infinity.
  int coxeter_m(int s, int t) const { return m_.at(s).at(t); }

  // Enumerate W_I for spherical I subset S (indices into S).
  std::vector<WeylElement> parabolic(const std::vector<int>& I) const;
  bool is_spherical(const std::vector<int>& I) const;

  DistanceData double_coset_min(const std::vector<int>& I1, const std::vector<int>& I2,
                                const WeylElement& w, const ParamSystem& ps) const;

  LaurentCoeff parabolic_weight(const std::vector<int>& I, const ParamSystem& ps) const;

  // Sector length L(w) and the monomial Q_w (half-integer exponents).
  std::pair<long long, LaurentCoeff> sector_length(const WeylElement& w,
                                                   const ParamSystem& ps) const;

  // ---- parameter systems ----
  ParamSystem abstract_params() const;
  // q per class; qs maps class index -> value.  A single value replicates.
  ParamSystem numeric_params(const std::vector<Rat>& per_class) const;
  int param_class(int s) const { return classes_.at(s); }
  int num_classes() const { return nclasses_; }

  // Laurent helpers over the class variables v_c (extra bookkeeping slots may
  // be appended by callers; these helpers use nvars = num_classes()+extra).
  LaurentCoeff q_s(int s, int extra = 0) const;        // v_c^2
  LaurentCoeff v_s(int s, int extra = 0) const;        // v_c
  LaurentCoeff q_w(const WeylElement& w, int extra = 0) const;
  LaurentCoeff q_w_halfpow(const WeylElement& w, int num, int extra = 0) const;
  LaurentCoeff q_beta_halfpow(const Coweight& b, int num, int extra = 0) const;
  double q_w_numeric(const WeylElement& w, const ParamSystem& ps) const;

  const std::vector<Rat>& alcove_point() const { return p0_; }

  std::string elem_str(const WeylElement& w) const;  // {beta:[..],fin:[[..]]}

 private:
  RootSystem rs_;
  WeylElement id_;
  std::vector<WeylElement> gens_;
  std::vector<WeylElement> omegas_;
  std::vector<Rat> p0_;
  std::vector<int> maximal_roots_;
  std::vector<WeylElement> w0_elts_;
  WeylElement w0_long_;
  long long w0_long_len_ = 0;
  std::vector<WeylElement> box_;
  std::vector<std::vector<int>> m_;
  std::vector<int> classes_;
  int nclasses_ = 0;

  void build_generators();
  void build_omega();
  void build_finite();
  void build_box();
  void build_classes();
  long long wall_count(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
};

std::vector<double> numeric_vvals(const WeylGroup& W, const ParamSystem& ps, int extra = 0);

}  // namespace chambers
