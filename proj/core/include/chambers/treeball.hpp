#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "chambers/hecke.hpp"
#include "chambers/reps.hpp"
#include "chambers/weyl.hpp"

namespace chambers {

// Truncated (q+1)-regular tree around a root edge (u0, v0), with the
// oriented-edge chamber model of the extended rank-1 building.  Oriented
// chambers are indexed 2*edge + orientation; the root chamber (u0 -> v0) is
// the identity.  All operators are Dirichlet-truncated: values are exact on
// chambers far enough from the boundary, and norms are lower brackets of the
// infinite-tree norms.
//
// Elements of the rank-1 extended Weyl group are carried around in the
// compact code (m, eps), the map x -> m + eps*x on the line apartment.
class TreeBall {
 public:
  TreeBall(int q, int radius);

  int q() const { return q_; }
  int radius() const { return r_; }

  int nvertices() const { return (int)vdepth_.size(); }
  int nedges() const { return (int)edge_a_.size(); }
  int noriented() const { return 2 * nedges(); }
  int root_chamber() const { return 0; }  // edge 0 oriented u0 -> v0

  // Busemann level w.r.t. the canonical ray through v0.
  int busemann(int v) const { return level_[v]; }
  int vertex_depth(int v) const { return vdepth_[v]; }
  // gallery distance of the underlying edge from the root edge
  int chamber_dist(int oc) const { return edist_[oc / 2]; }
  std::pair<int, int> oriented_ends(int oc) const;  // (tail, head)
  // s-adjacent oriented chambers present in the ball (s = 0 shares the head,
  // s = 1 the tail)
  std::vector<int> panel_neighbors(int oc, int s) const;

  // Dirichlet application of generators; exact on chambers whose s-vertex is
  // not on the boundary sphere.
  std::vector<double> apply_gen(int s, const std::vector<double>& f) const;
  std::vector<double> apply_omega(const std::vector<double>& f) const;
  // h with numeric coefficients (evaluated at vvals); applies each h_w as the
  // reduced-word composition.
  std::vector<double> apply(const WeylGroup& W, const HeckeElement& h,
                            const std::vector<double>& vvals, const std::vector<double>& f) const;
  static long long word_span(const WeylGroup& W, const HeckeElement& h);

  // Weyl distance code d(C0, oc) and sector type code w.r.t. the canonical
  // end (both as (m, eps)).
  std::pair<long long, int> weyl_code(int oc) const { return {wd_m_[oc], wd_e_[oc]}; }
  std::pair<long long, int> sector_code(int oc) const;
  WeylElement code_to_elem(const WeylGroup& W, std::pair<long long, int> code) const;
  static long long code_length(std::pair<long long, int> code);

  // Lower bracket of ||h||_2 via power iteration on h* h over the Dirichlet
  // domain chamber_dist <= restrict_dist.
  double norm2_lower(const WeylGroup& W, const HeckeAlgebra& H, const HeckeElement& h,
                     const std::vector<double>& vvals, int restrict_dist, int iters = 400,
                     double tol = 1e-10) const;

  // a_n = ||h^n 1_{C0}||_2^{1/n} for n = 1..nmax (lower bounds of ||h||_2).
  std::vector<double> growth_sequence(const WeylGroup& W, const HeckeElement& h,
                                      const std::vector<double>& vvals, int nmax) const;

  // Matrix of h on the span of the sphere indicators {1_{S_d} : l(d) <= L}
  // (Dirichlet section; read off empirically from the ball).
  Eigen::MatrixXd radial_matrix(const WeylGroup& W, const HeckeAlgebra& H, const HeckeElement& h,
                                const std::vector<double>& vvals, long long L) const;

  // Average over exact Weyl-distance spheres around the root chamber.
  std::vector<double> spherical_average(const std::vector<double>& f) const;

  // f(C) = prod over the reduced word of d(C0,C) of lambda_s / q_s, times the
  // omega scalar (1-dimensional reps only).
  std::vector<double> geometric_realization(const HeckeRep& rep) const;

  struct WitnessReport {
    std::vector<double> deltas, ratios;
    double lambda = 0;
    bool strictly_decreasing = false;
    double loglog_slope = 0;
  };
  // Ratio ||h f_delta - lambda f_delta||_p / ||f_delta||_p for the realized
  // 1-dim rep, per delta; throws resource_error when the boundary carries
  // more than 1% of ||f_delta||_p^p.
  WitnessReport approx_spectrum_witness(const HeckeRep& rep, const HeckeElement& h,
                                        const HeckeAlgebra& H, double p,
                                        const std::vector<double>& deltas) const;

  struct SectorCheck {
    bool pass = true;
    long long pairs_checked = 0;
    std::vector<std::string> mismatches;
  };
  // Brute-force sectorial counts vs the Bernstein-coefficient prediction, for
  // beta = m*beta_1 and all sector-type pairs with |L| <= Lmax.
  SectorCheck sectorial_count_check(const WeylGroup& W, const Coweight& beta,
                                    long long Lmax) const;
  // Adjacency refinement: a chamber of type w has exactly q_s s-adjacent
  // chambers of type ws when L(ws) = L(w) + 1.
  SectorCheck sector_adjacency_check(const WeylGroup& W, long long Lmax) const;

 private:
  int q_ = 2, r_ = 2;
  std::vector<int> vdepth_, level_, parent_;
  std::vector<std::vector<int>> vedges_;  // incident edge ids per vertex
  std::vector<int> edge_a_, edge_b_;      // edge endpoints, depth(a) <= depth(b)
  std::vector<int> edist_;                // gallery distance of edge from root edge
  std::vector<long long> wd_m_;           // Weyl distance codes per oriented chamber
  std::vector<signed char> wd_e_;
  std::vector<int> ray_;  // canonical ray vertices starting at v0

  int even_end(int e) const;  // endpoint with even Busemann level
  int oriented_of(int e, int tail) const;
  // BFS assignment of d(seed, .) codes; maxlen < 0 means the whole ball.
  void assign_codes(int seed_oc, long long maxlen, std::vector<long long>& m_out,
                    std::vector<signed char>& e_out) const;
};

}  // namespace chambers
