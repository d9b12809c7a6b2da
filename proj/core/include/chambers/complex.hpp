#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "chambers/hecke.hpp"
#include "chambers/weyl.hpp"

namespace chambers {

class TreeBall;

using IMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

// Simple undirected graph.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::pair<int, int>> edges;  // u < v
};

Graph load_graph_file(const std::string& path);
// Pairing-model generator with simplicity rejection; deterministic in seed.
Graph random_regular_graph(int nvertices, int degree, std::uint64_t seed);

enum class GraphMode { Auto, Regular, Bipartite };

// Finite chamber system: chambers partitioned into panels (blocks) per color,
// with an optional Omega-hat action.  Operators built from the panels satisfy
// the Hecke relations in exact integer arithmetic (validated on load).
struct ChamberComplex {
  std::shared_ptr<const WeylGroup> W;
  ParamSystem params;
  int nchambers = 0;
  std::vector<std::vector<int>> panel_of;                   // [color][chamber] -> block id
  std::vector<std::vector<std::vector<int>>> panel_blocks;  // [color][block] -> chambers
  bool has_omega = false;
  std::vector<std::vector<int>> omega_action;  // [omega index][chamber], index 0 = identity

  // Bookkeeping when built from a graph.
  bool from_graph = false;
  bool bipartite_mode = false;  // chambers are undirected edges, type BC1
  Graph graph;
  std::vector<int> side;                          // vertex bipartition when 2-colorable
  std::vector<std::pair<int, int>> chamber_edge;  // chamber -> (tail, head) / (u, v)
};

ChamberComplex complex_from_graph(const Graph& g, GraphMode mode = GraphMode::Auto);
ChamberComplex load_graph(const std::string& path, GraphMode mode = GraphMode::Auto);
// JSON file {type, q: {class: value}, chambers: N,
//            panels: {"s0": [[ids...], ...], ...}, omega: {"w1": [perm]}}.
ChamberComplex load_chamber_system(const std::string& path);

// Exact-relations check (throws validation_error naming color and residual).
void validate_complex(const ChamberComplex& X);

// Integer matrix of h_s / the Omega element with the given index.
IMat gen_matrix(const ChamberComplex& X, int s);
IMat omega_matrix(const ChamberComplex& X, int k);
// Matrix of h_w (reduced word product); exact.
IMat basis_matrix(const ChamberComplex& X, const WeylElement& w);

// Dense matrix realization of a Hecke element (coefficients evaluated at the
// numeric parameters); labeled by a printable form.
struct SparseOp {
  int dim = 0;
  Eigen::MatrixXd mat;
  std::string label;
};

SparseOp operator_matrix(const ChamberComplex& X, const HeckeElement& h, const HeckeAlgebra& H);

// Spectrum of h on the orthogonal complement of the trivial subrepresentation
// (all-ones vector; plus the bipartite sign vector when it is an
// eigenvector).
std::vector<std::complex<double>> nontrivial_spectrum(const ChamberComplex& X,
                                                      const Eigen::MatrixXd& M);

struct ExpanderReport {
  std::vector<std::complex<double>> nb_eigenvalues;  // nontrivial spectrum of h_{beta_1}
  double q_beta = 0;
  double p_min = 1.0;
  bool p_infinite = false;
  bool above_trivial = false;
  bool ramanujan = false;
};

ExpanderReport classify_expander(const ChamberComplex& X, double tol = 1e-9);

// Cross-validation of the non-backtracking spectrum against the adjacency
// spectrum: max over NB eigenvalues off {+-1, q} of min_a |l^2 - a l + q|.
double ihara_bass_check(const ChamberComplex& X);

struct BoundaryOps {
  // per color I in {s0, s1}: partial (edges -> vertices), delta (transpose),
  // e = delta * partial on the edge space
  std::vector<IMat> partial, delta, e;
  std::vector<long long> q_wI;  // 1 + q_I
};

BoundaryOps boundary_ops(const ChamberComplex& X);

struct GalleryStats {
  std::vector<long long> histogram;  // count per distance from C0
  long long eccentricity = 0;
  long long median = 0;
};

// Gallery distances on undirected chambers (undirected edges for graphs).
GalleryStats gallery_stats(const ChamberComplex& X, int c0);
long long complex_diameter(const ChamberComplex& X);

struct DistanceCheck {
  long long n_chambers = 0;
  double q = 0, p = 0;
  long long diameter = 0;
  double quantile_distance = 0;  // empirical high quantile of distances
  double avg_upper = 0;          // (p/2) log_q N + (l+1) log_q log_q N + 1
  double diameter_upper = 0;     // p log_q N + 2(l+1) log_q log_q N + 1
  double avg_lower = 0;          // log_q N - (n+1) log_q log_q N - 1
  bool pass_quantile = false, pass_diameter = false;
};

DistanceCheck distance_theorem_check(const ChamberComplex& X, double p);

// Girth of the underlying graph in the gallery metric on chambers.
long long injectivity_radius(const Graph& g);

struct SerreEntry {
  std::vector<double> tree_samples;  // Dirichlet sphere-transfer eigenvalues
  std::vector<double> min_dist;      // distance to nearest quotient eigenvalue
  double max_min_dist = 0;
};

std::vector<SerreEntry> serre_check(const std::vector<ChamberComplex>& family,
                                    const HeckeElement& h, const HeckeAlgebra& H,
                                    const TreeBall& ball);

struct AlonBoppanaEntry {
  double lambda2_estimate = 0;  // ||h^n 1_C||^{1/n} at the largest tree n
  double bound_used = 0;        // estimate minus the window correction
  double epsilon = 0;
  double max_nontrivial = 0;
  long long n_window = 0;
  bool pass = false;
};

std::vector<AlonBoppanaEntry> alon_boppana_check(const std::vector<ChamberComplex>& family,
                                                 const HeckeElement& h, const HeckeAlgebra& H,
                                                 const TreeBall& ball);

// Average of f over gallery spheres around chamber c0.
std::vector<double> spherical_average(const ChamberComplex& X, int c0,
                                      const std::vector<double>& f);

}  // namespace chambers
