#include "chambers/complex.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "chambers/errors.hpp"
#include "chambers/treeball.hpp"
#include "json.hpp"

namespace chambers {

namespace {

void check_graph_simple(const Graph& g) {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    if (u == v) throw validation_error("graph has a self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw validation_error("graph has a repeated edge");
    if (u < 0 || v >= g.n) throw validation_error("edge endpoint out of range");
  }
}

bool graph_connected(const Graph& g) {
  if (g.n == 0) return false;
  std::vector<char> vis(g.n, 0);
  std::deque<int> q = {0};
  vis[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.adj[v])
      if (!vis[w]) {
        vis[w] = 1;
        ++count;
        q.push_back(w);
      }
  }
  return count == g.n;
}

// 2-coloring; empty when not bipartite
std::vector<int> bipartition(const Graph& g) {
  std::vector<int> side(g.n, -1);
  std::deque<int> q = {0};
  side[0] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.adj[v]) {
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        q.push_back(w);
      } else if (side[w] == side[v]) {
        return {};
      }
    }
  }
  return side;
}

long long as_integer(const Rat& r) {
  if (denominator(r) != 1) throw validation_error("parameter is not an integer");
  return (long long)numerator(r);
}

}  // namespace

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw resource_error("cannot open graph file: " + path);
  Graph g;
  int m = 0;
  if (!(in >> g.n >> m)) throw config_error("graph file must start with \"N M\"");
  g.adj.assign(g.n, {});
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw config_error("graph file: missing edge line");
    if (u < 0 || v < 0 || u >= g.n || v >= g.n) throw config_error("graph file: vertex out of range");
    if (u > v) std::swap(u, v);
    g.edges.emplace_back(u, v);
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  check_graph_simple(g);
  return g;
}

Graph random_regular_graph(int nvertices, int degree, std::uint64_t seed) {
  if (nvertices <= degree || (nvertices * degree) % 2 != 0)
    throw usage_error("random_regular_graph: invalid (n, d)");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 5000; ++attempt) {
    std::vector<int> stubs;
    for (int v = 0; v < nvertices; ++v)
      for (int k = 0; k < degree; ++k) stubs.push_back(v);
    // Fisher-Yates
    for (size_t i = stubs.size() - 1; i > 0; --i) {
      size_t j = rng() % (i + 1);
      std::swap(stubs[i], stubs[j]);
    }
    std::set<std::pair<int, int>> seen;
    bool ok = true;
    for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) ok = false;
      if (u > v) std::swap(u, v);
      if (ok && !seen.insert({u, v}).second) ok = false;
    }
    if (!ok) continue;
    Graph g;
    g.n = nvertices;
    g.adj.assign(nvertices, {});
    for (auto [u, v] : seen) {
      g.edges.emplace_back(u, v);
      g.adj[u].push_back(v);
      g.adj[v].push_back(u);
    }
    if (!graph_connected(g)) continue;
    return g;
  }
  throw resource_error("random_regular_graph: pairing model failed to produce a simple graph");
}

ChamberComplex complex_from_graph(const Graph& g, GraphMode mode) {
  check_graph_simple(g);
  if (!graph_connected(g)) throw validation_error("graph is not connected");
  std::vector<int> deg(g.n);
  for (int v = 0; v < g.n; ++v) deg[v] = (int)g.adj[v].size();
  bool regular = std::all_of(deg.begin(), deg.end(), [&](int d) { return d == deg[0]; });
  std::vector<int> side = bipartition(g);
  bool biregular = false;
  int d0 = 0, d1 = 0;
  if (!side.empty()) {
    d0 = d1 = -1;
    biregular = true;
    for (int v = 0; v < g.n; ++v) {
      int& d = side[v] == 0 ? d0 : d1;
      if (d < 0)
        d = deg[v];
      else if (d != deg[v])
        biregular = false;
    }
  }
  if (mode == GraphMode::Auto)
    mode = regular ? GraphMode::Regular : GraphMode::Bipartite;

  ChamberComplex X;
  X.from_graph = true;
  X.graph = g;
  X.side = side;
  if (mode == GraphMode::Regular) {
    if (!regular) throw validation_error("irregular degree sequence");
    if (deg[0] < 3) throw validation_error("regular mode needs degree q+1 >= 3");
    long long q = deg[0] - 1;
    auto W = std::make_shared<WeylGroup>("A1");
    X.W = W;
    X.params = W->numeric_params({Rat(q)});
    X.nchambers = 2 * (int)g.edges.size();
    X.bipartite_mode = false;
    X.panel_of.assign(2, std::vector<int>(X.nchambers));
    X.panel_blocks.assign(2, std::vector<std::vector<int>>(g.n));
    for (size_t e = 0; e < g.edges.size(); ++e) {
      auto [u, v] = g.edges[e];
      X.chamber_edge.push_back({u, v});  // chamber 2e: u -> v
      X.chamber_edge.push_back({v, u});  // chamber 2e+1: v -> u
      for (int o = 0; o < 2; ++o) {
        int c = 2 * (int)e + o;
        int tail = X.chamber_edge[c].first, head = X.chamber_edge[c].second;
        X.panel_of[0][c] = head;  // s0: shared head
        X.panel_of[1][c] = tail;  // s1: shared tail
        X.panel_blocks[0][head].push_back(c);
        X.panel_blocks[1][tail].push_back(c);
      }
    }
    X.has_omega = true;
    std::vector<int> id(X.nchambers), rev(X.nchambers);
    std::iota(id.begin(), id.end(), 0);
    for (int c = 0; c < X.nchambers; ++c) rev[c] = c ^ 1;
    X.omega_action = {id, rev};
  } else {
    if (side.empty() || !biregular)
      throw validation_error("bipartite mode needs a biregular bipartite graph");
    if (d0 < 3 || d1 < 3) throw validation_error("bipartite mode needs degrees >= 3");
    auto W = std::make_shared<WeylGroup>("BC1");
    X.W = W;
    // s0-panels sit at side-1 vertices, s1-panels at side-0 vertices
    std::vector<Rat> qv(W->num_classes());
    qv[W->param_class(0)] = Rat(d1 - 1);
    qv[W->param_class(1)] = Rat(d0 - 1);
    X.params = W->numeric_params(qv);
    X.nchambers = (int)g.edges.size();
    X.bipartite_mode = true;
    X.panel_of.assign(2, std::vector<int>(X.nchambers));
    X.panel_blocks.assign(2, std::vector<std::vector<int>>(g.n));
    for (size_t e = 0; e < g.edges.size(); ++e) {
      auto [u, v] = g.edges[e];
      X.chamber_edge.push_back({u, v});
      int v0 = side[u] == 0 ? u : v;  // side-0 endpoint
      int v1 = side[u] == 0 ? v : u;
      X.panel_of[0][e] = v1;
      X.panel_of[1][e] = v0;
      X.panel_blocks[0][v1].push_back((int)e);
      X.panel_blocks[1][v0].push_back((int)e);
    }
    X.has_omega = false;
    std::vector<int> id(X.nchambers);
    std::iota(id.begin(), id.end(), 0);
    X.omega_action = {id};
  }
  // drop empty blocks, renumber
  for (int s = 0; s < 2; ++s) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> remap(g.n, -1);
    for (int b = 0; b < (int)X.panel_blocks[s].size(); ++b) {
      if (X.panel_blocks[s][b].empty()) continue;
      remap[b] = (int)blocks.size();
      blocks.push_back(X.panel_blocks[s][b]);
    }
    for (auto& p : X.panel_of[s]) p = remap[p];
    X.panel_blocks[s] = std::move(blocks);
  }
  validate_complex(X);
  return X;
}

ChamberComplex load_graph(const std::string& path, GraphMode mode) {
  return complex_from_graph(load_graph_file(path), mode);
}

ChamberComplex load_chamber_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw resource_error("cannot open chamber-system file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw config_error(std::string("chamber-system parse error: ") + e.what());
  }
  ChamberComplex X;
  auto W = std::make_shared<WeylGroup>(j.at("type").get<std::string>());
  X.W = W;
  std::vector<Rat> qv(W->num_classes(), Rat(1));
  for (auto& [key, val] : j.at("q").items()) qv.at(std::stoi(key)) = Rat(val.get<long long>());
  X.params = W->numeric_params(qv);
  X.nchambers = j.at("chambers").get<int>();
  const auto& panels = j.at("panels");
  int ngens = W->num_gens();
  X.panel_of.assign(ngens, std::vector<int>(X.nchambers, -1));
  X.panel_blocks.assign(ngens, {});
  for (int s = 0; s < ngens; ++s) {
    std::string key = "s" + std::to_string(s);
    if (!panels.contains(key)) throw config_error("missing panel blocks for " + key);
    for (const auto& blk : panels[key]) {
      std::vector<int> block;
      for (const auto& id : blk) {
        int c = id.get<int>();
        if (c < 0 || c >= X.nchambers) throw config_error("panel block id out of range");
        if (X.panel_of[s][c] != -1)
          throw validation_error("chamber appears in two blocks of color " + key);
        X.panel_of[s][c] = (int)X.panel_blocks[s].size();
        block.push_back(c);
      }
      X.panel_blocks[s].push_back(std::move(block));
    }
    for (int c = 0; c < X.nchambers; ++c)
      if (X.panel_of[s][c] < 0)
        throw validation_error("chamber missing from the blocks of color " + key);
  }
  std::vector<int> id(X.nchambers);
  std::iota(id.begin(), id.end(), 0);
  X.omega_action = {id};
  if (j.contains("omega")) {
    X.has_omega = true;
    for (size_t k = 1; k < W->omega_hat().size(); ++k) {
      std::string key = "w" + std::to_string(k);
      if (!j["omega"].contains(key)) throw config_error("missing omega permutation " + key);
      std::vector<int> perm = j["omega"][key].get<std::vector<int>>();
      if ((int)perm.size() != X.nchambers) throw config_error("omega permutation has wrong size");
      X.omega_action.push_back(std::move(perm));
    }
  }
  validate_complex(X);
  return X;
}

IMat gen_matrix(const ChamberComplex& X, int s) {
  IMat M = IMat::Zero(X.nchambers, X.nchambers);
  for (const auto& block : X.panel_blocks[s])
    for (int a : block)
      for (int b : block)
        if (a != b) M(a, b) = 1;
  return M;
}

IMat omega_matrix(const ChamberComplex& X, int k) {
  IMat M = IMat::Zero(X.nchambers, X.nchambers);
  for (int c = 0; c < X.nchambers; ++c) M(c, X.omega_action.at(k)[c]) = 1;
  return M;
}

IMat basis_matrix(const ChamberComplex& X, const WeylElement& w) {
  auto [word, om] = X.W->reduced_word(w);
  IMat M = IMat::Identity(X.nchambers, X.nchambers);
  for (int s : word) M = M * gen_matrix(X, s);
  if (!(om == X.W->identity())) {
    int k = X.W->omega_index(om);
    if (!X.has_omega || k >= (int)X.omega_action.size())
      throw usage_error("element has an omega part but the complex has no omega action");
    M = M * omega_matrix(X, k);
  }
  return M;
}

void validate_complex(const ChamberComplex& X) {
  const WeylGroup& W = *X.W;
  int ngens = W.num_gens();
  for (int s = 0; s < ngens; ++s) {
    long long qs = as_integer(X.params.q_of_gen(s));
    size_t expect = (size_t)qs + 1;
    std::vector<int> seen(X.nchambers, 0);
    for (const auto& block : X.panel_blocks[s]) {
      if (block.size() != expect) {
        std::ostringstream os;
        os << "color s" << s << ": block size " << block.size() << " != q+1 = " << expect;
        throw validation_error(os.str());
      }
      for (int c : block) seen[c] += 1;
    }
    for (int c = 0; c < X.nchambers; ++c)
      if (seen[c] != 1) throw validation_error("panel partition broken");
  }
  auto residual = [](const IMat& A, const IMat& B) {
    return (A - B).cwiseAbs().maxCoeff();
  };
  std::vector<IMat> gens;
  for (int s = 0; s < ngens; ++s) gens.push_back(gen_matrix(X, s));
  IMat I = IMat::Identity(X.nchambers, X.nchambers);
  for (int s = 0; s < ngens; ++s) {
    long long q = as_integer(X.params.q_of_gen(s));
    long long res = residual(gens[s] * gens[s], q * I + (q - 1) * gens[s]);
    if (res != 0) {
      std::ostringstream os;
      os << "quadratic relation fails for color s" << s << " (residual " << res << ")";
      throw validation_error(os.str());
    }
  }
  for (int s = 0; s < ngens; ++s) {
    for (int t = s + 1; t < ngens; ++t) {
      int m = W.coxeter_m(s, t);
      if (m == 0) continue;
      IMat a = I, b = I;
      for (int k = 0; k < m; ++k) {
        a = a * (k % 2 == 0 ? gens[s] : gens[t]);
        b = b * (k % 2 == 0 ? gens[t] : gens[s]);
      }
      long long res = residual(a, b);
      if (res != 0) {
        std::ostringstream os;
        os << "braid relation fails for colors s" << s << ", s" << t << " (residual " << res
           << ")";
        throw validation_error(os.str());
      }
    }
  }
  if (X.has_omega) {
    for (size_t k = 1; k < X.omega_action.size(); ++k) {
      IMat O = omega_matrix(X, (int)k);
      const auto& perm = W.omega_perm((int)k);
      for (int s = 0; s < ngens; ++s) {
        long long res = residual(O * gens[s], gens[perm[s]] * O);
        if (res != 0) {
          std::ostringstream os;
          os << "omega twist fails for w" << k << ", s" << s << " (residual " << res << ")";
          throw validation_error(os.str());
        }
      }
    }
  }
}

SparseOp operator_matrix(const ChamberComplex& X, const HeckeElement& h, const HeckeAlgebra& H) {
  std::vector<double> vvals = numeric_vvals(*X.W, X.params, H.extra_vars());
  SparseOp op;
  op.dim = X.nchambers;
  op.mat = Eigen::MatrixXd::Zero(X.nchambers, X.nchambers);
  for (const auto& [w, c] : h)
    op.mat += c.eval(vvals) * basis_matrix(X, w).cast<double>();
  op.label = H.elem_str(h);
  return op;
}

std::vector<std::complex<double>> nontrivial_spectrum(const ChamberComplex& X,
                                                      const Eigen::MatrixXd& M) {
  int n = X.nchambers;
  std::vector<Eigen::VectorXd> trivial;
  trivial.push_back(Eigen::VectorXd::Ones(n));
  if (X.from_graph && !X.bipartite_mode && !X.side.empty()) {
    Eigen::VectorXd sgn(n);
    for (int c = 0; c < n; ++c) sgn(c) = X.side[X.chamber_edge[c].first] == 0 ? 1.0 : -1.0;
    double lam = sgn.dot(M * sgn) / sgn.squaredNorm();
    if ((M * sgn - lam * sgn).norm() <= 1e-8 * (1.0 + M.norm())) trivial.push_back(sgn);
  }
  Eigen::MatrixXd T(n, (int)trivial.size());
  for (int k = 0; k < (int)trivial.size(); ++k) T.col(k) = trivial[k].normalized();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(T);
  Eigen::MatrixXd Q = qr.householderQ();
  Eigen::MatrixXd C = Q.rightCols(n - (int)trivial.size());
  Eigen::MatrixXd B = C.transpose() * M * C;
  Eigen::ComplexEigenSolver<Eigen::MatrixXd> es(B);
  std::vector<std::complex<double>> out(es.eigenvalues().data(),
                                        es.eigenvalues().data() + B.rows());
  std::sort(out.begin(), out.end(), [](auto a, auto b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) > std::abs(b) : a.real() > b.real();
  });
  return out;
}

ExpanderReport classify_expander(const ChamberComplex& X, double tol) {
  const WeylGroup& W = *X.W;
  WeylElement t = W.translation({1});
  Eigen::MatrixXd NB = basis_matrix(X, t).cast<double>();
  ExpanderReport rpt;
  rpt.nb_eigenvalues = nontrivial_spectrum(X, NB);
  rpt.q_beta = W.q_w_numeric(t, X.params);
  rpt.ramanujan = true;
  for (auto lam : rpt.nb_eigenvalues) {
    double a = std::abs(lam);
    if (a > std::sqrt(rpt.q_beta) + tol) rpt.ramanujan = false;
    if (a > rpt.q_beta * (1.0 + tol)) {
      rpt.above_trivial = true;
    } else if (a >= rpt.q_beta * (1.0 - tol)) {
      rpt.p_infinite = true;
    } else if (a > 1.0 + tol) {
      rpt.p_min = std::max(rpt.p_min, std::log(rpt.q_beta) / (std::log(rpt.q_beta) - std::log(a)));
    }
  }
  if (rpt.p_infinite || rpt.above_trivial)
    rpt.p_min = std::numeric_limits<double>::infinity();
  return rpt;
}

double ihara_bass_check(const ChamberComplex& X) {
  if (!X.from_graph || X.bipartite_mode)
    throw usage_error("ihara_bass_check needs a regular-mode graph complex");
  const Graph& g = X.graph;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(g.n, g.n);
  for (auto [u, v] : g.edges) A(u, v) = A(v, u) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> aes(A);
  Eigen::MatrixXd NB = basis_matrix(X, X.W->translation({1})).cast<double>();
  Eigen::ComplexEigenSolver<Eigen::MatrixXd> es(NB);
  double q = to_double(X.params.q_of_gen(0));
  double worst = 0;
  for (int k = 0; k < NB.rows(); ++k) {
    std::complex<double> lam = es.eigenvalues()(k);
    if (std::abs(lam - 1.0) < 1e-6 || std::abs(lam + 1.0) < 1e-6 || std::abs(lam - q) < 1e-6)
      continue;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < g.n; ++i) {
      double a = aes.eigenvalues()(i);
      best = std::min(best, std::abs(lam * lam - a * lam + q));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

BoundaryOps boundary_ops(const ChamberComplex& X) {
  if (!X.bipartite_mode)
    throw usage_error("boundary_ops needs bipartite mode (faces are not 2-colorable otherwise)");
  BoundaryOps ops;
  for (int s = 0; s < 2; ++s) {
    int nb = (int)X.panel_blocks[s].size();
    IMat partial = IMat::Zero(nb, X.nchambers);
    for (int b = 0; b < nb; ++b)
      for (int c : X.panel_blocks[s][b]) partial(b, c) = 1;
    ops.partial.push_back(partial);
    ops.delta.push_back(partial.transpose());
    ops.e.push_back(partial.transpose() * partial);
    ops.q_wI.push_back(1 + as_integer(X.params.q_of_gen(s)));
  }
  return ops;
}

namespace {

// undirected chamber adjacency (chambers sharing a panel), for gallery
// distances
std::vector<std::vector<int>> undirected_adjacency(const ChamberComplex& X, int* count) {
  if (!X.from_graph) throw usage_error("gallery statistics need a graph-backed complex");
  const Graph& g = X.graph;
  int m = (int)g.edges.size();
  *count = m;
  std::vector<std::vector<int>> at_vertex(g.n);
  for (int e = 0; e < m; ++e) {
    at_vertex[g.edges[e].first].push_back(e);
    at_vertex[g.edges[e].second].push_back(e);
  }
  std::vector<std::vector<int>> adj(m);
  for (int v = 0; v < g.n; ++v)
    for (int a : at_vertex[v])
      for (int b : at_vertex[v])
        if (a != b) adj[a].push_back(b);
  return adj;
}

std::vector<long long> bfs_dist(const std::vector<std::vector<int>>& adj, int src) {
  std::vector<long long> d(adj.size(), -1);
  std::deque<int> q = {src};
  d[src] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj[v])
      if (d[w] < 0) {
        d[w] = d[v] + 1;
        q.push_back(w);
      }
  }
  return d;
}

}  // namespace

GalleryStats gallery_stats(const ChamberComplex& X, int c0) {
  int m = 0;
  auto adj = undirected_adjacency(X, &m);
  if (c0 < 0 || c0 >= m) throw usage_error("gallery_stats: chamber out of range");
  auto d = bfs_dist(adj, c0);
  GalleryStats st;
  for (long long x : d) {
    if (x < 0) throw validation_error("complex is disconnected");
    if ((long long)st.histogram.size() <= x) st.histogram.resize(x + 1, 0);
    st.histogram[x] += 1;
    st.eccentricity = std::max(st.eccentricity, x);
  }
  long long half = (m + 1) / 2, acc = 0;
  for (size_t l = 0; l < st.histogram.size(); ++l) {
    acc += st.histogram[l];
    if (acc >= half) {
      st.median = (long long)l;
      break;
    }
  }
  return st;
}

long long complex_diameter(const ChamberComplex& X) {
  int m = 0;
  auto adj = undirected_adjacency(X, &m);
  long long diam = 0;
  for (int c = 0; c < m; ++c) {
    auto d = bfs_dist(adj, c);
    for (long long x : d) {
      if (x < 0) throw validation_error("complex is disconnected");
      diam = std::max(diam, x);
    }
  }
  return diam;
}

DistanceCheck distance_theorem_check(const ChamberComplex& X, double p) {
  int m = 0;
  auto adj = undirected_adjacency(X, &m);
  DistanceCheck ck;
  ck.n_chambers = m;
  ck.p = p;
  const WeylGroup& W = *X.W;
  WeylElement t = W.translation({1});
  double qb = W.q_w_numeric(t, X.params);
  ck.q = std::pow(qb, 1.0 / (double)W.length(t));
  double N = (double)m;
  if (N < ck.q * ck.q) throw config_error("distance_theorem_check: N too small");
  double lw = (double)W.longest_finite_length();
  double logqN = std::log(N) / std::log(ck.q);
  double loglog = std::log(logqN) / std::log(ck.q);
  ck.avg_upper = (p / 2.0) * logqN + (lw + 1.0) * loglog + 1.0;
  ck.diameter_upper = p * logqN + 2.0 * (lw + 1.0) * loglog + 1.0;
  ck.avg_lower = logqN - ((double)W.rank() + 1.0) * loglog - 1.0;
  double quantile = 1.0 - 1.0 / logqN;
  for (int c = 0; c < m; ++c) {
    auto d = bfs_dist(adj, c);
    std::vector<long long> ds(d.begin(), d.end());
    std::sort(ds.begin(), ds.end());
    if (ds.front() < 0) throw validation_error("complex is disconnected");
    ck.diameter = std::max(ck.diameter, ds.back());
    long long idx = std::min((long long)ds.size() - 1, (long long)std::ceil(quantile * m));
    ck.quantile_distance = std::max(ck.quantile_distance, (double)ds[idx]);
  }
  ck.pass_diameter = (double)ck.diameter <= ck.diameter_upper + 1e-12;
  ck.pass_quantile = ck.quantile_distance <= ck.avg_upper + 1e-12;
  return ck;
}

long long injectivity_radius(const Graph& g) {
  // girth via BFS from every vertex
  long long girth = std::numeric_limits<long long>::max();
  int m = (int)g.edges.size();
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (neighbor, edge id)
  for (int e = 0; e < m; ++e) {
    adj[g.edges[e].first].push_back({g.edges[e].second, e});
    adj[g.edges[e].second].push_back({g.edges[e].first, e});
  }
  for (int src = 0; src < g.n; ++src) {
    std::vector<long long> d(g.n, -1);
    std::vector<int> via(g.n, -1);
    std::deque<int> q = {src};
    d[src] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (auto [w, e] : adj[v]) {
        if (e == via[v]) continue;
        if (d[w] < 0) {
          d[w] = d[v] + 1;
          via[w] = e;
          q.push_back(w);
        } else {
          girth = std::min(girth, d[v] + d[w] + 1);
        }
      }
    }
  }
  if (girth == std::numeric_limits<long long>::max())
    throw validation_error("acyclic graph has no injectivity radius");
  return girth;
}

namespace {

void require_self_adjoint_nonneg(const HeckeAlgebra& H, const HeckeElement& h,
                                 const std::vector<double>& vvals) {
  if (!H.equal(H.star(h), h)) throw usage_error("operator must be self-adjoint");
  for (const auto& [w, c] : h)
    if (c.eval(vvals) < 0) throw usage_error("operator must be a non-negative combination");
}

}  // namespace

std::vector<SerreEntry> serre_check(const std::vector<ChamberComplex>& family,
                                    const HeckeElement& h, const HeckeAlgebra& H,
                                    const TreeBall& ball) {
  const WeylGroup& W = H.weyl();
  std::vector<double> vvals = numeric_vvals(W, family.at(0).params, H.extra_vars());
  require_self_adjoint_nonneg(H, h, vvals);
  long long span = TreeBall::word_span(W, h);
  long long L = ball.radius() - span - 1;
  Eigen::MatrixXd R = ball.radial_matrix(W, H, h, vvals, L);
  Eigen::ComplexEigenSolver<Eigen::MatrixXd> res(R);
  std::vector<double> samples;
  for (int k = 0; k < R.rows(); ++k) samples.push_back(res.eigenvalues()(k).real());
  std::sort(samples.begin(), samples.end());
  std::vector<SerreEntry> out;
  for (const auto& X : family) {
    SparseOp op = operator_matrix(X, h, H);
    Eigen::ComplexEigenSolver<Eigen::MatrixXd> qes(op.mat);
    SerreEntry entry;
    entry.tree_samples = samples;
    for (double s : samples) {
      double best = std::numeric_limits<double>::infinity();
      for (int k = 0; k < op.dim; ++k)
        best = std::min(best, std::abs(s - qes.eigenvalues()(k).real()));
      entry.min_dist.push_back(best);
      entry.max_min_dist = std::max(entry.max_min_dist, best);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<AlonBoppanaEntry> alon_boppana_check(const std::vector<ChamberComplex>& family,
                                                 const HeckeElement& h, const HeckeAlgebra& H,
                                                 const TreeBall& ball) {
  const WeylGroup& W = H.weyl();
  std::vector<double> vvals = numeric_vvals(W, family.at(0).params, H.extra_vars());
  require_self_adjoint_nonneg(H, h, vvals);
  long long span = std::max<long long>(1, TreeBall::word_span(W, h));
  int nmax = std::max(2, (int)((ball.radius() - 1) / span));
  std::vector<double> seq = ball.growth_sequence(W, h, vvals, nmax);
  double lambda2 = *std::max_element(seq.begin(), seq.end());
  std::vector<AlonBoppanaEntry> out;
  for (const auto& X : family) {
    AlonBoppanaEntry e;
    e.lambda2_estimate = lambda2;
    long long diam = complex_diameter(X);
    e.n_window = std::max<long long>(2, std::min<long long>(nmax, diam / span));
    e.bound_used = seq[e.n_window - 1];
    e.epsilon = 2.0 * lambda2 / (double)e.n_window;
    SparseOp op = operator_matrix(X, h, H);
    auto spec = nontrivial_spectrum(X, op.mat);
    for (auto lam : spec) e.max_nontrivial = std::max(e.max_nontrivial, lam.real());
    e.pass = e.max_nontrivial + e.epsilon + 1e-9 >= e.bound_used;
    out.push_back(e);
  }
  return out;
}

std::vector<double> spherical_average(const ChamberComplex& X, int c0,
                                      const std::vector<double>& f) {
  int m = 0;
  auto adj = undirected_adjacency(X, &m);
  if ((int)f.size() != m) throw usage_error("spherical_average: wrong function size");
  auto d = bfs_dist(adj, c0);
  std::map<long long, std::pair<double, long long>> acc;
  for (int c = 0; c < m; ++c) {
    acc[d[c]].first += f[c];
    acc[d[c]].second += 1;
  }
  std::vector<double> out(m);
  for (int c = 0; c < m; ++c) out[c] = acc[d[c]].first / (double)acc[d[c]].second;
  return out;
}

}  // namespace chambers
