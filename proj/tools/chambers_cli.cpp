// chambers: affine Weyl / Hecke / expander-complex analysis tool.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage/configuration
// error, 3 resource limit.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chambers/bounds.hpp"
#include "chambers/complex.hpp"
#include "chambers/errors.hpp"
#include "chambers/hecke.hpp"
#include "chambers/reps.hpp"
#include "chambers/treeball.hpp"
#include "chambers/weyl.hpp"

using namespace chambers;

namespace {

struct Options {
  std::string type = "A1";
  std::vector<std::string> qassign;  // class=value
  long long maxlen = 6;
  int radius = 10;
  double p = 2.0;
  std::vector<double> deltas;
  std::uint64_t seed = 1;
  std::string out;
  std::string input;
  bool bipartite = false;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

ParamSystem params_from_opts(const WeylGroup& W, const Options& opt) {
  std::vector<Rat> qv(W.num_classes(), Rat(2));
  for (const auto& a : opt.qassign) {
    auto eq = a.find('=');
    if (eq == std::string::npos) {
      // single value replicated across classes
      for (auto& q : qv) q = Rat(std::stoll(a));
      continue;
    }
    int c = std::stoi(a.substr(0, eq));
    if (c < 0 || c >= W.num_classes()) throw usage_error("--q class index out of range");
    qv[c] = Rat(std::stoll(a.substr(eq + 1)));
  }
  return W.numeric_params(qv);
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.out);
    if (!f) throw resource_error("cannot open output file: " + opt.out);
    f << text;
  }
}

int run_weyl(const std::string& sub, const Options& opt) {
  WeylGroup W(opt.type);
  std::ostringstream os;
  os << "command: weyl " << sub << "\ntype: " << W.roots().type_name << "\n";
  bool pass = true;
  if (sub == "enum") {
    auto ball = W.enumerate_ball(opt.maxlen);
    std::map<long long, long long> per_len;
    for (const auto& w : ball) per_len[W.length(w)] += 1;
    os << "maxlen: " << opt.maxlen << "\ntotal: " << ball.size() << "\n";
    for (auto [l, c] : per_len) os << "count[" << l << "]: " << c << "\n";
  } else if (sub == "structure-check") {
    auto ball = W.enumerate_ball(opt.maxlen);
    long long bad = 0;
    for (const auto& w : ball) {
      auto st = W.structure_decompose(w);
      WeylElement back = W.multiply(W.multiply(st.w0, W.translation(st.beta)), st.a);
      long long lsum = W.length(st.w0) + W.translation_length(st.beta) + W.length(st.a);
      if (!(back == w) || lsum != W.length(w)) {
        ++bad;
        os << "counterexample: " << W.elem_str(w) << "\n";
      }
    }
    os << "maxlen: " << opt.maxlen << "\nchecked: " << ball.size()
       << "\ncounterexamples: " << bad << "\n";
    pass = bad == 0;
  } else if (sub == "poincare") {
    HeckeAlgebra H(W, W.num_classes());
    bool ok = H.poincare_identity_check(opt.maxlen);
    os << "degree: " << opt.maxlen << "\nidentity: " << (ok ? "pass" : "fail") << "\n";
    pass = ok;
  } else {
    throw usage_error("unknown weyl subcommand: " + sub);
  }
  os << "verdict: " << (pass ? "pass" : "fail") << "\n";
  emit(opt, os.str());
  return pass ? 0 : 1;
}

HeckeRep rep_from_opts(const Options& opt) {
  if (opt.input.rfind("builtin:", 0) == 0) {
    auto W = std::make_shared<WeylGroup>(opt.type);
    return builtin_rep(W, opt.input.substr(8), params_from_opts(*W, opt));
  }
  return load_rep(opt.input);
}

int run_rep(const std::string& sub, const Options& opt) {
  std::ostringstream os;
  os << "command: rep " << sub << "\n";
  bool pass = true;
  HeckeRep rep = rep_from_opts(opt);
  os << "type: " << rep.W->roots().type_name << "\ndim: " << rep.dim << "\n";
  if (sub == "validate") {
    os << "relations: pass\nunitary: " << (is_unitary(rep) ? "yes" : "no") << "\n";
  } else if (sub == "tempered") {
    auto pm = p_min(rep);
    for (size_t i = 0; i < pm.q_beta.size(); ++i) {
      os << "q_beta[" << i + 1 << "]: " << fmt(pm.q_beta[i]) << "\neigenvalue_mags[" << i + 1
         << "]:";
      for (double a : pm.eig_mags[i]) os << " " << fmt(a);
      os << "\n";
    }
    if (pm.above_trivial)
      os << "p_min: above-trivial\n";
    else if (pm.infinite)
      os << "p_min: inf\n";
    else
      os << "p_min: " << fmt(pm.p) << "\n";
    os << "rh_check(p=" << fmt(opt.p) << "): " << (rh_check(rep, opt.p) ? "true" : "false")
       << "\n";
  } else if (sub == "zeta") {
    auto z = zeta(rep);
    for (size_t i = 0; i < z.char_polys.size(); ++i) {
      os << "l_beta[" << i + 1 << "]: " << z.l_beta[i] << "\nchar_poly[" << i + 1 << "]:";
      for (auto c : z.char_polys[i]) os << " (" << fmt(c.real()) << "," << fmt(c.imag()) << ")";
      os << "\npole_mags_u[" << i + 1 << "]:";
      for (double m : z.pole_mags_u[i]) os << " " << fmt(m);
      os << "\n";
    }
    os << "rh_check(p=" << fmt(opt.p) << "): " << (rh_check(rep, opt.p) ? "true" : "false")
       << "\n";
    pass = rh_check(rep, opt.p);
  } else if (sub == "growth") {
    double delta = opt.deltas.empty() ? 0.1 : opt.deltas[0];
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(rep.dim);
    auto rpt = tempered_growth_check(rep, v, v, opt.maxlen, opt.p, delta);
    os << "p: " << fmt(opt.p) << "\ndelta: " << fmt(delta) << "\n";
    for (size_t l = 0; l < rpt.max_ratio.size(); ++l)
      os << "max_ratio[" << l << "]: " << fmt(rpt.max_ratio[l])
         << (rpt.violation[l] ? " VIOLATION" : "") << "\n";
    pass = !rpt.any_violation;
  } else {
    throw usage_error("unknown rep subcommand: " + sub);
  }
  os << "verdict: " << (pass ? "pass" : "fail") << "\n";
  emit(opt, os.str());
  return pass ? 0 : 1;
}

int run_graph(const std::string& sub, const Options& opt) {
  std::ostringstream os;
  os << "command: graph " << sub << "\n";
  bool pass = true;
  ChamberComplex X =
      load_graph(opt.input, opt.bipartite ? GraphMode::Bipartite : GraphMode::Auto);
  os << "chambers: " << X.nchambers << "\nmode: " << (X.bipartite_mode ? "bipartite" : "regular")
     << "\n";
  if (sub == "analyze") {
    auto rpt = classify_expander(X);
    os << "q_beta: " << fmt(rpt.q_beta) << "\nnb_eigenvalues:";
    for (auto lam : rpt.nb_eigenvalues)
      os << " (" << fmt(lam.real()) << "," << fmt(lam.imag()) << ")";
    os << "\np_min: "
       << (rpt.above_trivial ? "above-trivial" : rpt.p_infinite ? "inf" : fmt(rpt.p_min))
       << "\nramanujan: " << (rpt.ramanujan ? "true" : "false") << "\n";
    if (!X.bipartite_mode) {
      double res = ihara_bass_check(X);
      os << "ihara_bass_residual: " << fmt(res) << "\n";
      pass = res <= 1e-9;
    }
  } else if (sub == "diameter-check") {
    double p = opt.p;
    auto exp_rpt = classify_expander(X);
    if (!exp_rpt.p_infinite && !exp_rpt.above_trivial) p = std::max(p, exp_rpt.p_min);
    auto ck = distance_theorem_check(X, std::max(2.0, p));
    os << "N: " << ck.n_chambers << "\nq: " << fmt(ck.q) << "\np: " << fmt(ck.p)
       << "\ndiameter: " << ck.diameter << "\ndiameter_upper: " << fmt(ck.diameter_upper)
       << "\nquantile_distance: " << fmt(ck.quantile_distance)
       << "\navg_upper: " << fmt(ck.avg_upper) << "\navg_lower: " << fmt(ck.avg_lower) << "\n";
    pass = ck.pass_diameter && ck.pass_quantile;
  } else if (sub == "serre" || sub == "alon-boppana") {
    WeylGroup W("A1");
    HeckeAlgebra H(W);
    HeckeElement h = H.h_gen(0);
    HeckeAlgebra::add_into(h, H.h_gen(1));
    long long q = (long long)to_double(X.params.q_of_gen(0));
    TreeBall ball((int)q, opt.radius);
    std::vector<ChamberComplex> fam;
    fam.push_back(X);
    if (sub == "serre") {
      auto entries = serre_check(fam, h, H, ball);
      os << "tree_samples:";
      for (double s : entries[0].tree_samples) os << " " << fmt(s);
      os << "\nmin_dist:";
      for (double d : entries[0].min_dist) os << " " << fmt(d);
      os << "\nmax_min_dist: " << fmt(entries[0].max_min_dist) << "\n";
    } else {
      auto entries = alon_boppana_check(fam, h, H, ball);
      const auto& e = entries[0];
      os << "lambda2_estimate: " << fmt(e.lambda2_estimate)
         << "\nbound_used: " << fmt(e.bound_used) << "\nepsilon: " << fmt(e.epsilon)
         << "\nmax_nontrivial: " << fmt(e.max_nontrivial) << "\nn_window: " << e.n_window
         << "\n";
      pass = e.pass;
    }
  } else {
    throw usage_error("unknown graph subcommand: " + sub);
  }
  os << "verdict: " << (pass ? "pass" : "fail") << "\n";
  emit(opt, os.str());
  return pass ? 0 : 1;
}

int run_bounds(const std::string& sub, const Options& opt) {
  std::ostringstream os;
  os << "command: bounds " << sub << "\n";
  if (sub == "oh") {
    os << "type: " << opt.type << "\np0: " << oh_p0(opt.type) << "\n";
  } else {
    WeylGroup W(opt.type);
    ParamSystem ps = params_from_opts(W, opt);
    if (sub == "d") {
      Rat qmax = 1;
      for (const auto& v : ps.qval) qmax = std::max(qmax, v);
      os << "type: " << opt.type << "\nq_max: " << rat_str(qmax) << "\nl: " << opt.maxlen
         << "\nD: " << rat_str(d_constant(W, qmax, opt.maxlen)) << "\n";
    } else if (sub == "hw") {
      WeylElement w = W.from_word(opt.input.empty() ? "s0" : opt.input);
      auto r = norm_bound_hw(W, ps, opt.p, w);
      for (auto& [k, v] : r.inputs) os << k << ": " << fmt(v) << "\n";
      os << "bound: " << fmt(r.bound) << "\n";
    } else if (sub == "hbeta") {
      Coweight beta(W.rank(), 0);
      std::stringstream ss(opt.input.empty() ? std::string(W.rank(), '1') : opt.input);
      std::string tok;
      int i = 0;
      while (std::getline(ss, tok, ',') && i < W.rank()) beta[i++] = std::stoll(tok);
      auto r = norm_bound_hbeta(W, ps, opt.p, beta);
      for (auto& [k, v] : r.inputs) os << k << ": " << fmt(v) << "\n";
      os << "bound: " << fmt(r.bound) << "\n";
    } else if (sub == "diameter") {
      double q = to_double(ps.qval[0]);
      double N = (double)opt.maxlen;
      auto b = diameter_bounds(opt.p, q, N, W);
      os << "p: " << fmt(opt.p) << "\nq: " << fmt(q) << "\nN: " << fmt(N)
         << "\navg_upper: " << fmt(b.avg_upper) << "\navg_lower: " << fmt(b.avg_lower)
         << "\ndiameter_upper: " << fmt(b.diameter_upper) << "\n";
    } else {
      throw usage_error("unknown bounds subcommand: " + sub);
    }
  }
  os << "verdict: pass\n";
  emit(opt, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chambers: affine Weyl groups, Hecke algebras and expander complexes"};
  app.require_subcommand(1);
  Options opt;
  std::string sub;

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    cmd->add_option("subcommand", sub)->required();
    if (with_input) cmd->add_option("input", opt.input);
    cmd->add_option("--type", opt.type);
    cmd->add_option("--q", opt.qassign);
    cmd->add_option("--maxlen,--l", opt.maxlen);
    cmd->add_option("--radius", opt.radius);
    cmd->add_option("--p", opt.p);
    cmd->add_option("--delta", opt.deltas);
    cmd->add_option("--seed", opt.seed);
    cmd->add_option("--out", opt.out);
    cmd->add_flag("--bipartite", opt.bipartite);
  };
  add_common(app.add_subcommand("weyl", "enumeration and structure checks"), false);
  add_common(app.add_subcommand("rep", "representation analysis"), true);
  add_common(app.add_subcommand("graph", "graph quotient analysis"), true);
  add_common(app.add_subcommand("bounds", "closed-form bound calculators"), true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("weyl")) return run_weyl(sub, opt);
    if (app.got_subcommand("rep")) return run_rep(sub, opt);
    if (app.got_subcommand("graph")) return run_graph(sub, opt);
    if (app.got_subcommand("bounds")) return run_bounds(sub, opt);
    throw usage_error("no subcommand");
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const config_error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
