#include "chambers/reps.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "chambers/errors.hpp"
#include "json.hpp"

namespace chambers {

namespace {

double qnum(const ParamSystem& ps, int s) { return to_double(ps.q_of_gen(s)); }

void check_residual(const std::string& what, double res, double tol) {
  if (!(res <= tol)) {
    std::ostringstream os;
    os << "relation failed: " << what << " (residual " << res << ")";
    throw validation_error(os.str());
  }
}

}  // namespace

void validate_rep(const HeckeRep& rep, double tol) {
  const WeylGroup& W = *rep.W;
  const int n = W.num_gens();
  if ((int)rep.gen_s.size() != n) throw validation_error("wrong number of generator matrices");
  if (rep.gen_omega.size() != W.omega_hat().size())
    throw validation_error("wrong number of omega matrices");
  if (!rep.params.numeric) throw usage_error("validate_rep needs numeric parameters");
  for (const auto& m : rep.gen_s)
    if (m.rows() != rep.dim || m.cols() != rep.dim)
      throw validation_error("generator matrix has wrong dimensions");
  for (const auto& m : rep.gen_omega)
    if (m.rows() != rep.dim || m.cols() != rep.dim)
      throw validation_error("omega matrix has wrong dimensions");
  CMat I = CMat::Identity(rep.dim, rep.dim);
  if ((rep.gen_omega[0] - I).norm() > tol)
    throw validation_error("omega identity matrix is not the identity");
  for (int s = 0; s < n; ++s) {
    double q = qnum(rep.params, s);
    const CMat& M = rep.gen_s[s];
    std::ostringstream os;
    os << "quadratic relation for s" << s;
    check_residual(os.str(), (M * M - q * I - (q - 1.0) * M).norm(), tol);
  }
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      int m = W.coxeter_m(s, t);
      if (m == 0) continue;
      CMat a = I, b = I;
      for (int k = 0; k < m; ++k) {
        a = a * (k % 2 == 0 ? rep.gen_s[s] : rep.gen_s[t]);
        b = b * (k % 2 == 0 ? rep.gen_s[t] : rep.gen_s[s]);
      }
      std::ostringstream os;
      os << "braid relation for s" << s << ", s" << t;
      check_residual(os.str(), (a - b).norm(), tol);
    }
  }
  const auto& omegas = W.omega_hat();
  for (size_t k = 1; k < omegas.size(); ++k) {
    const auto& perm = W.omega_perm((int)k);
    for (int s = 0; s < n; ++s) {
      std::ostringstream os;
      os << "omega twist w" << k << " s" << s;
      check_residual(os.str(),
                     (rep.gen_omega[k] * rep.gen_s[s] - rep.gen_s[perm[s]] * rep.gen_omega[k]).norm(),
                     tol);
    }
  }
  for (size_t i = 0; i < omegas.size(); ++i) {
    for (size_t j = 0; j < omegas.size(); ++j) {
      int k = W.omega_index(W.multiply(omegas[i], omegas[j]));
      if (k < 0) throw internal_error("omega set not closed");
      std::ostringstream os;
      os << "omega composition w" << i << " w" << j;
      check_residual(os.str(), (rep.gen_omega[i] * rep.gen_omega[j] - rep.gen_omega[k]).norm(),
                     tol);
    }
  }
}

HeckeRep builtin_rep(std::shared_ptr<const WeylGroup> W, const std::string& name,
                     const ParamSystem& params) {
  if (!params.numeric) throw usage_error("builtin_rep needs numeric parameters");
  HeckeRep rep;
  rep.W = W;
  rep.dim = 1;
  rep.params = params;
  const int n = W->num_gens();
  std::vector<double> sval(params.nclasses);
  std::vector<double> oval(W->omega_hat().size(), 1.0);
  if (name == "trivial") {
    for (int c = 0; c < params.nclasses; ++c) sval[c] = to_double(params.qval[c]);
  } else if (name == "steinberg") {
    for (int c = 0; c < params.nclasses; ++c) sval[c] = -1.0;
  } else if (name.rfind("sign:", 0) == 0) {
    std::string body = name.substr(5), cls = body, om;
    auto semi = body.find(";omega=");
    if (semi != std::string::npos) {
      cls = body.substr(0, semi);
      om = body.substr(semi + 7);
    }
    auto split = [](const std::string& s) {
      std::vector<std::string> out;
      std::stringstream ss(s);
      std::string tok;
      while (std::getline(ss, tok, ',')) out.push_back(tok);
      return out;
    };
    auto ctoks = split(cls);
    if ((int)ctoks.size() != params.nclasses)
      throw usage_error("sign rep needs one token per parameter class");
    for (int c = 0; c < params.nclasses; ++c) {
      if (ctoks[c] == "q" || ctoks[c] == "+")
        sval[c] = to_double(params.qval[c]);
      else if (ctoks[c] == "-1" || ctoks[c] == "-")
        sval[c] = -1.0;
      else
        throw usage_error("sign rep token must be q/+ or -1/-: " + ctoks[c]);
    }
    if (!om.empty()) {
      auto otoks = split(om);
      if (otoks.size() + 1 != W->omega_hat().size())
        throw usage_error("sign rep needs one omega value per non-identity omega element");
      for (size_t k = 0; k < otoks.size(); ++k) {
        if (otoks[k] == "+1" || otoks[k] == "+")
          oval[k + 1] = 1.0;
        else if (otoks[k] == "-1" || otoks[k] == "-")
          oval[k + 1] = -1.0;
        else
          throw usage_error("omega value must be +1 or -1: " + otoks[k]);
      }
    }
  } else {
    throw usage_error("unknown builtin rep: " + name);
  }
  for (int s = 0; s < n; ++s) {
    CMat m(1, 1);
    m(0, 0) = sval[params.class_of.at(s)];
    rep.gen_s.push_back(m);
  }
  for (double v : oval) {
    CMat m(1, 1);
    m(0, 0) = v;
    rep.gen_omega.push_back(m);
  }
  validate_rep(rep);
  return rep;
}

HeckeRep load_rep(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw resource_error("cannot open rep file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw config_error(std::string("rep file parse error: ") + e.what());
  }
  if (!j.contains("type") || !j.contains("dim") || !j.contains("q") || !j.contains("generators"))
    throw config_error("rep file needs fields type, dim, q, generators");
  HeckeRep rep;
  auto W = std::make_shared<WeylGroup>(j["type"].get<std::string>());
  rep.W = W;
  rep.dim = j["dim"].get<int>();
  if (rep.dim <= 0) throw config_error("rep dim must be positive");
  std::vector<Rat> qv(W->num_classes(), Rat(1));
  for (auto& [key, val] : j["q"].items()) {
    int c = std::stoi(key);
    if (c < 0 || c >= W->num_classes()) throw config_error("q class index out of range");
    if (val.is_number_integer())
      qv[c] = Rat(val.get<long long>());
    else
      qv[c] = Rat(Int((long long)std::llround(val.get<double>() * 1000000)), Int(1000000));
  }
  rep.params = W->numeric_params(qv);
  auto parse_mat = [&](const nlohmann::json& m) {
    if ((int)m.size() != rep.dim) throw config_error("generator matrix has wrong row count");
    CMat out(rep.dim, rep.dim);
    for (int r = 0; r < rep.dim; ++r) {
      if ((int)m[r].size() != rep.dim) throw config_error("generator matrix is not square");
      for (int c = 0; c < rep.dim; ++c) {
        const auto& e = m[r][c];
        if (e.is_array()) {
          out(r, c) = std::complex<double>(e[0].get<double>(), e[1].get<double>());
        } else {
          out(r, c) = e.get<double>();
        }
      }
    }
    return out;
  };
  const auto& gens = j["generators"];
  for (int s = 0; s < W->num_gens(); ++s) {
    std::string key = "s" + std::to_string(s);
    if (!gens.contains(key)) throw config_error("missing generator matrix " + key);
    rep.gen_s.push_back(parse_mat(gens[key]));
  }
  rep.gen_omega.push_back(CMat::Identity(rep.dim, rep.dim));
  for (size_t k = 1; k < W->omega_hat().size(); ++k) {
    std::string key = "w" + std::to_string(k);
    if (!gens.contains(key)) throw config_error("missing omega matrix " + key);
    rep.gen_omega.push_back(parse_mat(gens[key]));
  }
  validate_rep(rep);
  return rep;
}

CMat evaluate(const HeckeRep& rep, const WeylElement& w) {
  auto [word, om] = rep.W->reduced_word(w);
  CMat out = CMat::Identity(rep.dim, rep.dim);
  for (int s : word) out = out * rep.gen_s[s];
  int k = rep.W->omega_index(om);
  if (k < 0) throw internal_error("reduced_word returned a non-omega tail");
  return out * rep.gen_omega[k];
}

bool is_unitary(const HeckeRep& rep, double tol) {
  for (const auto& m : rep.gen_s)
    if ((m - m.adjoint()).norm() > tol) return false;
  const WeylGroup& W = *rep.W;
  for (size_t k = 0; k < W.omega_hat().size(); ++k) {
    int kinv = W.omega_index(W.inverse(W.omega_hat()[k]));
    if ((rep.gen_omega[k].adjoint() - rep.gen_omega[kinv]).norm() > tol) return false;
  }
  return true;
}

PMinResult p_min(const HeckeRep& rep, double tol) {
  const WeylGroup& W = *rep.W;
  const int n = W.rank();
  PMinResult out;
  for (int i = 0; i < n; ++i) {
    Coweight bi(n, 0);
    bi[i] = 1;
    WeylElement t = W.translation(bi);
    double q = W.q_w_numeric(t, rep.params);
    if (q <= 1.0 + 1e-12)
      throw config_error("p_min: thin parameters (q_beta = 1) are unsupported");
    CMat M = evaluate(rep, t);
    Eigen::ComplexEigenSolver<CMat> es(M);
    std::vector<double> mags;
    for (int k = 0; k < rep.dim; ++k) {
      double a = std::abs(es.eigenvalues()(k));
      mags.push_back(a);
      if (a > q * (1.0 + tol)) {
        out.above_trivial = true;
      } else if (a >= q * (1.0 - tol)) {
        out.infinite = true;
      } else if (a > 1.0 + tol) {
        // solve a = q^{(p-1)/p}
        double p = std::log(q) / (std::log(q) - std::log(a));
        out.p = std::max(out.p, p);
      }
    }
    out.q_beta.push_back(q);
    out.eig_mags.push_back(mags);
  }
  if (out.above_trivial || out.infinite) out.p = std::numeric_limits<double>::infinity();
  return out;
}

ZetaData zeta(const HeckeRep& rep) {
  const WeylGroup& W = *rep.W;
  const int n = W.rank();
  ZetaData z;
  for (int i = 0; i < n; ++i) {
    Coweight bi(n, 0);
    bi[i] = 1;
    WeylElement t = W.translation(bi);
    long long l = W.length(t);
    CMat M = evaluate(rep, t);
    Eigen::ComplexEigenSolver<CMat> es(M);
    std::vector<std::complex<double>> eigs(es.eigenvalues().data(),
                                           es.eigenvalues().data() + rep.dim);
    // det(1 - M t) = prod (1 - lambda t)
    std::vector<std::complex<double>> poly = {1.0};
    for (auto lam : eigs) {
      std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
      for (size_t k = 0; k < poly.size(); ++k) {
        next[k] += poly[k];
        next[k + 1] -= poly[k] * lam;
      }
      poly = std::move(next);
    }
    std::vector<double> pole_mags;
    for (auto lam : eigs) {
      double a = std::abs(lam);
      if (a > 1e-300) pole_mags.push_back(std::pow(1.0 / a, 1.0 / (double)l));
    }
    z.char_polys.push_back(std::move(poly));
    z.eigenvalues.push_back(std::move(eigs));
    z.l_beta.push_back(l);
    z.pole_mags_u.push_back(std::move(pole_mags));
  }
  return z;
}

bool rh_check(const HeckeRep& rep, double p, double tol) {
  const WeylGroup& W = *rep.W;
  const int n = W.rank();
  for (int i = 0; i < n; ++i) {
    Coweight bi(n, 0);
    bi[i] = 1;
    WeylElement t = W.translation(bi);
    double q = W.q_w_numeric(t, rep.params);
    double bound = std::pow(q, (p - 1.0) / p);
    CMat M = evaluate(rep, t);
    Eigen::ComplexEigenSolver<CMat> es(M);
    for (int k = 0; k < rep.dim; ++k) {
      double a = std::abs(es.eigenvalues()(k));
      bool trivial = std::abs(a - q) <= tol * std::max(1.0, q);
      if (!trivial && a > bound * (1.0 + tol)) return false;
    }
  }
  return true;
}

GrowthReport tempered_growth_check(const HeckeRep& rep, const Eigen::VectorXcd& v,
                                   const Eigen::VectorXcd& vstar, long long L, double p,
                                   double delta, long long onset) {
  const WeylGroup& W = *rep.W;
  GrowthReport rpt;
  rpt.onset = onset;
  rpt.max_ratio.assign(L + 1, 0.0);
  rpt.violation.assign(L + 1, false);
  for (const auto& w : W.enumerate_ball(L)) {
    long long l = W.length(w);
    double qw = W.q_w_numeric(w, rep.params);
    std::complex<double> f = vstar.dot(evaluate(rep, w) * v);
    double ratio = std::abs(f) * std::pow(qw, (1.0 - p) / p);
    rpt.max_ratio[l] = std::max(rpt.max_ratio[l], ratio);
  }
  for (long long l = 0; l <= L; ++l) {
    if (l >= onset && rpt.max_ratio[l] > std::pow(1.0 + delta, (double)l) * (1.0 + 1e-12)) {
      rpt.violation[l] = true;
      rpt.any_violation = true;
    }
  }
  return rpt;
}

}  // namespace chambers
