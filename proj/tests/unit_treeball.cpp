#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "chambers/errors.hpp"
#include "chambers/treeball.hpp"
#include "doctest.h"

using namespace chambers;

static double interior_residual(const TreeBall& T, const std::vector<double>& a,
                                const std::vector<double>& b, int margin) {
  double worst = 0;
  for (int oc = 0; oc < T.noriented(); ++oc)
    if (T.chamber_dist(oc) <= T.radius() - margin) worst = std::max(worst, std::abs(a[oc] - b[oc]));
  return worst;
}

TEST_CASE("generator relations hold on the interior") {
  TreeBall T(2, 10);
  WeylGroup W("A1");
  std::mt19937_64 rng(7);
  std::vector<double> f(T.noriented());
  for (double& x : f) x = (double)(rng() % 100) / 50.0 - 1.0;
  double q = 2.0;
  for (int s = 0; s < 2; ++s) {
    // h_s^2 = q + (q-1) h_s
    std::vector<double> hs = T.apply_gen(s, f);
    std::vector<double> hss = T.apply_gen(s, hs);
    std::vector<double> rhs(f.size());
    for (size_t i = 0; i < f.size(); ++i) rhs[i] = q * f[i] + (q - 1.0) * hs[i];
    CHECK(interior_residual(T, hss, rhs, 2) <= 1e-12);
  }
  // omega is an involution and twists the colors: M_{s0} M_w = M_w M_{s1}
  std::vector<double> omom = T.apply_omega(T.apply_omega(f));
  CHECK(interior_residual(T, omom, f, 1) <= 1e-12);
  std::vector<double> a = T.apply_omega(T.apply_gen(0, f));
  std::vector<double> b = T.apply_gen(1, T.apply_omega(f));
  CHECK(interior_residual(T, a, b, 2) <= 1e-12);
}

TEST_CASE("interior row sums equal q_w") {
  TreeBall T(2, 8);
  WeylGroup W("A1");
  HeckeAlgebra H(W);
  std::vector<double> vv = numeric_vvals(W, W.numeric_params({Rat(2)}));
  std::vector<double> ones(T.noriented(), 1.0);
  for (const auto& w : W.enumerate_ball(3)) {
    std::vector<double> img = T.apply(W, H.basis(w), vv, ones);
    double qw = W.q_w_numeric(w, W.numeric_params({Rat(2)}));
    double worst = 0;
    for (int oc = 0; oc < T.noriented(); ++oc)
      if (T.chamber_dist(oc) <= T.radius() - 5) worst = std::max(worst, std::abs(img[oc] - qw));
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("weyl codes are consistent with code length and sphere sizes") {
  TreeBall T(2, 8);
  WeylGroup W("A1");
  std::map<long long, long long> sphere;
  for (int oc = 0; oc < T.noriented(); ++oc) {
    auto code = T.weyl_code(oc);
    long long l = TreeBall::code_length(code);
    CHECK(l >= 0);
    if (T.chamber_dist(oc) <= T.radius() - 1) sphere[l] += 1;
    // the code converts to a group element of the same length
    WeylElement w = T.code_to_elem(W, code);
    CHECK(W.length(w) == l);
  }
  // four group elements per length l >= 1, q^l chambers each; at l = 0 the
  // identity and the reversal contribute one chamber each
  CHECK(sphere[0] == 2);
  for (long long l = 1; l <= 6; ++l) CHECK(sphere[l] == 4 * (1LL << l));
}

TEST_CASE("steinberg geometric realization") {
  TreeBall T(2, 8);
  auto W = std::make_shared<WeylGroup>("A1");
  HeckeRep st = builtin_rep(W, "steinberg", W->numeric_params({Rat(2)}));
  std::vector<double> f = T.geometric_realization(st);
  for (int oc = 0; oc < T.noriented(); ++oc) {
    long long l = TreeBall::code_length(T.weyl_code(oc));
    double expect = (l % 2 == 0 ? 1.0 : -1.0) / std::pow(2.0, (double)l);
    CHECK(f[oc] == doctest::Approx(expect));
  }
}

TEST_CASE("spherical averaging fixes spherical functions") {
  TreeBall T(2, 6);
  std::vector<double> f(T.noriented());
  for (int oc = 0; oc < T.noriented(); ++oc)
    f[oc] = 1.0 / (1.0 + (double)TreeBall::code_length(T.weyl_code(oc)));
  std::vector<double> g = T.spherical_average(f);
  for (int oc = 0; oc < T.noriented(); ++oc) CHECK(g[oc] == doctest::Approx(f[oc]));
}

TEST_CASE("norm brackets for single generators") {
  TreeBall T(2, 10);
  WeylGroup W("A1");
  HeckeAlgebra H(W);
  std::vector<double> vv = numeric_vvals(W, W.numeric_params({Rat(2)}));
  double n0 = T.norm2_lower(W, H, H.h_gen(0), vv, 6);
  // ||h_s||_2 on the infinite tree is bounded by 1 + q and below by sqrt(q)
  CHECK(n0 <= 3.0 + 1e-9);
  CHECK(n0 >= std::sqrt(2.0) - 1e-9);
  CHECK_THROWS_AS(T.norm2_lower(W, H, H.h_gen(0), vv, 50), resource_error);
}

TEST_CASE("growth sequence brackets the operator norm") {
  TreeBall T(2, 12);
  WeylGroup W("A1");
  HeckeElement h;
  HeckeAlgebra H(W);
  h = H.h_gen(0);
  HeckeAlgebra::add_into(h, H.h_gen(1));
  std::vector<double> vv = numeric_vvals(W, W.numeric_params({Rat(2)}));
  auto seq = T.growth_sequence(W, h, vv, 5);
  REQUIRE(seq.size() == 5);
  // adjacency-like operator: norms are below the trivial eigenvalue 2q
  for (double a : seq) {
    CHECK(a > 0);
    CHECK(a <= 4.0 + 1e-9);
  }
}

TEST_CASE("sector types satisfy the adjacency refinement") {
  TreeBall T(2, 9);
  WeylGroup W("A1");
  auto rpt = T.sector_adjacency_check(W, 3);
  CHECK(rpt.pass);
  CHECK(rpt.pairs_checked > 0);
}

TEST_CASE("sectorial counts match the algebraic prediction at beta_1") {
  TreeBall T(2, 9);
  WeylGroup W("A1");
  auto rpt = T.sectorial_count_check(W, {1}, 2);
  CHECK(rpt.pass);
  CHECK(rpt.mismatches.empty());
}

TEST_CASE("thin or undersized balls are refused") {
  CHECK_THROWS_AS(TreeBall(0, 5), usage_error);
  CHECK_THROWS_AS(TreeBall(2, 1), usage_error);
}
