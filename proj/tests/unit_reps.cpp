#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "chambers/errors.hpp"
#include "chambers/reps.hpp"
#include "doctest.h"

using namespace chambers;

static std::string data_path(const std::string& name) {
  return std::string(CHAMBERS_TEST_DATA) + "/" + name;
}

static HeckeRep make_builtin(const std::string& type, const std::string& name, long long q) {
  auto W = std::make_shared<WeylGroup>(type);
  std::vector<Rat> qv(W->num_classes(), Rat(q));
  return builtin_rep(W, name, W->numeric_params(qv));
}

TEST_CASE("trivial and steinberg validate across types and parameters") {
  for (const char* t : {"A1", "BC1", "A2", "C2"}) {
    for (long long q : {2, 3}) {
      CHECK_NOTHROW(make_builtin(t, "trivial", q));
      CHECK_NOTHROW(make_builtin(t, "steinberg", q));
    }
  }
}

TEST_CASE("A1 has exactly four one-dimensional representations") {
  // one parameter class (s0 ~ s1 via omega), so the generator value is q or
  // -1, and omega acts by +-1: four sign choices in total
  int count = 0;
  for (const char* cls : {"q", "-1"}) {
    for (const char* om : {"+1", "-1"}) {
      std::string name = std::string("sign:") + cls + ";omega=" + om;
      CHECK_NOTHROW(make_builtin("A1", name, 2));
      ++count;
    }
  }
  CHECK(count == 4);
  // mixed generator values are impossible: s0 and s1 share a class
  CHECK_THROWS_AS(make_builtin("A1", "sign:q,-1", 2), usage_error);
}

TEST_CASE("unitarity detection") {
  CHECK(is_unitary(make_builtin("A2", "trivial", 2)));
  CHECK(is_unitary(make_builtin("A2", "steinberg", 3)));
  HeckeRep bad = load_rep(data_path("rep_bad_unitary.json"));
  CHECK(!is_unitary(bad));
  CHECK_THROWS_AS(load_rep(data_path("rep_bad_relation.json")), validation_error);
}

TEST_CASE("p_min classification of the fixtures") {
  for (const char* t : {"A1", "A2"}) {
    for (long long q : {2, 3}) {
      PMinResult triv = p_min(make_builtin(t, "trivial", q));
      CHECK(triv.infinite);
      CHECK(!triv.above_trivial);
      CHECK(std::isinf(triv.p));
      PMinResult st = p_min(make_builtin(t, "steinberg", q));
      CHECK(!st.infinite);
      CHECK(!st.above_trivial);
      CHECK(st.p == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("rh_check is consistent with p_min") {
  for (const char* t : {"A1", "A2"}) {
    for (const char* name : {"trivial", "steinberg"}) {
      HeckeRep rep = make_builtin(t, name, 2);
      PMinResult pm = p_min(rep);
      for (double p : {1.0, 2.0, 4.0, 16.0}) {
        if (std::isinf(pm.p) || pm.p <= p) CHECK(rh_check(rep, p));
      }
    }
  }
}

TEST_CASE("thin parameters are refused") {
  CHECK_THROWS_AS(p_min(make_builtin("A1", "trivial", 1)), config_error);
}

TEST_CASE("two-dimensional file fixture is tempered at p = 2") {
  HeckeRep rep = load_rep(data_path("rep_a1_sum.json"));
  CHECK(rep.dim == 2);
  PMinResult pm = p_min(rep);
  REQUIRE(!std::isinf(pm.p));
  CHECK(pm.p == doctest::Approx(2.0));
  CHECK(rh_check(rep, 2.0));
  // |eigenvalues| of the translation operator are sqrt(q)
  for (double a : pm.eig_mags[0]) CHECK(a == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("zeta data of the steinberg line") {
  HeckeRep st = make_builtin("A1", "steinberg", 2);
  ZetaData z = zeta(st);
  REQUIRE(z.char_polys.size() == 1);
  CHECK(z.l_beta[0] == 1);
  REQUIRE(z.char_polys[0].size() == 2);
  CHECK(std::abs(z.char_polys[0][0] - std::complex<double>(1, 0)) < 1e-12);
  CHECK(std::abs(z.char_polys[0][1] - std::complex<double>(1, 0)) < 1e-12);
  CHECK(z.pole_mags_u[0][0] == doctest::Approx(1.0));
}

TEST_CASE("matrix-coefficient growth matches temperedness") {
  HeckeRep st = make_builtin("A1", "steinberg", 2);
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
  GrowthReport ok = tempered_growth_check(st, v, v, 6, 2.0, 0.1);
  CHECK(!ok.any_violation);
  HeckeRep triv = make_builtin("A1", "trivial", 2);
  GrowthReport bad = tempered_growth_check(triv, v, v, 6, 2.0, 0.1);
  CHECK(bad.any_violation);
}

TEST_CASE("evaluate is a homomorphism on length-additive products") {
  HeckeRep rep = load_rep(data_path("rep_a1_sum.json"));
  const WeylGroup& W = *rep.W;
  for (const auto& a : W.enumerate_ball(3)) {
    for (const auto& b : W.enumerate_ball(2)) {
      WeylElement ab = W.multiply(a, b);
      if (W.length(ab) != W.length(a) + W.length(b)) continue;
      CHECK((evaluate(rep, ab) - evaluate(rep, a) * evaluate(rep, b)).norm() < 1e-9);
    }
  }
}
