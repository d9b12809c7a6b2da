#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "chambers/bounds.hpp"
#include "chambers/errors.hpp"
#include "doctest.h"

using namespace chambers;

TEST_CASE("D constant closed form") {
  WeylGroup W("A1");
  CHECK(d_constant(W, Rat(2), 3) == Rat(320));
  Rat prev = 0;
  for (long long l = 0; l <= 20; ++l) {
    Rat d = d_constant(W, Rat(2), l);
    CHECK(d > prev);
    prev = d;
  }
  CHECK_THROWS_AS(d_constant(W, Rat(1, 2), 3), usage_error);
  CHECK_THROWS_AS(d_constant(W, Rat(2), -1), usage_error);
}

TEST_CASE("operator norm bound reports") {
  WeylGroup W("A1");
  ParamSystem ps = W.numeric_params({Rat(2)});
  WeylElement w = W.translation({2});
  BoundReport r = norm_bound_hw(W, ps, 2.0, w);
  // D(2, 2) * q_w^{1/2} with q_w = 4
  CHECK(r.bound == doctest::Approx(to_double(d_constant(W, Rat(2), 2)) * 2.0));
  CHECK_THROWS_AS(norm_bound_hw(W, ps, 1.5, w), usage_error);
}

TEST_CASE("translation norm bound formula") {
  WeylGroup W("A1");
  ParamSystem ps = W.numeric_params({Rat(2)});
  for (long long m = 1; m <= 4; ++m) {
    BoundReport r = norm_bound_hbeta(W, ps, 2.0, {m});
    double expect = 2.0 * 4.0 * (double)(m + 1) * std::pow(2.0, (double)m / 2.0);
    CHECK(r.bound == doctest::Approx(expect));
  }
  CHECK_THROWS_AS(norm_bound_hbeta(W, ps, 2.0, {-1}), usage_error);
  CHECK_THROWS_AS(norm_bound_hbeta(W, ps, 1.0, {1}), usage_error);
}

TEST_CASE("biregular norm lemma values") {
  CHECK(bipartite_norm_bound(5, 5, 3.0) == doctest::Approx(5.0));
  CHECK(bipartite_norm_bound(1, 2, 2.0) == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS(bipartite_norm_bound(-1, 2, 2.0), usage_error);
}

TEST_CASE("p0 table values") {
  CHECK(oh_p0("A2") == 4);
  CHECK(oh_p0("A3") == 6);
  CHECK(oh_p0("B3") == 6);
  CHECK(oh_p0("C4") == 8);
  CHECK(oh_p0("D4") == 6);
  CHECK(oh_p0("D5") == 10);
  CHECK(oh_p0("E6") == 16);
  CHECK(oh_p0("E7") == 18);
  CHECK(oh_p0("E8") == 29);
  CHECK(oh_p0("F4") == 11);
  CHECK(oh_p0("G2") == 6);
  CHECK_THROWS_AS(oh_p0("A1"), usage_error);
  CHECK_THROWS_AS(oh_p0("H3"), usage_error);
}

TEST_CASE("diameter bound formulas") {
  WeylGroup W("A1");
  DiameterBounds b = diameter_bounds(2.0, 2.0, 1024.0, W);
  double loglog = std::log2(10.0);
  CHECK(b.avg_upper == doctest::Approx(10.0 + 2.0 * loglog + 1.0));
  CHECK(b.diameter_upper == doctest::Approx(20.0 + 4.0 * loglog + 1.0));
  CHECK(b.avg_lower == doctest::Approx(10.0 - 2.0 * loglog - 1.0));
  for (double N : {16.0, 64.0, 256.0, 4096.0}) {
    DiameterBounds s = diameter_bounds(2.0, 2.0, N, W);
    CHECK(s.avg_lower <= s.avg_upper);
  }
  CHECK_THROWS_AS(diameter_bounds(2.0, 2.0, 3.0, W), config_error);
}
