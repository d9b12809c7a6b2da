#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "chambers/errors.hpp"
#include "chambers/hecke.hpp"
#include "doctest.h"

using namespace chambers;

static HeckeElement random_element(const HeckeAlgebra& H, const std::vector<WeylElement>& ball,
                                   std::mt19937_64& rng) {
  HeckeElement out;
  for (int t = 0; t < 3; ++t) {
    const WeylElement& w = ball[rng() % ball.size()];
    std::vector<int> exps(H.nvars(), 0);
    for (int& e : exps) e = (int)(rng() % 5) - 2;
    Rat c = Rat((long long)(rng() % 7) - 3);
    if (c == 0) c = 1;
    HeckeAlgebra::add_into(out, H.scaled(H.basis(w), LaurentCoeff::monomial(H.nvars(), exps, c)));
  }
  return out;
}

TEST_CASE("quadratic relation in the T-basis") {
  for (const char* t : {"A1", "BC1", "A2", "C2", "G2"}) {
    WeylGroup W(t);
    HeckeAlgebra H(W);
    for (int s = 0; s < W.num_gens(); ++s) {
      HeckeElement lhs = H.multiply(H.h_gen(s), H.h_gen(s));
      HeckeElement rhs = H.constant(H.q_s(s));
      HeckeAlgebra::add_into(rhs, H.scaled(H.h_gen(s), H.q_s(s) - H.one_coeff()));
      CHECK(H.equal(lhs, rhs));
    }
  }
}

TEST_CASE("basis multiplication respects lengths") {
  WeylGroup W("A2");
  HeckeAlgebra H(W);
  for (const auto& a : W.enumerate_ball(3)) {
    for (const auto& b : W.enumerate_ball(2)) {
      if (W.length(W.multiply(a, b)) != W.length(a) + W.length(b)) continue;
      CHECK(H.equal(H.multiply(H.basis(a), H.basis(b)), H.basis(W.multiply(a, b))));
    }
  }
}

TEST_CASE("seeded associativity and star anti-involution") {
  WeylGroup W("A2");
  HeckeAlgebra H(W);
  auto ball = W.enumerate_ball(4);
  std::mt19937_64 rng(0xc0ffee);
  for (int it = 0; it < 10; ++it) {
    HeckeElement a = random_element(H, ball, rng);
    HeckeElement b = random_element(H, ball, rng);
    HeckeElement c = random_element(H, ball, rng);
    CHECK(H.equal(H.multiply(H.multiply(a, b), c), H.multiply(a, H.multiply(b, c))));
    CHECK(H.equal(H.star(H.multiply(a, b)), H.multiply(H.star(b), H.star(a))));
    CHECK(H.equal(H.star(H.star(a)), a));
  }
}

TEST_CASE("generator and basis inverses") {
  WeylGroup W("C2");
  HeckeAlgebra H(W);
  for (int s = 0; s < W.num_gens(); ++s)
    CHECK(H.equal(H.multiply(H.h_gen(s), H.generator_inverse(s)), H.one()));
  for (const auto& w : W.enumerate_ball(3)) {
    CHECK(H.equal(H.multiply(H.basis(w), H.basis_inverse(w)), H.one()));
    CHECK(H.equal(H.multiply(H.basis_inverse(w), H.basis(w)), H.one()));
  }
}

TEST_CASE("normalized translation elements multiply additively") {
  WeylGroup W("A2");
  HeckeAlgebra H(W);
  Coweight b1 = {1, 0}, b2 = {0, 1}, sum = {1, 1};
  CHECK(H.equal(H.multiply(H.y_beta(b1), H.y_beta(b2)), H.y_beta(sum)));
  // Y of a dominant coweight is the normalized T-basis translation
  WeylElement t = W.translation(sum);
  CHECK(H.equal(H.y_beta(sum), H.scaled(H.basis(t), W.q_w_halfpow(t, -1))));
  // Y_beta Y_{-beta} = 1
  Coweight neg = {-1, -1};
  CHECK(H.equal(H.multiply(H.y_beta(sum), H.y_beta(neg)), H.one()));
}

TEST_CASE("rank-1 commutation relation") {
  // Y_{b1} h_{s1} = h_{s1} Y_{s1(b1)} + (q-1) Y_{b1}
  WeylGroup W("A1");
  HeckeAlgebra H(W);
  HeckeElement lhs = H.multiply(H.y_beta({1}), H.h_gen(1));
  HeckeElement rhs = H.multiply(H.h_gen(1), H.y_beta({-1}));
  HeckeAlgebra::add_into(rhs, H.scaled(H.y_beta({1}), H.q_s(1) - H.one_coeff()));
  CHECK(H.equal(lhs, rhs));
}

TEST_CASE("commutation tables re-expand exactly in small rank") {
  for (const char* t : {"A1", "A2"}) {
    WeylGroup W(t);
    HeckeAlgebra H(W);
    std::vector<Coweight> betas;
    // dominant coweights with small translation length
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= (W.rank() > 1 ? 2 : 0); ++b) {
        Coweight bb(W.rank(), 0);
        bb[0] = a;
        if (W.rank() > 1) bb[1] = b;
        if (W.translation_length(bb) <= 2) betas.push_back(bb);
      }
    for (const auto& w0 : W.finite_weyl()) {
      for (const auto& beta : betas) {
        BernsteinTable tab = H.bernstein_coeffs(w0, beta, false);
        CHECK(H.equal(H.multiply(H.y_beta(beta), H.basis(w0)), H.from_bernstein(tab, false)));
        BernsteinTable tabp = H.bernstein_coeffs(w0, beta, true);
        CHECK(H.equal(H.multiply(H.y_beta(beta), H.basis_inverse(w0)),
                      H.from_bernstein(tabp, true)));
      }
    }
  }
}

TEST_CASE("T to Y basis round trip") {
  WeylGroup W("A2");
  HeckeAlgebra H(W);
  for (const auto& w : W.enumerate_ball(3)) {
    BernsteinTable t = H.to_bernstein(H.basis(w));
    CHECK(H.equal(H.from_bernstein(t, false), H.basis(w)));
  }
}

TEST_CASE("truncated series identity in low degree") {
  WeylGroup W("A1");
  HeckeAlgebra H(W, W.num_classes());
  CHECK(H.poincare_identity_check(6));
}
