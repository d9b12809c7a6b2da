#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>

#include "chambers/errors.hpp"
#include "chambers/weyl.hpp"
#include "doctest.h"

using namespace chambers;

static const char* kTypes[] = {"A1", "BC1", "A2", "A3", "C2", "G2"};

// BFS word lengths over S, seeded with the length-zero elements.
static std::map<WeylElement, long long> bfs_lengths(const WeylGroup& W, long long L) {
  std::map<WeylElement, long long> dist;
  std::vector<WeylElement> frontier;
  for (const auto& om : W.omega_hat()) {
    dist[om] = 0;
    frontier.push_back(om);
  }
  for (long long l = 1; l <= L; ++l) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier) {
      for (int s = 0; s < W.num_gens(); ++s) {
        WeylElement ws = W.multiply(w, W.gen(s));
        if (dist.emplace(ws, l).second) next.push_back(ws);
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

TEST_CASE("root system tables load and verify") {
  for (const char* t : kTypes) {
    RootSystem rs = load_root_system(t);
    CHECK(rs.type_name == t);
    CHECK(rs.rank >= 1);
    // highest root is a positive root with the right coroot
    bool pos = false;
    CHECK(rs.is_root(rs.highest_root.coords, &pos));
    CHECK(pos);
  }
  CHECK_THROWS_AS(load_root_system("H3"), usage_error);
}

TEST_CASE("omega hat sizes match the coweight/coroot index") {
  std::map<std::string, size_t> expect = {{"A1", 2}, {"BC1", 1}, {"A2", 3},
                                          {"A3", 4}, {"C2", 2},  {"G2", 1}};
  for (const char* t : kTypes) {
    WeylGroup W(t);
    CHECK(W.omega_hat().size() == expect[t]);
  }
}

TEST_CASE("closed-form length equals BFS word length up to l = 8") {
  for (const char* t : kTypes) {
    WeylGroup W(t);
    auto dist = bfs_lengths(W, 8);
    for (const auto& [w, l] : dist) CHECK(W.length(w) == l);
    // and the ball enumeration matches the BFS ball exactly
    auto ball = W.enumerate_ball(8);
    CHECK(ball.size() == dist.size());
    for (const auto& w : ball) CHECK(dist.count(w) == 1);
  }
}

TEST_CASE("generators are involutions and obey the Coxeter matrix") {
  for (const char* t : kTypes) {
    WeylGroup W(t);
    for (int s = 0; s < W.num_gens(); ++s)
      CHECK(W.multiply(W.gen(s), W.gen(s)) == W.identity());
    for (int s = 0; s < W.num_gens(); ++s) {
      for (int u = s + 1; u < W.num_gens(); ++u) {
        int m = W.coxeter_m(s, u);
        CHECK(m == W.coxeter_m(u, s));
        if (m == 0) continue;
        WeylElement p = W.identity();
        for (int k = 0; k < m; ++k) p = W.multiply(p, W.gen(k % 2 == 0 ? s : u));
        WeylElement q = W.identity();
        for (int k = 0; k < m; ++k) q = W.multiply(q, W.gen(k % 2 == 0 ? u : s));
        CHECK(p == q);
      }
    }
  }
}

TEST_CASE("reduced words reproduce the element and its length") {
  WeylGroup W("C2");
  for (const auto& w : W.enumerate_ball(5)) {
    auto [word, om] = W.reduced_word(w);
    CHECK((long long)word.size() == W.length(w));
    WeylElement p = W.identity();
    for (int s : word) p = W.multiply(p, W.gen(s));
    p = W.multiply(p, om);
    CHECK(p == w);
    CHECK(W.omega_index(om) >= 0);
  }
}

TEST_CASE("inverse and length symmetry") {
  WeylGroup W("A2");
  for (const auto& w : W.enumerate_ball(5)) {
    CHECK(W.multiply(w, W.inverse(w)) == W.identity());
    CHECK(W.length(W.inverse(w)) == W.length(w));
  }
}

TEST_CASE("structure decomposition is exact and length-additive") {
  for (const char* t : {"A2", "C2"}) {
    WeylGroup W(t);
    std::set<std::tuple<WeylElement, Coweight, WeylElement>> seen;
    for (const auto& w : W.enumerate_ball(6)) {
      auto st = W.structure_decompose(w);
      CHECK(is_dominant(st.beta));
      WeylElement back = W.multiply(W.multiply(st.w0, W.translation(st.beta)), st.a);
      CHECK(back == w);
      CHECK(W.length(st.w0) + W.translation_length(st.beta) + W.length(st.a) == W.length(w));
      CHECK(seen.insert({st.w0, st.beta, st.a}).second);
    }
  }
}

TEST_CASE("translation lengths in rank 1") {
  WeylGroup A1("A1");
  CHECK(A1.length(A1.translation({1})) == 1);
  CHECK(A1.length(A1.translation({-1})) == 1);
  CHECK(A1.length(A1.translation({3})) == 3);
  WeylGroup BC1("BC1");
  CHECK(BC1.length(BC1.translation({1})) == 2);
  CHECK(BC1.length(BC1.translation({2})) == 4);
}

TEST_CASE("word parsing round-trips") {
  WeylGroup W("A1");
  CHECK(W.from_word("id") == W.identity());
  CHECK(W.from_word("s0 s1") == W.multiply(W.gen(0), W.gen(1)));
  CHECK(W.from_word("w1") == W.omega_hat()[1]);
  CHECK(W.from_word("s0 w1") == W.translation({1}));
  CHECK_THROWS_AS(W.from_word("s7"), usage_error);
}

TEST_CASE("dominant representative and coweight order") {
  WeylGroup W("A2");
  Coweight b = {-1, 2};
  auto [dom, w0] = W.dominant_rep(b);
  CHECK(is_dominant(dom));
  CHECK(W.act(w0, b) == dom);
  CHECK(W.dominant_leq(dom, dom));
  CHECK(W.translation_length(b) == W.translation_length(dom));
}

TEST_CASE("parabolic subgroups") {
  WeylGroup W("A2");
  CHECK(W.parabolic({1, 2}).size() == 6);
  CHECK(W.is_spherical({1, 2}));
  CHECK(!W.is_spherical({0, 1, 2}));
  CHECK(W.finite_weyl().size() == 6);
  CHECK(W.longest_finite_length() == 3);
}

TEST_CASE("ball growth at maxlen 0 counts the length-zero elements") {
  WeylGroup W("A1");
  CHECK(W.enumerate_ball(0).size() == 2);
}
