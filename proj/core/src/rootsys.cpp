#include "chambers/rootsys.hpp"

#include <algorithm>
#include <cctype>

#include "chambers/errors.hpp"

namespace chambers {

long long RootSystem::pairing(const std::vector<int>& root, const Coweight& b) const {
  if (root.size() != b.size()) throw usage_error("pairing: dimension mismatch");
  long long s = 0;
  for (size_t i = 0; i < root.size(); ++i) s += (long long)root[i] * b[i];
  return s;
}

Rat RootSystem::pairing_rat(const std::vector<int>& root, const std::vector<Rat>& x) const {
  if (root.size() != x.size()) throw usage_error("pairing: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < root.size(); ++i) s += Rat(root[i]) * x[i];
  return s;
}

long long RootSystem::root_coroot_pairing(const std::vector<int>& gamma,
                                          const std::vector<long long>& coroot) const {
  long long s = 0;
  for (size_t i = 0; i < gamma.size(); ++i) s += (long long)gamma[i] * coroot[i];
  return s;
}

std::vector<int> RootSystem::reflect_root(const Root& alpha, const std::vector<int>& gamma) const {
  long long k = root_coroot_pairing(gamma, alpha.coroot);
  std::vector<int> out = gamma;
  for (size_t i = 0; i < out.size(); ++i) out[i] -= (int)(k * alpha.coords[i]);
  return out;
}

bool RootSystem::is_root(const std::vector<int>& coords, bool* positive) const {
  for (const auto& r : positive_roots) {
    if (r.coords == coords) {
      if (positive) *positive = true;
      return true;
    }
    bool neg = true;
    for (size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != -r.coords[i]) { neg = false; break; }
    if (neg) {
      if (positive) *positive = false;
      return true;
    }
  }
  return false;
}

std::vector<int> RootSystem::maximal_positive_roots() const {
  std::vector<int> out;
  for (size_t i = 0; i < positive_roots.size(); ++i)
    if (!positive_roots[i].multipliable) out.push_back((int)i);
  return out;
}

namespace detail {

static Root mk(std::vector<int> coords, std::vector<long long> coroot) {
  Root r;
  r.coords = std::move(coords);
  r.coroot = std::move(coroot);
  return r;
}

// Hard-coded tables.  Coordinates: roots in the simple-root basis, coroots in
// the simple-coweight basis ((alpha_i^vee)_j = cartan[j][i]).
RootSystem root_system_tables(const std::string& raw_name) {
  std::string name;
  for (char c : raw_name)
    if (!std::isspace((unsigned char)c)) name += (char)std::toupper((unsigned char)c);
  if (name.find('_') != std::string::npos) name.erase(name.find('_'), 1);

  RootSystem rs;
  rs.type_name = name;
  if (name == "A1") {
    rs.rank = 1;
    rs.cartan = {{2}};
    rs.positive_roots = {mk({1}, {2})};
    rs.highest_root = mk({1}, {2});
  } else if (name == "BC1") {
    rs.rank = 1;
    rs.cartan = {{2}};
    rs.positive_roots = {mk({1}, {2}), mk({2}, {1})};
    rs.positive_roots[0].multipliable = true;
    rs.positive_roots[1].divisible = true;
    rs.highest_root = mk({2}, {1});
    rs.highest_root.divisible = true;
  } else if (name == "A2") {
    rs.rank = 2;
    rs.cartan = {{2, -1}, {-1, 2}};
    rs.positive_roots = {mk({1, 0}, {2, -1}), mk({0, 1}, {-1, 2}), mk({1, 1}, {1, 1})};
    rs.highest_root = mk({1, 1}, {1, 1});
  } else if (name == "A3") {
    rs.rank = 3;
    rs.cartan = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    rs.positive_roots = {mk({1, 0, 0}, {2, -1, 0}),  mk({0, 1, 0}, {-1, 2, -1}),
                         mk({0, 0, 1}, {0, -1, 2}),  mk({1, 1, 0}, {1, 1, -1}),
                         mk({0, 1, 1}, {-1, 1, 1}),  mk({1, 1, 1}, {1, 0, 1})};
    rs.highest_root = mk({1, 1, 1}, {1, 0, 1});
  } else if (name == "C2") {
    // alpha_1 short, alpha_2 long; highest root 2*alpha_1 + alpha_2.
    rs.rank = 2;
    rs.cartan = {{2, -1}, {-2, 2}};
    rs.positive_roots = {mk({1, 0}, {2, -2}), mk({0, 1}, {-1, 2}), mk({1, 1}, {0, 2}),
                         mk({2, 1}, {1, 0})};
    rs.highest_root = mk({2, 1}, {1, 0});
  } else if (name == "G2") {
    // alpha_1 short, alpha_2 long; highest root 3*alpha_1 + 2*alpha_2.
    rs.rank = 2;
    rs.cartan = {{2, -1}, {-3, 2}};
    rs.positive_roots = {mk({1, 0}, {2, -3}), mk({0, 1}, {-1, 2}),  mk({1, 1}, {-1, 3}),
                         mk({2, 1}, {1, 0}),  mk({3, 1}, {1, -1}), mk({3, 2}, {0, 1})};
    rs.highest_root = mk({3, 2}, {0, 1});
  } else {
    throw usage_error("unknown root system type: " + raw_name);
  }

  // Closure and duality checks (exhaustive; the tables are data, the checks
  // are the authority).
  for (const auto& a : rs.positive_roots) {
    if (rs.root_coroot_pairing(a.coords, a.coroot) != 2)
      throw internal_error("root table: <alpha, alpha^vee> != 2");
    for (const auto& g : rs.positive_roots) {
      if (!rs.is_root(rs.reflect_root(a, g.coords)))
        throw internal_error("root table: reflection closure fails for " + rs.type_name);
    }
  }
  for (int i = 0; i < rs.rank; ++i) {
    if (rs.cartan[i][i] != 2) throw internal_error("cartan diagonal");
    for (int j = 0; j < rs.rank; ++j) {
      if (i != j && rs.cartan[i][j] > 0) throw internal_error("cartan off-diagonal sign");
      // cartan[i][j] must equal <alpha_i, alpha_j^vee>.
      std::vector<int> ei(rs.rank, 0);
      ei[i] = 1;
      if (rs.root_coroot_pairing(ei, rs.positive_roots[j].coroot) != rs.cartan[i][j])
        throw internal_error("cartan/coroot table mismatch");
    }
  }
  // Divisibility flags.
  for (auto& r : rs.positive_roots) {
    std::vector<int> twice = r.coords, half = r.coords;
    bool half_ok = true;
    for (auto& c : twice) c *= 2;
    for (auto& c : half) {
      if (c % 2 != 0) half_ok = false;
      c /= 2;
    }
    if (r.multipliable != rs.is_root(twice)) throw internal_error("multipliable flag wrong");
    if (r.divisible != (half_ok && rs.is_root(half))) throw internal_error("divisible flag wrong");
  }
  return rs;
}

}  // namespace detail

}  // namespace chambers
