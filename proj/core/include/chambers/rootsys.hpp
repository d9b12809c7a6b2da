#pragma once

#include <string>
#include <vector>

#include "chambers/rational.hpp"

namespace chambers {

// Coweight beta = sum z_i beta_i in the simple-coweight basis,
// <alpha_i, beta_j> = delta_ij.  Exact integer coordinates.
using Coweight = std::vector<long long>;

inline bool is_dominant(const Coweight& b) {
  for (long long z : b)
    if (z < 0) return false;
  return true;
}

// One (positive) root.  coords are in the simple-root basis; coroot is
// alpha^vee written in the simple-coweight basis (coroots lie in Q subset P,
// so the coordinates are integers).
struct Root {
  std::vector<int> coords;
  std::vector<long long> coroot;
  bool divisible = false;     // alpha/2 is also a root (BC types)
  bool multipliable = false;  // 2*alpha is also a root
};

// Length-zero elements of the extended affine Weyl group, discovered at load.
// beta/fin are the same data as WeylElement; perm is the induced permutation
// of S = {s_0,...,s_n} (perm[i] = j means omega s_i omega^{-1} = s_j).
struct OmegaData {
  Coweight beta;
  std::vector<std::vector<long long>> fin;
  std::vector<int> perm;
};

struct RootSystem {
  std::string type_name;  // canonical: "A1", "BC1", "A2", "A3", "C2", "G2"
  int rank = 0;
  std::vector<Root> positive_roots;      // full (non-reduced for BC) set
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i, alpha_j^vee>
  Root highest_root;                     // alpha_0
  std::vector<OmegaData> omega_hat;      // element 0 is the identity
  std::vector<int> good_types;           // images of vertex type 0 under Omega-hat

  bool reduced() const { return type_name.rfind("BC", 0) != 0; }

  // <alpha, beta> for a root in simple-root coordinates and a coweight.
  long long pairing(const std::vector<int>& root, const Coweight& b) const;
  Rat pairing_rat(const std::vector<int>& root, const std::vector<Rat>& x) const;

  // <gamma, alpha^vee> for two roots (gamma in root coords, alpha via its
  // coroot coweight coords).
  long long root_coroot_pairing(const std::vector<int>& gamma,
                                const std::vector<long long>& coroot) const;

  // s_alpha(gamma) on root coordinates.
  std::vector<int> reflect_root(const Root& alpha, const std::vector<int>& gamma) const;

  bool is_root(const std::vector<int>& coords, bool* positive = nullptr) const;

  // Positive roots alpha with 2*alpha not a root; the reflection hyperplane
  // families are indexed by these (each geometric wall counted once).
  std::vector<int> maximal_positive_roots() const;
};

// Accepted (case-insensitively): A1, BC1, A2, A3, C2, G2.
// Populates all fields including omega_hat/good_types and verifies the
// closure, duality and |P/Q| invariants.
RootSystem load_root_system(const std::string& type_name);

}  // namespace chambers
