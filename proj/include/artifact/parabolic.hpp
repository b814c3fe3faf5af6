#pragma once

#include "artifact/rootsys.hpp"

#include <map>
#include <vector>

namespace artifact {

// Simple roots are 0-based indices into pi; s is 1-based as in the Bourbaki labels.
struct ParabolicData {
  const RootSystem* system = nullptr;
  int s = 0;
  std::vector<int> pi_prime;             // 0-based, increasing
  std::vector<int> delta_pi_prime_pos;   // root ids
  std::vector<int> delta_pi_prime_neg;
  std::vector<int> h_lambda_basis;       // 0-based simple indices i != s-1
  std::vector<int> j;                    // j[k] = j(alpha_k)
  std::vector<int> i;                    // extended involution i on pi
  std::vector<std::vector<int>> orbits;  // sorted, ordered by smallest member
  int index = 0;

  int removed() const { return s - 1; }
  bool in_levi(int root) const;     // root in Delta_{pi'}
  bool in_p(int root) const;        // Delta^- or Delta^+_{pi'}
  bool in_p_star(int root) const;   // Delta^+ or Delta^-_{pi'}
  int dim_p() const;
};

ParabolicData build_parabolic(const RootSystem& sys, int s);

// -w0 of the subsystem spanned by the given simple roots, as a map on them.
// Componentwise and tabulated by Dynkin type.
std::map<int, int> longest_element_action(const RootSystem& sys, const std::vector<int>& nodes);

int involution_j(const RootSystem& sys, int k);
int involution_i(const ParabolicData& p, int k);
std::vector<std::vector<int>> ij_orbits(const ParabolicData& p);

// Connected components of the Dynkin subgraph on the given nodes.
std::vector<std::vector<int>> dynkin_components(const RootSystem& sys, const std::vector<int>& nodes);

}  // namespace artifact
