#pragma once

#include "artifact/rootsys.hpp"

#include <map>
#include <string>
#include <vector>

namespace artifact {

struct CascadeItem {
  int root = -1;    // the highest root beta_K of its component
  int depth = 0;    // 0 for components of the starting system
  int parent = -1;  // index of the item whose orthogonal complement produced this one
  std::vector<int> component;   // positive roots of Delta_K
  std::vector<int> heisenberg;  // H_{beta_K}
};

struct Cascade {
  std::vector<CascadeItem> items;

  const CascadeItem* find(int root) const;
  std::map<int, std::vector<int>> heisenberg() const;
};

// positive_roots must be the positive part of a closed subsystem.
Cascade kostant_cascade(const RootSystem& sys, const std::vector<int>& positive_roots);

std::vector<int> heisenberg_max(const RootSystem& sys, const std::vector<int>& component, int beta);

// Irreducible components (as positive root sets) via non-orthogonality.
std::vector<std::vector<int>> irreducible_components(const RootSystem& sys, const std::vector<int>& positive_roots);

// Indecomposable elements of a positive subsystem.
std::vector<int> subsystem_simple_roots(const RootSystem& sys, const std::vector<int>& positive_roots);

// Dynkin type such as "D6" or "A1xA5" (components sorted by name).
std::string dynkin_type(const RootSystem& sys, const std::vector<int>& simple_ids);

}  // namespace artifact
