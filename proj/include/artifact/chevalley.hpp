#pragma once

#include "artifact/rootsys.hpp"

#include <utility>
#include <vector>

namespace artifact {

// Integer combination of Chevalley basis elements. Index u < num_roots is the
// root vector x_u; index num_roots + i is the simple coroot alpha_i^vee.
using IntVec = std::vector<std::pair<int, long>>;

// Structure constants of a Chevalley basis, signs fixed by declaring
// N = +(p+1) on extraspecial pairs for the lexicographic order on positive
// roots. The system must outlive the table.
class StructureTable {
 public:
  explicit StructureTable(const RootSystem& sys);

  const RootSystem& system() const { return *sys_; }
  int dim() const { return sys_->num_roots() + sys_->rank(); }
  int N(int a, int b) const { return table_[static_cast<std::size_t>(a) * nroots_ + b]; }

  IntVec bracket(int u, int v) const;
  IntVec bracket(const IntVec& x, const IntVec& y) const;

  // Largest p with b - p a in the root system.
  int string_below(int a, int b) const;

 private:
  int compute(int a, int b);

  const RootSystem* sys_;
  int nroots_;
  std::vector<int> table_;
  std::vector<char> done_;
  std::vector<int> extraspecial_;  // per positive root: first member, or -1
};

StructureTable build_structure_table(const RootSystem& sys);

bool jacobi_holds(const StructureTable& t, int u, int v, int w);

}  // namespace artifact
