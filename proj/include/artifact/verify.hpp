#pragma once

#include "artifact/chevalley.hpp"
#include "artifact/construction.hpp"
#include "artifact/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace artifact {

struct BasisCheck {
  bool ok = false;
  Rational determinant;
};
BasisCheck check_basis_restriction(const Candidate& c);

struct HeisenbergReport {
  bool size_ok = false;       // |S| = n - 1
  bool pairing_ok = false;    // every Gamma is Heisenberg with its centre
  bool contained_ok = false;  // inside Delta^+ u Delta^-_{pi'}
  bool disjoint_ok = false;
  bool partition_ok = false;  // Gamma u T u T* = Delta^+ u Delta^-_{pi'}
  std::vector<std::string> issues;
  bool ok() const { return size_ok && pairing_ok && contained_ok && disjoint_ok && partition_ok; }
};
HeisenbergReport check_heisenberg(const Candidate& c);

enum class RootKind { Plus, Minus, Mixed };

struct OrbitStructure {
  bool ok = false;
  std::vector<int> O;                       // sorted root ids
  std::vector<int> theta;                   // by root id, -1 outside O
  std::vector<std::vector<int>> S_alpha;    // by root id
  std::vector<int> centre;                  // centre of the Gamma containing the root, by id
  std::vector<RootKind> kind;               // by root id (meaningful on O)
  bool in_O(int id) const { return theta[id] >= 0; }
  int stratum(int id) const { return static_cast<int>(S_alpha[id].size()); }
};
OrbitStructure orbit_structure(const Candidate& c);

enum class RootClass { Stationary, ExtendedStationary, Cyclic, ExtendedCyclic, TildeOfCyclic, Unclassified };
std::string root_class_name(RootClass k);

struct SequenceTrace {
  int start = -1;
  std::vector<int> forward;   // alpha^0, alpha^1, ...
  std::vector<int> backward;  // alpha^(0), alpha^(1), ...
  int stationary_rank_forward = -1;
  int stationary_rank_backward = -1;
  bool required = false;  // S_alpha meets O^m
  RootClass classification = RootClass::Unclassified;
};

struct ClassificationReport {
  bool extended = false;  // uses the extended definitions
  std::vector<SequenceTrace> traces;  // one per root of O, by increasing id
  bool plus_ok = false;   // S_alpha n O^+ = {theta(alpha)} on O^+
  bool minus_ok = false;  // same on O^-
  bool mixed_ok = false;  // every required root classified
  std::vector<std::string> issues;
  bool ok() const { return plus_ok && minus_ok && mixed_ok; }
};
ClassificationReport classify_roots(const Candidate& c, const OrbitStructure& o, bool extended);

struct NondegeneracyCheck {
  bool ok = false;
  int size = 0;
  Rational determinant;
  long expected_degree = 0;     // 2 sum over representatives of |rho(alpha + theta(alpha))|
  bool graded_ok = false;       // d(t) = d(1) t^degree at the sampled points
  std::vector<int> sample_points;
  // Full polynomial when computed; coefficient k of t^k.
  std::vector<Integer> polynomial;
  bool polynomial_computed = false;
  bool monomial = false;
};
// Entries of the pairing matrix on O (in O order) with their t-degrees.
struct PairingMatrix {
  std::vector<int> O;
  std::vector<std::vector<std::pair<int, long>>> entries;  // (column, value) per row
  std::vector<std::vector<int>> degree;                    // |rho(alpha + beta)| per entry
};
PairingMatrix pairing_matrix(const Candidate& c, const OrbitStructure& o, const StructureTable& t);
NondegeneracyCheck check_nondegeneracy(const Candidate& c, const OrbitStructure& o, const StructureTable& t,
                                       int full_polynomial_limit = 48);
std::vector<Integer> graded_determinant_polynomial(const PairingMatrix& m);

// p* realized as g_{Delta^+} + h_Lambda + g_{Delta^-_{pi'}}: root coordinates for
// Delta^+ u Delta^-_{pi'}, then one coordinate per coroot of h_Lambda holding the
// value of the Killing pairing on that coroot.
class DualCoordinates {
 public:
  explicit DualCoordinates(const ParabolicData& p);
  int dim() const { return static_cast<int>(roots_.size() + hbasis_.size()); }
  int of_root(int id) const { return slot_[id]; }
  int of_coroot(int k) const;
  const std::vector<int>& roots() const { return roots_; }

 private:
  std::vector<int> roots_;
  std::vector<int> slot_;
  std::vector<int> hbasis_;
};

struct PElement {
  bool coroot = false;
  int id = -1;  // root id, or 0-based simple index for a coroot
};
std::vector<PElement> p_basis(const ParabolicData& p);

using DualVec = std::vector<std::pair<int, Rational>>;  // (root id, coefficient), roots in p*
SparseVec ad_on_dual(const StructureTable& t, const ParabolicData& p, const DualCoordinates& coords,
                     const PElement& x, const DualVec& y);

struct RegularityCheck {
  bool ok = false;
  int dim_p = 0;
  int rank = 0;
  int t_size = 0;
  bool complement_ok = false;  // span + g_T = p*
  bool t_star_ok = true;       // each x_beta, beta in T*, lies in span + g_T
};
RegularityCheck check_regularity(const Candidate& c, const StructureTable& t);

struct AdaptedPair {
  bool ok = false;
  QVec h;  // coefficients on alpha_k^vee, 0-based k over all simple indices (zero at s)
  std::vector<std::pair<int, Rational>> eigenvalues_on_T;  // (root, gamma(h))
  std::vector<Rational> eigenvalues;                       // sorted
  std::vector<Rational> degrees;                           // sorted
};
AdaptedPair solve_h(const Candidate& c);
Rational evaluate_on_h(const RootSystem& sys, int root, const QVec& h);

struct EigenvalueReport {
  bool ok = false;
  std::vector<Rational> computed;
  std::vector<Rational> expected;
};
EigenvalueReport eigenvalue_report(const AdaptedPair& pair, const Candidate& c);

}  // namespace artifact
