#pragma once

#include "artifact/parabolic.hpp"
#include "artifact/rootsys.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace artifact {

// Raised for (family, n, s) outside the implemented constructions.
class OutOfScope : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Variant { B, D, DExtremal, E6, E7 };

std::string variant_name(Variant v);

struct GammaSet {
  int centre = -1;
  std::vector<int> roots;  // includes the centre
};

struct Candidate {
  std::shared_ptr<const RootSystem> system;
  ParabolicData parabolic;
  Family family = Family::B;
  int n = 0;
  int s = 0;
  Variant variant = Variant::B;
  bool mirrored = false;  // obtained from the symmetric case by a diagram automorphism
  int model_s = 0;        // s of the unmirrored case, used for closed forms

  std::vector<int> S;  // construction order
  std::vector<int> S_plus, S_minus, S_mixed;
  std::vector<GammaSet> gamma_sets;  // same order as S
  std::vector<int> T;                // derived complement, sorted
  std::vector<int> T_star;           // E6 only
  std::vector<int> T_listed;         // the explicit list, for comparison
  std::vector<int> S_mixed_listed;   // when the explicit construction names S^m

  const GammaSet* gamma_of(int centre) const;
};

// Throws OutOfScope with an explanatory message when no construction applies.
Candidate build_case(Family family, int n, int s);

// Recompute S^+/S^-/S^m from the signs inside each Gamma set and T as the complement.
void finalize_candidate(Candidate& c);

std::vector<int> derive_T(const Candidate& c);
bool check_T_against_paper(const Candidate& c);

// Whether (family, n, s) is handled; the message explains refusals.
bool in_scope(Family family, int n, int s, std::string* why = nullptr);

// Every in-scope case with rank at most max_rank, in sweep order.
struct CaseId {
  Family family;
  int n;
  int s;
};
std::vector<CaseId> enumerate_cases(int max_rank);

// Closed forms from the explicit eigenvalue and bound lemmas.
std::vector<Rational> expected_eigenvalues(Variant v, int n, int s);
std::vector<Rational> expected_lower_bound(Variant v, int n, int s);  // multiples of varpi_s

}  // namespace artifact
