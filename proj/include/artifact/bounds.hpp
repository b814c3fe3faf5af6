#pragma once

#include "artifact/construction.hpp"

#include <vector>

namespace artifact {

struct BoundEntry {
  QVec simple_coeffs;  // weight on the simple roots
  QVec coords;         // epsilon-basis
  Rational multiple;   // coefficient on varpi_s
  bool on_ray = false; // vanishes on every alpha_j^vee, j != s, and multiple > 0
};

struct BoundMultiset {
  std::vector<BoundEntry> entries;
  std::vector<Rational> multiples() const;  // sorted
};

// delta_Gamma for an orbit of simple indices (0-based), via the four-term formula.
Weight delta_gamma(const ParabolicData& p, const std::vector<int>& orbit);

BoundEntry bound_entry(const RootSystem& sys, int s, const QVec& simple_coeffs);

// {-delta_Gamma}, one entry per orbit.
BoundMultiset lower_bound(const ParabolicData& p);

struct TOfGamma {
  bool ok = false;
  int gamma = -1;
  QVec coefficients;  // on S, in construction order
  BoundEntry weight;  // gamma + t(gamma)
};
TOfGamma t_of_gamma(const Candidate& c, int gamma);

// {gamma + t(gamma) : gamma in T}
BoundMultiset improved_bound(const Candidate& c);

bool certify_coincidence(const BoundMultiset& lower, const BoundMultiset& improved);

}  // namespace artifact
