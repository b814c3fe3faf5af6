#pragma once

#include "artifact/bounds.hpp"
#include "artifact/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace artifact {

struct CheckResult {
  std::string name;
  bool ok = false;
  nlohmann::ordered_json detail;
};

struct CaseReport {
  Candidate candidate;
  bool extended = false;
  BasisCheck basis;
  HeisenbergReport heisenberg;
  bool t_matches_list = false;
  OrbitStructure orbits;
  ClassificationReport classification;
  NondegeneracyCheck nondegeneracy;
  RegularityCheck regularity;
  AdaptedPair pair;
  EigenvalueReport eigenvalues;
  BoundMultiset lower, improved;
  std::vector<TOfGamma> t_values;
  std::vector<CheckResult> checks;  // fixed order

  bool passed() const;
  const CheckResult* first_failure() const;
};

struct RunOptions {
  int full_polynomial_limit = 80;
};

// Runs every check on a candidate. Never throws on a malformed candidate; the
// affected checks fail instead.
CaseReport run_candidate(Candidate c, const RunOptions& opt = {});

// Builds and runs; throws OutOfScope.
CaseReport run_case(Family family, int n, int s, const RunOptions& opt = {});

nlohmann::ordered_json rational_json(const Rational& q);
Rational rational_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json certificate_json(const CaseReport& r);

// Root rendering: epsilon notation for B and D, simple-root coefficients for E.
std::string root_label(const RootSystem& sys, const std::vector<int>& coeffs);
std::string coroot_combination(const std::vector<Rational>& h);

// Markdown or plain text rendering of a certificate.
std::string render_report(const nlohmann::ordered_json& cert, bool markdown);

}  // namespace artifact
