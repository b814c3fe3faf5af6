#pragma once

#include "artifact/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace artifact {

enum class Family { B, D, E6, E7 };

std::string family_name(Family f);
Family parse_family(const std::string& s);

struct Root {
  QVec coords;              // ambient epsilon-basis
  std::vector<int> coeffs;  // simple-root coefficients
};

struct Weight {
  QVec coords;         // ambient epsilon-basis
  QVec simple_coeffs;  // coefficients on the simple roots
};

Rational inner(const QVec& a, const QVec& b);

// Roots are addressed by id. Ids [0, num_positive) are the positive roots in
// (height, lex) order; id num_positive + k is the negative of root k.
class RootSystem {
 public:
  RootSystem(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }
  std::string name() const;

  const std::vector<Root>& simple_roots() const { return simple_; }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int id) const { return roots_.at(id); }
  int num_positive() const { return npos_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }

  bool is_positive(int id) const { return id < npos_; }
  int neg(int id) const { return id < npos_ ? id + npos_ : id - npos_; }
  int simple_id(int i) const { return simple_ids_.at(i); }

  // -1 when the vector is not a root.
  int find(const std::vector<int>& coeffs) const;
  int sum(int a, int b) const;
  int diff(int a, int b) const { return sum(a, neg(b)); }

  Rational inner(int a, int b) const;
  long inner2(int a, int b) const;  // 2(a,b)
  long norm2_times2(int id) const;  // 2(a,a), integral in all families
  Rational norm2(int id) const { return inner(id, id); }
  // <a, b^vee> = 2(a,b)/(b,b)
  long pairing(int a, int b) const;
  // <root, alpha_j^vee>
  long pairing_simple(int id, int j) const;
  long cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }
  // Coefficients of the coroot of a root on the simple coroots.
  std::vector<long> coroot_coeffs(int id) const;
  // Reflection r_b(a) = a - <a, b^vee> b.
  int reflect(int a, int b) const;

  QVec coords_of(const QVec& simple_coeffs) const;

 private:
  Family family_;
  int rank_;
  int dim_;
  int npos_ = 0;
  std::vector<Root> simple_;
  std::vector<Root> roots_;
  std::vector<int> simple_ids_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<std::vector<long>> cartan_;
  std::vector<std::vector<long>> gram2_;
};

RootSystem build_root_system(Family family, int rank);

int rho_height(const Root& r);

std::vector<Weight> fundamental_weights(const RootSystem& sys);

// Levi weights inside span(pi'), keyed by 0-based simple index.
std::map<int, Weight> fundamental_weights_levi(const RootSystem& sys, const std::vector<int>& pi_prime);

// <w, alpha_j^vee>
Rational weight_pairing(const RootSystem& sys, const QVec& simple_coeffs, int j);

}  // namespace artifact
