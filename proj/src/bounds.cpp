#include "artifact/bounds.hpp"
#include "artifact/linalg.hpp"

#include <algorithm>

namespace artifact {

std::vector<Rational> BoundMultiset::multiples() const {
  std::vector<Rational> out;
  for (const auto& e : entries) out.push_back(e.multiple);
  std::sort(out.begin(), out.end());
  return out;
}

Weight delta_gamma(const ParabolicData& p, const std::vector<int>& orbit) {
  const RootSystem& sys = *p.system;
  const auto w = fundamental_weights(sys);
  const auto wl = fundamental_weights_levi(sys, p.pi_prime);
  QVec acc(sys.rank(), Rational(0));
  auto add = [&](const Weight& x, int sign) {
    for (int k = 0; k < sys.rank(); ++k) acc[k] += sign * x.simple_coeffs[k];
  };
  for (int k : orbit) {
    add(w[k], -1);
    add(w[p.j[k]], -1);
    if (wl.count(k)) {
      add(wl.at(k), 1);
      add(wl.at(p.i[k]), 1);
    }
  }
  return {sys.coords_of(acc), acc};
}

BoundEntry bound_entry(const RootSystem& sys, int s, const QVec& simple_coeffs) {
  BoundEntry e;
  e.simple_coeffs = simple_coeffs;
  e.coords = sys.coords_of(simple_coeffs);
  e.multiple = weight_pairing(sys, simple_coeffs, s - 1);
  e.on_ray = e.multiple > 0;
  for (int j = 0; j < sys.rank(); ++j)
    if (j != s - 1 && weight_pairing(sys, simple_coeffs, j) != 0) e.on_ray = false;
  return e;
}

BoundMultiset lower_bound(const ParabolicData& p) {
  BoundMultiset b;
  for (const auto& orbit : p.orbits) {
    QVec v = delta_gamma(p, orbit).simple_coeffs;
    for (auto& x : v) x = -x;
    b.entries.push_back(bound_entry(*p.system, p.s, v));
  }
  return b;
}

TOfGamma t_of_gamma(const Candidate& c, int gamma) {
  const RootSystem& sys = *c.system;
  const auto& hb = c.parabolic.h_lambda_basis;
  TOfGamma out;
  out.gamma = gamma;
  // sum_k c_k <s_k, alpha_j^vee> = -<gamma, alpha_j^vee> for alpha_j^vee in h_Lambda
  std::vector<QVec> a(hb.size(), QVec(c.S.size()));
  QVec rhs(hb.size());
  for (std::size_t r = 0; r < hb.size(); ++r) {
    for (std::size_t k = 0; k < c.S.size(); ++k) a[r][k] = sys.pairing_simple(c.S[k], hb[r]);
    rhs[r] = -sys.pairing_simple(gamma, hb[r]);
  }
  auto x = solve(a, rhs);
  if (!x) return out;
  out.coefficients = *x;
  QVec w(sys.rank());
  for (int k = 0; k < sys.rank(); ++k) w[k] = sys.root(gamma).coeffs[k];
  for (std::size_t k = 0; k < c.S.size(); ++k)
    for (int m = 0; m < sys.rank(); ++m) w[m] += out.coefficients[k] * sys.root(c.S[k]).coeffs[m];
  out.weight = bound_entry(sys, c.s, w);
  out.ok = out.weight.on_ray;
  return out;
}

BoundMultiset improved_bound(const Candidate& c) {
  BoundMultiset b;
  for (int g : c.T) b.entries.push_back(t_of_gamma(c, g).weight);
  return b;
}

bool certify_coincidence(const BoundMultiset& lower, const BoundMultiset& improved) {
  auto key = [](const BoundMultiset& m) {
    std::vector<QVec> v;
    for (const auto& e : m.entries) v.push_back(e.simple_coeffs);
    std::sort(v.begin(), v.end());
    return v;
  };
  return key(lower) == key(improved);
}

}  // namespace artifact
