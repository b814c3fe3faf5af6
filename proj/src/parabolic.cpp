#include "artifact/parabolic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace artifact {

bool ParabolicData::in_levi(int root) const { return system->root(root).coeffs[removed()] == 0; }

bool ParabolicData::in_p(int root) const { return !system->is_positive(root) || in_levi(root); }

bool ParabolicData::in_p_star(int root) const { return system->is_positive(root) || in_levi(root); }

int ParabolicData::dim_p() const {
  return system->num_positive() + static_cast<int>(delta_pi_prime_pos.size()) +
         static_cast<int>(h_lambda_basis.size());
}

std::vector<std::vector<int>> dynkin_components(const RootSystem& sys, const std::vector<int>& nodes) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(sys.rank(), false);
  std::vector<bool> member(sys.rank(), false);
  for (int k : nodes) member[k] = true;
  for (int k : nodes) {
    if (seen[k]) continue;
    std::vector<int> comp, stack{k};
    seen[k] = true;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      comp.push_back(a);
      for (int b = 0; b < sys.rank(); ++b)
        if (member[b] && !seen[b] && sys.cartan(a, b) != 0) {
          seen[b] = true;
          stack.push_back(b);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

namespace {

std::vector<int> neighbours(const RootSystem& sys, const std::vector<int>& comp, int a) {
  std::vector<int> out;
  for (int b : comp)
    if (b != a && sys.cartan(a, b) != 0) out.push_back(b);
  return out;
}

// Walk from start away from prev along a chain; returns the visited nodes.
std::vector<int> leg(const RootSystem& sys, const std::vector<int>& comp, int branch, int start) {
  std::vector<int> out{start};
  int prev = branch, cur = start;
  while (true) {
    int next = -1;
    for (int b : neighbours(sys, comp, cur))
      if (b != prev) next = b;
    if (next < 0) return out;
    out.push_back(next);
    prev = cur;
    cur = next;
  }
}

void component_action(const RootSystem& sys, const std::vector<int>& comp, std::map<int, int>& out) {
  for (int a : comp) out[a] = a;
  if (comp.size() == 1) return;
  int branch = -1;
  bool multiple_bond = false;
  for (int a : comp) {
    if (neighbours(sys, comp, a).size() == 3) branch = a;
    for (int b : comp)
      if (a != b && sys.cartan(a, b) * sys.cartan(b, a) > 1) multiple_bond = true;
  }
  if (multiple_bond) return;  // B, C, F4, G2: w0 = -1
  if (branch < 0) {
    // A_k: reverse the chain.
    int end = -1;
    for (int a : comp)
      if (neighbours(sys, comp, a).size() == 1) {
        end = a;
        break;
      }
    const auto chain = leg(sys, comp, -1, end);
    for (std::size_t t = 0; t < chain.size(); ++t) out[chain[t]] = chain[chain.size() - 1 - t];
    return;
  }
  std::vector<std::vector<int>> legs;
  for (int b : neighbours(sys, comp, branch)) legs.push_back(leg(sys, comp, branch, b));
  std::sort(legs.begin(), legs.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  const std::size_t a = legs[0].size(), b = legs[1].size(), c = legs[2].size();
  if (a == 1 && b == 1) {
    // D_{c+3}: the two short tips swap when the rank is odd.
    if ((c + 3) % 2 == 1) {
      out[legs[0][0]] = legs[1][0];
      out[legs[1][0]] = legs[0][0];
    }
    return;
  }
  if (a == 1 && b == 2 && c == 2) {
    for (int t = 0; t < 2; ++t) {
      out[legs[1][t]] = legs[2][t];
      out[legs[2][t]] = legs[1][t];
    }
    return;
  }
  // E7, E8: w0 = -1.
}

}  // namespace

std::map<int, int> longest_element_action(const RootSystem& sys, const std::vector<int>& nodes) {
  std::map<int, int> out;
  for (const auto& comp : dynkin_components(sys, nodes)) component_action(sys, comp, out);
  return out;
}

int involution_j(const RootSystem& sys, int k) {
  if (k < 0 || k >= sys.rank()) throw std::invalid_argument("involution_j: not a simple root");
  const int n = sys.rank();
  if (sys.family() == Family::D && n % 2 == 1) {
    if (k == n - 2) return n - 1;
    if (k == n - 1) return n - 2;
  }
  if (sys.family() == Family::E6) {
    static const int flip[6] = {5, 1, 4, 3, 2, 0};
    return flip[k];
  }
  return k;
}

int involution_i(const ParabolicData& p, int k) { return p.i.at(k); }

std::vector<std::vector<int>> ij_orbits(const ParabolicData& p) {
  const int n = p.system->rank();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  // Orbits of the cyclic group generated by the composite ij, not of <i, j>.
  for (int k = 0; k < n; ++k) parent[root(k)] = root(p.i[p.j[k]]);
  std::map<int, std::vector<int>> groups;
  for (int k = 0; k < n; ++k) groups[root(k)].push_back(k);
  std::vector<std::vector<int>> out;
  for (auto& [r, g] : groups) out.push_back(g);
  std::sort(out.begin(), out.end());
  return out;
}

ParabolicData build_parabolic(const RootSystem& sys, int s) {
  const int n = sys.rank();
  if (s < 1 || s > n) throw std::invalid_argument("build_parabolic: s out of range");
  ParabolicData p;
  p.system = &sys;
  p.s = s;
  for (int k = 0; k < n; ++k)
    if (k != s - 1) {
      p.pi_prime.push_back(k);
      p.h_lambda_basis.push_back(k);
    }
  for (int id = 0; id < sys.num_roots(); ++id) {
    if (!p.in_levi(id)) continue;
    (sys.is_positive(id) ? p.delta_pi_prime_pos : p.delta_pi_prime_neg).push_back(id);
  }
  p.j.resize(n);
  for (int k = 0; k < n; ++k) p.j[k] = involution_j(sys, k);
  const auto w = longest_element_action(sys, p.pi_prime);
  p.i.assign(n, -1);
  for (const auto& [a, b] : w) p.i[a] = b;
  // i on the removed root: j(ij)^r(alpha_s) for the least r leaving pi'.
  int y = s - 1;
  for (int r = 0; r <= n; ++r) {
    const int x = p.j[y];
    if (x == s - 1 || !w.count(x)) {
      p.i[s - 1] = x;
      break;
    }
    y = w.at(x);
  }
  if (p.i[s - 1] < 0) throw std::logic_error("involution i did not leave pi'");
  p.orbits = ij_orbits(p);
  p.index = static_cast<int>(p.orbits.size());
  return p;
}

}  // namespace artifact
