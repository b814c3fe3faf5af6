#include "artifact/cascade.hpp"

#include <algorithm>
#include <set>

namespace artifact {

const CascadeItem* Cascade::find(int root) const {
  for (const auto& it : items)
    if (it.root == root) return &it;
  return nullptr;
}

std::map<int, std::vector<int>> Cascade::heisenberg() const {
  std::map<int, std::vector<int>> out;
  for (const auto& it : items) out[it.root] = it.heisenberg;
  return out;
}

std::vector<std::vector<int>> irreducible_components(const RootSystem& sys,
                                                     const std::vector<int>& positive_roots) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(positive_roots.size(), false);
  for (std::size_t k = 0; k < positive_roots.size(); ++k) {
    if (seen[k]) continue;
    std::vector<int> comp;
    std::vector<std::size_t> stack{k};
    seen[k] = true;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      comp.push_back(positive_roots[a]);
      for (std::size_t b = 0; b < positive_roots.size(); ++b)
        if (!seen[b] && sys.inner2(positive_roots[a], positive_roots[b]) != 0) {
          seen[b] = true;
          stack.push_back(b);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

std::vector<int> heisenberg_max(const RootSystem& sys, const std::vector<int>& component, int beta) {
  std::vector<int> out;
  for (int a : component)
    if (sys.inner2(a, beta) > 0) out.push_back(a);
  return out;
}

namespace {

int highest(const RootSystem& sys, const std::vector<int>& comp) {
  int best = comp.front();
  for (int a : comp)
    if (rho_height(sys.root(a)) > rho_height(sys.root(best))) best = a;
  return best;
}

void recurse(const RootSystem& sys, const std::vector<int>& roots, int depth, int parent, Cascade& out) {
  auto comps = irreducible_components(sys, roots);
  // Larger components first, then by the height of their highest root.
  std::sort(comps.begin(), comps.end(), [&](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return highest(sys, x) < highest(sys, y);
  });
  for (const auto& comp : comps) {
    CascadeItem it;
    it.root = highest(sys, comp);
    it.depth = depth;
    it.parent = parent;
    it.component = comp;
    it.heisenberg = heisenberg_max(sys, comp, it.root);
    const int me = static_cast<int>(out.items.size());
    out.items.push_back(it);
    std::vector<int> rest;
    for (int a : comp)
      if (sys.inner2(a, it.root) == 0) rest.push_back(a);
    if (!rest.empty()) recurse(sys, rest, depth + 1, me, out);
  }
}

std::string component_type(const RootSystem& sys, const std::vector<int>& nodes) {
  const std::size_t r = nodes.size();
  auto adjacent = [&](int a, int b) { return a != b && sys.inner2(a, b) != 0; };
  auto degree = [&](int a) {
    int d = 0;
    for (int b : nodes) d += adjacent(a, b);
    return d;
  };
  long max_norm = 0;
  int nshort = 0;
  for (int a : nodes) max_norm = std::max(max_norm, sys.norm2_times2(a));
  for (int a : nodes) nshort += sys.norm2_times2(a) < max_norm;
  const std::string rank = std::to_string(r);
  if (nshort > 0) {
    if (r == 2) return nshort == 1 ? "B2" : "G2";
    if (r == 4 && nshort == 2) return "F4";
    return (nshort == 1 ? "B" : "C") + rank;
  }
  int branch = -1;
  for (int a : nodes)
    if (degree(a) == 3) branch = a;
  if (branch < 0) return "A" + rank;
  std::vector<std::size_t> legs;
  for (int b : nodes) {
    if (!adjacent(branch, b)) continue;
    std::size_t len = 1;
    int prev = branch, cur = b;
    while (true) {
      int next = -1;
      for (int c : nodes)
        if (c != prev && adjacent(cur, c)) next = c;
      if (next < 0) break;
      ++len;
      prev = cur;
      cur = next;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs[0] == 1 && legs[1] == 1) return "D" + rank;
  return "E" + rank;
}

}  // namespace

Cascade kostant_cascade(const RootSystem& sys, const std::vector<int>& positive_roots) {
  Cascade out;
  recurse(sys, positive_roots, 0, -1, out);
  return out;
}

std::vector<int> subsystem_simple_roots(const RootSystem& sys, const std::vector<int>& positive_roots) {
  const std::set<int> members(positive_roots.begin(), positive_roots.end());
  std::vector<int> out;
  for (int a : positive_roots) {
    bool decomposable = false;
    for (int b : positive_roots) {
      const int c = sys.diff(a, b);
      if (c >= 0 && members.count(c)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(a);
  }
  return out;
}

std::string dynkin_type(const RootSystem& sys, const std::vector<int>& simple_ids) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(simple_ids.size(), false);
  for (std::size_t k = 0; k < simple_ids.size(); ++k) {
    if (seen[k]) continue;
    std::vector<int> comp;
    std::vector<std::size_t> stack{k};
    seen[k] = true;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      comp.push_back(simple_ids[a]);
      for (std::size_t b = 0; b < simple_ids.size(); ++b)
        if (!seen[b] && sys.inner2(simple_ids[a], simple_ids[b]) != 0) {
          seen[b] = true;
          stack.push_back(b);
        }
    }
    comps.push_back(comp);
  }
  std::vector<std::string> names;
  for (const auto& c : comps) names.push_back(component_type(sys, c));
  std::sort(names.begin(), names.end());
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : "x") + n;
  return out;
}

}  // namespace artifact
