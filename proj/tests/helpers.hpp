#pragma once

#include "artifact/rootsys.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace testing_helpers {

using namespace artifact;

// Root with the given epsilon coordinates (1-based indices), -1 when absent.
inline int eps(const RootSystem& sys, std::vector<std::pair<int, int>> terms) {
  QVec want(sys.dim(), Rational(0));
  for (auto [i, c] : terms) want[i - 1] += c;
  for (int id = 0; id < sys.num_roots(); ++id)
    if (sys.root(id).coeffs.size() && sys.root(id).coords == want) return id;
  return -1;
}

inline int by_coeffs(const RootSystem& sys, const std::vector<int>& c) {
  const int id = sys.find(c);
  if (id < 0) throw std::invalid_argument("not a root");
  return id;
}

inline QVec rats(std::vector<std::pair<long, long>> v) {
  QVec out;
  for (auto [a, b] : v) {
    Rational q(a, b);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

}  // namespace testing_helpers
