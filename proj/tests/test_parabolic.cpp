#include "artifact/parabolic.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace artifact;

namespace {

std::vector<int> all_nodes(const RootSystem& sys) {
  std::vector<int> v;
  for (int i = 0; i < sys.rank(); ++i) v.push_back(i);
  return v;
}

}  // namespace

TEST_SUITE("parabolic") {
  TEST_CASE("-w0 matches the Weyl group walk on full systems and Levi subsystems") {
    for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::B, 2}, {Family::B, 5}, {Family::D, 4}, {Family::D, 5},
                                                          {Family::D, 6}, {Family::D, 7}, {Family::E6, 6}, {Family::E7, 7}}) {
      const RootSystem sys(f, n);
      CHECK(longest_element_action(sys, all_nodes(sys)) == oracle::minus_w0(sys, all_nodes(sys)));
      for (int s = 1; s <= n; ++s) {
        auto nodes = all_nodes(sys);
        nodes.erase(nodes.begin() + (s - 1));
        CHECK_MESSAGE(longest_element_action(sys, nodes) == oracle::minus_w0(sys, nodes), sys.name(), " s=", s);
      }
    }
  }

  TEST_CASE("j on simple roots") {
    const RootSystem b(Family::B, 6);
    for (int k = 0; k < 6; ++k) CHECK(involution_j(b, k) == k);
    const RootSystem e6(Family::E6, 6);
    CHECK(involution_j(e6, 0) == 5);
    CHECK(involution_j(e6, 1) == 1);
    const RootSystem e7(Family::E7, 7);
    for (int k = 0; k < 7; ++k) CHECK(involution_j(e7, k) == k);
    const RootSystem d5(Family::D, 5);
    CHECK(involution_j(d5, 3) == 4);
  }

  TEST_CASE("i on a B Levi") {
    const RootSystem sys(Family::B, 8);
    const auto p = build_parabolic(sys, 6);
    for (int t = 1; t <= 5; ++t) CHECK(p.i[t - 1] == 6 - t - 1);
    for (int k = 6; k < 8; ++k) CHECK(p.i[k] == k);
  }

  TEST_CASE("orbits and index") {
    {
      const RootSystem sys(Family::B, 9);
      const auto p = build_parabolic(sys, 6);
      std::vector<std::vector<int>> want{{0, 4}, {1, 3}, {2}, {5}, {6}, {7}, {8}};
      CHECK(p.orbits == want);
      CHECK(p.index == 9 - 3 + 1);
    }
    {
      const RootSystem sys(Family::E6, 6);
      const auto p = build_parabolic(sys, 6);
      std::vector<std::vector<int>> want{{0, 5}, {1, 2, 4}, {3}};
      CHECK(p.orbits == want);
      CHECK(p.index == 3);
    }
    {
      const RootSystem sys(Family::E7, 7);
      const auto p = build_parabolic(sys, 3);
      std::vector<std::vector<int>> want{{0}, {1, 6}, {2}, {3, 5}, {4}};
      CHECK(p.orbits == want);
      CHECK(p.index == 5);
    }
  }

  TEST_CASE("index equals the generic corank of the Kirillov form") {
    struct Case {
      Family f;
      int n, s;
    };
    for (auto c : {Case{Family::B, 2, 2}, Case{Family::B, 4, 2}, Case{Family::B, 5, 4}, Case{Family::D, 5, 2},
                   Case{Family::D, 6, 4}, Case{Family::D, 7, 4}, Case{Family::D, 6, 6}, Case{Family::E6, 6, 6},
                   Case{Family::E7, 7, 3}}) {
      const RootSystem sys(c.f, c.n);
      const StructureTable t(sys);
      const auto p = build_parabolic(sys, c.s);
      CHECK_MESSAGE(oracle::generic_index(sys, t, p, 7) == p.index, sys.name(), " s=", c.s);
    }
  }

  TEST_CASE("dimensions") {
    const RootSystem sys(Family::B, 2);
    const auto p = build_parabolic(sys, 2);
    CHECK(p.dim_p() == 6);
  }
}
