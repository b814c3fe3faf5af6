#include "artifact/bounds.hpp"
#include "artifact/verify.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace artifact;
using testing_helpers::by_coeffs;
using testing_helpers::eps;

namespace {

const SequenceTrace& trace_of(const ClassificationReport& r, int root) {
  for (const auto& t : r.traces)
    if (t.start == root) return t;
  throw std::out_of_range("root not in O");
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("basis restriction") {
    CHECK(check_basis_restriction(build_case(Family::B, 2, 2)).determinant == -1);
    for (int n : {6, 8, 10, 12}) {
      const auto b = check_basis_restriction(build_case(Family::D, n, n));
      CHECK(b.ok);
      CHECK(abs(b.determinant) == 2);
    }
    auto c = build_case(Family::B, 6, 4);
    c.S[1] = c.S[0];
    CHECK_FALSE(check_basis_restriction(c).ok);
  }

  TEST_CASE("Heisenberg checks and injected overlap") {
    auto c = build_case(Family::D, 7, 4);
    CHECK(check_heisenberg(c).ok());
    auto& g0 = c.gamma_sets[0];
    auto& g1 = c.gamma_sets[1];
    g1.roots.push_back(g0.roots.front() == g0.centre ? g0.roots.back() : g0.roots.front());
    const auto h = check_heisenberg(c);
    CHECK_FALSE(h.disjoint_ok);
    CHECK_FALSE(h.ok());
  }

  TEST_CASE("theta is an involution on O") {
    for (const auto& id : enumerate_cases(8)) {
      const auto c = build_case(id.family, id.n, id.s);
      const auto o = orbit_structure(c);
      CHECK(o.ok);
      for (int a : o.O) {
        CHECK(o.theta[o.theta[a]] == a);
        CHECK(o.theta[a] != a);
      }
    }
  }

  TEST_CASE("type B strata") {
    const int n = 9, s = 6;
    const auto c = build_case(Family::B, n, s);
    const RootSystem& sys = *c.system;
    const auto o = orbit_structure(c);
    const auto cls = classify_roots(c, o, false);
    CHECK(o.stratum(eps(sys, {{s, 1}, {s + 1, 1}})) == 1);
    for (int j = s + 1; j <= n; ++j) {
      const int a = eps(sys, {{j, -1}});
      REQUIRE(o.in_O(a));
      CHECK(o.stratum(o.theta[a]) == 1);
      CHECK(trace_of(cls, a).stationary_rank_forward == 0);
    }
    // |S_alpha| counted directly from its definition
    const std::set<int> S(c.S.begin(), c.S.end());
    for (int a : o.O) {
      int count = 0;
      for (int b : o.O) count += S.count(sys.sum(a, b)) > 0;
      CHECK(o.stratum(a) == count);
    }
    CHECK(o.stratum(eps(sys, {{5, 1}, {2, -1}})) == 3);
  }

  TEST_CASE("type D cyclic family") {
    const int n = 9, s = 4;
    const auto c = build_case(Family::D, n, s);
    const RootSystem& sys = *c.system;
    const auto o = orbit_structure(c);
    const auto cls = classify_roots(c, o, false);
    const int a = eps(sys, {{s - 1, 1}, {n, 1}});
    const int b = eps(sys, {{s, 1}, {s - 1, -1}});
    const int g = eps(sys, {{s, 1}, {s + 1, -1}});
    CHECK(sys.sum(o.theta[a], g) == eps(sys, {{s, 1}, {n, -1}}));
    CHECK(trace_of(cls, a).classification == RootClass::Cyclic);
    CHECK(trace_of(cls, b).classification == RootClass::Cyclic);
    CHECK(cls.ok());
  }

  TEST_CASE("D extremal: roots of the chain sets are extended stationary") {
    for (int n : {10, 12}) {
      const auto c = build_case(Family::D, n, n);
      const RootSystem& sys = *c.system;
      const auto o = orbit_structure(c);
      const auto cls = classify_roots(c, o, true);
      int seen = 0;
      for (int k = 2; 2 * k <= n - 4; ++k) {
        const int centre = eps(sys, {{2 * k, 1}, {2 * k - 2, -1}});
        const auto* g = c.gamma_of(centre);
        if (!g) continue;
        for (int a : g->roots) {
          if (a == centre) continue;
          ++seen;
          const auto k2 = trace_of(cls, a).classification;
          CHECK((k2 == RootClass::Stationary || k2 == RootClass::ExtendedStationary));
        }
      }
      CHECK(seen > 0);
    }
  }

  TEST_CASE("non-degeneracy") {
    const auto c = build_case(Family::B, 2, 2);
    const StructureTable t(*c.system);
    const auto o = orbit_structure(c);
    REQUIRE(o.O.size() == 2);
    const auto m = pairing_matrix(c, o, t);
    CHECK(m.entries[0].size() == 1);
    CHECK(m.entries[0][0].first == 1);
    CHECK(m.entries[0][0].second != 0);
    CHECK(m.entries[1][0].second == -m.entries[0][0].second);
    const auto nd = check_nondegeneracy(c, o, t);
    CHECK(nd.ok);
    CHECK(nd.monomial);
  }

  TEST_CASE("graded determinant is a single monomial") {
    for (auto [f, n, s] : std::vector<std::tuple<Family, int, int>>{
             {Family::B, 5, 4}, {Family::D, 6, 2}, {Family::D, 6, 6}, {Family::E6, 6, 6}}) {
      const auto c = build_case(f, n, s);
      const StructureTable t(*c.system);
      const auto o = orbit_structure(c);
      const auto nd = check_nondegeneracy(c, o, t, 1000);
      REQUIRE(nd.polynomial_computed);
      CHECK(nd.monomial);
      CHECK(nd.size % 2 == 0);
      CHECK(nd.polynomial.back() == nd.determinant.get_num());
    }
  }

  TEST_CASE("regularity in B2") {
    const auto c = build_case(Family::B, 2, 2);
    const StructureTable t(*c.system);
    const auto r = check_regularity(c, t);
    CHECK(r.dim_p == 6);
    CHECK(r.t_size == 2);
    CHECK(r.rank == 4);
    CHECK(r.ok);
  }

  TEST_CASE("E6 coadjoint action examples") {
    const auto c = build_case(Family::E6, 6, 6);
    const RootSystem& sys = *c.system;
    const StructureTable t(sys);
    const DualCoordinates coords(c.parabolic);
    DualVec y;
    for (int g : c.S) y.emplace_back(g, Rational(1));
    // (ad x_{alpha_1}) y is a multiple of x_{(1,0,1,1,1,0)}
    const auto v = ad_on_dual(t, c.parabolic, coords, {false, sys.simple_id(0)}, y);
    REQUIRE(v.size() == 1);
    CHECK(v[0].first == coords.of_root(by_coeffs(sys, {1, 0, 1, 1, 1, 0})));
    // x_{-alpha_1} lies in the image of a single p element plus x_{alpha_6}
    const auto w = ad_on_dual(t, c.parabolic, coords, {false, by_coeffs(sys, {-1, 0, -1, -1, -1, 0})}, y);
    RowBasis rb(coords.dim());
    rb.add(w);
    rb.add({{coords.of_root(by_coeffs(sys, {0, 0, 0, 0, 0, 1})), Rational(1)}});
    CHECK(rb.contains({{coords.of_root(sys.neg(sys.simple_id(0))), Rational(1)}}));
  }

  TEST_CASE("Cartan elements act by weights") {
    const auto c = build_case(Family::D, 6, 4);
    const RootSystem& sys = *c.system;
    const StructureTable t(sys);
    const DualCoordinates coords(c.parabolic);
    for (int g : c.S)
      for (int k : c.parabolic.h_lambda_basis) {
        const auto v = ad_on_dual(t, c.parabolic, coords, {true, k}, {{g, Rational(3)}});
        const long e = sys.pairing_simple(g, k);
        if (e == 0) CHECK(v.empty());
        else CHECK(v == SparseVec{{coords.of_root(g), Rational(3 * e)}});
      }
  }

  TEST_CASE("h for E6 and E7") {
    const auto e6 = solve_h(build_case(Family::E6, 6, 6));
    CHECK(e6.h == testing_helpers::rats({{-2, 1}, {-1, 1}, {1, 1}, {6, 1}, {-5, 1}, {0, 1}}));
    CHECK(e6.degrees == testing_helpers::rats({{6, 1}, {8, 1}, {18, 1}}));
    const auto e7 = solve_h(build_case(Family::E7, 7, 3));
    CHECK(e7.h == testing_helpers::rats({{-1, 1}, {-13, 2}, {0, 1}, {3, 1}, {11, 2}, {-2, 1}, {-1, 2}}));
    CHECK(e7.eigenvalues == testing_helpers::rats({{2, 1}, {5, 1}, {7, 1}, {9, 1}, {17, 1}}));
  }

  TEST_CASE("type B eigenvalue on e_{s-1} + e_s") {
    for (auto [n, s] : std::vector<std::pair<int, int>>{{6, 4}, {8, 8}, {9, 6}}) {
      const auto c = build_case(Family::B, n, s);
      const auto p = solve_h(c);
      CHECK(evaluate_on_h(*c.system, eps(*c.system, {{s - 1, 1}, {s, 1}}), p.h) == s / 2 - 1);
      for (int g : c.S) CHECK(evaluate_on_h(*c.system, g, p.h) == -1);
    }
  }

  TEST_CASE("D extremal h for n = 6 and n = 8 in epsilon coordinates") {
    auto eps_h = [](const Candidate& c, const QVec& h) {
      QVec v(c.system->dim(), Rational(0));
      for (int k = 0; k < c.system->rank(); ++k) {
        const auto& co = c.system->simple_roots()[k].coords;  // simply laced: coroot = root
        for (int m = 0; m < c.system->dim(); ++m) v[m] += h[k] * co[m];
      }
      return v;
    };
    const auto c6 = build_case(Family::D, 6, 6);
    CHECK(eps_h(c6, solve_h(c6).h) == testing_helpers::rats({{0, 1}, {-1, 1}, {5, 1}, {-2, 1}, {-6, 1}, {4, 1}}));
    // n >= 8: -n e1 + sum (k-n) e_{2k+1} + sum (n-k) e_{2k} - e_{n-4} + (n/2+2) e_{n-3}
    //         - 2 e_{n-2} - (n/2+3) e_{n-1} + (n/2+1) e_n
    for (int n : {8, 10, 12}) {
      const auto c = build_case(Family::D, n, n);
      QVec want(n, Rational(0));
      want[0] += -n;
      for (int k = 1; k <= n / 2 - 4; ++k) want[2 * k] += k - n;
      for (int k = 1; k <= n / 2 - 3; ++k) want[2 * k - 1] += n - k;
      want[n - 5] += -1;
      want[n - 4] += n / 2 + 2;
      want[n - 3] += -2;
      want[n - 2] += -(n / 2 + 3);
      want[n - 1] += n / 2 + 1;
      CHECK(eps_h(c, solve_h(c).h) == want);
    }
  }

  TEST_CASE("permutation rigidity") {
    for (auto [n, s] : std::vector<std::pair<int, int>>{{4, 2}, {6, 4}}) {
      const auto c = build_case(Family::B, n, s);
      const auto o = orbit_structure(c);
      const auto cls = classify_roots(c, o, false);
      const auto r = oracle::permutation_rigidity(o, cls);
      CHECK(r.permutations > 0);
      CHECK(r.constrained_roots > 0);
      CHECK(r.violations == 0);
    }
  }
}
