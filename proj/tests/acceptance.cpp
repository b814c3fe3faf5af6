// One line per acceptance criterion; exit status is nonzero if any fails.

#include "artifact/certificate.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace artifact;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

QVec ints(std::initializer_list<long> v) {
  QVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

QVec q(std::initializer_list<std::pair<long, long>> v) {
  QVec out;
  for (auto [a, b] : v) {
    Rational r(a, b);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

std::string case_name(const CaseReport& r) {
  return r.candidate.system->name() + " s=" + std::to_string(r.candidate.s);
}

void require_pass(const CaseReport& r, Outcome& out) {
  if (const auto* f = r.first_failure()) out.fail(case_name(r) + " fails " + f->name);
}

Outcome criterion_e7() {
  Outcome out;
  const auto r = run_case(Family::E7, 7, 3);
  require_pass(r, out);
  if (r.pair.degrees != ints({3, 6, 8, 10, 18})) out.fail("degrees differ");
  if (r.pair.h != q({{-1, 1}, {-13, 2}, {0, 1}, {3, 1}, {11, 2}, {-2, 1}, {-1, 2}})) out.fail("h differs");
  return out;
}

Outcome criterion_e6() {
  Outcome out;
  const auto r = run_case(Family::E6, 6, 6);
  require_pass(r, out);
  if (r.pair.degrees != ints({6, 8, 18})) out.fail("degrees differ");
  if (r.pair.eigenvalues != ints({5, 7, 17})) out.fail("eigenvalues differ");
  if (r.pair.h != ints({-2, -1, 1, 6, -5, 0})) out.fail("h differs");
  if (r.lower.multiples() != ints({3, 3, 6})) out.fail("lower bound differs");
  if (!certify_coincidence(r.lower, r.improved)) out.fail("bounds differ");
  return out;
}

Outcome criterion_b_sweep() {
  Outcome out;
  for (int n = 2; n <= 12; ++n)
    for (int s = 2; s <= n; s += 2) {
      const auto r = run_case(Family::B, n, s);
      require_pass(r, out);
      if (static_cast<int>(r.candidate.T.size()) != n - s / 2 + 1) out.fail(case_name(r) + " |T|");
      std::vector<Rational> lb;
      if (n == s) {
        lb = ints({2, 2});
        for (int k = 0; k < n / 2 - 1; ++k) lb.emplace_back(4);
      } else {
        lb = ints({1, 1});
        for (int k = 0; k < n - 1 - s / 2; ++k) lb.emplace_back(2);
      }
      if (r.lower.multiples() != lb) out.fail(case_name(r) + " lower bound");
    }
  return out;
}

Outcome criterion_d_sweep() {
  Outcome out;
  for (int n = 4; n <= 12; ++n)
    for (int s = 2; s <= n - 2; s += 2) {
      const auto r = run_case(Family::D, n, s);
      require_pass(r, out);
      if (static_cast<int>(r.candidate.T.size()) != n - s / 2 + 1) out.fail(case_name(r) + " |T|");
      auto lb = ints({1, 1, 1});
      for (int k = 0; k < n - 2 - s / 2; ++k) lb.emplace_back(2);
      if (r.lower.multiples() != lb) out.fail(case_name(r) + " lower bound");
    }
  return out;
}

Outcome criterion_d_extremal() {
  Outcome out;
  for (int n : {6, 8, 10, 12})
    for (int s : {n - 1, n}) {
      const auto r = run_case(Family::D, n, s);
      require_pass(r, out);
      auto lb = ints({2, 2, 2});
      for (int k = 0; k < n / 2 - 2; ++k) lb.emplace_back(4);
      if (r.lower.multiples() != lb || !certify_coincidence(r.lower, r.improved)) out.fail(case_name(r) + " bounds");
      if (n == 6) {
        // values produced by tests/oracles/eigen_de6.py
        if (r.pair.eigenvalues != ints({2, 4, 6, 11})) out.fail("D6 eigenvalues");
        if (r.pair.degrees != ints({3, 5, 7, 12})) out.fail("D6 degrees");
      }
    }
  return out;
}

Outcome criterion_properties() {
  Outcome out;
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::B, 2}, {Family::B, 3}, {Family::B, 4}, {Family::B, 5},
                                                        {Family::B, 6}, {Family::D, 4}, {Family::D, 5}, {Family::D, 6},
                                                        {Family::E6, 6}}) {
    const RootSystem sys(f, n);
    const StructureTable t(sys);
    long bad = 0;
    for (int u = 0; u < t.dim(); ++u)
      for (int v = u + 1; v < t.dim(); ++v)
        for (int w = v + 1; w < t.dim(); ++w) bad += !jacobi_holds(t, u, v, w);
    if (bad) out.fail("Jacobi fails in " + sys.name());
    for (int a = 0; a < sys.num_roots(); ++a)
      for (int b = 0; b < sys.num_roots(); ++b) {
        if (sys.sum(a, b) < 0) continue;
        int p = 0;
        for (int x = sys.diff(b, a); x >= 0; x = sys.diff(x, a)) ++p;
        if (std::abs(t.N(a, b)) != p + 1) out.fail("root string fails in " + sys.name());
      }
  }
  for (const auto& id : enumerate_cases(12)) {
    const auto c = build_case(id.family, id.n, id.s);
    const auto o = orbit_structure(c);
    for (int a : o.O)
      if (o.theta[o.theta[a]] != a) out.fail("theta^2 != id");
    const StructureTable t(*c.system);
    const auto nd = check_nondegeneracy(c, o, t);
    if (nd.size % 2 != 0 || !nd.ok) out.fail("pairing matrix in " + c.system->name());
    if (!nd.graded_ok || (nd.polynomial_computed && !nd.monomial)) out.fail("graded determinant in " + c.system->name());
  }
  for (auto [n, s] : std::vector<std::pair<int, int>>{{4, 2}, {6, 4}}) {
    const auto c = build_case(Family::B, n, s);
    const auto o = orbit_structure(c);
    const auto cls = classify_roots(c, o, false);
    const auto r = oracle::permutation_rigidity(o, cls);
    if (r.permutations == 0 || r.violations != 0 || r.constrained_roots == 0)
      out.fail("permutation rigidity in B" + std::to_string(n));
  }
  return out;
}

bool same_tree(const fs::path& a, const fs::path& b) {
  std::vector<fs::path> fa, fb;
  for (const auto& e : fs::directory_iterator(a)) fa.push_back(e.path().filename());
  for (const auto& e : fs::directory_iterator(b)) fb.push_back(e.path().filename());
  std::sort(fa.begin(), fa.end());
  std::sort(fb.begin(), fb.end());
  if (fa != fb || fa.empty()) return false;
  for (const auto& f : fa) {
    std::ifstream x(a / f, std::ios::binary), y(b / f, std::ios::binary);
    std::stringstream sx, sy;
    sx << x.rdbuf();
    sy << y.rdbuf();
    if (sx.str() != sy.str()) return false;
  }
  return true;
}

Outcome criterion_negative() {
  Outcome out;
  const auto base = build_case(Family::B, 6, 4);
  const RootSystem& sys = *base.system;
  for (std::size_t k = 0; k < base.S.size(); ++k) {
    int tried = 0;
    for (int id = 0; id < sys.num_roots() && tried < 6; ++id) {
      if (std::count(base.S.begin(), base.S.end(), id) || !base.parabolic.in_p_star(id)) continue;
      ++tried;
      auto c = base;
      c.S[k] = id;
      c.gamma_sets[k].centre = id;
      if (run_candidate(c).passed()) out.fail("corrupted S accepted");
    }
  }
  for (std::size_t k = 0; k < base.gamma_sets.size(); ++k) {
    auto c = base;
    c.gamma_sets.erase(c.gamma_sets.begin() + static_cast<long>(k));
    c.S.erase(c.S.begin() + static_cast<long>(k));
    if (check_heisenberg(c).partition_ok) out.fail("partition survives a dropped Gamma");
  }
  const fs::path tmp = fs::temp_directory_path() / "adpair_determinism";
  fs::remove_all(tmp);
  const std::string bin = ADPAIR_PATH;
  for (const char* run : {"a", "b"}) {
    const auto cmd = bin + " sweep --max-rank 8 --out " + (tmp / run).string() + " > /dev/null";
    if (std::system(cmd.c_str()) != 0) out.fail("sweep run failed");
  }
  if (!same_tree(tmp / "a", tmp / "b")) out.fail("sweep certificates differ between runs");
  fs::remove_all(tmp);
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "E7 s=3: pass, degrees {3,6,8,10,18}, exact h", 10, criterion_e7},
      {2, "E6 s=6: degrees {6,8,18}, exact h, eigenvalues {5,7,17}, bounds {3w,3w,6w} coincide", 5, criterion_e6},
      {3, "type B sweep, even s, 2 <= s <= n <= 12", 120, criterion_b_sweep},
      {4, "type D sweep, even s <= n-2, 4 <= n <= 12", 120, criterion_d_sweep},
      {5, "type D extremal, n in {6,8,10,12}: bounds and n=6 eigenvalues {2,4,6,11}", 30, criterion_d_extremal},
      {6, "properties: Jacobi, root strings, theta, graded determinant, rigidity", 600, criterion_properties},
      {7, "negative tests: corrupted S, dropped Gamma, sweep determinism", 600, criterion_negative},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > c.budget) o.fail("over time budget");
    failures += !o.ok;
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " [" << std::fixed;
    line.precision(2);
    line << secs << " s]";
    if (!o.ok) line << "  -- " << o.note;
    std::cout << line.str() << std::endl;
  }
  return failures ? 1 : 0;
}
