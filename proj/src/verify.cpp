#include "artifact/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace artifact {

BasisCheck check_basis_restriction(const Candidate& c) {
  const auto& hb = c.parabolic.h_lambda_basis;
  BasisCheck out;
  if (c.S.size() != hb.size()) return out;
  std::vector<QVec> m;
  for (int g : c.S) {
    QVec row;
    for (int k : hb) row.emplace_back(c.system->pairing_simple(g, k));
    m.push_back(row);
  }
  out.determinant = determinant(m);
  out.ok = out.determinant != 0;
  return out;
}

HeisenbergReport check_heisenberg(const Candidate& c) {
  const RootSystem& sys = *c.system;
  const auto& p = c.parabolic;
  HeisenbergReport r;
  const std::set<int> sset(c.S.begin(), c.S.end());
  r.size_ok = static_cast<int>(c.S.size()) == sys.rank() - 1 && sset.size() == c.S.size() &&
              c.gamma_sets.size() == c.S.size();
  if (!r.size_ok) r.issues.push_back("|S| differs from dim h_Lambda");
  r.pairing_ok = true;
  r.contained_ok = true;
  r.disjoint_ok = true;
  std::map<int, int> owner;
  auto name = [&](int id) {
    std::string s = "(";
    for (std::size_t k = 0; k < sys.root(id).coeffs.size(); ++k)
      s += (k ? "," : "") + std::to_string(sys.root(id).coeffs[k]);
    return s + ")";
  };
  for (const auto& g : c.gamma_sets) {
    const std::set<int> members(g.roots.begin(), g.roots.end());
    if (members.size() != g.roots.size() || !members.count(g.centre)) {
      r.pairing_ok = false;
      r.issues.push_back("Gamma of centre " + name(g.centre) + " is malformed");
    }
    for (int a : g.roots) {
      if (!p.in_p_star(a)) {
        r.contained_ok = false;
        r.issues.push_back(name(a) + " lies outside Delta^+ u Delta^-_{pi'}");
      }
      auto [it, fresh] = owner.emplace(a, g.centre);
      if (!fresh) {
        r.disjoint_ok = false;
        r.issues.push_back(name(a) + " lies in two Gamma sets");
      }
      if (a == g.centre) continue;
      const int partner = sys.diff(g.centre, a);
      if (partner < 0 || partner == g.centre || !members.count(partner)) {
        r.pairing_ok = false;
        r.issues.push_back(name(a) + " has no partner in Gamma of centre " + name(g.centre));
      }
    }
  }
  for (int a : c.T_star)
    if (owner.count(a)) {
      r.disjoint_ok = false;
      r.issues.push_back(name(a) + " lies in T* and in a Gamma set");
    }
  std::multiset<int> all;
  for (const auto& g : c.gamma_sets) all.insert(g.roots.begin(), g.roots.end());
  all.insert(c.T.begin(), c.T.end());
  all.insert(c.T_star.begin(), c.T_star.end());
  std::multiset<int> target;
  for (int id = 0; id < sys.num_roots(); ++id)
    if (p.in_p_star(id)) target.insert(id);
  r.partition_ok = all == target;
  if (!r.partition_ok) r.issues.push_back("Gamma u T u T* is not a partition of Delta^+ u Delta^-_{pi'}");
  return r;
}

OrbitStructure orbit_structure(const Candidate& c) {
  const RootSystem& sys = *c.system;
  const int R = sys.num_roots();
  OrbitStructure o;
  o.theta.assign(R, -1);
  o.S_alpha.assign(R, {});
  o.centre.assign(R, -1);
  o.kind.assign(R, RootKind::Mixed);
  o.ok = true;
  auto kind_of = [&](int centre) {
    if (std::count(c.S_plus.begin(), c.S_plus.end(), centre)) return RootKind::Plus;
    if (std::count(c.S_minus.begin(), c.S_minus.end(), centre)) return RootKind::Minus;
    return RootKind::Mixed;
  };
  for (const auto& g : c.gamma_sets) {
    const std::set<int> members(g.roots.begin(), g.roots.end());
    for (int a : g.roots) {
      if (a == g.centre) continue;
      const int b = sys.diff(g.centre, a);
      if (b < 0 || !members.count(b) || b == g.centre || o.theta[a] >= 0) {
        o.ok = false;
        continue;
      }
      o.theta[a] = b;
      o.centre[a] = g.centre;
      o.kind[a] = kind_of(g.centre);
      o.O.push_back(a);
    }
  }
  std::sort(o.O.begin(), o.O.end());
  std::vector<bool> inS(R, false);
  for (int g : c.S) inS[g] = true;
  for (int a : o.O)
    for (int b : o.O) {
      const int x = sys.sum(a, b);
      if (x >= 0 && inS[x]) o.S_alpha[a].push_back(b);
    }
  for (int a : o.O)
    if (o.theta[o.theta[a]] != a) o.ok = false;
  return o;
}

std::string root_class_name(RootClass k) {
  switch (k) {
    case RootClass::Stationary: return "stationary";
    case RootClass::ExtendedStationary: return "extended_stationary";
    case RootClass::Cyclic: return "cyclic";
    case RootClass::ExtendedCyclic: return "extended_cyclic";
    case RootClass::TildeOfCyclic: return "tilde_of_cyclic";
    case RootClass::Unclassified: return "unclassified";
  }
  return "?";
}

namespace {

class Sequences {
 public:
  Sequences(const RootSystem& sys, const OrbitStructure& o) : sys_(sys), o_(o) {}

  // Condition (*) for a root of O_3: a root of S_a other than theta(a), in O_2,
  // whose theta lies in O_1. Returns -1 when none exists.
  int star(int a) const {
    for (int b : o_.S_alpha[a])
      if (b != o_.theta[a] && o_.stratum(b) == 2 && o_.stratum(o_.theta[b]) == 1) return b;
    return -1;
  }

  bool admissible(int a, bool extended) const {
    const int k = o_.stratum(a);
    if (k == 1 || k == 2) return true;
    return extended && k == 3 && star(a) >= 0;
  }

  // Next term of the sequence, or -1 when undefined.
  int step(int x, bool extended) const {
    const int z = o_.theta[x];
    const auto& sz = o_.S_alpha[z];
    if (sz.size() == 1) return x;
    if (sz.size() == 2) return sz[0] == x ? sz[1] : sz[0];
    if (sz.size() == 3 && extended) {
      const int ap = star(z);
      if (ap < 0) return -1;
      for (int b : sz)
        if (b != x && b != ap) return b;
    }
    return -1;
  }

  // Returns the stationary rank, or -1. The sequence is written to seq.
  int run(int start, bool extended, std::vector<int>& seq) const {
    seq = {start};
    std::set<int> seen{start};
    const std::size_t cap = o_.O.size() + 1;
    while (seq.size() <= cap) {
      const int cur = seq.back();
      if (!admissible(cur, extended) || !admissible(o_.theta[cur], extended)) return -1;
      const int nx = step(cur, extended);
      if (nx < 0) return -1;
      if (nx == cur) return static_cast<int>(seq.size()) - 1;
      if (!seen.insert(nx).second) return -1;
      seq.push_back(nx);
    }
    return -1;
  }

 private:
  const RootSystem& sys_;
  const OrbitStructure& o_;
};

struct CyclicResult {
  bool found = false;
  std::vector<int> tildes;
};

CyclicResult find_cyclic(const RootSystem& sys, const OrbitStructure& o, const Sequences& seqs, int a,
                         bool extended) {
  CyclicResult res;
  const int ta = o.theta[a];
  for (int g : o.S_alpha[ta]) {
    if (g == a) continue;
    const int tg = o.theta[g];
    std::vector<int> cf = sys.root(a).coeffs;
    for (std::size_t k = 0; k < cf.size(); ++k)
      cf[k] += sys.root(ta).coeffs[k] - sys.root(tg).coeffs[k];
    const int b = sys.find(cf);
    if (b < 0 || !o.in_O(b)) continue;
    const int tb = o.theta[b];
    if (sys.sum(ta, g) != o.centre[b]) continue;   // (i)
    if (sys.sum(tg, b) != o.centre[a]) continue;   // (ii)
    if (sys.sum(tb, a) != o.centre[g]) continue;   // (iii)
    const std::set<int> C{a, ta, b, tb, g, tg};
    if (C.size() != 6) continue;                   // (v)
    bool ok = true;
    for (int d : C) ok = ok && (o.stratum(d) == 2 || o.stratum(d) == 3);  // (iv)
    if (!ok) continue;
    std::vector<int> tildes;
    for (int d : C) {
      if (o.stratum(d) != 3) continue;
      std::vector<int> rest;
      for (int x : o.S_alpha[d])
        if (!C.count(x)) rest.push_back(x);
      if (rest.size() != 1) {
        ok = false;
        break;
      }
      const int dt = rest[0];
      if (!extended) {
        ok = o.stratum(dt) == 2 && o.stratum(o.theta[dt]) == 1;  // (vi)
        tildes.push_back(dt);
      } else {
        std::vector<int> seq;
        ok = seqs.run(dt, true, seq) >= 0;  // (vie)
        tildes.insert(tildes.end(), seq.begin(), seq.end());
      }
      if (!ok) break;
    }
    if (!ok) continue;
    res.found = true;
    res.tildes = tildes;
    return res;
  }
  return res;
}

}  // namespace

ClassificationReport classify_roots(const Candidate& c, const OrbitStructure& o, bool extended) {
  const RootSystem& sys = *c.system;
  ClassificationReport rep;
  rep.extended = extended;
  Sequences seqs(sys, o);
  std::set<int> tilde;
  std::map<int, RootClass> cls;
  for (int a : o.O) {
    SequenceTrace tr;
    tr.start = a;
    tr.stationary_rank_forward = seqs.run(a, false, tr.forward);
    tr.stationary_rank_backward = seqs.run(o.theta[a], false, tr.backward);
    for (int b : o.S_alpha[a])
      if (o.kind[b] == RootKind::Mixed) tr.required = true;
    if (tr.stationary_rank_forward >= 0 && tr.stationary_rank_backward >= 0) {
      tr.classification = RootClass::Stationary;
    } else if (extended) {
      std::vector<int> f, b;
      const int rf = seqs.run(a, true, f), rb = seqs.run(o.theta[a], true, b);
      if (rf >= 0 && rb >= 0) {
        tr.forward = f;
        tr.backward = b;
        tr.stationary_rank_forward = rf;
        tr.stationary_rank_backward = rb;
        tr.classification = RootClass::ExtendedStationary;
      }
    }
    if (tr.classification == RootClass::Unclassified) {
      auto cy = find_cyclic(sys, o, seqs, a, false);
      if (cy.found) {
        tr.classification = RootClass::Cyclic;
        tilde.insert(cy.tildes.begin(), cy.tildes.end());
      } else if (extended) {
        cy = find_cyclic(sys, o, seqs, a, true);
        if (cy.found) {
          tr.classification = RootClass::ExtendedCyclic;
          tilde.insert(cy.tildes.begin(), cy.tildes.end());
        }
      }
    }
    rep.traces.push_back(std::move(tr));
  }
  for (auto& tr : rep.traces)
    if (tr.classification == RootClass::Unclassified && (tilde.count(tr.start) || tilde.count(o.theta[tr.start])))
      tr.classification = RootClass::TildeOfCyclic;

  auto name = [&](int id) {
    std::string s = "(";
    for (std::size_t k = 0; k < sys.root(id).coeffs.size(); ++k)
      s += (k ? "," : "") + std::to_string(sys.root(id).coeffs[k]);
    return s + ")";
  };
  rep.plus_ok = rep.minus_ok = rep.mixed_ok = true;
  for (int a : o.O) {
    if (o.kind[a] == RootKind::Mixed) continue;
    std::vector<int> same;
    for (int b : o.S_alpha[a])
      if (o.kind[b] == o.kind[a]) same.push_back(b);
    if (same.size() == 1 && same[0] == o.theta[a]) continue;
    (o.kind[a] == RootKind::Plus ? rep.plus_ok : rep.minus_ok) = false;
    rep.issues.push_back(name(a) + ": S_alpha meets its own sign class beyond theta");
  }
  for (const auto& tr : rep.traces)
    if (tr.required && tr.classification == RootClass::Unclassified) {
      rep.mixed_ok = false;
      rep.issues.push_back(name(tr.start) + " is unclassified");
    }
  return rep;
}

PairingMatrix pairing_matrix(const Candidate& c, const OrbitStructure& o, const StructureTable& t) {
  const RootSystem& sys = *c.system;
  PairingMatrix m;
  m.O = o.O;
  std::map<int, int> pos;
  for (std::size_t k = 0; k < o.O.size(); ++k) pos[o.O[k]] = static_cast<int>(k);
  m.entries.resize(o.O.size());
  m.degree.resize(o.O.size());
  for (std::size_t r = 0; r < o.O.size(); ++r) {
    const int a = o.O[r];
    for (int b : o.S_alpha[a]) {
      const int g = sys.sum(a, b);
      // Phi_y(x_{-a}, x_{-b}) = N_{-a,-b} K(x_g, x_{-g}), K(x_g, x_{-g}) = 2/(g,g) up to scale.
      const long kf = 4 / sys.norm2_times2(g);
      m.entries[r].emplace_back(pos.at(b), t.N(sys.neg(a), sys.neg(b)) * kf);
      m.degree[r].push_back(std::abs(rho_height(sys.root(g))));
    }
  }
  return m;
}

namespace {

Rational graded_det(const PairingMatrix& m, const Rational& t) {
  const int n = static_cast<int>(m.O.size());
  std::vector<SparseVec> rows(n);
  for (int r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < m.entries[r].size(); ++k) {
      Rational v = m.entries[r][k].second;
      Rational f = 1;
      for (int d = 0; d < m.degree[r][k]; ++d) f *= t;
      rows[r].emplace_back(m.entries[r][k].first, v * f);
    }
    std::sort(rows[r].begin(), rows[r].end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return determinant(rows, n);
}

}  // namespace

std::vector<Integer> graded_determinant_polynomial(const PairingMatrix& m) {
  long K = 0;
  for (const auto& row : m.degree) {
    int mx = 0;
    for (int d : row) mx = std::max(mx, d);
    K += mx;
  }
  // Newton interpolation at t = 0..K.
  std::vector<Rational> xs, dd;
  for (long k = 0; k <= K; ++k) {
    xs.emplace_back(k);
    dd.push_back(graded_det(m, Rational(k)));
  }
  for (long j = 1; j <= K; ++j)
    for (long i = K; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  std::vector<Rational> poly(K + 1);
  for (long i = K; i >= 0; --i) {
    // poly = poly * (t - x_i) + dd[i]
    std::vector<Rational> next(K + 1);
    for (long k = 0; k < K; ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * xs[i];
    }
    next[0] += dd[i];
    poly = next;
  }
  std::vector<Integer> out;
  for (auto& q : poly) {
    if (q.get_den() != 1) throw std::logic_error("non-integral graded determinant");
    out.push_back(q.get_num());
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

NondegeneracyCheck check_nondegeneracy(const Candidate& c, const OrbitStructure& o, const StructureTable& t,
                                       int full_polynomial_limit) {
  const RootSystem& sys = *c.system;
  NondegeneracyCheck out;
  const auto m = pairing_matrix(c, o, t);
  out.size = static_cast<int>(m.O.size());
  out.determinant = graded_det(m, Rational(1));
  out.ok = out.determinant != 0 && out.size % 2 == 0;
  for (int a : o.O)
    if (a < o.theta[a]) out.expected_degree += 2L * std::abs(rho_height(sys.root(sys.sum(a, o.theta[a]))));
  out.graded_ok = true;
  for (int pt : {2, 3}) {
    out.sample_points.push_back(pt);
    Rational lhs = graded_det(m, Rational(pt));
    Rational rhs = out.determinant;
    for (long d = 0; d < out.expected_degree; ++d) rhs *= pt;
    out.graded_ok = out.graded_ok && lhs == rhs;
  }
  if (out.size <= full_polynomial_limit) {
    out.polynomial = graded_determinant_polynomial(m);
    out.polynomial_computed = true;
    int nonzero = 0;
    for (const auto& x : out.polynomial) nonzero += x != 0;
    out.monomial = nonzero == 1 && static_cast<long>(out.polynomial.size()) - 1 == out.expected_degree;
  }
  return out;
}

DualCoordinates::DualCoordinates(const ParabolicData& p) : hbasis_(p.h_lambda_basis) {
  const RootSystem& sys = *p.system;
  slot_.assign(sys.num_roots(), -1);
  for (int id = 0; id < sys.num_roots(); ++id)
    if (p.in_p_star(id)) {
      slot_[id] = static_cast<int>(roots_.size());
      roots_.push_back(id);
    }
}

int DualCoordinates::of_coroot(int k) const {
  for (std::size_t i = 0; i < hbasis_.size(); ++i)
    if (hbasis_[i] == k) return static_cast<int>(roots_.size() + i);
  return -1;
}

std::vector<PElement> p_basis(const ParabolicData& p) {
  const RootSystem& sys = *p.system;
  std::vector<PElement> out;
  for (int id = 0; id < sys.num_roots(); ++id)
    if (p.in_p(id)) out.push_back({false, id});
  for (int k : p.h_lambda_basis) out.push_back({true, k});
  return out;
}

SparseVec ad_on_dual(const StructureTable& t, const ParabolicData& p, const DualCoordinates& coords,
                     const PElement& x, const DualVec& y) {
  const RootSystem& sys = *p.system;
  const int R = sys.num_roots();
  const auto& G = sys.gram();
  std::map<int, Rational> acc;
  for (const auto& [g, coef] : y) {
    if (coords.of_root(g) < 0) throw std::invalid_argument("ad_on_dual: y not supported on p*");
    if (x.coroot) {
      const long e = sys.pairing_simple(g, x.id);
      if (e != 0) acc[coords.of_root(g)] += coef * e;
      continue;
    }
    if (!p.in_p(x.id)) throw std::invalid_argument("ad_on_dual: x not in p");
    for (const auto& [u, v] : t.bracket(x.id, g)) {
      if (u < R) {
        if (coords.of_root(u) >= 0) acc[coords.of_root(u)] += coef * v;
        continue;
      }
      const int i = u - R;
      for (int j : p.h_lambda_basis)
        if (G[i][j] != 0) acc[coords.of_coroot(j)] += coef * v * 4 * G[i][j] / (G[i][i] * G[j][j]);
    }
  }
  SparseVec out;
  for (auto& [k, v] : acc)
    if (v != 0) out.emplace_back(k, v);
  return out;
}

RegularityCheck check_regularity(const Candidate& c, const StructureTable& t) {
  const auto& p = c.parabolic;
  RegularityCheck out;
  DualCoordinates coords(p);
  const auto basis = p_basis(p);
  out.dim_p = static_cast<int>(basis.size());
  out.t_size = static_cast<int>(c.T.size());
  if (coords.dim() != out.dim_p) return out;
  DualVec y;
  for (int g : c.S) y.emplace_back(g, Rational(1));
  RowBasis rb(coords.dim());
  for (const auto& b : basis) rb.add(ad_on_dual(t, p, coords, b, y));
  out.rank = rb.rank();
  for (int g : c.T) rb.add({{coords.of_root(g), Rational(1)}});
  out.complement_ok = rb.rank() == coords.dim() && out.rank + out.t_size == out.dim_p;
  for (int b : c.T_star)
    out.t_star_ok = out.t_star_ok && rb.contains({{coords.of_root(b), Rational(1)}});
  out.ok = out.complement_ok && out.t_star_ok;
  return out;
}

Rational evaluate_on_h(const RootSystem& sys, int root, const QVec& h) {
  Rational v = 0;
  for (int k = 0; k < sys.rank(); ++k)
    if (h[k] != 0) v += h[k] * sys.pairing_simple(root, k);
  return v;
}

AdaptedPair solve_h(const Candidate& c) {
  const RootSystem& sys = *c.system;
  const auto& hb = c.parabolic.h_lambda_basis;
  AdaptedPair out;
  if (c.S.size() != hb.size()) return out;
  std::vector<QVec> a;
  QVec rhs;
  for (int g : c.S) {
    QVec row;
    for (int k : hb) row.emplace_back(sys.pairing_simple(g, k));
    a.push_back(row);
    rhs.emplace_back(-1);
  }
  auto x = solve(a, rhs);
  if (!x) return out;
  out.h.assign(sys.rank(), Rational(0));
  for (std::size_t i = 0; i < hb.size(); ++i) out.h[hb[i]] = (*x)[i];
  out.ok = true;
  for (int g : c.S) out.ok = out.ok && evaluate_on_h(sys, g, out.h) == -1;
  for (int g : c.T) {
    const Rational e = evaluate_on_h(sys, g, out.h);
    out.eigenvalues_on_T.emplace_back(g, e);
    out.eigenvalues.push_back(e);
    out.degrees.push_back(e + 1);
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

EigenvalueReport eigenvalue_report(const AdaptedPair& pair, const Candidate& c) {
  EigenvalueReport r;
  r.computed = pair.eigenvalues;
  r.expected = expected_eigenvalues(c.variant, c.n, c.model_s);
  r.ok = pair.ok && r.computed == r.expected;
  return r;
}

}  // namespace artifact
