#include "artifact/construction.hpp"

#include "artifact/cascade.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace artifact {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::B: return "B";
    case Variant::D: return "D";
    case Variant::DExtremal: return "D-extremal";
    case Variant::E6: return "E6";
    case Variant::E7: return "E7";
  }
  return "?";
}

const GammaSet* Candidate::gamma_of(int centre) const {
  for (const auto& g : gamma_sets)
    if (g.centre == centre) return &g;
  return nullptr;
}

namespace {

// Lookup of roots of B_n / D_n by integral epsilon-coordinates (1-based indices).
class Eps {
 public:
  explicit Eps(const RootSystem& sys) : sys_(sys) {
    for (int id = 0; id < sys.num_roots(); ++id) {
      std::vector<long> key;
      for (const auto& x : sys.root(id).coords) key.push_back(to_long(x));
      index_[key] = id;
    }
  }
  int operator()(int a, int i, int b = 0, int j = 0) const {
    std::vector<long> key(sys_.dim(), 0);
    key.at(i - 1) += a;
    if (b != 0) key.at(j - 1) += b;
    auto it = index_.find(key);
    if (it == index_.end())
      throw std::logic_error("not a root: " + std::to_string(a) + "e" + std::to_string(i) + " " +
                             std::to_string(b) + "e" + std::to_string(j));
    return it->second;
  }

 private:
  const RootSystem& sys_;
  std::map<std::vector<long>, int> index_;
};

std::vector<int> positive_ids(const RootSystem& sys) {
  std::vector<int> out(sys.num_positive());
  for (int k = 0; k < sys.num_positive(); ++k) out[k] = k;
  return out;
}

std::vector<int> minus(const std::vector<int>& a, const std::set<int>& drop) {
  std::vector<int> out;
  for (int x : a)
    if (!drop.count(x)) out.push_back(x);
  return out;
}

struct Builder {
  Candidate& c;
  void add(int centre, std::vector<int> roots, bool front = false) {
    if (std::find(roots.begin(), roots.end(), centre) == roots.end()) roots.insert(roots.begin(), centre);
    GammaSet g{centre, std::move(roots)};
    if (front) {
      c.S.insert(c.S.begin(), centre);
      c.gamma_sets.insert(c.gamma_sets.begin(), std::move(g));
    } else {
      c.S.push_back(centre);
      c.gamma_sets.push_back(std::move(g));
    }
  }
};

void build_B(Candidate& c) {
  const RootSystem& sys = *c.system;
  const int n = c.n, s = c.s;
  Eps e(sys);
  const auto H = kostant_cascade(sys, positive_ids(sys)).heisenberg();
  Builder b{c};
  for (int i = 1; i <= s / 2 - 1; ++i) {
    const int beta = e(1, 2 * i - 1, 1, 2 * i);
    b.add(beta, minus(H.at(beta), {e(1, 2 * i - 1), e(1, 2 * i)}));
  }
  if (n > s) {
    std::vector<int> g;
    for (int i = s + 2; i <= n; ++i)
      for (int sg : {1, -1}) {
        g.push_back(e(1, s - 1, sg, i));
        g.push_back(e(1, s + 1, -sg, i));
      }
    b.add(e(1, s - 1, 1, s + 1), g);
    for (int j = s / 2 + 1; j <= (n - 1) / 2; ++j) {
      std::vector<int> h;
      for (int k = 2 * j + 2; k <= n; ++k)
        for (int sg : {1, -1}) {
          h.push_back(e(1, 2 * j, sg, k));
          h.push_back(e(1, 2 * j + 1, -sg, k));
        }
      b.add(e(1, 2 * j, 1, 2 * j + 1), h);
    }
  }
  for (int i = 1; i <= s / 2 - 1; ++i) {
    std::vector<int> g;
    for (int j = i + 1; j <= s - i - 1; ++j) {
      g.push_back(e(1, j, -1, i));
      g.push_back(e(1, s - i, -1, j));
    }
    b.add(e(1, s - i, -1, i), g);
  }
  for (int i = s / 2 + 1; i <= n / 2; ++i) {
    std::vector<int> g;
    for (int j = 2 * i + 1; j <= n; ++j)
      for (int sg : {1, -1}) {
        g.push_back(e(-1, 2 * i - 1, sg, j));
        g.push_back(e(-1, 2 * i, -sg, j));
      }
    b.add(e(-1, 2 * i - 1, -1, 2 * i), g);
  }
  {
    std::vector<int> g;
    for (int i = 1; i <= n; ++i) {
      if (i == s) continue;
      g.push_back(e(1, i));
      g.push_back(e(1, s, -1, i));
    }
    for (int j = s + 1; j <= n; ++j) {
      g.push_back(e(1, s, 1, j));
      g.push_back(e(-1, j));
    }
    b.add(e(1, s), g);
  }
  c.S_mixed_listed = {e(1, s)};
  auto& t = c.T_listed;
  t.push_back(e(1, s - 1, 1, s));
  for (int i = 1; i <= s / 2; ++i) t.push_back(e(1, 2 * i - 1, -1, 2 * i));
  if (n > s) {
    t.push_back(e(1, s - 1, -1, s + 1));
    for (int j = 1; j <= (n - s) / 2; ++j) t.push_back(e(-1, s + 2 * j - 1, 1, s + 2 * j));
    for (int k = 1; k <= (n - s - 1) / 2; ++k) t.push_back(e(1, s + 2 * k, -1, s + 2 * k + 1));
  }
}

void build_D(Candidate& c) {
  const RootSystem& sys = *c.system;
  const int n = c.n, s = c.s;
  Eps e(sys);
  const auto H = kostant_cascade(sys, positive_ids(sys)).heisenberg();
  Builder b{c};
  for (int i = 1; i <= s / 2 - 1; ++i) {
    const int beta = e(1, 2 * i - 1, 1, 2 * i);
    b.add(beta, minus(H.at(beta), {e(1, 2 * i - 1, -1, n), e(1, 2 * i, 1, n)}));
  }
  {
    std::vector<int> g;
    for (int i = s + 2; i <= n; ++i) {
      g.push_back(e(1, s - 1, 1, i));
      g.push_back(e(1, s + 1, -1, i));
    }
    for (int j = s + 2; j <= n - 1; ++j) {
      g.push_back(e(1, s - 1, -1, j));
      g.push_back(e(1, s + 1, 1, j));
    }
    b.add(e(1, s - 1, 1, s + 1), g);
  }
  for (int i = s / 2 + 1; i <= (n - 2) / 2; ++i) {
    std::vector<int> g;
    for (int j = 2 * i + 2; j <= n; ++j) {
      g.push_back(e(1, 2 * i, -1, j));
      g.push_back(e(1, j, 1, 2 * i + 1));
    }
    for (int k = 2 * i + 2; k <= n - 1; ++k) {
      g.push_back(e(1, 2 * i, 1, k));
      g.push_back(e(1, 2 * i + 1, -1, k));
    }
    b.add(e(1, 2 * i, 1, 2 * i + 1), g);
  }
  for (int i = 1; i <= s / 2 - 1; ++i) {
    std::vector<int> g;
    for (int j = i + 1; j <= s - i - 1; ++j) {
      g.push_back(e(1, j, -1, i));
      g.push_back(e(1, s - i, -1, j));
    }
    b.add(e(1, s - i, -1, i), g);
  }
  for (int i = s / 2 + 1; i <= (n - 1) / 2; ++i) {
    std::vector<int> g;
    for (int j = 2 * i + 1; j <= n - 1; ++j) {
      g.push_back(e(-1, 2 * i - 1, -1, j));
      g.push_back(e(1, j, -1, 2 * i));
    }
    for (int k = 2 * i + 1; k <= n; ++k) {
      g.push_back(e(-1, 2 * i - 1, 1, k));
      g.push_back(e(-1, k, -1, 2 * i));
    }
    b.add(e(-1, 2 * i - 1, -1, 2 * i), g);
  }
  {
    std::vector<int> g;
    for (int i = 1; i <= n / 2; ++i) {
      if (i == s / 2 + 1) continue;
      g.push_back(e(1, s, -1, 2 * i - 1));
      g.push_back(e(1, 2 * i - 1, -1, n));
    }
    for (int j = s / 2; j <= (n - 2) / 2; ++j) {
      g.push_back(e(1, s, 1, 2 * j + 1));
      g.push_back(e(-1, 2 * j + 1, -1, n));
    }
    b.add(e(1, s, -1, n), g);
  }
  {
    std::vector<int> g;
    for (int i = 1; i <= (n - 1) / 2; ++i) {
      if (i == s / 2) continue;
      g.push_back(e(1, s, -1, 2 * i));
      g.push_back(e(1, 2 * i, 1, n));
    }
    g.push_back(e(1, s, -1, s + 1));
    g.push_back(e(1, s + 1, 1, n));
    for (int j = s / 2 + 1; j <= (n - 1) / 2; ++j) {
      g.push_back(e(1, s, 1, 2 * j));
      g.push_back(e(-1, 2 * j, 1, n));
    }
    b.add(e(1, s, 1, n), g);
  }
  c.S_mixed_listed = {e(1, s, -1, n), e(1, s, 1, n)};
  auto& t = c.T_listed;
  t.push_back(e(1, s - 1, 1, s));
  t.push_back(e(1, s - 1, -1, s + 1));
  for (int i = 1; i <= s / 2; ++i) t.push_back(e(1, 2 * i - 1, -1, 2 * i));
  for (int j = s / 2 + 1; j <= (n - 1) / 2; ++j) t.push_back(e(1, 2 * j, -1, 2 * j + 1));
  for (int k = s / 2; k <= (n - 2) / 2; ++k) t.push_back(e(-1, 2 * k + 1, 1, 2 * k + 2));
}

void reorder(Candidate& c, const std::vector<int>& order) {
  if (order.size() != c.gamma_sets.size()) throw std::logic_error("reorder: size mismatch");
  std::vector<GammaSet> sets;
  for (int centre : order) {
    const GammaSet* g = c.gamma_of(centre);
    if (!g) throw std::logic_error("reorder: unknown centre");
    sets.push_back(*g);
  }
  c.gamma_sets = std::move(sets);
  c.S = order;
}

// D_n, n even >= 6, pi' = pi \ {alpha_n}. Also reused for E7 through D6.
void build_D_extremal(Candidate& c) {
  const RootSystem& sys = *c.system;
  const int n = c.n;
  Eps e(sys);
  const auto H = kostant_cascade(sys, positive_ids(sys)).heisenberg();
  Builder b{c};
  for (int k = 2; k <= n / 2 - 3; ++k) {
    std::vector<int> g;
    for (int i = 1; i <= 2 * k - 3; ++i) {
      g.push_back(e(1, 2 * k, -1, i));
      g.push_back(e(1, i, -1, 2 * k - 2));
    }
    b.add(e(1, 2 * k, -1, 2 * k - 2), g);
  }
  if (n >= 8) {
    std::vector<int> g;
    for (int i = 1; i <= n - 7; ++i) {
      g.push_back(e(1, n - 3, -1, i));
      g.push_back(e(1, i, -1, n - 6));
    }
    b.add(e(1, n - 3, -1, n - 6), g);
  }
  {
    std::vector<int> g{e(1, n - 3, -1, n - 5), e(1, n - 4, -1, n - 3)};
    for (int i = 1; i <= n / 2 - 3; ++i) {
      g.push_back(e(1, n - 4, -1, 2 * i));
      g.push_back(e(1, 2 * i, -1, n - 5));
    }
    b.add(e(1, n - 4, -1, n - 5), g);
  }
  {
    std::vector<int> g{e(1, n - 2, -1, n - 1), e(1, n - 1, -1, n - 4), e(1, n - 2, -1, n), e(1, n, -1, n - 4)};
    for (int i = 1; i <= n - 5; ++i) {
      g.push_back(e(1, n - 2, -1, i));
      g.push_back(e(1, i, -1, n - 4));
    }
    b.add(e(1, n - 2, -1, n - 4), g);
  }
  {
    std::vector<int> g{e(1, n, -1, n - 2), e(1, n - 2, -1, n - 3), e(1, n, -1, n - 1), e(1, n - 1, -1, n - 3)};
    for (int i = 1; i <= n - 6; ++i) {
      g.push_back(e(1, n, -1, i));
      g.push_back(e(1, i, -1, n - 3));
    }
    b.add(e(1, n, -1, n - 3), g);
  }
  {
    std::vector<int> g{e(1, n - 3, 1, n),     e(1, n - 1, -1, n),     e(1, n - 3, -1, n),
                       e(1, n, 1, n - 1),     e(1, n - 3, -1, n - 2), e(1, n - 2, 1, n - 1),
                       e(1, n - 3, 1, n - 2), e(-1, n - 2, 1, n - 1)};
    for (int i = 1; i <= n - 5; ++i) {
      g.push_back(e(1, n - 1, -1, i));
      g.push_back(e(1, i, 1, n - 3));
    }
    b.add(e(1, n - 3, 1, n - 1), g);
  }
  // Cascade roots by decreasing induction, each taking what earlier sets left of H.
  auto used = [&]() {
    std::set<int> u;
    for (const auto& g : c.gamma_sets) u.insert(g.roots.begin(), g.roots.end());
    return u;
  };
  {
    const int beta = e(1, n - 5, 1, n - 4);
    std::vector<int> g = minus(H.at(beta), used());
    for (int i = 1; i <= n - 6; ++i) {
      g.push_back(e(1, i, 1, n - 4));
      g.push_back(e(1, n - 5, -1, i));
    }
    for (int i = 1; i <= n / 2 - 3; ++i) {
      g.push_back(e(1, n - 4, -1, 2 * i - 1));
      g.push_back(e(1, 2 * i - 1, 1, n - 5));
    }
    b.add(beta, g, true);
  }
  for (int k = 2; k <= n / 2 - 2; ++k) {
    const int beta = e(1, n - 2 * k - 3, 1, n - 2 * k - 2);
    std::vector<int> g = minus(H.at(beta), used());
    for (int i = 1; i <= n - 2 * k - 4; ++i) {
      g.push_back(e(1, i, 1, n - 2 * k - 2));
      g.push_back(e(1, n - 2 * k - 3, -1, i));
    }
    b.add(beta, g, true);
  }
  std::vector<int> order;
  for (int i = 1; i <= n / 2 - 2; ++i) order.push_back(e(1, 2 * i - 1, 1, 2 * i));
  for (int r : {e(1, n - 3, 1, n - 1), e(1, n, -1, n - 3), e(1, n - 2, -1, n - 4), e(1, n - 4, -1, n - 5)})
    order.push_back(r);
  if (n >= 8) order.push_back(e(1, n - 3, -1, n - 6));
  for (int j = 3; j <= n / 2 - 2; ++j) order.push_back(e(1, n - 2 * j, -1, n - 2 * j - 2));
  reorder(c, order);
  auto& t = c.T_listed;
  t = {e(1, n - 3, -1, n - 1), e(1, n - 2, 1, n), e(1, n, -1, n - 5), e(1, n - 3, -1, n - 4)};
  for (int k = 3; k <= n / 2 - 1; ++k) t.push_back(e(1, n - 2 * k, -1, n - 2 * k - 1));
}

int by_coeffs(const RootSystem& sys, const std::vector<int>& c) {
  const int id = sys.find(c);
  if (id < 0) throw std::logic_error("listed vector is not a root");
  return id;
}

void build_E6(Candidate& c) {
  const RootSystem& sys = *c.system;
  auto r = [&](std::vector<int> v) { return by_coeffs(sys, v); };
  const auto H = kostant_cascade(sys, positive_ids(sys)).heisenberg();
  const auto Hl = kostant_cascade(sys, c.parabolic.delta_pi_prime_pos).heisenberg();
  auto neg_all = [&](const std::vector<int>& v) {
    std::vector<int> out;
    for (int x : v) out.push_back(sys.neg(x));
    return out;
  };
  const int b1 = r({1, 2, 2, 3, 2, 1}), b2 = r({1, 0, 1, 1, 1, 1}), b3 = r({0, 0, 1, 1, 1, 0});
  const int b1p = r({1, 1, 2, 2, 1, 0});
  const int b2p_shift = r({0, 0, 0, -1, -1, 0});  // -beta'_2 + alpha_2
  Builder b{c};
  b.add(b1, minus(H.at(b1), {r({0, 1, 1, 1, 0, 0}), r({1, 1, 1, 2, 2, 1})}));
  b.add(b2, minus(H.at(b2), {r({1, 0, 1, 1, 1, 0}), r({0, 0, 0, 0, 0, 1})}));
  b.add(b3, H.at(b3));
  b.add(sys.neg(b1p), neg_all(Hl.at(b1p)));
  b.add(b2p_shift, {r({0, 0, 0, -1, 0, 0}), r({0, 0, 0, 0, -1, 0})});
  c.T_star = {r({1, 1, 1, 2, 2, 1}), r({1, 0, 1, 1, 1, 0}), r({-1, 0, 0, 0, 0, 0}), r({0, -1, 0, 0, 0, 0}),
              r({0, -1, 0, -1, 0, 0}), r({0, -1, 0, -1, -1, 0})};
  std::sort(c.T_star.begin(), c.T_star.end());
  c.T_listed = {r({0, 0, 0, 1, 0, 0}), r({0, 0, 0, 0, 0, 1}), r({0, 1, 1, 1, 0, 0})};
}

// Isomorphism from D6 (Bourbaki labels) onto the roots of E7 orthogonal to the
// highest root, sending alpha_6 of D6 to alpha_3 of E7.
std::vector<std::vector<int>> d6_embedding(const RootSystem& e7, const RootSystem& d6, int removed) {
  const int beta = e7.num_positive() - 1;  // highest root
  std::vector<int> perp;
  for (int a = 0; a < e7.num_positive(); ++a)
    if (e7.inner2(a, beta) == 0) perp.push_back(a);
  const auto simple = subsystem_simple_roots(e7, perp);
  if (simple.size() != 6 || dynkin_type(e7, simple) != "D6")
    throw std::logic_error("complement of the highest root is not of type D6");
  std::vector<int> perm(6);
  for (int k = 0; k < 6; ++k) perm[k] = k;
  do {
    bool ok = e7.simple_id(removed) == simple[perm[5]];
    for (int x = 0; ok && x < 6; ++x)
      for (int y = 0; ok && y < 6; ++y)
        ok = d6.cartan(x, y) == e7.pairing(simple[perm[x]], simple[perm[y]]);
    if (!ok) continue;
    std::vector<std::vector<int>> image;
    for (int k = 0; k < 6; ++k) image.push_back(e7.root(simple[perm[k]]).coeffs);
    return image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw std::logic_error("no D6 embedding found");
}

void build_E7(Candidate& c) {
  const RootSystem& sys = *c.system;
  const auto d6 = std::make_shared<RootSystem>(Family::D, 6);
  Candidate inner;
  inner.system = d6;
  inner.family = Family::D;
  inner.n = 6;
  inner.s = 6;
  inner.parabolic = build_parabolic(*d6, 6);
  build_D_extremal(inner);
  const auto image = d6_embedding(sys, *d6, c.s - 1);
  auto map = [&](int id) {
    std::vector<int> v(7, 0);
    const auto& cf = d6->root(id).coeffs;
    for (int k = 0; k < 6; ++k)
      for (int t = 0; t < 7; ++t) v[t] += cf[k] * image[k][t];
    return by_coeffs(sys, v);
  };
  auto map_all = [&](const std::vector<int>& v) {
    std::vector<int> out;
    for (int x : v) out.push_back(map(x));
    return out;
  };
  const int beta = sys.num_positive() - 1;
  const auto H = kostant_cascade(sys, positive_ids(sys)).heisenberg();
  Builder b{c};
  b.add(beta, H.at(beta));
  for (const auto& g : inner.gamma_sets) b.add(map(g.centre), map_all(g.roots));
  c.T_listed = {by_coeffs(sys, {-1, 0, 0, 0, 0, 0, 0})};
  for (int t : map_all(inner.T_listed)) c.T_listed.push_back(t);
}

std::vector<int> diagram_automorphism(const RootSystem& sys) {
  std::vector<int> p(sys.rank());
  for (int k = 0; k < sys.rank(); ++k) p[k] = k;
  if (sys.family() == Family::D) std::swap(p[sys.rank() - 2], p[sys.rank() - 1]);
  if (sys.family() == Family::E6) p = {5, 1, 4, 3, 2, 0};
  return p;
}

void apply_automorphism(Candidate& c, const std::vector<int>& perm) {
  const RootSystem& sys = *c.system;
  auto map = [&](int id) {
    const auto& cf = sys.root(id).coeffs;
    std::vector<int> v(cf.size());
    for (std::size_t k = 0; k < cf.size(); ++k) v[perm[k]] = cf[k];
    return by_coeffs(sys, v);
  };
  auto map_all = [&](std::vector<int>& v) {
    for (int& x : v) x = map(x);
  };
  map_all(c.S);
  for (auto& g : c.gamma_sets) {
    g.centre = map(g.centre);
    map_all(g.roots);
  }
  map_all(c.T_star);
  map_all(c.T_listed);
  map_all(c.S_mixed_listed);
  std::sort(c.T_star.begin(), c.T_star.end());
}

}  // namespace

bool in_scope(Family family, int n, int s, std::string* why) {
  auto refuse = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  const std::string prior =
      "the lower and upper character bounds already coincide there, so polynomiality is covered by "
      "earlier results; nothing to certify";
  switch (family) {
    case Family::B:
      if (n < 2 || s < 1 || s > n) return refuse("B_n needs n >= 2 and 1 <= s <= n");
      if (s % 2 == 1) return refuse("B_n with s odd: " + prior);
      return true;
    case Family::D:
      if (n < 4 || s < 1 || s > n) return refuse("D_n needs n >= 4 and 1 <= s <= n");
      if (s <= n - 2) {
        if (s % 2 == 1) return refuse("D_n with s odd, s <= n-2: " + prior);
        return true;
      }
      if (n % 2 == 1) return refuse("D_n with n odd and s in {n-1, n}: " + prior);
      if (n == 4) return refuse("D_4 with s in {3, 4} is carried to s = 1 by triality: " + prior);
      return true;
    case Family::E6:
      if (n != 6) return refuse("E6 has rank 6");
      if (s == 6 || s == 1) return true;
      return refuse("E6: only s = 6 (and s = 1 by symmetry) is constructed");
    case Family::E7:
      if (n != 7) return refuse("E7 has rank 7");
      if (s == 3) return true;
      return refuse("E7: only s = 3 is constructed");
  }
  return refuse("unknown family");
}

std::vector<int> derive_T(const Candidate& c) {
  const auto& p = c.parabolic;
  std::set<int> taken(c.T_star.begin(), c.T_star.end());
  for (const auto& g : c.gamma_sets) taken.insert(g.roots.begin(), g.roots.end());
  std::vector<int> out;
  for (int id = 0; id < c.system->num_roots(); ++id)
    if (p.in_p_star(id) && !taken.count(id)) out.push_back(id);
  return out;
}

bool check_T_against_paper(const Candidate& c) {
  auto listed = c.T_listed;
  std::sort(listed.begin(), listed.end());
  return std::adjacent_find(listed.begin(), listed.end()) == listed.end() && listed == c.T;
}

void finalize_candidate(Candidate& c) {
  const RootSystem& sys = *c.system;
  c.S_plus.clear();
  c.S_minus.clear();
  c.S_mixed.clear();
  const std::set<int> listed(c.S_mixed_listed.begin(), c.S_mixed_listed.end());
  for (const auto& g : c.gamma_sets) {
    bool pos = false, neg = false;
    for (int a : g.roots) (sys.is_positive(a) ? pos : neg) = true;
    // A listed S^m takes precedence; it differs from the sign rule only for D4, s = 2.
    if (listed.count(g.centre))
      c.S_mixed.push_back(g.centre);
    else if (pos && !neg)
      c.S_plus.push_back(g.centre);
    else if (neg && !pos)
      c.S_minus.push_back(g.centre);
    else
      c.S_mixed.push_back(g.centre);
  }
  for (auto& g : c.gamma_sets) std::sort(g.roots.begin(), g.roots.end());
  c.T = derive_T(c);
}

Candidate build_case(Family family, int n, int s) {
  std::string why;
  if (!in_scope(family, n, s, &why)) throw OutOfScope(why);
  Candidate c;
  c.system = std::make_shared<RootSystem>(family, n);
  c.family = family;
  c.n = n;
  c.s = s;
  c.model_s = s;
  int build_s = s;
  if (family == Family::D && s == n - 1 && n % 2 == 0) build_s = n;
  if (family == Family::E6 && s == 1) build_s = 6;
  c.mirrored = build_s != s;
  c.model_s = build_s;
  c.s = build_s;
  c.parabolic = build_parabolic(*c.system, build_s);
  switch (family) {
    case Family::B:
      c.variant = Variant::B;
      build_B(c);
      break;
    case Family::D:
      if (build_s == n) {
        c.variant = Variant::DExtremal;
        build_D_extremal(c);
      } else {
        c.variant = Variant::D;
        build_D(c);
      }
      break;
    case Family::E6:
      c.variant = Variant::E6;
      build_E6(c);
      break;
    case Family::E7:
      c.variant = Variant::E7;
      build_E7(c);
      break;
  }
  if (c.mirrored) {
    apply_automorphism(c, diagram_automorphism(*c.system));
    c.s = s;
    c.parabolic = build_parabolic(*c.system, s);
  }
  finalize_candidate(c);
  return c;
}

std::vector<CaseId> enumerate_cases(int max_rank) {
  std::vector<CaseId> out;
  for (int n = 2; n <= max_rank; ++n)
    for (int s = 2; s <= n; s += 2) out.push_back({Family::B, n, s});
  for (int n = 4; n <= max_rank; ++n) {
    for (int s = 2; s <= n - 2; s += 2) out.push_back({Family::D, n, s});
    if (n % 2 == 0 && n >= 6) {
      out.push_back({Family::D, n, n - 1});
      out.push_back({Family::D, n, n});
    }
  }
  if (max_rank >= 6) {
    out.push_back({Family::E6, 6, 1});
    out.push_back({Family::E6, 6, 6});
  }
  if (max_rank >= 7) out.push_back({Family::E7, 7, 3});
  return out;
}

std::vector<Rational> expected_eigenvalues(Variant v, int n, int s) {
  std::vector<Rational> out;
  auto push = [&](long x) { out.emplace_back(x); };
  switch (v) {
    case Variant::B:
    case Variant::D:
      for (int i = 1; i <= s / 4; ++i) push(s + 4 * i - 1);
      for (int i = s / 4 + 1; i <= s / 2 - 1; ++i) push(3 * s - 4 * i + 1);
      push(s / 2 + 1);
      push(s / 2 - 1);
      if (v == Variant::B) {
        if (n > s) {
          push(s + 1);
          for (int j = 1; j <= (n - s) / 2; ++j) push(s + 4 * j - 1);
          for (int j = 1; j <= (n - s - 1) / 2; ++j) push(s + 4 * j + 1);
        }
      } else {
        push(n - s / 2 - 1);
        push(s + 1);
        for (int j = 1; j <= (n - s - 1) / 2; ++j) push(s + 4 * j - 1);
        for (int j = 1; j <= (n - s - 2) / 2; ++j) push(s + 4 * j + 1);
      }
      break;
    case Variant::DExtremal:
      for (int i = 1; i <= n / 2 - 3; ++i) push(2 * (n - i) + 1);
      push(n + 5);
      push(n / 2 - 1);
      push(n / 2 + 1);
      push(n / 2 + 3);
      break;
    case Variant::E6:
      for (long x : {5, 7, 17}) push(x);
      break;
    case Variant::E7:
      for (long x : {2, 5, 7, 9, 17}) push(x);
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> expected_lower_bound(Variant v, int n, int s) {
  std::vector<Rational> out;
  auto rep = [&](long w, int times) {
    for (int k = 0; k < times; ++k) out.emplace_back(w);
  };
  switch (v) {
    case Variant::B:
      if (n == s) {
        rep(2, 2);
        rep(4, n / 2 - 1);
      } else {
        rep(1, 2);
        rep(2, n - 1 - s / 2);
      }
      break;
    case Variant::D:
      rep(1, 3);
      rep(2, n - 2 - s / 2);
      break;
    case Variant::DExtremal:
      rep(2, 3);
      rep(4, n / 2 - 2);
      break;
    case Variant::E6:
      rep(3, 2);
      rep(6, 1);
      break;
    case Variant::E7:
      rep(1, 1);
      rep(2, 3);
      rep(4, 1);
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace artifact
