#include "artifact/rootsys.hpp"

#include "artifact/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace artifact {

std::string family_name(Family f) {
  switch (f) {
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "B") return Family::B;
  if (s == "D") return Family::D;
  if (s == "E6") return Family::E6;
  if (s == "E7") return Family::E7;
  throw std::invalid_argument("unknown family: " + s);
}

Rational inner(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

QVec unit(int dim, int i) {
  QVec v(dim);
  v[i] = 1;
  return v;
}

QVec add(QVec a, const QVec& b, const Rational& f = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += f * b[i];
  return a;
}

std::vector<QVec> simple_coords(Family family, int n) {
  std::vector<QVec> out;
  if (family == Family::B || family == Family::D) {
    for (int i = 0; i + 1 < n; ++i) out.push_back(add(unit(n, i), unit(n, i + 1), -1));
    if (family == Family::B)
      out.push_back(unit(n, n - 1));
    else
      out.push_back(add(unit(n, n - 2), unit(n, n - 1)));
    return out;
  }
  // E6/E7 inside the E8 lattice of R^8.
  const Rational half(1, 2);
  QVec a1(8, -half);
  a1[0] = half;
  a1[7] = half;
  out.push_back(a1);
  out.push_back(add(unit(8, 0), unit(8, 1)));
  for (int k = 0; k + 2 < n; ++k) out.push_back(add(unit(8, k + 1), unit(8, k), -1));
  return out;
}

int height(const std::vector<int>& c) {
  int h = 0;
  for (int x : c) h += x;
  return h;
}

}  // namespace

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank) {
  const bool ok = (family == Family::B && rank >= 2) || (family == Family::D && rank >= 4) ||
                  (family == Family::E6 && rank == 6) || (family == Family::E7 && rank == 7);
  if (!ok)
    throw std::invalid_argument("unsupported root system " + family_name(family) + " rank " +
                                std::to_string(rank));
  dim_ = (family == Family::B || family == Family::D) ? rank : 8;
  const auto sc = simple_coords(family, rank);

  gram_.assign(rank, std::vector<Rational>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) gram_[i][j] = artifact::inner(sc[i], sc[j]);
  gram2_.assign(rank, std::vector<long>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) gram2_[i][j] = to_long(2 * gram_[i][j]);
  cartan_.assign(rank, std::vector<long>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) cartan_[i][j] = to_long(2 * gram_[i][j] / gram_[j][j]);

  // Positive roots by height, using root strings through simple roots.
  std::map<std::vector<int>, bool> known;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> c(rank, 0);
    c[i] = 1;
    known[c] = true;
    layer.push_back(c);
  }
  std::vector<std::vector<int>> positive = layer;
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& a : layer) {
      for (int i = 0; i < rank; ++i) {
        int p = 0;
        auto b = a;
        while (true) {
          b[i] -= 1;
          if (!known.count(b)) break;
          ++p;
        }
        long pair = 0;
        for (int k = 0; k < rank; ++k) pair += a[k] * cartan_[k][i];
        if (p - pair <= 0) continue;
        auto c = a;
        c[i] += 1;
        if (known.count(c)) continue;
        known[c] = true;
        next.push_back(c);
      }
    }
    positive.insert(positive.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(positive.begin(), positive.end(), [](const auto& x, const auto& y) {
    const int hx = height(x), hy = height(y);
    return hx != hy ? hx < hy : x < y;
  });
  npos_ = static_cast<int>(positive.size());
  for (int sign : {1, -1}) {
    for (const auto& c : positive) {
      Root r;
      r.coeffs = c;
      for (auto& x : r.coeffs) x *= sign;
      r.coords = QVec(dim_);
      for (int i = 0; i < rank; ++i)
        if (r.coeffs[i] != 0) r.coords = add(r.coords, sc[i], r.coeffs[i]);
      index_[r.coeffs] = static_cast<int>(roots_.size());
      roots_.push_back(std::move(r));
    }
  }
  for (int i = 0; i < rank; ++i) {
    std::vector<int> c(rank, 0);
    c[i] = 1;
    simple_ids_.push_back(index_.at(c));
    simple_.push_back(roots_[simple_ids_.back()]);
  }
}

std::string RootSystem::name() const {
  if (family_ == Family::E6 || family_ == Family::E7) return family_name(family_);
  return family_name(family_) + std::to_string(rank_);
}

int RootSystem::find(const std::vector<int>& coeffs) const {
  auto it = index_.find(coeffs);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::sum(int a, int b) const {
  const auto& x = roots_[a].coeffs;
  const auto& y = roots_[b].coeffs;
  std::vector<int> c(rank_);
  for (int i = 0; i < rank_; ++i) c[i] = x[i] + y[i];
  return find(c);
}

long RootSystem::inner2(int a, int b) const {
  const auto& x = roots_[a].coeffs;
  const auto& y = roots_[b].coeffs;
  long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (y[j] != 0) s += x[i] * y[j] * gram2_[i][j];
  }
  return s;
}

Rational RootSystem::inner(int a, int b) const {
  Rational q(inner2(a, b), 2);
  q.canonicalize();
  return q;
}

long RootSystem::norm2_times2(int id) const { return inner2(id, id); }

long RootSystem::pairing(int a, int b) const {
  const long num = 2 * inner2(a, b), den = inner2(b, b);
  if (num % den != 0) throw std::logic_error("non-integral Cartan pairing");
  return num / den;
}

long RootSystem::pairing_simple(int id, int j) const {
  long s = 0;
  const auto& c = roots_[id].coeffs;
  for (int k = 0; k < rank_; ++k) s += c[k] * cartan_[k][j];
  return s;
}

std::vector<long> RootSystem::coroot_coeffs(int id) const {
  const long n = inner2(id, id);
  std::vector<long> out(rank_);
  for (int i = 0; i < rank_; ++i) {
    const long num = roots_[id].coeffs[i] * gram2_[i][i];
    if (num % n != 0) throw std::logic_error("non-integral coroot");
    out[i] = num / n;
  }
  return out;
}

int RootSystem::reflect(int a, int b) const {
  const long p = pairing(a, b);
  std::vector<int> c = roots_[a].coeffs;
  for (int i = 0; i < rank_; ++i) c[i] -= static_cast<int>(p) * roots_[b].coeffs[i];
  return find(c);
}

QVec RootSystem::coords_of(const QVec& simple_coeffs) const {
  QVec v(dim_);
  for (int i = 0; i < rank_; ++i)
    if (simple_coeffs[i] != 0) v = add(v, simple_[i].coords, simple_coeffs[i]);
  return v;
}

RootSystem build_root_system(Family family, int rank) { return RootSystem(family, rank); }

int rho_height(const Root& r) { return height(r.coeffs); }

Rational weight_pairing(const RootSystem& sys, const QVec& simple_coeffs, int j) {
  Rational s = 0;
  for (int k = 0; k < sys.rank(); ++k) s += simple_coeffs[k] * sys.cartan(k, j);
  return s;
}

namespace {

Weight weight_dual_to(const RootSystem& sys, const std::vector<int>& nodes, int target) {
  // Solve sum_k c_k <alpha_k, alpha_j^vee> = delta_{target j} over k, j in nodes.
  const std::size_t m = nodes.size();
  std::vector<QVec> a(m, QVec(m));
  QVec b(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) a[r][c] = sys.cartan(nodes[c], nodes[r]);
    b[r] = nodes[r] == target ? 1 : 0;
  }
  auto x = solve(a, b);
  if (!x) throw std::logic_error("singular Cartan matrix");
  Weight w;
  w.simple_coeffs = QVec(sys.rank());
  for (std::size_t c = 0; c < m; ++c) w.simple_coeffs[nodes[c]] = (*x)[c];
  w.coords = sys.coords_of(w.simple_coeffs);
  return w;
}

}  // namespace

std::vector<Weight> fundamental_weights(const RootSystem& sys) {
  std::vector<int> all(sys.rank());
  for (int i = 0; i < sys.rank(); ++i) all[i] = i;
  std::vector<Weight> out;
  for (int i = 0; i < sys.rank(); ++i) out.push_back(weight_dual_to(sys, all, i));
  return out;
}

std::map<int, Weight> fundamental_weights_levi(const RootSystem& sys, const std::vector<int>& pi_prime) {
  for (int i : pi_prime)
    if (i < 0 || i >= sys.rank()) throw std::invalid_argument("pi' is not a subset of pi");
  std::map<int, Weight> out;
  for (int i : pi_prime) out[i] = weight_dual_to(sys, pi_prime, i);
  return out;
}

}  // namespace artifact
