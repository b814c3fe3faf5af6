#include "artifact/chevalley.hpp"

#include <map>
#include <stdexcept>

namespace artifact {

namespace {

IntVec normalize(std::map<int, long>& acc) {
  IntVec out;
  for (const auto& [k, v] : acc)
    if (v != 0) out.emplace_back(k, v);
  return out;
}

}  // namespace

StructureTable::StructureTable(const RootSystem& sys)
    : sys_(&sys),
      nroots_(sys.num_roots()),
      table_(static_cast<std::size_t>(nroots_) * nroots_, 0),
      done_(table_.size(), 0),
      extraspecial_(sys.num_positive(), -1) {
  const int np = sys.num_positive();
  for (int xi = 0; xi < np; ++xi) {
    int best = -1;
    for (int a = 0; a < np; ++a) {
      const int b = sys.diff(xi, a);
      if (b < 0 || !sys.is_positive(b)) continue;
      if (best < 0 || sys.root(a).coeffs < sys.root(best).coeffs) best = a;
    }
    extraspecial_[xi] = best;
  }
  for (int a = 0; a < nroots_; ++a)
    for (int b = 0; b < nroots_; ++b) compute(a, b);
}

int StructureTable::string_below(int a, int b) const {
  int p = 0;
  int cur = b;
  while (true) {
    cur = sys_->diff(cur, a);
    if (cur < 0) return p;
    ++p;
  }
}

int StructureTable::compute(int a, int b) {
  const std::size_t key = static_cast<std::size_t>(a) * nroots_ + b;
  if (done_[key]) return table_[key];
  const RootSystem& s = *sys_;
  const int c = s.sum(a, b);
  int v = 0;
  if (c >= 0) {
    const bool pa = s.is_positive(a), pb = s.is_positive(b);
    if (pa && pb) {
      if (s.root(b).coeffs < s.root(a).coeffs) {
        v = -compute(b, a);
      } else {
        const int alpha = extraspecial_[c];
        const int beta = s.diff(c, alpha);
        if (a == alpha) {
          v = string_below(a, b) + 1;
        } else {
          // Four-root relation for alpha + beta - a - b = 0.
          const int gamma = a, delta = b;
          Rational acc = 0;
          const int bg = s.diff(beta, gamma);
          if (bg >= 0)
            acc += Rational(compute(beta, s.neg(gamma)) * compute(alpha, s.neg(delta))) / s.norm2(bg);
          const int ag = s.diff(alpha, gamma);
          if (ag >= 0)
            acc += Rational(compute(s.neg(gamma), alpha) * compute(beta, s.neg(delta))) / s.norm2(ag);
          const Rational val = s.norm2(c) * acc / compute(alpha, beta);
          v = static_cast<int>(to_long(val));
        }
      }
    } else if (!pa && !pb) {
      v = -compute(s.neg(a), s.neg(b));
    } else {
      const int c3 = s.neg(c);
      if (s.is_positive(c3) == pa)
        v = static_cast<int>(to_long(s.norm2(c3) * compute(c3, a) / s.norm2(b)));
      else
        v = static_cast<int>(to_long(s.norm2(c3) * compute(b, c3) / s.norm2(a)));
    }
  }
  table_[key] = v;
  done_[key] = 1;
  return v;
}

IntVec StructureTable::bracket(int u, int v) const {
  const RootSystem& s = *sys_;
  const bool ru = u < nroots_, rv = v < nroots_;
  if (!ru && !rv) return {};
  if (ru && rv) {
    if (u == s.neg(v)) {
      IntVec out;
      const auto cc = s.coroot_coeffs(u);
      for (int i = 0; i < s.rank(); ++i)
        if (cc[i] != 0) out.emplace_back(nroots_ + i, cc[i]);
      return out;
    }
    const int w = s.sum(u, v);
    if (w < 0) return {};
    return {{w, N(u, v)}};
  }
  if (!ru) {
    const long e = s.pairing_simple(v, u - nroots_);
    if (e == 0) return {};
    return {{v, e}};
  }
  const long e = s.pairing_simple(u, v - nroots_);
  if (e == 0) return {};
  return {{u, -e}};
}

IntVec StructureTable::bracket(const IntVec& x, const IntVec& y) const {
  std::map<int, long> acc;
  for (const auto& [u, a] : x)
    for (const auto& [v, b] : y)
      for (const auto& [w, c] : bracket(u, v)) acc[w] += a * b * c;
  return normalize(acc);
}

StructureTable build_structure_table(const RootSystem& sys) { return StructureTable(sys); }

bool jacobi_holds(const StructureTable& t, int u, int v, int w) {
  const IntVec xu{{u, 1}}, xv{{v, 1}}, xw{{w, 1}};
  std::map<int, long> acc;
  for (const auto& term : {t.bracket(xu, t.bracket(xv, xw)), t.bracket(xv, t.bracket(xw, xu)),
                           t.bracket(xw, t.bracket(xu, xv))})
    for (const auto& [k, c] : term) acc[k] += c;
  for (const auto& [k, c] : acc)
    if (c != 0) return false;
  return true;
}

}  // namespace artifact
