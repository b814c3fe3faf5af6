#include "artifact/linalg.hpp"

#include <stdexcept>

namespace artifact {

long to_long(const Rational& q) {
  if (q.get_den() != 1 || !q.get_num().fits_slong_p())
    throw std::domain_error("rational is not a machine integer: " + q.get_str());
  return q.get_num().get_si();
}

SparseVec make_sparse(const QVec& dense) {
  SparseVec out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.emplace_back(static_cast<int>(i), dense[i]);
  return out;
}

RowBasis::RowBasis(int ncols) : ncols_(ncols), pivot_of_col_(ncols, -1) {}

std::vector<Rational> RowBasis::reduce(const SparseVec& row) const {
  std::vector<Rational> w(ncols_);
  for (const auto& [c, v] : row) {
    if (c < 0 || c >= ncols_) throw std::out_of_range("RowBasis: column out of range");
    w[c] = v;
  }
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const int p = pivots_[k];
    if (w[p] == 0) continue;
    const SparseVec& r = rows_[k];
    Rational lead;
    for (const auto& [c, v] : r)
      if (c == p) {
        lead = v;
        break;
      }
    const Rational f = w[p] / lead;
    for (const auto& [c, v] : r) w[c] -= f * v;
  }
  return w;
}

bool RowBasis::add(const SparseVec& row) {
  auto w = reduce(row);
  int p = -1;
  SparseVec out;
  for (int c = 0; c < ncols_; ++c) {
    if (w[c] == 0) continue;
    if (p < 0) p = c;
    out.emplace_back(c, std::move(w[c]));
  }
  if (p < 0) return false;
  pivot_of_col_[p] = static_cast<int>(rows_.size());
  pivots_.push_back(p);
  rows_.push_back(std::move(out));
  return true;
}

bool RowBasis::contains(const SparseVec& row) const {
  auto w = reduce(row);
  for (const auto& v : w)
    if (v != 0) return false;
  return true;
}

Rational RowBasis::determinant() const {
  if (rank() != ncols_) return Rational(0);
  Rational d = 1;
  for (std::size_t k = 0; k < rows_.size(); ++k)
    for (const auto& [c, v] : rows_[k])
      if (c == pivots_[k]) {
        d *= v;
        break;
      }
  std::vector<bool> seen(pivots_.size(), false);
  int transpositions = 0;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(pivots_[j])) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 ? Rational(-d) : d;
}

int rank(const std::vector<SparseVec>& rows, int ncols) {
  RowBasis b(ncols);
  for (const auto& r : rows) {
    b.add(r);
    if (b.rank() == ncols) break;
  }
  return b.rank();
}

Rational determinant(const std::vector<SparseVec>& rows, int n) {
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("determinant: not square");
  RowBasis b(n);
  for (const auto& r : rows)
    if (!b.add(r)) return Rational(0);
  return b.determinant();
}

Rational determinant(const std::vector<QVec>& m) {
  std::vector<SparseVec> rows;
  for (const auto& r : m) {
    if (r.size() != m.size()) throw std::invalid_argument("determinant: not square");
    rows.push_back(make_sparse(r));
  }
  return determinant(rows, static_cast<int>(m.size()));
}

std::optional<QVec> solve(const std::vector<QVec>& a, const QVec& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve: size mismatch");
  std::vector<QVec> m(a);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("solve: not square");
    m[i].push_back(b[i]);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  QVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[r], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace artifact
