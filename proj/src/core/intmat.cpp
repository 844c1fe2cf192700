#include "dualcount/intmat.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace dualcount {

namespace {
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
}  // namespace

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m[0].size(), IntVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix c(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntVector multiply(const IntMatrix& a, const IntVector& v) {
  IntVector r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto x : m[i]) r[i].emplace_back(static_cast<long>(x));
  return r;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  if (a.empty()) return {};
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  RatMatrix c(a.size(), std::vector<mpq_class>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a = m;
  RatMatrix inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const mpq_class piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

mpq_class determinant(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a = m;
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

std::optional<IntMatrix> to_integer(const RatMatrix& m) {
  IntMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto& x : m[i]) {
      if (x.get_den() != 1) return std::nullopt;
      r[i].push_back(x.get_num().get_si());
    }
  return r;
}

IntMatrix hermite_row_basis(IntMatrix rows, int ncols) {
  std::size_t top = 0;
  for (int c = 0; c < ncols; ++c) {
    // Euclid on column c among rows[top..]
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (best == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[best][c]))) best = r;
      if (best == rows.size()) throw std::invalid_argument("lattice is not of full rank");
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        const std::int64_t q = floor_div(rows[r][c], rows[top][c]);
        for (int j = 0; j < ncols; ++j) rows[r][j] -= q * rows[top][j];
        if (rows[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[top][c] < 0)
      for (auto& x : rows[top]) x = -x;
    for (std::size_t r = 0; r < top; ++r) {
      const std::int64_t q = floor_div(rows[r][c], rows[top][c]);
      for (int j = 0; j < ncols; ++j) rows[r][j] -= q * rows[top][j];
    }
    ++top;
  }
  rows.resize(ncols);
  return rows;
}

IntVector reduce_mod_hermite(IntVector v, const IntMatrix& h) {
  for (std::size_t i = 0; i < h.size(); ++i) {
    const std::int64_t q = floor_div(v[i], h[i][i]);
    if (q != 0)
      for (std::size_t j = i; j < v.size(); ++j) v[j] -= q * h[i][j];
  }
  return v;
}

std::vector<int> smith_invariants(IntMatrix rows, int ncols) {
  const std::size_t nrows = rows.size();
  std::vector<std::int64_t> diag;
  std::size_t t = 0;
  for (; t < nrows && static_cast<int>(t) < ncols; ++t) {
    // pick smallest nonzero entry in the remaining block as pivot
    while (true) {
      std::size_t pr = nrows, pc = 0;
      for (std::size_t r = t; r < nrows; ++r)
        for (int c = static_cast<int>(t); c < ncols; ++c)
          if (rows[r][c] != 0 && (pr == nrows || std::llabs(rows[r][c]) < std::llabs(rows[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr == nrows) goto finished;
      std::swap(rows[t], rows[pr]);
      for (auto& row : rows) std::swap(row[t], row[pc]);
      bool clean = true;
      const std::int64_t p = rows[t][t];
      for (std::size_t r = t + 1; r < nrows; ++r) {
        const std::int64_t q = floor_div(rows[r][t], p);
        for (int j = static_cast<int>(t); j < ncols; ++j) rows[r][j] -= q * rows[t][j];
        if (rows[r][t] != 0) clean = false;
      }
      for (int c = static_cast<int>(t) + 1; c < ncols; ++c) {
        const std::int64_t q = floor_div(rows[t][c], p);
        for (std::size_t r = t; r < nrows; ++r) rows[r][c] -= q * rows[r][t];
        if (rows[t][c] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t r = t + 1; r < nrows && divides; ++r)
        for (int c = static_cast<int>(t) + 1; c < ncols; ++c)
          if (rows[r][c] % p != 0) {
            for (int j = static_cast<int>(t); j < ncols; ++j) rows[t][j] += rows[r][j];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(std::llabs(rows[t][t]));
  }
finished:
  if (static_cast<int>(diag.size()) < ncols) throw std::invalid_argument("lattice is not of full rank");
  std::vector<int> out;
  for (auto d : diag)
    if (d > 1) out.push_back(static_cast<int>(d));
  return out;
}

}  // namespace dualcount
