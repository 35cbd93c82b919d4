#include "agstab/matrix.hpp"

#include <utility>

namespace agstab {

RationalMatrix::RationalMatrix(std::size_t size, std::vector<Rational> row_major)
    : size_(size), entries_(std::move(row_major)) {
  if (size == 0 || entries_.size() != size * size)
    throw InputError("matrix entries do not form a square");
}

RationalMatrix RationalMatrix::identity(std::size_t size) {
  RationalMatrix m(size);
  for (std::size_t i = 0; i < size; ++i)
    m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::permutation(const std::vector<std::size_t> &images) {
  RationalMatrix m(images.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    m(images[j], j) = 1;
  return m;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < size_; ++i)
    t += (*this)(i, i);
  return t;
}

Rational RationalMatrix::determinant() const {
  // Fraction-tracking Gaussian elimination.
  std::vector<Rational> a = entries_;
  const std::size_t n = size_;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p * n + c] == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a[p * n + j], a[c * n + j]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i * n + c] == 0)
        continue;
      Rational f = a[i * n + c] / a[c * n + c];
      for (std::size_t j = c; j < n; ++j)
        a[i * n + j] -= f * a[c * n + j];
    }
  }
  return det;
}

RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b) {
  if (a.size() != b.size())
    throw InputError("matrix size mismatch");
  const std::size_t n = a.size();
  RationalMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::vector<Rational> characteristic_polynomial(const RationalMatrix &a) {
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
  const std::size_t n = a.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i)
      next(i, i) += c[n - k + 1];
    m = std::move(next);
    c[n - k] = -(a * m).trace() / static_cast<long>(k);
  }
  return c;
}

TruncatedSeries det_one_minus_tA(const RationalMatrix &a, std::optional<std::size_t> order) {
  const std::size_t n = a.size();
  const std::vector<Rational> c = characteristic_polynomial(a);
  TruncatedSeries s(order.value_or(n));
  // det(1 - tA) = t^n det(t^{-1} - A): coefficient of t^k is c_{n-k}
  for (std::size_t k = 0; k <= n && k <= s.order(); ++k)
    s[k] = c[n - k];
  return s;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(std::vector<RationalRow> &rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty())
    return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0)
      ++p;
    if (p == rows.size())
      continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0)
        continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j)
        rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

std::size_t rank_of(std::vector<RationalRow> rows) {
  for (const auto &row : rows)
    if (row.size() != rows.front().size())
      throw InputError("rows of unequal length");
  return echelon(rows).size();
}

std::vector<std::size_t> independent_subset(const std::vector<RationalRow> &rows) {
  // Incremental: keep an echelon basis and reduce each candidate against it.
  std::vector<std::size_t> chosen;
  std::vector<RationalRow> basis;
  std::vector<std::size_t> pivot_of;
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    RationalRow v = rows[idx];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::size_t pc = pivot_of[b];
      if (v[pc] == 0)
        continue;
      Rational f = v[pc] / basis[b][pc];
      for (std::size_t j = pc; j < v.size(); ++j)
        v[j] -= f * basis[b][j];
    }
    std::size_t pc = 0;
    while (pc < v.size() && v[pc] == 0)
      ++pc;
    if (pc == v.size())
      continue;
    chosen.push_back(idx);
    // keep basis sorted by pivot so later reductions clear left to right
    std::size_t pos = 0;
    while (pos < pivot_of.size() && pivot_of[pos] < pc)
      ++pos;
    basis.insert(basis.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivot_of.insert(pivot_of.begin() + static_cast<std::ptrdiff_t>(pos), pc);
  }
  return chosen;
}

std::optional<RationalRow> solve_in_span(const std::vector<RationalRow> &basis,
                                         const RationalRow &target) {
  const std::size_t m = basis.size();
  const std::size_t len = target.size();
  // Augmented system with one row per coordinate: [b_0[i] ... b_{m-1}[i] | target[i]]
  std::vector<RationalRow> sys(len, RationalRow(m + 1));
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t k = 0; k < m; ++k)
      sys[i][k] = basis[k][i];
    sys[i][m] = target[i];
  }
  std::vector<std::size_t> pivots = echelon(sys);
  if (!pivots.empty() && pivots.back() == m)
    return std::nullopt;
  if (pivots.size() != m)
    throw InputError("solve_in_span: basis rows are dependent");
  RationalRow x(m);
  for (std::size_t r = m; r-- > 0;) {
    Rational acc = sys[r][m];
    for (std::size_t k = r + 1; k < m; ++k)
      acc -= sys[r][k] * x[k];
    x[r] = acc / sys[r][r];
  }
  return x;
}

} // namespace agstab
