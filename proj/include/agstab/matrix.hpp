#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "agstab/error.hpp"
#include "agstab/rational.hpp"
#include "agstab/series.hpp"

namespace agstab {

/// Dense square matrix over Q, row-major.
class RationalMatrix {
public:
  explicit RationalMatrix(std::size_t size) : size_(size), entries_(size * size) {
    if (size == 0)
      throw InputError("matrix size must be positive");
  }
  RationalMatrix(std::size_t size, std::vector<Rational> row_major);

  static RationalMatrix identity(std::size_t size);
  /// Column j holds e_{images[j]}, so M e_j = e_{images[j]}.
  static RationalMatrix permutation(const std::vector<std::size_t> &images);

  std::size_t size() const { return size_; }
  const Rational &operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
  Rational &operator()(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }

  Rational trace() const;
  Rational determinant() const;

  friend bool operator==(const RationalMatrix &, const RationalMatrix &) = default;

private:
  std::size_t size_;
  std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b);

/// Coefficients c_0..c_r of det(x*1 - A) = x^r + c_{r-1} x^{r-1} + ... + c_0,
/// by the Faddeev-LeVerrier recurrence (exact over Q).
std::vector<Rational> characteristic_polynomial(const RationalMatrix &a);

/// det(1 - tA) as a polynomial truncated at `order` (default: the matrix size).
TruncatedSeries det_one_minus_tA(const RationalMatrix &a, std::optional<std::size_t> order = {});

using RationalRow = std::vector<Rational>;

/// Rank over Q of a list of equal-length rows.
std::size_t rank_of(std::vector<RationalRow> rows);

/// Indices of a maximal independent subset of `rows`, chosen greedily in
/// input order.
std::vector<std::size_t> independent_subset(const std::vector<RationalRow> &rows);

/// Coefficients x with sum_k x_k basis[k] = target, if target lies in the
/// span of the (independent) basis rows.
std::optional<RationalRow> solve_in_span(const std::vector<RationalRow> &basis,
                                         const RationalRow &target);

} // namespace agstab
