#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "agstab/perm.hpp"
#include "agstab/series.hpp"

namespace agstab {

/// All partitions of n as weakly increasing part lists, in lexicographic
/// order. Cached per n; the returned reference stays valid.
const std::vector<CycleType> &partitions(std::size_t n);

/// h_n = (1/n!) sum_lambda c_lambda p_lambda, keyed by cycle type lambda.
struct PowerSumExpansion {
  std::size_t n = 0;
  std::map<CycleType, Rational> terms;
};

PowerSumExpansion h_in_power_sums(std::size_t n);

/// h_n[P]: each p_i is replaced by P(t^i).
TruncatedSeries plethysm_h(std::size_t n, const TruncatedSeries &p);

/// Plethystic exponential prod_i (1 - t^i)^(-c_i) of P = sum_{i>=1} c_i t^i.
/// Throws NonzeroConstant if P(0) != 0 and NonIntegralCoefficient if some
/// c_i is negative or fractional.
TruncatedSeries exp_series(const TruncatedSeries &p);

/// sum_{n=0}^{order} h_n[P]; agrees with exp_series wherever that is
/// defined. Requires P(0) = 0.
TruncatedSeries exp_series_via_h(const TruncatedSeries &p);

} // namespace agstab
