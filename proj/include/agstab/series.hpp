#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "agstab/rational.hpp"

namespace agstab {

inline constexpr std::size_t kDefaultOrder = 32;

/// Power series over Q known up to and including t^order.
///
/// Binary operations take the smaller of the two orders, so stages of a
/// pipeline built at different orders compose without error.
class TruncatedSeries {
public:
  TruncatedSeries() : TruncatedSeries(0) {}
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

  /// Coefficients beyond `order` are dropped, missing ones are zero.
  TruncatedSeries(std::size_t order, std::vector<Rational> coeffs);

  static TruncatedSeries one(std::size_t order);
  static TruncatedSeries monomial(std::size_t order, std::size_t degree,
                                  const Rational &c = 1);
  /// Integer coefficient list, convenient for fixtures.
  static TruncatedSeries from_integers(std::size_t order,
                                       const std::vector<long> &coeffs);
  /// Sparse polynomial {degree: coefficient}.
  static TruncatedSeries polynomial(std::size_t order,
                                    const std::map<std::size_t, long> &terms);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational &operator[](std::size_t k) const { return coeffs_[k]; }
  Rational &operator[](std::size_t k) { return coeffs_[k]; }
  /// Zero past the truncation order instead of undefined.
  Rational coefficient(std::size_t k) const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool has_integer_coefficients() const;
  bool has_nonnegative_integer_coefficients() const;

  TruncatedSeries truncated(std::size_t order) const;
  /// Multiply by t^k, keeping the order.
  TruncatedSeries shifted(std::size_t k) const;

  TruncatedSeries &operator+=(const TruncatedSeries &rhs);
  TruncatedSeries &operator-=(const TruncatedSeries &rhs);
  TruncatedSeries &operator*=(const Rational &c);

  friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries operator*(const Rational &c, const TruncatedSeries &a);

inline TruncatedSeries series_add(const TruncatedSeries &a, const TruncatedSeries &b) {
  return a + b;
}
inline TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b) {
  return a * b;
}

/// Multiplicative inverse; throws ZeroConstantTerm when a(0) = 0.
TruncatedSeries series_inverse(const TruncatedSeries &a);

/// a(t^k), truncated to a's order.
TruncatedSeries series_substitute_power(const TruncatedSeries &a, std::size_t k);

/// 1 - t^k at the given order.
TruncatedSeries one_minus_t_pow(std::size_t k, std::size_t order);

/// prod_i (1 - t^i)^(-c_i), computed by the log-derivative recurrence
/// n a_n = sum_{m=1}^{n} s_m a_{n-m} with s_m = sum_{i | m} i c_i.
TruncatedSeries product_form(const std::map<std::size_t, BigInt> &exponents,
                             std::size_t order);

/// prod_j 1/(1 - t^{parts_j}); the Molien term of a permutation of the
/// given cycle type.
TruncatedSeries inverse_cycle_product(std::span<const std::size_t> parts,
                                      std::size_t order);

/// {"order": N, "coefficients": ["p/q", ...]}
nlohmann::json to_json(const TruncatedSeries &s);
TruncatedSeries series_from_json(const nlohmann::json &j);

/// Human readable "1 + 2*t + 3/2*t^2 + O(t^N)".
std::string to_display(const TruncatedSeries &s);

} // namespace agstab
