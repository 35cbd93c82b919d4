#include "agstab/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "agstab/error.hpp"

namespace agstab {

std::string to_string(const Rational &q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty())
    throw InputError("empty rational");
  if (s.front() == '+')
    s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw InputError("malformed rational '" + std::string(text) + "'");
  if (q.get_den() == 0)
    throw InputError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) { return monomial(order, 0); }

TruncatedSeries TruncatedSeries::monomial(std::size_t order, std::size_t degree,
                                          const Rational &c) {
  TruncatedSeries s(order);
  if (degree <= order)
    s.coeffs_[degree] = c;
  return s;
}

TruncatedSeries TruncatedSeries::from_integers(std::size_t order,
                                               const std::vector<long> &coeffs) {
  TruncatedSeries s(order);
  for (std::size_t k = 0; k < coeffs.size() && k <= order; ++k)
    s.coeffs_[k] = coeffs[k];
  return s;
}

TruncatedSeries TruncatedSeries::polynomial(std::size_t order,
                                            const std::map<std::size_t, long> &terms) {
  TruncatedSeries s(order);
  for (const auto &[k, c] : terms)
    if (k <= order)
      s.coeffs_[k] += c;
  return s;
}

Rational TruncatedSeries::coefficient(std::size_t k) const {
  return k <= order() ? coeffs_[k] : Rational(0);
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &q) { return q == 0; });
}

bool TruncatedSeries::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), is_integer);
}

bool TruncatedSeries::has_nonnegative_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational &q) { return is_integer(q) && q >= 0; });
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  std::vector<Rational> c(coeffs_.begin(),
                          coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
  return TruncatedSeries(order, std::move(c));
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
  TruncatedSeries s(order());
  for (std::size_t i = 0; i + k <= order(); ++i)
    s.coeffs_[i + k] = coeffs_[i];
  return s;
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &rhs) {
  coeffs_.resize(std::min(order(), rhs.order()) + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &rhs) {
  coeffs_.resize(std::min(order(), rhs.order()) + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(const Rational &c) {
  for (auto &q : coeffs_)
    q *= c;
  return *this;
}

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b) {
  TruncatedSeries r = a;
  r += b;
  return r;
}

TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b) {
  TruncatedSeries r = a;
  r -= b;
  return r;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) {
  const std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries r(n);
  Rational tmp;
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j] == 0)
        continue;
      tmp = a[i] * b[j];
      r[i + j] += tmp;
    }
  }
  return r;
}

TruncatedSeries operator*(const Rational &c, const TruncatedSeries &a) {
  TruncatedSeries r = a;
  r *= c;
  return r;
}

TruncatedSeries series_inverse(const TruncatedSeries &a) {
  if (a[0] == 0)
    throw ZeroConstantTerm();
  const std::size_t n = a.order();
  TruncatedSeries b(n);
  const Rational inv0 = 1 / a[0];
  b[0] = inv0;
  Rational acc, tmp;
  for (std::size_t k = 1; k <= n; ++k) {
    acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (a[j] == 0)
        continue;
      tmp = a[j] * b[k - j];
      acc += tmp;
    }
    b[k] = -acc * inv0;
  }
  return b;
}

TruncatedSeries series_substitute_power(const TruncatedSeries &a, std::size_t k) {
  if (k == 0)
    throw InputError("substitution power must be positive");
  TruncatedSeries r(a.order());
  for (std::size_t i = 0; i * k <= a.order(); ++i)
    r[i * k] = a[i];
  return r;
}

TruncatedSeries one_minus_t_pow(std::size_t k, std::size_t order) {
  TruncatedSeries s = TruncatedSeries::one(order);
  if (k <= order)
    s[k] -= 1;
  return s;
}

TruncatedSeries product_form(const std::map<std::size_t, BigInt> &exponents, std::size_t order) {
  // s_m = sum over divisors i of m of i * c_i
  std::vector<BigInt> s(order + 1);
  for (const auto &[i, c] : exponents) {
    if (i == 0)
      throw InputError("product_form degrees must be positive");
    if (c < 0)
      throw InputError("product_form exponents must be non-negative");
    if (c == 0)
      continue;
    for (std::size_t m = i; m <= order; m += i)
      s[m] += c * static_cast<unsigned long>(i);
  }
  std::vector<BigInt> a(order + 1);
  a[0] = 1;
  BigInt acc;
  for (std::size_t n = 1; n <= order; ++n) {
    acc = 0;
    for (std::size_t m = 1; m <= n; ++m)
      if (s[m] != 0)
        acc += s[m] * a[n - m];
    // exact: the product has integer coefficients
    mpz_divexact_ui(a[n].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
  }
  TruncatedSeries r(order);
  for (std::size_t n = 0; n <= order; ++n)
    r[n] = Rational(a[n]);
  return r;
}

TruncatedSeries inverse_cycle_product(std::span<const std::size_t> parts, std::size_t order) {
  std::vector<BigInt> a(order + 1);
  a[0] = 1;
  for (std::size_t len : parts)
    for (std::size_t k = len; k <= order; ++k)
      a[k] += a[k - len];
  TruncatedSeries r(order);
  for (std::size_t n = 0; n <= order; ++n)
    r[n] = Rational(a[n]);
  return r;
}

nlohmann::json to_json(const TruncatedSeries &s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto &q : s.coefficients())
    coeffs.push_back(to_string(q));
  return {{"order", s.order()}, {"coefficients", coeffs}};
}

TruncatedSeries series_from_json(const nlohmann::json &j) {
  if (!j.is_object() || !j.contains("coefficients") || !j["coefficients"].is_array())
    throw InputError("series JSON needs a \"coefficients\" array");
  std::vector<Rational> c;
  for (const auto &e : j["coefficients"]) {
    if (e.is_string())
      c.push_back(parse_rational(e.get<std::string>()));
    else if (e.is_number_integer())
      c.emplace_back(e.get<long>());
    else
      throw InputError("series coefficients must be \"p/q\" strings or integers");
  }
  if (c.empty())
    throw InputError("series JSON has no coefficients");
  std::size_t order = c.size() - 1;
  if (j.contains("order")) {
    if (!j["order"].is_number_integer() || j["order"].get<long>() < 0)
      throw InputError("series \"order\" must be a non-negative integer");
    order = j["order"].get<std::size_t>();
  }
  return TruncatedSeries(order, std::move(c));
}

std::string to_display(const TruncatedSeries &s) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k <= s.order(); ++k) {
    const Rational &c = s[k];
    if (c == 0)
      continue;
    Rational mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0 || mag != 1)
      out << mag.get_str() << (k > 0 ? "*" : "");
    if (k == 1)
      out << "t";
    else if (k > 1)
      out << "t^" << k;
  }
  if (first)
    out << "0";
  out << " + O(t^" << s.order() + 1 << ")";
  return out.str();
}

} // namespace agstab
