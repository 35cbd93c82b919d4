#include "agstab/symfunc.hpp"

#include <memory>
#include <mutex>

#include "agstab/error.hpp"

namespace agstab {

namespace {

void extend(std::size_t remaining, std::size_t min_part, std::vector<std::size_t> &prefix,
            std::vector<CycleType> &out) {
  if (remaining == 0) {
    out.push_back({prefix});
    return;
  }
  for (std::size_t part = min_part; part <= remaining; ++part) {
    // the remaining parts must all be >= part
    if (remaining - part != 0 && remaining - part < part)
      continue;
    prefix.push_back(part);
    extend(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

const std::vector<CycleType> &partitions(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<std::vector<CycleType>>> cache;
  std::lock_guard lock(mu);
  auto &slot = cache[n];
  if (!slot) {
    slot = std::make_unique<std::vector<CycleType>>();
    std::vector<std::size_t> prefix;
    extend(n, 1, prefix, *slot);
  }
  return *slot;
}

PowerSumExpansion h_in_power_sums(std::size_t n) {
  PowerSumExpansion h{n, {}};
  const BigInt nfact = factorial(n);
  for (const auto &type : partitions(n))
    h.terms.emplace(type, make_rational(cycle_type_count(n, type), nfact));
  return h;
}

TruncatedSeries plethysm_h(std::size_t n, const TruncatedSeries &p) {
  const std::size_t order = p.order();
  if (n == 0)
    return TruncatedSeries::one(order);

  // lowest degree with a nonzero coefficient; terms of valuation > order vanish
  std::size_t val = 0;
  while (val <= order && p[val] == 0)
    ++val;
  if (val > order)
    return TruncatedSeries(order);

  if (val != 0 && n * val > order)
    return TruncatedSeries(order);

  // powers[part][m - 1] = P(t^part)^m, grown on demand
  std::map<std::size_t, std::vector<TruncatedSeries>> powers;
  auto power = [&](std::size_t part, std::size_t mult) -> const TruncatedSeries & {
    auto &chain = powers[part];
    if (chain.empty())
      chain.push_back(series_substitute_power(p, part));
    while (chain.size() < mult)
      chain.push_back(chain.back() * chain.front());
    return chain[mult - 1];
  };

  const BigInt nfact = factorial(n);
  TruncatedSeries sum(order);
  for (const auto &type : partitions(n)) {
    TruncatedSeries term = TruncatedSeries::one(order);
    for (std::size_t i = 0; i < type.parts.size();) {
      std::size_t j = i;
      while (j < type.parts.size() && type.parts[j] == type.parts[i])
        ++j;
      term = term * power(type.parts[i], j - i);
      i = j;
    }
    term *= make_rational(cycle_type_count(n, type), nfact);
    sum += term;
  }
  return sum;
}

TruncatedSeries exp_series(const TruncatedSeries &p) {
  if (p[0] != 0)
    throw NonzeroConstant();
  std::map<std::size_t, BigInt> exponents;
  for (std::size_t i = 1; i <= p.order(); ++i) {
    const Rational &c = p[i];
    if (!is_integer(c) || c < 0)
      throw NonIntegralCoefficient("Exp needs non-negative integer coefficients; t^" +
                                   std::to_string(i) + " has " + to_string(c));
    if (c != 0)
      exponents.emplace(i, c.get_num());
  }
  return product_form(exponents, p.order());
}

TruncatedSeries exp_series_via_h(const TruncatedSeries &p) {
  if (p[0] != 0)
    throw NonzeroConstant();
  TruncatedSeries sum(p.order());
  for (std::size_t n = 0; n <= p.order(); ++n)
    sum += plethysm_h(n, p);
  return sum;
}

} // namespace agstab
