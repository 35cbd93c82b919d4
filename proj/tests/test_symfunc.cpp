#include <doctest.h>

#include "agstab/error.hpp"
#include "agstab/molien.hpp"
#include "agstab/symfunc.hpp"
#include "support.hpp"

using namespace agstab;
using namespace testing_support;

TEST_CASE("partition counts") {
  const auto p = partition_numbers(15);
  for (std::size_t n = 0; n <= 15; ++n)
    CHECK(BigInt(partitions(n).size()) == p[n]);
  CHECK(partitions(4).front().parts == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(partitions(4).back().parts == std::vector<std::size_t>{4});
  for (const auto &type : partitions(7))
    CHECK(type.degree() == 7);
}

TEST_CASE("h_n power-sum coefficients") {
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto h = h_in_power_sums(n);
    Rational total = 0;
    for (const auto &[type, c] : h.terms)
      total += c;
    CHECK(total == 1);
  }
  // h_2 = (p_1^2 + p_2) / 2
  const auto h2 = h_in_power_sums(2);
  CHECK(h2.terms.at(CycleType{{1, 1}}) == Rational(1, 2));
  CHECK(h2.terms.at(CycleType{{2}}) == Rational(1, 2));
}

TEST_CASE("h_n[1/(1-t)] counts partitions with at most n parts") {
  const std::size_t order = 18;
  const auto geo = series_inverse(one_minus_t_pow(1, order));
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::size_t> parts;
    for (std::size_t i = 1; i <= n; ++i)
      parts.push_back(i);
    const auto oracle = restricted_partitions(order, parts);
    const auto h = plethysm_h(n, geo);
    for (std::size_t k = 0; k <= order; ++k)
      CHECK(h[k] == Rational(oracle[k]));
  }
}

TEST_CASE("wreath-product Molien equals h_n plethysm") {
  const std::size_t order = 15;
  const std::vector<std::pair<std::string, PermGroup>> bases{
      {"trivial", trivial_group(1)}, {"S2", symmetric_group(2)}, {"S3", symmetric_group(3)}};
  for (const auto &[name, base] : bases) {
    const auto p = molien_series(LinearAction::permutation(base), order);
    for (std::size_t n = 1; n <= 3; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      const auto w = molien_series(LinearAction::permutation(wreath_product(base, n)), order);
      CHECK(w == plethysm_h(n, p));
    }
  }
}

TEST_CASE("Exp product formula equals the h_n sum on corpus series") {
  for (const auto &[name, p] : corpus_series(20)) {
    CAPTURE(name);
    CHECK(exp_series(p) == exp_series_via_h(p));
  }
}

TEST_CASE("graded sum of plethysms is Exp of the shifted series") {
  const std::size_t order = 16;
  for (const auto &[name, p] : corpus_series(order)) {
    const auto with_one = p + TruncatedSeries::one(order);
    for (std::size_t alpha = 1; alpha <= 3; ++alpha) {
      CAPTURE(name);
      CAPTURE(alpha);
      TruncatedSeries lhs(order);
      for (std::size_t n = 0; n * alpha <= order; ++n)
        lhs += plethysm_h(n, with_one).shifted(n * alpha);
      CHECK(lhs == exp_series(with_one.shifted(alpha)));
    }
  }
}

TEST_CASE("Exp domain errors") {
  CHECK_THROWS_AS(exp_series(TruncatedSeries::one(4)), NonzeroConstant);
  CHECK_THROWS_AS(exp_series_via_h(TruncatedSeries::one(4)), NonzeroConstant);
  CHECK_THROWS_AS(exp_series(TruncatedSeries(2, {Rational(0), Rational(1, 2)})),
                  NonIntegralCoefficient);
  CHECK_THROWS_AS(exp_series(TruncatedSeries::from_integers(2, {0, -1})), NonIntegralCoefficient);
  CHECK(exp_series(TruncatedSeries(5)) == TruncatedSeries::one(5));
}
