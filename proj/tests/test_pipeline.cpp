#include <doctest.h>

#include "agstab/error.hpp"
#include "agstab/pipeline.hpp"
#include "agstab/symfunc.hpp"
#include "support.hpp"

using namespace agstab;
using namespace testing_support;

namespace {

Dataset load(const std::string &name, std::size_t order) {
  return load_dataset(data_dir() / (name + ".json"), order);
}

TruncatedSeries odd_product(std::size_t order) {
  TruncatedSeries p = TruncatedSeries::one(order);
  for (std::size_t i = 1; i <= order; i += 2)
    p = p * series_inverse(one_minus_t_pow(i, order));
  return p;
}

ConeClassRecord count_only(std::size_t dim, std::size_t rank, long count) {
  ConeClassRecord r;
  r.name = "extra " + std::to_string(dim) + "/" + std::to_string(rank);
  r.dimension = dim;
  r.rank = rank;
  r.multiplicity = count;
  return r;
}

} // namespace

TEST_CASE("generator series of the standard cones") {
  const auto g = generator_series(load("standard", 20), 20);
  CHECK(g[0] == 0);
  for (std::size_t k = 1; k <= 20; ++k)
    CHECK(g[k] == 1);
}

TEST_CASE("generator series of sigma_1 and sigma_K3 matches the closed form") {
  const std::size_t n = 25;
  const auto g = with_display_constant(generator_series(load("sigma1-K3", n), n));
  const std::vector<std::size_t> den{1, 2, 3};
  const auto closed =
      TruncatedSeries::polynomial(n, {{0, 1}, {2, -1}, {5, 1}}) * inverse_cycle_product(den, n);
  CHECK(g == closed);
}

TEST_CASE("count-only records contribute at their dimension") {
  Dataset d;
  d.completeness_dim = 8;
  d.records.push_back(count_only(8, 5, 3));
  d.records.push_back(count_only(12, 5, 2));
  const auto g = generator_series(d, 10);
  CHECK(g == TruncatedSeries::monomial(10, 8, 3));
}

TEST_CASE("empty dataset with lambda gives odd-part partitions") {
  Dataset empty;
  empty.completeness_dim = 30;
  const auto r = betti_series(empty, 30);
  const auto oracle = restricted_partitions(30, {1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29});
  for (std::size_t k = 0; k <= 30; ++k)
    CHECK(r.series[k] == Rational(oracle[k]));
  CHECK(r.includes_lambda);
}

TEST_CASE("lambda factor splits off") {
  const std::size_t n = 14;
  for (const auto &name : {"matroidal", "perfect", "standard"}) {
    const auto d = load(name, n);
    const auto with = betti_series(d, n, true);
    const auto without = betti_series(d, n, false);
    CHECK(with.series == without.series * odd_product(n));
  }
}

TEST_CASE("standard cones without lambda: partition numbers") {
  const auto r = betti_series(load("standard", 30), 30, false);
  const auto p = partition_numbers(30);
  for (std::size_t k = 0; k <= 30; ++k)
    CHECK(r.series[k] == Rational(p[k]));
}

TEST_CASE("union of datasets: generators add, lambda-free Betti series multiply") {
  const std::size_t n = 16;
  const auto a = load("sigma1-K3", n);
  Dataset b;
  b.completeness_dim = 8;
  b.records.push_back(record_from_analysis("C4", analyze_cone(cone("matroidal/C4"), n)));
  b.records.push_back(count_only(8, 5, 4));
  const auto u = merge_datasets(a, b);
  CHECK(generator_series(u, n) == generator_series(a, n) + generator_series(b, n));
  CHECK(betti_series(u, n, false).series ==
        betti_series(a, n, false).series * betti_series(b, n, false).series);
  CHECK(betti_series(u, n).valid_up_to == 3);
}

TEST_CASE("adding records never lowers a coefficient") {
  const std::size_t n = 12;
  auto d = load("matroidal", n);
  auto before = betti_series(d, n);
  for (const auto &extra : {count_only(8, 6, 1), count_only(9, 6, 5), count_only(3, 2, 2)}) {
    d.records.push_back(extra);
    const auto after = betti_series(d, n);
    for (std::size_t k = 0; k <= n; ++k)
      CHECK(after.series[k] >= before.series[k]);
    before = after;
  }
  d.records.push_back(record_from_analysis("K3 again", analyze_cone(cone("matroidal/K3"), n)));
  const auto after = betti_series(d, n);
  for (std::size_t k = 0; k <= n; ++k)
    CHECK(after.series[k] >= before.series[k]);
}

TEST_CASE("valid_up_to is capped by completeness and order") {
  const auto d = load("matroidal", 20);
  CHECK(betti_series(d, 20).valid_up_to == 8);
  CHECK(betti_series(d, 5).valid_up_to == 5);
  CHECK(betti_series(load("standard", 12), 12).valid_up_to == 12);
  const auto csv = to_csv(betti_series(d, 10));
  CHECK(csv.rfind("k,coefficient,valid\n0,1,true\n", 0) == 0);
  CHECK(csv.find("8,379,true\n9,") != std::string::npos);
  CHECK(csv.find(",false\n") != std::string::npos);
  const auto j = to_json(betti_series(d, 10));
  CHECK(j["valid_up_to"] == 8);
  CHECK(j["convention"] == "t^k <-> cohomological degree 2k");
}

TEST_CASE("perfect generator counts") {
  const auto c = perfect_generator_counts(load("perfect", 16), 16);
  CHECK(c[0] == 1);
  CHECK(c[5] == 7);
  CHECK(c[16] == 6518);
}

TEST_CASE("smallness") {
  const auto clean = validate_smallness(load("perfect", 4));
  CHECK(clean.empty());
  Dataset d;
  d.completeness_dim = 8;
  d.records.push_back(count_only(2, 4, 1));  // 2 < 4/2 + 1
  d.records.push_back(count_only(1, 1, 1));  // rank 1 is exempt
  d.records.push_back(count_only(7, 6, 1));  // C7-like: 7 >= 4
  const auto bad = validate_smallness(d);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].rank == 4);
}

TEST_CASE("dataset validation") {
  Dataset d;
  d.completeness_dim = 2;
  d.records.push_back(record_from_analysis("K3", analyze_cone(cone("matroidal/K3"), 4)));
  CHECK_THROWS_AS(d.validate(), InputError);  // dimension 3 > 2
  d.completeness_dim = 3;
  d.validate();
  d.records.push_back(d.records.front());
  CHECK_THROWS_AS(d.validate(), InputError);  // duplicate
  CHECK_THROWS_AS(load_dataset(data_dir() / "missing.json", 4), InputError);
}

TEST_CASE("verify suites pass and unknown suites are rejected") {
  for (const auto &suite : kVerifySuites) {
    CAPTURE(suite);
    const auto rep = verify(suite, data_dir());
    CHECK(rep.passed());
    CHECK_NOTHROW(rep.require_passed());
  }
  CHECK(verify("matroidal16", data_dir()).compared() == 9);
  CHECK(verify("table4", data_dir()).checks.size() == 12);
  CHECK_THROWS_AS(verify("nope", data_dir()), InputError);
}

TEST_CASE("a failing report throws FixtureMismatch") {
  VerifyReport rep{"x", {{"c", false, 1, "t^3: got 1/1, expected 2/1"}}};
  CHECK_FALSE(rep.passed());
  CHECK_THROWS_AS(rep.require_passed(), FixtureMismatch);
}
