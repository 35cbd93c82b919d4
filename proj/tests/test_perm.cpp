#include <doctest.h>

#include <set>

#include "agstab/error.hpp"
#include "agstab/perm.hpp"
#include "support.hpp"

using namespace agstab;
using namespace testing_support;

TEST_CASE("cycle notation parses right to left") {
  const auto p = Permutation::from_cycles(4, "(1 2)(2 3)");
  // (2 3) first: 2 -> 3 -> 3, then 3 -> 2 -> 1
  CHECK(p.to_one_based() == std::vector<long>{2, 3, 1, 4});
  CHECK(p.to_cycle_string() == "(1 2 3)");
  CHECK(Permutation::identity(3).to_cycle_string() == "()");
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(1 4)"), InputError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(1 1)"), InputError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "1 2"), InputError);
  CHECK_THROWS_AS(Permutation::from_one_based({1, 1, 2}), InputError);
}

TEST_CASE("composition and inverse") {
  const auto p = Permutation::from_cycles(5, "(1 2 3)(4 5)");
  const auto q = Permutation::from_cycles(5, "(1 5)");
  CHECK((p * q)(0) == p(q(0)));
  CHECK((p * p.inverse()).is_identity());
  CHECK_THROWS_AS(p * Permutation::identity(4), DegreeMismatch);
}

TEST_CASE("group orders of standard families") {
  for (std::size_t n = 1; n <= 7; ++n)
    CHECK(BigInt(symmetric_group(n).order()) == factorial(n));
  CHECK(wreath_product(symmetric_group(2), 3).order() == 48);
  CHECK(wreath_product(symmetric_group(3), 2).order() == 72);
  CHECK(wreath_product(trivial_group(1), 4).order() == 24);
  CHECK(direct_product(symmetric_group(3), symmetric_group(2)).order() == 12);
  CHECK(direct_product(symmetric_group(3), symmetric_group(2)).degree() == 5);
  CHECK(trivial_group(3).order() == 1);
}

TEST_CASE("elements match brute-force enumeration of S_n") {
  const auto g = symmetric_group(5);
  CHECK(g.elements() == all_permutations(5));
  CHECK(g.elements().front().is_identity());
  for (const auto &p : all_permutations(5))
    CHECK(g.contains(p));
}

TEST_CASE("cycle type counts agree with enumeration") {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::map<CycleType, BigInt> counted;
    for (const auto &p : all_permutations(n))
      counted[cycle_type(p)] += 1;
    for (const auto &[type, c] : counted)
      CHECK(cycle_type_count(n, type) == c);
  }
  CHECK_THROWS_AS(cycle_type_count(4, CycleType{{1, 2}}), PartitionMismatch);
}

TEST_CASE("conjugacy classes partition the group into true classes") {
  for (const auto &[name, g] : corpus_groups()) {
    if (g.order() > 1000)
      continue;
    CAPTURE(name);
    std::size_t total = 0;
    for (const auto &cls : g.classes()) {
      total += cls.size;
      // brute force: conjugate by every element
      std::set<Permutation> orbit;
      for (const auto &h : g.elements())
        orbit.insert(h * cls.representative * h.inverse());
      CHECK(orbit.size() == cls.size);
      CHECK(*orbit.begin() == cls.representative);
      CHECK(cls.type == cycle_type(cls.representative));
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("closure caps and element lists") {
  CHECK_THROWS_AS(group_from_generators(8, {Permutation::from_cycles(8, "(1 2)"),
                                            Permutation::from_cycles(8, "(1 2 3 4 5 6 7 8)")},
                                        1000),
                  CapExceeded);
  CHECK_THROWS_AS(wreath_product(symmetric_group(6), 3, 1000), CapExceeded);
  CHECK_THROWS_AS(group_from_generators(4, {Permutation::from_cycles(3, "(1 2)")}), DegreeMismatch);

  const auto s3 = symmetric_group(3);
  CHECK(group_from_elements(3, s3.elements()).order() == 6);
  std::vector<Permutation> not_closed{Permutation::identity(3), Permutation::from_cycles(3, "(1 2 3)")};
  CHECK_THROWS_AS(group_from_elements(3, not_closed), InputError);
}

TEST_CASE("permutation JSON is one-based") {
  const auto p = Permutation::from_cycles(3, "(1 3)");
  CHECK(to_json(p) == nlohmann::json{3, 2, 1});
  CHECK(permutation_from_json(to_json(p)) == p);
}
