#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "agstab/rational.hpp"

namespace agstab {

/// Bijection of {0..n-1}. Text and JSON forms are 1-based.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  /// 1-based one-line image array, as stored in cone files.
  static Permutation from_one_based(const std::vector<long> &images);
  /// Disjoint-or-not cycle notation such as "(1 2)(3 4 5)"; cycles are
  /// composed right to left.
  static Permutation from_cycles(std::size_t degree, std::string_view cycles);
  /// Cycle 1 -> 2 -> ... on the given 0-based points, identity elsewhere.
  static Permutation cycle(std::size_t degree, const std::vector<std::size_t> &points);

  std::size_t degree() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t> &images() const { return images_; }
  std::vector<std::size_t> image_vector() const { return {images_.begin(), images_.end()}; }

  Permutation inverse() const;
  bool is_identity() const;

  std::vector<long> to_one_based() const;
  std::string to_cycle_string() const;

  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<std::uint32_t> images_;
};

/// (p * q)(i) = p(q(i)): q acts first.
Permutation operator*(const Permutation &p, const Permutation &q);

/// Multiset of cycle lengths in weakly increasing order, fixed points
/// included as 1-cycles.
struct CycleType {
  std::vector<std::size_t> parts;

  std::size_t degree() const;
  std::string to_string() const;
  friend auto operator<=>(const CycleType &, const CycleType &) = default;
};

CycleType cycle_type(const Permutation &p);

/// Number of permutations in S_n of the given cycle type:
/// n! / prod_i (i^{m_i} m_i!). Throws PartitionMismatch if the parts do
/// not sum to n.
BigInt cycle_type_count(std::size_t n, const CycleType &type);

BigInt factorial(std::size_t n);

struct ConjugacyClass {
  Permutation representative; ///< lexicographically least member
  std::size_t size;
  CycleType type;
};

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

/// Finite permutation group with every element enumerated.
class PermGroup {
public:
  /// The trivial group on zero points.
  PermGroup() : elements_{Permutation::identity(0)}, classes_{{Permutation::identity(0), 1, {}}} {}

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation> &generators() const { return generators_; }
  /// Sorted lexicographically by image list; elements()[0] is the identity.
  const std::vector<Permutation> &elements() const { return elements_; }
  const std::vector<ConjugacyClass> &classes() const { return classes_; }

  bool contains(const Permutation &p) const;
  std::size_t index_of(const Permutation &p) const;

  friend PermGroup group_from_generators(std::size_t, const std::vector<Permutation> &,
                                         std::size_t);
  friend PermGroup group_from_elements(std::size_t, std::vector<Permutation>);

private:
  void finish();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<ConjugacyClass> classes_;
};

/// Breadth-first closure of the generators. Throws DegreeMismatch on mixed
/// degrees and CapExceeded when the closure outgrows `cap`.
PermGroup group_from_generators(std::size_t degree, const std::vector<Permutation> &gens,
                                std::size_t cap = kDefaultGroupCap);

/// Group from a complete element list. Closure is checked; the stored
/// generators are a greedily chosen generating subset.
PermGroup group_from_elements(std::size_t degree, std::vector<Permutation> elements);

/// Conjugation orbits with lexicographically least representatives, in
/// order of representative.
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup &g);

PermGroup trivial_group(std::size_t degree);
PermGroup symmetric_group(std::size_t n);
/// Symmetric group on the given 0-based points, fixing the rest.
PermGroup symmetric_group_on(std::size_t degree, const std::vector<std::size_t> &points);

/// A acts on the first degree(A) points, B on the next degree(B).
PermGroup direct_product(const PermGroup &a, const PermGroup &b,
                         std::size_t cap = kDefaultGroupCap);

/// G wr S_n acting imprimitively on n blocks of degree(G) points.
PermGroup wreath_product(const PermGroup &g, std::size_t n, std::size_t cap = kDefaultGroupCap);

nlohmann::json to_json(const Permutation &p);
Permutation permutation_from_json(const nlohmann::json &j);

} // namespace agstab
