#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "agstab/perm.hpp"
#include "agstab/series.hpp"

namespace agstab {

using IntVector = std::vector<long>;

/// A cone of quadratic forms spanned by rank-one forms v v^T, one per
/// generator vector v in Z^ambient.
struct ConeSpec {
  std::string name;
  std::size_t ambient = 0;
  std::vector<IntVector> generators;
  /// Permutations of generator indices asserted to generate the
  /// automorphism group; verified before use.
  std::optional<std::vector<Permutation>> declared_aut;
  std::vector<std::string> tags;

  std::size_t size() const { return generators.size(); }
  /// Throws InputError on zero or proportional generators, wrong lengths or
  /// declared permutations of the wrong degree.
  void validate() const;
};

ConeSpec cone_from_json(const nlohmann::json &j);
nlohmann::json to_json(const ConeSpec &c);
ConeSpec load_cone_file(const std::filesystem::path &path);

/// Direct sum in block coordinates: b's vectors are shifted past a's
/// ambient coordinates. Declared groups are dropped.
ConeSpec direct_sum(const ConeSpec &a, const ConeSpec &b, std::string name = {});

/// Rank over Q of the forms v_i v_i^T, flattened to length g(g+1)/2.
std::size_t cone_dimension(const ConeSpec &c);
/// Rank over Q of the generator vectors themselves.
std::size_t cone_rank(const ConeSpec &c);
/// Connected components of the linear matroid on the generators, each
/// sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> cone_components(const ConeSpec &c);

/// Integer coordinates of the generators in a Z-basis of the saturated
/// lattice span_Q{v_i} ∩ Z^g (one row per generator, rank columns).
std::vector<IntVector> saturated_coordinates(const ConeSpec &c);

struct AutSearchOptions {
  /// Use declared_aut (after verification) when present.
  bool use_declared = true;
  /// Split the top search level across OpenMP threads.
  bool parallel = true;
  std::size_t node_cap = 200'000'000;
};

/// Whether some T in GL(saturated lattice) satisfies T v_i = ±v_{p(i)}.
bool is_realizable(const ConeSpec &c, const Permutation &p);

/// The group of generator permutations induced by lattice automorphisms
/// stabilising the cone. Throws SearchBudgetExceeded past opts.node_cap and
/// VerificationFailed when a declared permutation is not realizable.
PermGroup cone_automorphisms(const ConeSpec &c, const AutSearchOptions &opts = {});

struct ConeAnalysis {
  std::size_t dimension = 0;
  std::size_t rank = 0;
  std::vector<std::vector<std::size_t>> components;
  PermGroup aut;
  bool aut_from_declaration = false;
  /// Indices of generators whose forms are a basis of the span of the cone.
  std::vector<std::size_t> form_basis;
  TruncatedSeries poincare;

  bool is_basic(std::size_t generator_count) const { return generator_count == dimension; }
};

/// Molien series of aut acting on the span of the forms. Uses the
/// permutation action when the forms are independent, otherwise the induced
/// matrices in the form basis. Throws InconsistentAction if a permutation
/// does not induce a linear map.
TruncatedSeries cone_poincare_series(const ConeSpec &c, const ConeAnalysis &analysis,
                                     std::size_t order);

ConeAnalysis analyze_cone(const ConeSpec &c, std::size_t order = kDefaultOrder,
                          const AutSearchOptions &opts = {});

nlohmann::json to_json(const ConeAnalysis &a);

} // namespace agstab
