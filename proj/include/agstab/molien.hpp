#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "agstab/matrix.hpp"
#include "agstab/perm.hpp"
#include "agstab/series.hpp"

namespace agstab {

/// A finite permutation group together with a linear representation on
/// Q^r. Permutation actions (r = degree, rho(g) = permutation matrix) are
/// stored implicitly.
class LinearAction {
public:
  static LinearAction permutation(PermGroup group);
  /// `rho` is evaluated once per element. The homomorphism property is
  /// checked on all generator pairs and every matrix must be invertible.
  static LinearAction matrices(PermGroup group, std::size_t dimension,
                               const std::function<RationalMatrix(const Permutation &)> &rho);

  const PermGroup &group() const { return group_; }
  std::size_t dimension() const { return dimension_; }
  bool is_permutation() const { return matrices_.empty(); }

  RationalMatrix matrix(std::size_t element_index) const;

private:
  LinearAction(PermGroup g, std::size_t dim) : group_(std::move(g)), dimension_(dim) {}

  PermGroup group_;
  std::size_t dimension_;
  std::vector<RationalMatrix> matrices_; // indexed like group().elements()
};

struct MolienOptions {
  /// Permutation actions: take each class term from the cycle type rather
  /// than det(1 - tA). Both give the same series.
  bool use_cycle_types = true;
  /// Evaluate class terms on OpenMP threads (no effect without OpenMP).
  bool parallel = true;
};

/// (1/|G|) sum over conjugacy classes of |C| / det(1 - t rho(rep C)).
TruncatedSeries molien_series(const LinearAction &action, std::size_t order,
                              const MolienOptions &opts = {});

inline constexpr std::size_t kNaiveMolienCap = 10'000;

/// Serial reference: the same average taken over every element through
/// det(1 - tA). Throws CapExceeded above kNaiveMolienCap elements.
TruncatedSeries molien_series_naive(const LinearAction &action, std::size_t order);

} // namespace agstab
