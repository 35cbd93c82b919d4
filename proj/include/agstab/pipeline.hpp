#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "agstab/cones.hpp"
#include "agstab/series.hpp"

namespace agstab {

/// One orbit of irreducible cones. Count-only records carry no Poincaré
/// series and stand for `multiplicity` orbits of the given dimension.
struct ConeClassRecord {
  std::string name;
  std::size_t dimension = 0;
  std::size_t rank = 0;
  std::optional<TruncatedSeries> poincare;
  BigInt multiplicity = 1;

  bool count_only() const { return !poincare.has_value(); }
};

ConeClassRecord record_from_analysis(const std::string &name, const ConeAnalysis &a);

struct Dataset {
  std::string family = "custom";
  std::vector<ConeClassRecord> records;
  std::size_t completeness_dim = 0;

  /// Throws InputError on duplicate names, P(0) != 1, zero multiplicity or
  /// full records above completeness_dim.
  void validate() const;
};

/// Reads a manifest and analyses every listed cone to `order`. Cone paths
/// are relative to the manifest's directory.
Dataset load_dataset(const std::filesystem::path &manifest, std::size_t order,
                     const AutSearchOptions &opts = {});

/// Union of two datasets; completeness is the smaller of the two.
Dataset merge_datasets(const Dataset &a, const Dataset &b);

/// Copy with the count-only records removed.
Dataset full_records_only(const Dataset &d);

/// sum of multiplicity * t^dim * P_sigma(t); constant term 0.
TruncatedSeries generator_series(const Dataset &d, std::size_t order);

/// t/(1 - t^2): one generator in each odd t-degree.
TruncatedSeries lambda_series(std::size_t order);

/// The paper-style display of a generator series: the same series plus 1.
TruncatedSeries with_display_constant(const TruncatedSeries &s);

struct BettiReport {
  TruncatedSeries series;
  std::size_t valid_up_to = 0;
  std::string convention;
  bool includes_lambda = true;
};

/// Exp(lambda + G). Coefficients above valid_up_to = min(order,
/// completeness_dim) are lower bounds only.
BettiReport betti_series(const Dataset &d, std::size_t order, bool include_lambda = true);

nlohmann::json to_json(const BettiReport &r);
/// `k,coefficient,valid`, one row per t-degree.
std::string to_csv(const BettiReport &r);

/// Paper-display generator counts of the perfect family from its full
/// records (dimension <= 7).
TruncatedSeries perfect_generator_counts(const Dataset &perfect, std::size_t order);

struct SmallnessViolation {
  std::string name;
  std::size_t dimension = 0;
  std::size_t rank = 0;
};

/// Records of rank >= 2 with 2 * dim < rank + 2.
std::vector<SmallnessViolation> validate_smallness(const Dataset &d);

struct VerifyCheck {
  std::string label;
  bool passed = false;
  std::size_t compared = 0;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCheck> checks;

  bool passed() const;
  std::size_t compared() const;
  /// Throws FixtureMismatch naming the first failed check.
  void require_passed() const;
};

inline const std::vector<std::string> kVerifySuites{"matroidal16", "perfect16", "section6", "table2",
                                                    "table4"};

VerifyReport verify(const std::string &suite, const std::filesystem::path &data_dir);

} // namespace agstab
