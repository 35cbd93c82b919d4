#include "agstab/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "agstab/error.hpp"
#include "agstab/molien.hpp"
#include "agstab/symfunc.hpp"

namespace agstab {

ConeClassRecord record_from_analysis(const std::string &name, const ConeAnalysis &a) {
  if (!a.poincare.has_integer_coefficients())
    throw NonIntegralCoefficient(name + ": Poincaré series has a non-integer coefficient");
  return ConeClassRecord{name, a.dimension, a.rank, a.poincare, 1};
}

void Dataset::validate() const {
  std::set<std::string> names;
  for (const auto &r : records) {
    if (!names.insert(r.name).second)
      throw InputError("dataset: duplicate record name " + r.name);
    if (r.dimension == 0 || r.rank == 0)
      throw InputError("dataset: " + r.name + " needs positive dimension and rank");
    if (r.multiplicity <= 0)
      throw InputError("dataset: " + r.name + " has non-positive multiplicity");
    if (r.poincare) {
      if ((*r.poincare)[0] != 1)
        throw InputError("dataset: " + r.name + " has P(0) != 1");
      if (r.dimension > completeness_dim)
        throw InputError("dataset: " + r.name + " lies above completeness dimension " +
                         std::to_string(completeness_dim));
    }
  }
}

Dataset load_dataset(const std::filesystem::path &manifest, std::size_t order,
                     const AutSearchOptions &opts) {
  std::ifstream in(manifest);
  if (!in)
    throw InputError("cannot open dataset manifest " + manifest.string());
  Dataset d;
  try {
    nlohmann::json j;
    in >> j;
    d.family = j.value("family", std::string("custom"));
    d.completeness_dim = j.at("completeness_dim").get<std::size_t>();
    const auto base = manifest.parent_path();
    for (const auto &p : j.value("cones", nlohmann::json::array())) {
      const ConeSpec c = load_cone_file(base / p.get<std::string>());
      d.records.push_back(record_from_analysis(c.name, analyze_cone(c, order, opts)));
    }
    for (const auto &e : j.value("count_only", nlohmann::json::array())) {
      ConeClassRecord r;
      r.dimension = e.at("dimension").get<std::size_t>();
      r.rank = e.at("rank").get<std::size_t>();
      r.multiplicity = e.at("count").get<long>();
      r.name = "count-only dim " + std::to_string(r.dimension) + " rank " + std::to_string(r.rank);
      d.records.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception &e) {
    throw InputError(manifest.string() + ": " + e.what());
  }
  d.validate();
  return d;
}

Dataset merge_datasets(const Dataset &a, const Dataset &b) {
  Dataset m;
  m.family = a.family == b.family ? a.family : "custom";
  m.completeness_dim = std::min(a.completeness_dim, b.completeness_dim);
  m.records = a.records;
  m.records.insert(m.records.end(), b.records.begin(), b.records.end());
  return m;
}

Dataset full_records_only(const Dataset &d) {
  Dataset out = d;
  std::erase_if(out.records, [](const ConeClassRecord &r) { return r.count_only(); });
  return out;
}

TruncatedSeries generator_series(const Dataset &d, std::size_t order) {
  TruncatedSeries g(order);
  for (const auto &r : d.records) {
    if (r.dimension > order)
      continue;
    if (r.count_only()) {
      g[r.dimension] += Rational(r.multiplicity);
      continue;
    }
    if (r.poincare->order() + r.dimension < order)
      throw InputError(r.name + ": Poincaré series known only to order " +
                       std::to_string(r.poincare->order()));
    TruncatedSeries term = r.poincare->truncated(order).shifted(r.dimension);
    term *= Rational(r.multiplicity);
    g += term;
  }
  return g;
}

TruncatedSeries lambda_series(std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t k = 1; k <= order; k += 2)
    s[k] = 1;
  return s;
}

TruncatedSeries with_display_constant(const TruncatedSeries &s) {
  TruncatedSeries out = s;
  out[0] += 1;
  return out;
}

namespace {

std::string convention_for(const std::string &family) {
  if (family == "matroidal")
    return "t^k <-> cohomological degree 2k";
  if (family == "perfect")
    return "t^k <-> Borel-Moore codegree 2k";
  return "t^k <-> (co)degree 2k";
}

} // namespace

BettiReport betti_series(const Dataset &d, std::size_t order, bool include_lambda) {
  TruncatedSeries arg = generator_series(d, order);
  if (include_lambda)
    arg += lambda_series(order);
  BettiReport r;
  r.series = exp_series(arg);
  if (!r.series.has_nonnegative_integer_coefficients())
    throw NonIntegralCoefficient("Betti series has a coefficient that is not a non-negative integer");
  r.valid_up_to = std::min(order, d.completeness_dim);
  r.convention = convention_for(d.family);
  r.includes_lambda = include_lambda;
  return r;
}

nlohmann::json to_json(const BettiReport &r) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto &c : r.series.coefficients())
    coeffs.push_back(is_integer(c) ? nlohmann::json(c.get_num().get_str())
                                   : nlohmann::json(to_string(c)));
  return {{"order", r.series.order()}, {"coefficients", coeffs},
          {"valid_up_to", r.valid_up_to}, {"convention", r.convention},
          {"includes_lambda", r.includes_lambda}};
}

std::string to_csv(const BettiReport &r) {
  std::ostringstream out;
  out << "k,coefficient,valid\n";
  for (std::size_t k = 0; k <= r.series.order(); ++k) {
    const Rational &c = r.series[k];
    out << k << ',' << (is_integer(c) ? c.get_num().get_str() : to_string(c)) << ','
        << (k <= r.valid_up_to ? "true" : "false") << '\n';
  }
  return out.str();
}

TruncatedSeries perfect_generator_counts(const Dataset &perfect, std::size_t order) {
  return with_display_constant(generator_series(full_records_only(perfect), order));
}

std::vector<SmallnessViolation> validate_smallness(const Dataset &d) {
  std::vector<SmallnessViolation> out;
  for (const auto &r : d.records)
    if (r.rank >= 2 && 2 * r.dimension < r.rank + 2)
      out.push_back({r.name, r.dimension, r.rank});
  return out;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck &c) { return c.passed; });
}

std::size_t VerifyReport::compared() const {
  std::size_t n = 0;
  for (const auto &c : checks)
    n += c.compared;
  return n;
}

void VerifyReport::require_passed() const {
  for (const auto &c : checks)
    if (!c.passed)
      throw FixtureMismatch(suite + "/" + c.label + ": " + c.detail);
}

namespace {

// ---- embedded fixtures ----

const std::vector<long> kMatroidalBetti{1, 2, 4, 9, 18, 37, 79, 169, 379};
const std::vector<long> kPerfectBetti{1, 2, 4, 9, 18, 38, 84, 193, 494};
const std::vector<long> kSigma1K3{1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 9, 11, 13, 15};
const std::vector<long> kQ{1,   1,   1,   2,    3,    6,    13,   28,   55,    113,  210,
                           384, 663, 1109, 1776, 2778, 4196, 6209, 8958, 12691, 17621};
const std::vector<long> kPerfectCounts{1,    1,    1,    2,    3,    7,    16,
                                       42,   83,   177,  331,  611,  1049, 1754,
                                       2790, 4343, 6518, 9596, 13759, 19400, 26792};
// numerators over prod_{i=1}^{7} (1 - t^i)
const std::map<std::size_t, long> kQNumerator{
    {0, 1},    {2, -1},   {5, 2},    {6, 5},    {7, 11},   {8, 18},  {9, 35},
    {10, 50},  {11, 77},  {12, 102}, {13, 131}, {14, 151}, {15, 173}, {16, 171},
    {17, 171}, {18, 151}, {19, 129}, {20, 97},  {21, 74},  {22, 44}, {23, 30},
    {24, 14},  {25, 7},   {26, 2},   {27, 2},   {28, -1}};
const std::map<std::size_t, long> kPerfectNumerator{
    {0, 1},    {2, -1},   {5, 3},    {6, 7},    {7, 21},   {8, 29},  {9, 57},
    {10, 80},  {11, 122}, {12, 155}, {13, 195}, {14, 215}, {15, 241}, {16, 229},
    {17, 223}, {18, 188}, {19, 157}, {20, 113}, {21, 84},  {22, 47}, {23, 32},
    {24, 14},  {25, 7},   {26, 2},   {27, 2},   {28, -1}};
constexpr std::size_t kNumeratorDegree = 28;

std::string first_difference(const TruncatedSeries &got, const TruncatedSeries &want) {
  for (std::size_t k = 0; k <= std::min(got.order(), want.order()); ++k)
    if (got[k] != want[k])
      return "t^" + std::to_string(k) + ": got " + to_string(got[k]) + ", expected " +
             to_string(want[k]);
  return {};
}

VerifyCheck compare(std::string label, const TruncatedSeries &got, const TruncatedSeries &want) {
  VerifyCheck c{std::move(label), false, std::min(got.order(), want.order()) + 1, {}};
  c.detail = first_difference(got, want);
  c.passed = c.detail.empty();
  if (c.passed)
    c.detail = std::to_string(c.compared) + " coefficients agree";
  return c;
}

VerifyCheck compare_counts(std::string label, std::size_t got, std::size_t want) {
  VerifyCheck c{std::move(label), got == want, 1, {}};
  c.detail = "got " + std::to_string(got) + ", expected " + std::to_string(want);
  return c;
}

TruncatedSeries fixture(const std::vector<long> &v) {
  return TruncatedSeries::from_integers(v.size() - 1, v);
}

/// num(t) / prod_{d in den} (1 - t^d).
TruncatedSeries rational_function(std::size_t order, const std::map<std::size_t, long> &num,
                                  const std::vector<std::size_t> &den) {
  std::vector<std::size_t> parts = den;
  return TruncatedSeries::polynomial(order, num) * inverse_cycle_product(parts, order);
}

TruncatedSeries prod_one_minus(std::size_t upto, std::size_t order) {
  TruncatedSeries p = TruncatedSeries::one(order);
  for (std::size_t i = 1; i <= upto; ++i)
    p = p * one_minus_t_pow(i, order);
  return p;
}

Dataset dataset(const std::filesystem::path &data_dir, const std::string &name, std::size_t order,
                bool use_declared = true) {
  AutSearchOptions opts;
  opts.use_declared = use_declared;
  return load_dataset(data_dir / (name + ".json"), order, opts);
}

VerifyReport suite_betti(const std::string &suite, const std::filesystem::path &data_dir,
                         const std::string &manifest, const std::vector<long> &want,
                         bool use_declared) {
  const std::size_t order = want.size() - 1;
  const Dataset d = dataset(data_dir, manifest, order, use_declared);
  const BettiReport r = betti_series(d, order, true);
  VerifyReport rep{suite, {}};
  rep.checks.push_back(compare("betti t^0..t^" + std::to_string(order), r.series, fixture(want)));
  rep.checks.push_back(compare_counts("valid_up_to", r.valid_up_to, order));
  rep.checks.back().compared = 0;
  return rep;
}

VerifyReport suite_section6(const std::filesystem::path &data_dir) {
  VerifyReport rep{"section6", {}};
  constexpr std::size_t order = 20;

  const Dataset standard = dataset(data_dir, "standard", order);
  rep.checks.push_back(compare("standard cones", with_display_constant(generator_series(standard, order)),
                               fixture(std::vector<long>(order + 1, 1))));

  const Dataset two = dataset(data_dir, "sigma1-K3", kSigma1K3.size() - 1);
  rep.checks.push_back(compare("sigma_1 and sigma_K3",
                               with_display_constant(generator_series(two, kSigma1K3.size() - 1)),
                               fixture(kSigma1K3)));
  const auto closed = rational_function(kSigma1K3.size() - 1, {{0, 1}, {2, -1}, {5, 1}}, {1, 2, 3});
  rep.checks.push_back(compare("sigma_1 and sigma_K3 closed form",
                               with_display_constant(generator_series(two, kSigma1K3.size() - 1)),
                               closed));

  const Dataset matroidal = full_records_only(dataset(data_dir, "matroidal", kNumeratorDegree));
  const Dataset perfect = full_records_only(dataset(data_dir, "perfect", kNumeratorDegree));
  const auto q = with_display_constant(generator_series(matroidal, kNumeratorDegree));
  const auto c = perfect_generator_counts(perfect, kNumeratorDegree);
  rep.checks.push_back(compare("Q(t)", q.truncated(order), fixture(kQ)));
  rep.checks.push_back(compare("perfect c_k", c.truncated(order), fixture(kPerfectCounts)));

  const auto denom = prod_one_minus(7, kNumeratorDegree);
  rep.checks.push_back(compare("Q(t) numerator", q * denom,
                               TruncatedSeries::polynomial(kNumeratorDegree, kQNumerator)));
  rep.checks.push_back(compare("perfect numerator", c * denom,
                               TruncatedSeries::polynomial(kNumeratorDegree, kPerfectNumerator)));
  return rep;
}

PermGroup on(std::size_t degree, std::initializer_list<const char *> cycles) {
  std::vector<Permutation> gens;
  for (const char *c : cycles)
    gens.push_back(Permutation::from_cycles(degree, c));
  return group_from_generators(degree, gens);
}

struct Table2Row {
  const char *cone;
  PermGroup group;
  std::size_t order;
  TruncatedSeries closed;
};

VerifyReport suite_table2(const std::filesystem::path &data_dir) {
  constexpr std::size_t N = 30;
  const auto s1 = trivial_group(1);
  const auto s2 = symmetric_group(2);
  const auto s3 = symmetric_group(3);
  const auto k41 = wreath_product(s2, 2);
  const auto c222 = rational_function(N, {{0, 1}, {4, 1}, {5, 1}, {7, -1}, {8, -1}, {12, -1}},
                                      {1, 2, 2, 3, 3, 4, 6});
  const auto pc3 = rational_function(N, {{0, 1}}, {1, 2, 3});
  const auto pk41 = rational_function(N, {{0, 1}, {6, -1}}, {1, 1, 2, 2, 3, 4});

  std::vector<Table2Row> rows{
      // vertex transposition and 3-cycle acting on the edges 01,02,03,12,13,23
      {"K4", on(6, {"(2 4)(3 5)", "(1 2 3)(4 6 5)"}), 24,
       rational_function(N, {{0, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {9, 1}}, {1, 2, 2, 3, 3, 4})},
      {"C222", wreath_product(s2, 3), 48, c222},
      {"C2221", direct_product(wreath_product(s2, 3), s1), 48,
       c222 * inverse_cycle_product(std::vector<std::size_t>{1}, N)},
      {"C321", direct_product(direct_product(s3, s2), s1), 12,
       rational_function(N, {{0, 1}}, {1, 1, 1, 2, 2, 3})},
      {"K5-3", on(7, {"(2 6)", "(2 5 6 7)(3 4)"}), 8,
       rational_function(N, {{0, 1}, {1, -1}, {2, 2}}, {1, 1, 1, 1, 2, 2, 4})},
      {"K5-2-1", on(7, {"(2 3)(4 5)", "(2 4)(3 5)", "(6 7)"}), 8,
       rational_function(N, {{0, 1}, {1, -1}, {2, 1}}, {1, 1, 1, 1, 2, 2, 2})},
      {"C421", direct_product(direct_product(symmetric_group(4), s2), s1), 48,
       rational_function(N, {{0, 1}}, {1, 1, 1, 2, 2, 3, 4})},
      {"C331", direct_product(wreath_product(s3, 2), s1), 72,
       rational_function(N, {{0, 1}, {1, -1}, {2, 1}, {4, 1}}, {1, 1, 1, 2, 3, 4, 6})},
      {"C322", direct_product(s3, k41), 48, one_minus_t_pow(1, N) * pc3 * pk41},
  };

  VerifyReport rep{"table2", {}};
  for (const auto &row : rows) {
    const auto stated = molien_series(LinearAction::permutation(row.group), N);
    rep.checks.push_back(compare(std::string(row.cone) + " Molien", stated, row.closed));
    // the cone's own group, from its verified generators
    const ConeSpec c = load_cone_file(data_dir / "matroidal" / (std::string(row.cone) + ".json"));
    const ConeAnalysis a = analyze_cone(c, N);
    auto order_check = compare_counts(std::string(row.cone) + " |G|", a.aut.order(), row.order);
    order_check.compared = 0;
    rep.checks.push_back(order_check);
    auto cone_check = compare(std::string(row.cone) + " cone P_sigma", a.poincare, row.closed);
    cone_check.compared = 0;
    rep.checks.push_back(cone_check);
  }
  return rep;
}

VerifyReport suite_table4(const std::filesystem::path &data_dir) {
  const std::vector<std::pair<const char *, std::size_t>> orders{
      {"5-5", 120}, {"5-6", 120},  {"5-7a", 48},  {"5-7b", 24},   {"6-6", 720},   {"6-7a", 48},
      {"6-7b", 720}, {"6-7c", 240}, {"6-7d", 48}, {"7-7a", 240}, {"7-7b", 5040}, {"7-7c", 5040}};
  VerifyReport rep{"table4", {}};
  AutSearchOptions opts;
  opts.use_declared = false;
  for (const auto &[name, order] : orders) {
    const ConeSpec c = load_cone_file(data_dir / "perfect" / (std::string(name) + ".json"));
    rep.checks.push_back(compare_counts(std::string(name) + " |G|",
                                        cone_automorphisms(c, opts).order(), order));
  }
  return rep;
}

} // namespace

VerifyReport verify(const std::string &suite, const std::filesystem::path &data_dir) {
  if (suite == "matroidal16")
    return suite_betti(suite, data_dir, "matroidal", kMatroidalBetti, true);
  if (suite == "perfect16")
    return suite_betti(suite, data_dir, "perfect", kPerfectBetti, false);
  if (suite == "section6")
    return suite_section6(data_dir);
  if (suite == "table2")
    return suite_table2(data_dir);
  if (suite == "table4")
    return suite_table4(data_dir);
  throw InputError("unknown verify suite '" + suite + "'");
}

} // namespace agstab
