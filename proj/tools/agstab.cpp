// agstab: command-line front end to the library.
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error, 3 budget
// exceeded.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "agstab/cones.hpp"
#include "agstab/error.hpp"
#include "agstab/molien.hpp"
#include "agstab/pipeline.hpp"
#include "agstab/symfunc.hpp"

#ifndef AGSTAB_DATA_DIR
#define AGSTAB_DATA_DIR "data"
#endif

namespace {

using namespace agstab;
using nlohmann::json;

json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception &e) {
    throw InputError(path + ": " + e.what());
  }
}

json read_json_stdin() {
  try {
    return json::parse(std::cin);
  } catch (const json::exception &e) {
    throw InputError(std::string("stdin: ") + e.what());
  }
}

PermGroup group_from_json(const json &j) {
  try {
    const auto degree = j.at("degree").get<std::size_t>();
    std::vector<Permutation> gens;
    for (const auto &g : j.at("generators"))
      gens.push_back(permutation_from_json(g));
    return group_from_generators(degree, gens);
  } catch (const json::exception &e) {
    throw InputError(std::string("group JSON: ") + e.what());
  }
}

int run_verify(const std::string &suite, const std::string &data_dir) {
  const auto t0 = std::chrono::steady_clock::now();
  const VerifyReport rep = verify(suite, data_dir);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (const auto &c : rep.checks)
    std::cout << (c.passed ? "  ok   " : "  FAIL ") << c.label << ": " << c.detail << '\n';
  std::cout << suite << ": " << (rep.passed() ? "PASS" : "FAIL") << ", " << rep.compared()
            << " coefficients compared, " << secs << " s\n";
  rep.require_passed();
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Stable cohomology series of toroidal compactifications from cone data"};
  app.require_subcommand(1);
  std::string data_dir = AGSTAB_DATA_DIR;
  app.add_option("--data-dir", data_dir, "Directory with the shipped cone data")
      ->capture_default_str();

  std::size_t order = kDefaultOrder;
  std::string file;

  auto *cone = app.add_subcommand("cone", "Cone commands");
  cone->require_subcommand(1);
  auto *analyze = cone->add_subcommand("analyze", "Dimension, rank, components, group, P_sigma");
  analyze->add_option("file", file, "Cone JSON")->required();
  analyze->add_option("--order", order)->capture_default_str();
  bool no_declared = false, serial = false;
  analyze->add_flag("--no-declared", no_declared, "Ignore declared generators; search instead");
  analyze->add_flag("--serial", serial, "Single-threaded search");

  auto *molien = app.add_subcommand("molien", "Molien series of a cone or a permutation group");
  molien->add_option("file", file, "Cone JSON or {\"degree\", \"generators\"}")->required();
  molien->add_option("--order", order)->required();

  auto *series = app.add_subcommand("series", "Series utilities; input series on stdin");
  series->require_subcommand(1);
  auto *exp = series->add_subcommand("exp", "Plethystic exponential");
  exp->add_option("--order", order)->required();
  std::size_t hn = 0;
  auto *pleth = series->add_subcommand("plethysm", "h_n[P]");
  pleth->add_option("--order", order)->required();
  pleth->add_option("--n", hn, "Degree of h_n")->required();

  auto *betti = app.add_subcommand("betti", "Stable Betti series of a dataset");
  std::string manifest, format = "json";
  bool no_lambda = false, paper_display = false;
  betti->add_option("--dataset", manifest)->required();
  betti->add_option("--order", order)->required();
  betti->add_flag("--no-lambda", no_lambda, "Leave out the lambda classes");
  betti->add_flag("--paper-display", paper_display,
                  "Report the generator series with the constant 1 added instead");
  betti->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto *ver = app.add_subcommand("verify", "Recompute and compare against embedded fixtures");
  std::string suite;
  ver->add_option("--suite", suite)->required()->check(CLI::IsMember(kVerifySuites));

  auto *val = app.add_subcommand("validate", "Dataset consistency and smallness");
  val->add_option("--dataset", manifest)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) {
      const ConeSpec c = load_cone_file(file);
      AutSearchOptions opts;
      opts.use_declared = !no_declared;
      opts.parallel = !serial;
      json out = to_json(analyze_cone(c, order, opts));
      out["name"] = c.name;
      std::cout << out.dump(2) << '\n';
    } else if (molien->parsed()) {
      const json j = read_json_file(file);
      const TruncatedSeries s =
          j.contains("ambient") ? analyze_cone(cone_from_json(j), order).poincare
                                : molien_series(LinearAction::permutation(group_from_json(j)), order);
      std::cout << to_json(s).dump(2) << '\n';
    } else if (exp->parsed() || pleth->parsed()) {
      const TruncatedSeries in = series_from_json(read_json_stdin());
      const TruncatedSeries p = in.order() > order ? in.truncated(order) : in;
      const TruncatedSeries out = exp->parsed() ? exp_series(p) : plethysm_h(hn, p);
      std::cout << to_json(out).dump(2) << '\n';
    } else if (betti->parsed()) {
      const Dataset d = load_dataset(manifest, order);
      BettiReport r = betti_series(d, order, !no_lambda);
      if (paper_display) {
        r.series = with_display_constant(generator_series(d, order));
        r.includes_lambda = false;
        r.convention += "; generator series, constant 1 added for display";
      }
      if (format == "csv")
        std::cout << to_csv(r);
      else
        std::cout << to_json(r).dump(2) << '\n';
    } else if (ver->parsed()) {
      return run_verify(suite, data_dir);
    } else if (val->parsed()) {
      const Dataset d = load_dataset(manifest, 0);
      std::size_t full = 0;
      BigInt count_only = 0;
      for (const auto &r : d.records)
        r.count_only() ? void(count_only += r.multiplicity) : void(++full);
      std::cout << d.family << ": " << full << " cones, " << count_only
                << " count-only orbits, complete through dimension " << d.completeness_dim << '\n';
      const auto bad = validate_smallness(d);
      for (const auto &v : bad)
        std::cout << "  not small: " << v.name << " (dim " << v.dimension << ", rank " << v.rank
                  << ")\n";
      std::cout << (bad.empty() ? "all records small\n" : "smallness violated\n");
      return bad.empty() ? 0 : 1;
    }
  } catch (const MismatchError &e) {
    std::cerr << "mismatch: " << e.what() << '\n';
    return 1;
  } catch (const BudgetError &e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
