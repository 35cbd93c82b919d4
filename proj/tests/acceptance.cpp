// One PASS/FAIL line per acceptance criterion. Criteria 1-4 drive the CLI;
// 5 and 6 run the fixture-free property checks in process.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include "agstab/molien.hpp"
#include "agstab/pipeline.hpp"
#include "agstab/symfunc.hpp"
#include "support.hpp"

using namespace agstab;
using namespace testing_support;

namespace {

struct Outcome {
  bool ok = false;
  std::string note;
};

struct Run {
  int status = -1;
  std::string output;
};

Run run_cli(const std::string &args) {
  const std::string cmd = std::string(AGSTAB_CLI) + " --data-dir " + data_dir().string() + " " +
                          args + " 2>&1";
  Run r;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return r;
  std::array<char, 512> buf{};
  while (fgets(buf.data(), buf.size(), pipe))
    r.output += buf.data();
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Outcome suites(std::initializer_list<const char *> names, const std::string &needle = {}) {
  Outcome o{true, {}};
  for (const char *s : names) {
    const Run r = run_cli(std::string("verify --suite ") + s);
    const bool passed = r.status == 0 && r.output.find(std::string(s) + ": PASS") != std::string::npos &&
                        (needle.empty() || r.output.find(needle) != std::string::npos);
    if (!passed) {
      o.ok = false;
      o.note += std::string(s) + " failed (exit " + std::to_string(r.status) + "):\n" + r.output;
    }
  }
  return o;
}

Outcome properties() {
  std::string failures;
  auto expect = [&](bool cond, const std::string &what) {
    if (!cond)
      failures += what + "; ";
  };
  for (const auto &[name, g] : corpus_groups())
    if (g.order() <= 1000) {
      const auto a = LinearAction::permutation(g);
      expect(molien_series(a, 15) == molien_series_naive(a, 15), "class vs naive " + name);
    }
  for (const auto &base : {trivial_group(1), symmetric_group(2), symmetric_group(3)}) {
    const auto p = molien_series(LinearAction::permutation(base), 15);
    for (std::size_t n = 1; n <= 3; ++n)
      expect(molien_series(LinearAction::permutation(wreath_product(base, n)), 15) ==
                 plethysm_h(n, p),
             "wreath degree " + std::to_string(base.degree()) + " n=" + std::to_string(n));
  }
  for (const auto &[name, p] : corpus_series(20))
    expect(exp_series(p) == exp_series_via_h(p), "Exp " + name);
  const auto k3 = cone("matroidal/K3"), c4 = cone("matroidal/C4");
  const auto pk3 = analyze_cone(k3, 16).poincare, pc4 = analyze_cone(c4, 16).poincare;
  expect(analyze_cone(direct_sum(k3, c4), 16).poincare == pk3 * pc4, "K3+C4 factorization");
  const auto kk = analyze_cone(direct_sum(k3, k3), 16);
  expect(kk.aut.order() == 72, "K3+K3 order");
  expect(kk.poincare == plethysm_h(2, pk3), "K3+K3 Molien");
  return {failures.empty(), failures};
}

Outcome lower_bounds() {
  std::string failures;
  const std::size_t n = 12;
  auto d = load_dataset(data_dir() / "perfect.json", n);
  auto before = betti_series(d, n);
  if (before.valid_up_to != 8)
    failures += "valid_up_to " + std::to_string(before.valid_up_to) + " != 8; ";
  if (betti_series(d, 6).valid_up_to != 6)
    failures += "valid_up_to not capped by order; ";
  for (std::size_t dim : {8, 9, 11}) {
    ConeClassRecord r;
    r.name = "probe " + std::to_string(dim);
    r.dimension = dim;
    r.rank = dim - 1;
    r.multiplicity = 3;
    d.records.push_back(r);
    const auto after = betti_series(d, n);
    for (std::size_t k = 0; k <= n; ++k)
      if (after.series[k] < before.series[k])
        failures += "coefficient t^" + std::to_string(k) + " decreased; ";
    before = after;
  }
  return {failures.empty(), failures};
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char *what;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "matroidal16 reproduces degrees 0-16", 10, [] { return suites({"matroidal16"}, "9 coefficients"); }},
      {2, "perfect16 reproduces codegrees 0-16 with searched groups", 60,
       [] { return suites({"perfect16"}, "9 coefficients"); }},
      {3, "section6 series in display convention", 30, [] { return suites({"section6"}); }},
      {4, "table2 Molien series and table4 searched group orders", 120,
       [] { return suites({"table2", "table4"}); }},
      {5, "fixture-free property suite", 120, properties},
      {6, "lower-bound monotonicity and valid_up_to capping", 120, lower_bounds},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit;
    const bool ok = o.ok && in_time;
    failed += ok ? 0 : 1;
    std::printf("criterion %d: %s  %s (%.2f s, limit %.0f s)\n", c.id, ok ? "PASS" : "FAIL", c.what,
                secs, c.limit);
    if (!o.ok)
      std::printf("  %s\n", o.note.c_str());
    else if (!in_time)
      std::printf("  over time limit\n");
  }
  return failed == 0 ? 0 : 1;
}
