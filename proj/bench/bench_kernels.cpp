// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "agstab/cones.hpp"
#include "agstab/molien.hpp"

namespace {

using namespace agstab;

ConeSpec bench_cone(const char *rel) {
  return load_cone_file(std::string(AGSTAB_DATA_DIR) + "/" + rel + ".json");
}

const LinearAction &s2_wr_s3() {
  static const LinearAction a = LinearAction::permutation(wreath_product(symmetric_group(2), 3));
  return a;
}

void BM_MolienClassCycleType(benchmark::State &st) {
  MolienOptions o;
  o.parallel = false;
  for (auto _ : st)
    benchmark::DoNotOptimize(molien_series(s2_wr_s3(), st.range(0), o));
}

void BM_MolienClassDet(benchmark::State &st) {
  MolienOptions o;
  o.use_cycle_types = false;
  o.parallel = false;
  for (auto _ : st)
    benchmark::DoNotOptimize(molien_series(s2_wr_s3(), st.range(0), o));
}

void BM_MolienClassParallel(benchmark::State &st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(molien_series(s2_wr_s3(), st.range(0)));
}

void BM_MolienNaive(benchmark::State &st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(molien_series_naive(s2_wr_s3(), st.range(0)));
}

template <bool Parallel> void BM_AutSearch(benchmark::State &st) {
  static const ConeSpec c = bench_cone("perfect/7-7a");
  AutSearchOptions o;
  o.use_declared = false;
  o.parallel = Parallel;
  for (auto _ : st)
    benchmark::DoNotOptimize(cone_automorphisms(c, o).order());
}

} // namespace

BENCHMARK(BM_MolienClassCycleType)->Arg(16)->Arg(32);
BENCHMARK(BM_MolienClassDet)->Arg(16)->Arg(32);
BENCHMARK(BM_MolienClassParallel)->Arg(16)->Arg(32);
BENCHMARK(BM_MolienNaive)->Arg(16)->Arg(32);
BENCHMARK(BM_AutSearch<false>)->Name("BM_AutSearchSerial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AutSearch<true>)->Name("BM_AutSearchParallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
