#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include <hyplat/coxeter.hpp>

using namespace hyplat;

namespace {

GramMatrix simplex_gram() {
  std::ifstream in(std::string(HYPLAT_TEST_DATA) + "/simplex5.json");
  std::ostringstream os;
  os << in.rdbuf();
  return gram_from_diagram(parse_diagram(os.str()));
}

}  // namespace

static void BM_SignatureSimplex(benchmark::State& state) {
  GramMatrix g = simplex_gram();
  for (auto _ : state) benchmark::DoNotOptimize(signature(g.entries));
}
BENCHMARK(BM_SignatureSimplex);

static void BM_VinbergSimplex(benchmark::State& state) {
  GramMatrix g = simplex_gram();
  for (auto _ : state) benchmark::DoNotOptimize(vinberg_check(g));
}
BENCHMARK(BM_VinbergSimplex);

static void BM_CycProducts(benchmark::State& state) {
  GramMatrix g = simplex_gram();
  for (auto _ : state) benchmark::DoNotOptimize(cyc_products(g.entries));
}
BENCHMARK(BM_CycProducts);

BENCHMARK_MAIN();
