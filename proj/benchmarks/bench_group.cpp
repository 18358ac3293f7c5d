#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include <hyplat/coxgroup.hpp>

using namespace hyplat;

namespace {

struct Setup {
  CoxeterDiagram diagram;
  GramMatrix gram;
  GeometricRep rep;
  FMatrix tau;

  static Setup make() {
    std::ifstream in(std::string(HYPLAT_TEST_DATA) + "/simplex5.json");
    std::ostringstream os;
    os << in.rdbuf();
    CoxeterDiagram d = parse_diagram(os.str());
    GramMatrix g = gram_from_diagram(d);
    GeometricRep rep = geometric_rep(g);
    FMatrix tau = diagram_automorphism(
        d, g, parse_permutation(d.nodes(), "(a b)(c d)(e f)"));
    return {std::move(d), g, std::move(rep), std::move(tau)};
  }
};

}  // namespace

static void BM_CentralizerSearch(benchmark::State& state) {
  Setup s = Setup::make();
  int maxlen = int(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(centralizer_search(s.rep, s.tau, maxlen));
}
BENCHMARK(BM_CentralizerSearch)->Arg(3)->Arg(4)->Arg(5);

static void BM_ElementOrder(benchmark::State& state) {
  Setup s = Setup::make();
  FMatrix m = evaluate_word(s.rep, parse_word(s.diagram.nodes(), "abcdef"));
  for (auto _ : state) benchmark::DoNotOptimize(element_order(m, 64));
}
BENCHMARK(BM_ElementOrder);

static void BM_WordEvaluation(benchmark::State& state) {
  Setup s = Setup::make();
  Word w = parse_word(s.diagram.nodes(), "abcdefabcdefabcdef");
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_word(s.rep, w));
}
BENCHMARK(BM_WordEvaluation);

BENCHMARK_MAIN();
