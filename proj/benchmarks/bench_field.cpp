#include <benchmark/benchmark.h>

#include <random>

#include <hyplat/mqfield.hpp>
#include <hyplat/polynomial.hpp>

using namespace hyplat;

namespace {

std::vector<FieldElement> sample_elements(const MQField::Ptr& field,
                                          std::size_t count) {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  std::vector<FieldElement> out;
  for (std::size_t t = 0; t < count; ++t) {
    FieldElement x = field->zero();
    for (std::size_t i = 0; i < field->degree(); ++i) {
      Rational c(num(rng), den(rng));
      c.canonicalize();
      if (sgn(c) != 0) x += FieldElement::from_terms(field, {{i, c}});
    }
    out.push_back(x);
  }
  return out;
}

}  // namespace

static void BM_FieldMul(benchmark::State& state) {
  auto field = MQField::make({Integer(2), Integer(3), Integer(5)});
  auto xs = sample_elements(field, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[i % 64] * xs[(i + 17) % 64]);
    ++i;
  }
}
BENCHMARK(BM_FieldMul);

static void BM_FieldInverse(benchmark::State& state) {
  auto field = MQField::make({Integer(2), Integer(3), Integer(5)});
  auto xs = sample_elements(field, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const FieldElement& x = xs[i % 64];
    if (!x.is_zero()) benchmark::DoNotOptimize(x.inverse());
    ++i;
  }
}
BENCHMARK(BM_FieldInverse);

static void BM_SignNearCancellation(benchmark::State& state) {
  // sqrt2 + sqrt3 - sqrt10 ~ -0.016: forces interval refinement
  auto field = MQField::make({Integer(2), Integer(3), Integer(10)});
  FieldElement x = field->radical(2) + field->radical(3) - field->radical(10);
  for (auto _ : state) benchmark::DoNotOptimize(x.sign());
}
BENCHMARK(BM_SignNearCancellation);

static void BM_MinimalPolynomial(benchmark::State& state) {
  auto field = MQField::make({Integer(2), Integer(5)});
  FieldElement x = field->radical(2) + field->radical(5) * Rational(1, 2) +
                   field->constant(Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_polynomial(x));
}
BENCHMARK(BM_MinimalPolynomial);

BENCHMARK_MAIN();
