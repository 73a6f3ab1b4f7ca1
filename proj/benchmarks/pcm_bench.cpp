#include <benchmark/benchmark.h>

#include "pcm/catalog.hpp"
#include "pcm/curvature.hpp"
#include "pcm/exact/linalg.hpp"
#include "pcm/exact/poly_text.hpp"

namespace {

using namespace pcm;

void BM_RiemannLie(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ParacontactData s = catalog::example_lie(n, n);
  for (auto _ : state) {
    const Connection nabla = levi_civita(s);
    benchmark::DoNotOptimize(riemann(s, nabla));
  }
}
BENCHMARK(BM_RiemannLie)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_InferLie(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ParacontactData s = catalog::example_lie(n, n);
  for (auto _ : state) {
    const CurvatureBundle b = compute_curvature(s);
    benchmark::DoNotOptimize(nullity_infer(s, b.r, b.h));
  }
}
BENCHMARK(BM_InferLie)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_InferR3(benchmark::State& state) {
  const ParacontactData s = catalog::example_r3();
  for (auto _ : state) {
    const CurvatureBundle b = compute_curvature(s);
    benchmark::DoNotOptimize(nullity_infer(s, b.r, b.h));
  }
}
BENCHMARK(BM_InferR3)->Unit(benchmark::kMillisecond);

// Bareiss rank of a dense polynomial matrix in three variables.
void BM_PolyRank(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const VarList vars = exact::make_vars({"x", "y", "z"});
  const std::vector<std::string> atoms{"x", "y", "z", "x*y + 1", "z^2 - x", "2*y - z"};
  PolyMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = exact::parse_poly(atoms[(i * 5 + j * 3 + i * j) % atoms.size()], vars);
  for (auto _ : state) benchmark::DoNotOptimize(exact::poly_rank(m));
}
BENCHMARK(BM_PolyRank)->DenseRange(3, 6);

void BM_PolyMultiply(benchmark::State& state) {
  const VarList vars = exact::make_vars({"x", "y", "z"});
  const Poly a = exact::parse_poly("(x + y + z + 1)^4", vars);
  const Poly b = exact::parse_poly("(x - 2*y + sqrt2*z)^3", vars);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply);

}  // namespace

BENCHMARK_MAIN();
