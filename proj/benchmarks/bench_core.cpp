#include <benchmark/benchmark.h>

#include <random>

#include "mdlie/catalog.hpp"
#include "mdlie/cohomology.hpp"
#include "mdlie/linalg.hpp"
#include "mdlie/representation.hpp"

using namespace mdlie;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-4, 4);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(entry(rng), 1 + (entry(rng) + 4) % 3);
  return m;
}

MD3LieAlgebra a4_md() {
  return MD3LieAlgebra(catalog::simple_a4(), Matrix{{-2, 1, 0, 0}, {-1, -2, 0, 0}, {0, 0, -2, 2}, {0, 0, -2, -2}}, 4);
}

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(n, n + n / 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(32)->Arg(64);

void BM_KernelBasis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(n / 2, n, 11);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_KernelBasis)->Arg(16)->Arg(48);

// Fresh assemblies each iteration so the cache does not hide the work.
void BM_AssembleDelta(benchmark::State& state) {
  const auto md = catalog::example_e_md();
  const auto rep = adjoint_representation(md);
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const ComplexAssembly cx(md, rep);
    benchmark::DoNotOptimize(cx.delta(q).rows());
  }
}
BENCHMARK(BM_AssembleDelta)->DenseRange(1, 3);

void BM_AssemblePartial(benchmark::State& state) {
  const auto md = a4_md();
  const auto rep = adjoint_representation(md);
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const ComplexAssembly cx(md, rep);
    benchmark::DoNotOptimize(cx.partial(q).rows());
  }
}
BENCHMARK(BM_AssemblePartial)->DenseRange(1, 2);

void BM_CohomologyDim(benchmark::State& state) {
  const auto md = catalog::example_e_md();
  const auto rep = adjoint_representation(md);
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const ComplexAssembly cx(md, rep);
    benchmark::DoNotOptimize(cohomology_dim(cx, q).cohomology);
  }
}
BENCHMARK(BM_CohomologyDim)->DenseRange(1, 2);

void BM_SemidirectFundamentalIdentity(benchmark::State& state) {
  const auto md = state.range(0) == 0 ? catalog::example_e_md() : a4_md();
  const auto sd = semidirect_product(md, adjoint_representation(md));
  for (auto _ : state) benchmark::DoNotOptimize(verify_3lie(sd.algebra()).valid());
}
BENCHMARK(BM_SemidirectFundamentalIdentity)->Arg(0)->Arg(1);

}  // namespace
BENCHMARK_MAIN();
