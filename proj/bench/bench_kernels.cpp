#include "qf/census/census.hpp"
#include "qf/kernels/orbit_kernel.hpp"
#include "qf/kernels/subrep_kernel.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace qf;

namespace {

Representation<FiniteField> sample(const FiniteField& f, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Matrix<FiniteField>> maps;
  for (int a = 0; a < 2; ++a) {
    Matrix<FiniteField> m(f, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = f.random(rng);
    maps.push_back(std::move(m));
  }
  return Representation<FiniteField>(Quiver::kronecker(2), f, {n, n}, std::move(maps));
}

void subrep_args(benchmark::internal::Benchmark* b) {
  b->Args({2, 3})->Args({3, 3})->Args({2, 4});
}

template <bool Parallel>
void BM_ClosedTuples(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const FiniteField f = field_of_order(q);
  auto w = sample(f, n, 7);
  SubspaceCatalog catalog(f, n);
  for (auto _ : state) {
    auto out = Parallel ? kernels::closed_tuples_parallel(w, catalog) : kernels::closed_tuples_serial(w, catalog);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kernels::subrep_search_size(w)));
}

void orbit_args(benchmark::internal::Benchmark* b) {
  b->Args({2, 2})->Args({3, 2})->Args({2, 3});
}

template <bool Parallel>
void BM_OrbitLabels(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  kernels::RepSpace space(Quiver::jordan(), field_of_order(q), {n});
  for (auto _ : state) {
    auto labels = Parallel ? kernels::orbit_labels_parallel(space) : kernels::orbit_labels_serial(space);
    benchmark::DoNotOptimize(labels.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(space.count()));
}

}  // namespace

BENCHMARK_TEMPLATE(BM_ClosedTuples, false)->Apply(subrep_args)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_ClosedTuples, true)->Apply(subrep_args)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_OrbitLabels, false)->Apply(orbit_args)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_OrbitLabels, true)->Apply(orbit_args)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
