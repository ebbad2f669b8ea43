// Serial reference kernels against their OpenMP counterparts.
#include <array>
#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "fzddn/fz/rmatrix.hpp"
#include "fzddn/kernels/sweep.hpp"
#include "fzddn/kernels/two_site.hpp"

namespace {

using namespace fzddn;

struct Chain {
  std::vector<int> dims;
  CMatrix op;
  CMatrix x;
};

Chain make_chain(int n, int sites, long cols) {
  const RootContext ctx(n);
  Chain c;
  c.dims.assign(sites, n);
  c.op = rmatrix_dd(ctx, {cplx(0.8, 0.3), cplx(1.1, -0.4)});
  long dim = 1;
  for (int i = 0; i < sites; ++i) dim *= n;
  c.x = CMatrix::Identity(dim, std::min(dim, cols));
  return c;
}

template <bool Parallel>
void two_site(benchmark::State& state) {
  Chain c = make_chain(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 4096);
  for (auto _ : state) {
    for (int i = 1; i < static_cast<int>(c.dims.size()); ++i) {
      if constexpr (Parallel)
        kernels::apply_two_site(c.op, i, i + 1, c.dims, c.x);
      else
        kernels::serial::apply_two_site(c.op, i, i + 1, c.dims, c.x);
    }
    c.x /= c.x.norm();
    benchmark::DoNotOptimize(c.x.data());
  }
}

template <bool Parallel>
void point_sweep(benchmark::State& state) {
  const RootContext ctx(static_cast<int>(state.range(0)));
  const std::size_t count = static_cast<std::size_t>(state.range(1));
  auto f = [&](std::size_t k) {
    const double t = 0.1 + 0.37 * static_cast<double>(k);
    return rmatrix_dd(ctx, {std::polar(1.0, t), std::polar(1.0, -0.5 * t)}).norm();
  };
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::sweep(count, f));
    else
      benchmark::DoNotOptimize(kernels::serial::sweep(count, f));
  }
}

}  // namespace

BENCHMARK(two_site<false>)->Name("two_site/serial")->Args({3, 6})->Args({3, 7})->Args({5, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(two_site<true>)->Name("two_site/openmp")->Args({3, 6})->Args({3, 7})->Args({5, 5})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(point_sweep<false>)->Name("sweep/serial")->Args({3, 256})->Args({5, 256})->Unit(benchmark::kMillisecond);
BENCHMARK(point_sweep<true>)->Name("sweep/openmp")->Args({3, 256})->Args({5, 256})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
