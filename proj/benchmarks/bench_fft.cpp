#include <benchmark/benchmark.h>

#include "qcflow/circle_grid.hpp"
#include "qcflow/fft.hpp"
#include "qcflow/math_util.hpp"

namespace {

void bm_dft(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<qcflow::cplx> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = qcflow::unit(7.0 * j / double(n));
  for (auto _ : state) {
    auto out = qcflow::dft(v);
    benchmark::DoNotOptimize(out.data());
  }
}

void bm_circle_grid_roundtrip(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const qcflow::CircleGrid g = qcflow::CircleGrid::from_function(
      [](double t) { return qcflow::cplx(std::cos(2 * t), std::sin(3 * t)); }, n);
  for (auto _ : state) {
    auto d = g.derivative();
    benchmark::DoNotOptimize(d.value(0));
  }
}

}  // namespace

BENCHMARK(bm_dft)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(bm_circle_grid_roundtrip)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
