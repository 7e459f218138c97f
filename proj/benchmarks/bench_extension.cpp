#include <benchmark/benchmark.h>

#include "qcflow/circle_field.hpp"
#include "qcflow/douady_earle.hpp"
#include "qcflow/math_util.hpp"

namespace {

void bm_de_extend(benchmark::State& state) {
  const auto phi = qcflow::CircleHomeomorphism::mobius(qcflow::cplx(0.3, 0.1), 0.2);
  const qcflow::cplx z(0.4, -0.25);
  for (auto _ : state) benchmark::DoNotOptimize(qcflow::extend(phi, z));
}

void bm_de_beltrami(benchmark::State& state) {
  const auto phi = qcflow::CircleHomeomorphism::from_lift(
      [](double t) { return t + 0.05 * std::sin(2.0 * t); });
  const qcflow::cplx z(0.4, -0.25);
  for (auto _ : state) benchmark::DoNotOptimize(qcflow::beltrami_of_extension(phi, z));
}

void bm_nu_from_field(benchmark::State& state) {
  const auto d = qcflow::CircleField::from_function(
      [](double t) { return std::exp(std::cos(t)); }, 256);
  const qcflow::cplx z(0.6, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(qcflow::nu_from_field(d, z));
}

}  // namespace

BENCHMARK(bm_de_extend);
BENCHMARK(bm_de_beltrami);
BENCHMARK(bm_nu_from_field);
