#include <benchmark/benchmark.h>

#include "qcflow/beltrami_field.hpp"
#include "qcflow/disk_quadrature.hpp"
#include "qcflow/math_util.hpp"

namespace {

qcflow::BeltramiField test_field() {
  return qcflow::BeltramiField::from_function(
      [](qcflow::cplx w) { return 0.3 * w * std::conj(w); },
      qcflow::default_disk_quadrature());
}

void bm_cauchy_interior(benchmark::State& state) {
  const qcflow::BeltramiField nu = test_field();
  const qcflow::cplx z(0.35, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(qcflow::cauchy_transform_disk(nu, z));
}

void bm_cauchy_exterior(benchmark::State& state) {
  const qcflow::BeltramiField nu = test_field();
  const qcflow::cplx z(1.7, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(qcflow::cauchy_transform_disk(nu, z));
}

void bm_wirtinger_dbar(benchmark::State& state) {
  const qcflow::BeltramiField nu = test_field();
  for (auto _ : state) {
    auto d = qcflow::wirtinger_dbar(nu);
    benchmark::DoNotOptimize(d.samples().data());
  }
}

}  // namespace

BENCHMARK(bm_cauchy_interior);
BENCHMARK(bm_cauchy_exterior);
BENCHMARK(bm_wirtinger_dbar);
