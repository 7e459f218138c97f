#include <benchmark/benchmark.h>

#include "qcflow/heleshaw.hpp"
#include "qcflow/laurent_map.hpp"
#include "qcflow/loewner.hpp"

namespace {

qcflow::LaurentMap fixture_map() {
  std::vector<qcflow::cplx> tail(64, 0.0);
  tail[0] = 0.1;
  tail[1] = 0.05;
  return qcflow::LaurentMap(2.0, 0.0, std::move(tail));
}

void bm_pgl_rhs(benchmark::State& state) {
  const qcflow::LaurentMap f = fixture_map();
  for (auto _ : state) {
    auto v = qcflow::pgl_rhs(f);
    benchmark::DoNotOptimize(v.a_dot.data());
  }
}

void bm_hs_short_run(benchmark::State& state) {
  const qcflow::LaurentMap f = fixture_map();
  qcflow::HsControls c;
  c.atol = c.rtol = 1e-8;
  for (auto _ : state) {
    auto res = qcflow::hs_evolve(f, 0.05, c);
    benchmark::DoNotOptimize(res.states.size());
  }
}

void bm_lk_pde_short_run(benchmark::State& state) {
  const qcflow::LaurentMap f = fixture_map();
  const auto p = qcflow::HerglotzFunction::constant(1.0);
  qcflow::LkControls c;
  c.atol = c.rtol = 1e-8;
  for (auto _ : state) {
    auto res = qcflow::lk_pde_evolve(f, p, 0.05, c);
    benchmark::DoNotOptimize(res.states.size());
  }
}

}  // namespace

BENCHMARK(bm_pgl_rhs);
BENCHMARK(bm_hs_short_run);
BENCHMARK(bm_lk_pde_short_run);
