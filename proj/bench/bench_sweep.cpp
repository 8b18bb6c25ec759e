#include <benchmark/benchmark.h>

#include <vector>

#include "hcbf/reach_kernels.hpp"
#include "hcbf/reachability.hpp"
#include "hcbf/scenarios.hpp"

using namespace hcbf;

namespace {

/// ACC dry-mode sweep inputs on an n x n x n grid.
struct SweepCase {
  AdvectionTable table;
  std::vector<double> cap;
  std::vector<std::uint8_t> absorbing;
  std::vector<double> prev;
  std::vector<double> next;

  explicit SweepCase(std::size_t n) {
    const Scenario s = make_scenario("acc");
    const Grid g({{n, 0.0, 120.0, false}, {n, 0.0, 35.0, false}, {n, 0.0, 100.0, false}});
    const auto controls = control_lattice(s.automaton->mode(0).control_box, 3);
    table = build_advection_table(g, *s.automaton, 0, controls, 0.01);
    cap = s.local.at(0).value.sample(g).values;
    absorbing.assign(g.size(), 0);
    for (std::size_t k = 0; k < g.size(); ++k) absorbing[k] = g.node(k)[0] >= 100.0;
    prev = cap;
    next.resize(g.size());
  }
};

void run(benchmark::State& state, Exec exec) {
  SweepCase c(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const double r = sweep(exec, c.table, c.cap, c.absorbing, 0.99, c.prev, c.next);
    benchmark::DoNotOptimize(r);
    benchmark::DoNotOptimize(c.next.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.cap.size()));
}

void BM_SweepSerial(benchmark::State& state) { run(state, Exec::serial); }
void BM_SweepParallel(benchmark::State& state) { run(state, Exec::parallel); }

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(41)->Arg(81)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(41)->Arg(81)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
