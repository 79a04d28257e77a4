// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "bribery/bench.hpp"
#include "bribery/fpt.hpp"
#include "bribery/oracle.hpp"

namespace {

using namespace bribery;

Election election(int m, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_election(rng, m, n);
}

void BM_Winners(benchmark::State& state, bool parallel) {
  const int m = static_cast<int>(state.range(0));
  const Election e = election(m, 60, 7);
  for (auto _ : state) {
    auto w = parallel ? winning_committees(e, Rule::kPAV, m / 3) : winning_committees_serial(e, Rule::kPAV, m / 3);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK_CAPTURE(BM_Winners, parallel, true)->Arg(12)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Winners, serial, false)->Arg(12)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);

// A no-instance forces the oracle through every script.
Instance hard_vc(int n) {
  Instance inst;
  inst.election = election(5, n, 11);
  inst.rule = Rule::kCCAV;
  inst.operation = Operation::kVC;
  inst.distinguished = CandidateSet{0, 1, 2, 3};
  inst.committee_size = 2;
  inst.budget = 2;
  inst.distance = 2;
  return inst;
}

void BM_Oracle(benchmark::State& state, bool parallel) {
  const Instance inst = hard_vc(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto d = parallel ? solve_bruteforce(inst) : solve_bruteforce_serial(inst);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK_CAPTURE(BM_Oracle, parallel, true)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Oracle, serial, false)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_IlpM(benchmark::State& state, bool parallel) {
  Instance inst = hard_vc(12);
  inst.election = election(static_cast<int>(state.range(0)), 12, 13);
  inst.rule = Rule::kSAV;
  inst.distinguished = CandidateSet{0};
  for (auto _ : state) {
    auto d = parallel ? solve_fpt_m(inst) : solve_fpt_m_serial(inst);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK_CAPTURE(BM_IlpM, parallel, true)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_IlpM, serial, false)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
