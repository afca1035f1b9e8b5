// SPDX-License-Identifier: GPL-2.0-only
//
// Serial vs OpenMP timings of the parallel kernels. Arg 0 runs serial,
// arg 1 runs on every available thread.

#include "spsched/harness.h"
#include "spsched/sched_maxmin.h"
#include "spsched/verify.h"

#include <benchmark/benchmark.h>

namespace {

using namespace spsched;

Execution
ExecOf (const benchmark::State &state)
{
  return state.range (0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void
BM_Scenario2 (benchmark::State &state)
{
  Scenario2Config cfg;
  cfg.runs = 5;
  for (auto _ : state)
    benchmark::DoNotOptimize (RunScenario2 (cfg, ExecOf (state)));
  state.counters["threads"] = ExecOf (state) == Execution::kSerial ? 1 : MaxThreads ();
}
BENCHMARK (BM_Scenario2)->Arg (0)->Arg (1)->Unit (benchmark::kMillisecond);

void
BM_FeasibilityFamily (benchmark::State &state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize (VerifyFeasibilityFamily ({8, 3, false}, ExecOf (state)));
  state.counters["threads"] = ExecOf (state) == Execution::kSerial ? 1 : MaxThreads ();
}
BENCHMARK (BM_FeasibilityFamily)->Arg (0)->Arg (1)->Unit (benchmark::kMillisecond);

// crowded schedule: many feasible intervals, each one a candidate configuration
void
BM_EvaluateMaxMin (benchmark::State &state)
{
  const TimeBase tb;
  const auto profile = TrafficProfile::Make (Rational (1, 100), Rational (1, 10), RationalPeriod::Fraction (3), tb);
  std::vector<AllocationRequest> reqs;
  for (int k = 0; k < 60; ++k)
    reqs.push_back (profile.Request ("r" + std::to_string (k)));
  const Schedule s = AdmitAll (Policy::kMaxMin, tb, reqs).schedule;
  const auto next = profile.Request ("probe");
  for (auto _ : state)
    benchmark::DoNotOptimize (EvaluateMaxMin (s, next, ExecOf (state)));
  state.counters["threads"] = ExecOf (state) == Execution::kSerial ? 1 : MaxThreads ();
}
BENCHMARK (BM_EvaluateMaxMin)->Arg (0)->Arg (1)->Unit (benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN ();
