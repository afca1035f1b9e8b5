// SPDX-License-Identifier: GPL-2.0-only
//
// Shared helpers for the unit, property and acceptance tests.

#ifndef SPSCHED_TESTS_SUPPORT_H
#define SPSCHED_TESTS_SUPPORT_H

#include "spsched/model.h"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace spsched::test {

/// Independent per-tick validity check: paints every block over
/// lcm(periods, bi) and requires single coverage, BI containment and
/// tmin <= tblk <= tmax.
bool TickValid (const Schedule &s);

Schedule MakeSchedule (Tick bi, const std::vector<Allocation> &allocs);
Allocation Fixed (const std::string &id, Tick tStart, Tick tp, Tick tblk);

/// Periods usable with `bi` in randomized tests: 1/q for q | bi, q <= 6, plus 1 and 2 BIs.
std::vector<RationalPeriod> SmallPeriods (Tick bi);
AllocationRequest RandomRequest (std::mt19937_64 &rng, const TimeBase &tb, const std::string &id);

/// Random valid schedule of up to `count` fixed allocations.
Schedule RandomSchedule (std::mt19937_64 &rng, Tick bi, int count);

struct PropertyStats
{
  std::uint64_t sequences = 0;
  std::uint64_t admissions = 0;
  std::uint64_t accepted = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> samples;

  void Fail (std::string what);
};

/// Randomized admission sequences through both schedulers. After every
/// admission checks schedule validity (library and tick scan), unchanged
/// prior starts, that no prior ratio grows under max-min, that simple leaves
/// priors bit-identical, and that max-min accepts whatever simple would.
PropertyStats RunAdmissionProperties (std::uint64_t sequences, std::uint64_t seed);

} // namespace spsched::test

#endif // SPSCHED_TESTS_SUPPORT_H
