// SPDX-License-Identifier: GPL-2.0-only
//
// Exhaustive oracle-equivalence sweeps over desk-scale instance families.

#ifndef SPSCHED_VERIFY_H
#define SPSCHED_VERIFY_H

#include "spsched/execution.h"
#include "spsched/model.h"

#include <cstdint>
#include <string>
#include <vector>

namespace spsched {

struct VerifyStats
{
  std::uint64_t instances = 0;
  std::uint64_t mismatches = 0;
  std::vector<std::string> samples; // first few mismatch descriptions

  bool Passed () const { return instances > 0 && mismatches == 0; }
  void Merge (const VerifyStats &other);
};

/// Every valid schedule of up to `maxExisting` allocations whose periods are
/// the divisors of bi plus 2*bi, with every start and tick duration, checked
/// against every (period, tblk) candidate in the default window. With
/// `allWindows`, every window start in [0, Tp) is checked too.
struct FeasibilityFamily
{
  Tick biTicks = 12;
  int maxExisting = 3;
  bool allWindows = false;
};

VerifyStats VerifyFeasibilityFamily (const FeasibilityFamily &family, Execution exec = Execution::kSerial);

/// `count` schedules drawn uniformly among valid random fills of up to
/// `maxExisting` allocations, checked like VerifyFeasibilityFamily.
VerifyStats VerifyFeasibilitySample (Tick biTicks, int maxExisting, std::uint64_t count, std::uint64_t seed,
                                     Execution exec = Execution::kSerial);

/// Every admission sequence of up to `maxAdmissions` requests drawn from the
/// request types (period in `periods`, 1 <= tmin < tmax <= maxTmax), fed to
/// the max-min scheduler; at every step the scheduler's accept/reject and
/// resulting min ratio are compared with OracleMaxMin.
struct MaxMinFamily
{
  Tick biTicks = 12;
  int maxAdmissions = 3;
  Tick maxTmax = 12;
  std::vector<RationalPeriod> periods{RationalPeriod::Fraction (6), RationalPeriod::Fraction (4),
                                      RationalPeriod::Fraction (3), RationalPeriod::Fraction (2),
                                      RationalPeriod::Multiple (1),  RationalPeriod::Multiple (2)};
};

VerifyStats VerifyMaxMinFamily (const MaxMinFamily &family, Execution exec = Execution::kSerial);

/// Request types of a max-min family in enumeration order.
std::vector<AllocationRequest> MaxMinRequestTypes (const MaxMinFamily &family);

} // namespace spsched

#endif // SPSCHED_VERIFY_H
