// SPDX-License-Identifier: GPL-2.0-only

#include "spsched/sched_simple.h"

namespace spsched {

std::optional<Allocation>
AdmitSimple (Schedule &s, const AllocationRequest &req)
{
  ValidateRequest (req, s.GetTimeBase ());
  const Tick tp = PeriodTicks (req.period, s.GetTimeBase ());
  const auto intervals = EnumerateFeasibleIntervals (s, {tp, req.tmin});

  const FeasibleInterval *best = nullptr;
  for (const auto &iv : intervals)
    {
      // strict comparison keeps the earliest of equally long intervals
      if (best == nullptr || iv.Length () > best->Length ())
        best = &iv;
    }
  if (best == nullptr || best->Length () < req.tmin)
    return std::nullopt;

  Allocation a{req.id, best->tFeas, tp, std::min (req.tmax, best->Length ()), req.tmin, req.tmax};
  s.Add (a);
  return a;
}

} // namespace spsched
