// SPDX-License-Identifier: GPL-2.0-only

#include "spsched/feasibility.h"

#include <algorithm>

namespace spsched {

namespace detail {

Tick
NextObstruction (const Schedule &existing, Tick blockStart, Tick end)
{
  Tick best = existing.GetTimeBase ().BiEnd (blockStart);
  for (const auto &a : existing.Allocations ())
    {
      best = std::min (best, NextBlockStart (a, end));
    }
  return best;
}

} // namespace detail

namespace {

void
CheckCandidate (const Candidate &c)
{
  if (c.tp <= 0 || c.tblk <= 0)
    {
      throw UsageError ("candidate needs a positive period and duration");
    }
}

/// Shift needed to clear the first collision at this start, or 0.
Tick
FirstCollisionShift (const Schedule &existing, const Candidate &c, Tick tStart, Tick horizon)
{
  const TimeBase &tb = existing.GetTimeBase ();
  for (Tick s = tStart; s < tStart + horizon; s += c.tp)
    {
      Tick e = s + c.tblk;
      if (tb.BiIndex (s) != tb.BiIndex (e - 1))
        {
          return tb.BiEnd (s) - s;
        }
      for (const auto &a : existing.Allocations ())
        {
          if (auto k = detail::Overlapping (a, s, e))
            {
              return k->end - s;
            }
        }
    }
  return 0;
}

} // namespace

std::optional<Tick>
FeasibilityCheck (const Schedule &existing, const Candidate &c, const SearchWindow &window)
{
  CheckCandidate (c);
  if (c.tblk > c.tp)
    return std::nullopt;
  const Tick horizon = existing.HorizonWith (c.tp);
  Tick tStart = window.tMin;
  while (tStart + c.tblk <= window.tMax)
    {
      Tick shift = FirstCollisionShift (existing, c, tStart, horizon);
      if (shift == 0)
        return tStart;
      tStart += shift;
    }
  return std::nullopt;
}

Tick
RightBoundary (const Schedule &existing, const Candidate &c, Tick tFeas)
{
  CheckCandidate (c);
  const Tick horizon = existing.HorizonWith (c.tp);
  Tick reach = c.tp; // own next block
  for (Tick s = tFeas; s < tFeas + horizon; s += c.tp)
    {
      reach = std::min (reach, detail::NextObstruction (existing, s, s + c.tblk) - s);
    }
  return tFeas + reach;
}

std::vector<FeasibleInterval>
EnumerateFeasibleIntervals (const Schedule &existing, const Candidate &c)
{
  std::vector<FeasibleInterval> out;
  Tick from = 0;
  while (from < c.tp)
    {
      auto feas = FeasibilityCheck (existing, c, {from, c.tp});
      if (!feas)
        break;
      Tick lim = RightBoundary (existing, c, *feas);
      out.push_back ({*feas, lim});
      from = lim;
    }
  return out;
}

} // namespace spsched
