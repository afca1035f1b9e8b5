// SPDX-License-Identifier: GPL-2.0-only

#include "spsched/sched_maxmin.h"

#include <algorithm>
#include <cassert>

namespace spsched {

Rational
FairAllocationRatio (const CollisionParty &prior, const CollisionParty &newcomer, Tick tLim)
{
  Rational r (tLim - prior.start - prior.tmin - newcomer.tmin,
              (prior.tmax - prior.tmin) + (newcomer.tmax - newcomer.tmin));
  return std::min (Rational (1), r);
}

CollisionResolution
ResolveCollision (const CollisionParty &prior, const CollisionParty &newcomer, Tick tLim)
{
  const Rational fair = FairAllocationRatio (prior, newcomer, tLim);
  const Rational rPrior = prior.Ratio ();
  const Rational rNew = newcomer.Ratio ();

  if (rPrior <= fair)
    {
      // prior keeps its duration; newcomer starts where it ends
      Tick start = std::max (prior.start + prior.tblk, newcomer.start);
      Tick tblk = std::min (newcomer.tblk, tLim - start);
      return {rNew <= fair ? CollisionCase::kBothBelow : CollisionCase::kNewcomerAbove, fair, prior.tblk, start,
              tblk};
    }
  if (rNew <= fair)
    {
      return {CollisionCase::kPriorAbove, fair, newcomer.start - prior.start, newcomer.start,
              std::min (newcomer.tblk, tLim - newcomer.start)};
    }

  // Both above r*: the fairness equation puts the split at Tblk_n(r*),
  // which is generally not a tick.
  const Rational split = Rational (prior.tmin) + fair * Rational (prior.tmax - prior.tmin);
  CollisionResolution best{CollisionCase::kBothAbove, fair, prior.tblk, newcomer.start, newcomer.tblk};
  std::optional<Rational> bestMin;
  for (Tick option : {split.Floor (), split.Ceil ()})
    {
      Tick b = std::clamp (option, prior.tmin, prior.tblk);
      Tick start = std::max (prior.start + b, newcomer.start);
      b = start - prior.start;
      Tick tblk = std::min (newcomer.tblk, tLim - start);
      if (tblk < newcomer.tmin)
        continue;
      Rational pairMin = std::min (Rational (b - prior.tmin, prior.tmax - prior.tmin),
                                   Rational (tblk - newcomer.tmin, newcomer.tmax - newcomer.tmin));
      if (!bestMin || pairMin > *bestMin)
        {
          bestMin = pairMin;
          best.priorTblk = b;
          best.newcomerStart = start;
          best.newcomerTblk = tblk;
        }
    }
  assert (bestMin.has_value ());
  return best;
}

Rational
MinRatio (const Schedule &s)
{
  Rational out (1);
  for (const auto &a : s.Allocations ())
    out = std::min (out, a.Ratio ());
  return out;
}

namespace {

/// Longest duration allocation `self` could take without touching any other
/// block or crossing a BI boundary, given its fixed start.
Tick
AvailableDuration (const std::vector<Allocation> &allocs, std::size_t self, const TimeBase &tb, Tick horizon)
{
  const Allocation &a = allocs[self];
  Tick reach = a.tp;
  for (Tick s = a.tStart; s < horizon; s += a.tp)
    {
      Tick limit = tb.BiEnd (s);
      for (std::size_t i = 0; i < allocs.size (); ++i)
        {
          if (i != self)
            limit = std::min (limit, detail::NextBlockStart (allocs[i], s + 1));
        }
      reach = std::min (reach, limit - s);
    }
  return reach;
}

CandidateConfig
EvaluateInterval (const Schedule &s, const Allocation &initial, std::size_t m, const FeasibleInterval &iv)
{
  const TimeBase &tb = s.GetTimeBase ();
  std::vector<Allocation> allocs = s.Allocations ();
  const std::size_t priors = allocs.size ();
  allocs.push_back (initial);
  Allocation &nc = allocs.back ();
  nc.tStart = iv.tFeas;
  nc.tblk = std::min (nc.tmax, iv.Length ());
  // t_lim depends only on block starts and the BI grid, so it stays fixed
  // while the newcomer moves right inside this interval.
  const Tick tLim = iv.tLim;
  const Tick horizon = s.HorizonWith (nc.tp);

  std::vector<CollidingEntry> colliding;
  for (std::size_t n = 0; n < priors; ++n)
    {
      Allocation &prior = allocs[n];
      for (Tick k = 0; prior.tStart + k * prior.tp < horizon; ++k)
        {
          const Tick startK = prior.tStart + k * prior.tp;
          const Tick h = CeilDiv (startK - nc.tStart, nc.tp);
          const Tick startH = nc.tStart + h * nc.tp;
          if (tb.BiIndex (startK) != tb.BiIndex (startH) || startK + prior.tblk < startH)
            continue;

          CollisionResolution res = ResolveCollision ({startK, prior.tblk, prior.tmin, prior.tmax},
                                                      {startH, nc.tblk, nc.tmin, nc.tmax}, tLim + h * nc.tp);
          if (res.priorTblk < prior.tblk)
            {
              auto it = std::find_if (colliding.begin (), colliding.end (),
                                      [&] (const CollidingEntry &e) { return e.index == n; });
              if (it == colliding.end ())
                colliding.push_back ({n, prior.tblk, prior.Ratio ()});
            }
          prior.tblk = res.priorTblk;
          nc.tStart = res.newcomerStart - h * nc.tp;
          nc.tblk = res.newcomerTblk;
        }
    }

  // give back what the newcomer's final placement leaves free
  for (const auto &entry : colliding)
    {
      Allocation &prior = allocs[entry.index];
      Tick avail = AvailableDuration (allocs, entry.index, tb, horizon);
      prior.tblk = std::max (prior.tblk, std::min (entry.tblkPrev, avail));
    }

  Schedule out (tb);
  for (auto &a : allocs)
    out.Add (std::move (a));
  Rational score = MinRatio (out);
  return {m, iv, std::move (out), std::move (colliding), score};
}

} // namespace

MaxMinOutcome
EvaluateMaxMin (const Schedule &s, const AllocationRequest &req, Execution exec)
{
  ValidateRequest (req, s.GetTimeBase ());
  const Tick tp = PeriodTicks (req.period, s.GetTimeBase ());

  MaxMinOutcome out;
  out.intervals = EnumerateFeasibleIntervals (s.ShrunkToMinimum (), {tp, req.tmin});
  if (out.intervals.empty ())
    return out;

  const Allocation initial{req.id, 0, tp, req.tmin, req.tmin, req.tmax};
  const auto count = static_cast<std::ptrdiff_t> (out.intervals.size ());
  std::vector<std::optional<CandidateConfig>> slots (out.intervals.size ());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::kParallel && count > 1)
  for (std::ptrdiff_t m = 0; m < count; ++m)
    {
      auto idx = static_cast<std::size_t> (m);
      slots[idx] = EvaluateInterval (s, initial, idx, out.intervals[idx]);
    }

  out.candidates.reserve (slots.size ());
  for (auto &slot : slots)
    {
      out.candidates.push_back (std::move (*slot));
      const auto &c = out.candidates.back ();
      if (!out.chosen || c.score > out.candidates[*out.chosen].score)
        out.chosen = out.candidates.size () - 1;
    }
  return out;
}

std::optional<Allocation>
AdmitMaxMin (Schedule &s, const AllocationRequest &req, Execution exec)
{
  MaxMinOutcome outcome = EvaluateMaxMin (s, req, exec);
  if (!outcome.Accepted ())
    return std::nullopt;
  s = std::move (outcome.candidates[*outcome.chosen].schedule);
  return s.Allocations ().back ();
}

} // namespace spsched
