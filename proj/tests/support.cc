// SPDX-License-Identifier: GPL-2.0-only

#include "support.h"

#include "spsched/sched_maxmin.h"
#include "spsched/sched_simple.h"

#include <numeric>

namespace spsched::test {

bool
TickValid (const Schedule &s)
{
  const Tick bi = s.GetTimeBase ().BiTicks ();
  Tick horizon = bi;
  for (const auto &a : s.Allocations ())
    horizon = std::lcm (horizon, a.tp);

  std::vector<int> cover (static_cast<std::size_t> (horizon), 0);
  for (const auto &a : s.Allocations ())
    {
      if (a.tblk < a.tmin || a.tblk > a.tmax || a.tStart < 0 || a.tStart >= a.tp)
        return false;
      for (Tick start = a.tStart; start < horizon; start += a.tp)
        {
          if (start / bi != (start + a.tblk - 1) / bi)
            return false;
          for (Tick t = start; t < start + a.tblk; ++t)
            {
              if (++cover[static_cast<std::size_t> (t % horizon)] > 1)
                return false;
            }
        }
    }
  return true;
}

Schedule
MakeSchedule (Tick bi, const std::vector<Allocation> &allocs)
{
  Schedule s{TimeBase (bi)};
  for (const auto &a : allocs)
    s.Add (a);
  return s;
}

Allocation
Fixed (const std::string &id, Tick tStart, Tick tp, Tick tblk)
{
  return {id, tStart, tp, tblk, tblk, tblk};
}

std::vector<RationalPeriod>
SmallPeriods (Tick bi)
{
  std::vector<RationalPeriod> out;
  for (Tick q = 6; q >= 2; --q)
    if (bi % q == 0)
      out.push_back (RationalPeriod::Fraction (q));
  out.push_back (RationalPeriod::Multiple (1));
  out.push_back (RationalPeriod::Multiple (2));
  return out;
}

AllocationRequest
RandomRequest (std::mt19937_64 &rng, const TimeBase &tb, const std::string &id)
{
  const auto periods = SmallPeriods (tb.BiTicks ());
  const auto &p = periods[std::uniform_int_distribution<std::size_t> (0, periods.size () - 1) (rng)];
  const Tick cap = std::min (PeriodTicks (p, tb), tb.BiTicks ());
  const Tick tmin = std::uniform_int_distribution<Tick> (1, std::max<Tick> (1, cap / 3)) (rng);
  const Tick tmax = std::uniform_int_distribution<Tick> (tmin + 1, std::max (tmin + 1, cap * 2 / 3)) (rng);
  return {id, p, tmin, std::min (tmax, cap), std::nullopt};
}

Schedule
RandomSchedule (std::mt19937_64 &rng, Tick bi, int count)
{
  const TimeBase tb (bi);
  const auto periods = SmallPeriods (bi);
  Schedule s (tb);
  for (int attempt = 0; attempt < 40 && static_cast<int> (s.Size ()) < count; ++attempt)
    {
      const Tick tp = PeriodTicks (periods[std::uniform_int_distribution<std::size_t> (0, periods.size () - 1) (rng)], tb);
      const Tick tblk = std::uniform_int_distribution<Tick> (1, std::max<Tick> (1, std::min (tp, bi) / 3)) (rng);
      const Tick start = std::uniform_int_distribution<Tick> (0, tp - 1) (rng);
      Schedule next = s;
      next.Add (Fixed ("e" + std::to_string (s.Size ()), start, tp, tblk));
      if (TickValid (next))
        s = next;
    }
  return s;
}

void
PropertyStats::Fail (std::string what)
{
  ++violations;
  if (samples.size () < 5)
    samples.push_back (std::move (what));
}

PropertyStats
RunAdmissionProperties (std::uint64_t sequences, std::uint64_t seed)
{
  static const Tick kBis[] = {12, 24, 36, 60};
  PropertyStats st;
  for (std::uint64_t n = 0; n < sequences; ++n)
    {
      std::mt19937_64 rng (seed + n);
      const TimeBase tb (kBis[std::uniform_int_distribution<int> (0, 3) (rng)]);
      const int length = std::uniform_int_distribution<int> (1, 8) (rng);
      std::vector<AllocationRequest> reqs;
      for (int i = 0; i < length; ++i)
        reqs.push_back (RandomRequest (rng, tb, "r" + std::to_string (i)));

      Schedule simple (tb);
      Schedule maxmin (tb);
      const std::string tag = "sequence " + std::to_string (n) + " bi=" + std::to_string (tb.BiTicks ());
      for (const auto &req : reqs)
        {
          ++st.admissions;

          const Schedule simpleBefore = simple;
          const bool simpleOk = AdmitSimple (simple, req).has_value ();
          for (std::size_t i = 0; i < simpleBefore.Size (); ++i)
            if (!(simple.Allocations ()[i] == simpleBefore.Allocations ()[i]))
              st.Fail (tag + ": simple modified a prior allocation");
          if (simple.Size () != simpleBefore.Size () + (simpleOk ? 1 : 0))
            st.Fail (tag + ": simple schedule size mismatch");
          if (ValidateSchedule (simple) || !TickValid (simple))
            st.Fail (tag + ": simple produced an invalid schedule");

          const Schedule before = maxmin;
          Schedule probe = before;
          const bool simpleWouldAccept = AdmitSimple (probe, req).has_value ();
          const bool ok = AdmitMaxMin (maxmin, req).has_value ();
          st.accepted += ok ? 1 : 0;
          if (simpleWouldAccept && !ok)
            st.Fail (tag + ": max-min rejected " + req.id + " which simple accepts");
          if (!ok && !(maxmin == before))
            st.Fail (tag + ": rejected admission modified the schedule");
          if (maxmin.Size () != before.Size () + (ok ? 1 : 0))
            st.Fail (tag + ": max-min schedule size mismatch");
          for (std::size_t i = 0; i < before.Size (); ++i)
            {
              const auto &was = before.Allocations ()[i];
              const auto &now = maxmin.Allocations ()[i];
              if (now.id != was.id || now.tStart != was.tStart || now.tp != was.tp)
                st.Fail (tag + ": prior " + was.id + " moved");
              if (now.Ratio () > was.Ratio ())
                st.Fail (tag + ": prior " + was.id + " ratio grew");
            }
          if (ValidateSchedule (maxmin) || !TickValid (maxmin))
            st.Fail (tag + ": max-min produced an invalid schedule");
        }
      ++st.sequences;
    }
  return st;
}

} // namespace spsched::test
