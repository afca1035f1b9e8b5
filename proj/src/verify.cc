// SPDX-License-Identifier: GPL-2.0-only

#include "spsched/verify.h"

#include "spsched/feasibility.h"
#include "spsched/oracle.h"
#include "spsched/sched_maxmin.h"

#include <random>

namespace spsched {

namespace {

constexpr std::size_t kMaxSamples = 5;

void
Record (VerifyStats &stats, std::string what)
{
  ++stats.mismatches;
  if (stats.samples.size () < kMaxSamples)
    stats.samples.push_back (std::move (what));
}

std::string
DescribeSchedule (const Schedule &s)
{
  std::string out = "bi=" + std::to_string (s.GetTimeBase ().BiTicks ()) + " {";
  for (const auto &a : s.Allocations ())
    {
      out += "(" + std::to_string (a.tStart) + "," + std::to_string (a.tp) + "," + std::to_string (a.tblk) + "/"
             + std::to_string (a.tmin) + ".." + std::to_string (a.tmax) + ")";
    }
  return out + "}";
}

std::string
DescribeOptional (const std::optional<Tick> &v)
{
  return v ? std::to_string (*v) : "infeasible";
}

std::vector<Tick>
FamilyPeriods (Tick bi)
{
  std::vector<Tick> out;
  for (Tick d = 1; d <= bi; ++d)
    if (bi % d == 0)
      out.push_back (d);
  out.push_back (2 * bi);
  return out;
}

struct Piece
{
  Allocation alloc;
  std::uint64_t mask; // ticks covered in [0, 2*bi)
};

std::vector<Piece>
FamilyPieces (Tick bi)
{
  const Tick horizon = 2 * bi;
  if (horizon > 64)
    throw UsageError ("feasibility family supports bi_ticks <= 32");
  TimeBase tb (bi);
  std::vector<Piece> out;
  for (Tick tp : FamilyPeriods (bi))
    {
      for (Tick ts = 0; ts < tp; ++ts)
        {
          for (Tick b = 1; b <= std::min (tp, bi); ++b)
            {
              bool contained = true;
              std::uint64_t mask = 0;
              for (Tick s = ts; s < horizon; s += tp)
                {
                  contained = contained && tb.BiIndex (s) == tb.BiIndex (s + b - 1);
                  for (Tick t = s; t < s + b; ++t)
                    mask |= std::uint64_t (1) << (t % horizon);
                }
              if (contained)
                out.push_back ({Allocation{"e", ts, tp, b, b, b}, mask});
            }
        }
    }
  return out;
}

void
CheckAllCandidates (const Schedule &existing, const std::vector<Tick> &periods, bool allWindows,
                    VerifyStats &stats)
{
  const Tick bi = existing.GetTimeBase ().BiTicks ();
  Tick periodLcm = 1;
  for (Tick tp : periods)
    periodLcm = Lcm (periodLcm, tp);
  const OccupancyMap occ (existing, existing.HorizonWith (periodLcm));
  for (Tick tp : periods)
    {
      for (Tick b = 1; b <= std::min (tp, bi); ++b)
        {
          Candidate c{tp, b};
          const Tick lastMin = allWindows ? tp - 1 : 0;
          for (Tick tMin = 0; tMin <= lastMin; ++tMin)
            {
              SearchWindow w{tMin, tp};
              auto fast = FeasibilityCheck (existing, c, w);
              auto slow = occ.EarliestFit (c, w);
              ++stats.instances;
              if (fast != slow)
                {
                  Record (stats, DescribeSchedule (existing) + " candidate tp=" + std::to_string (tp) + " tblk="
                                     + std::to_string (b) + " window [" + std::to_string (tMin) + ","
                                     + std::to_string (tp) + "): check " + DescribeOptional (fast) + " oracle "
                                     + DescribeOptional (slow));
                }
            }
        }
    }
}

void
WalkCombinations (const std::vector<Piece> &pieces, std::size_t from, std::uint64_t used, int depthLeft,
                  Schedule &current, const std::vector<Tick> &periods, bool allWindows, VerifyStats &stats)
{
  CheckAllCandidates (current, periods, allWindows, stats);
  if (depthLeft == 0)
    return;
  for (std::size_t j = from; j < pieces.size (); ++j)
    {
      if (pieces[j].mask & used)
        continue;
      Schedule next = current;
      Allocation a = pieces[j].alloc;
      a.id = "e" + std::to_string (next.Size ());
      next.Add (a);
      WalkCombinations (pieces, j + 1, used | pieces[j].mask, depthLeft - 1, next, periods, allWindows, stats);
    }
}

} // namespace

void
VerifyStats::Merge (const VerifyStats &other)
{
  instances += other.instances;
  mismatches += other.mismatches;
  for (const auto &s : other.samples)
    if (samples.size () < kMaxSamples)
      samples.push_back (s);
}

VerifyStats
VerifyFeasibilityFamily (const FeasibilityFamily &family, Execution exec)
{
  const TimeBase tb (family.biTicks);
  const auto pieces = FamilyPieces (family.biTicks);
  const auto periods = FamilyPeriods (family.biTicks);

  VerifyStats total;
  Schedule empty (tb);
  CheckAllCandidates (empty, periods, family.allWindows, total);
  if (family.maxExisting <= 0)
    return total;

  // one task per first allocation; merged in index order
  std::vector<VerifyStats> parts (pieces.size ());
  const auto count = static_cast<std::ptrdiff_t> (pieces.size ());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::kParallel)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    {
      auto idx = static_cast<std::size_t> (i);
      Schedule s (tb);
      Allocation a = pieces[idx].alloc;
      a.id = "e0";
      s.Add (a);
      WalkCombinations (pieces, idx + 1, pieces[idx].mask, family.maxExisting - 1, s, periods, family.allWindows,
                        parts[idx]);
    }
  for (const auto &p : parts)
    total.Merge (p);
  return total;
}

VerifyStats
VerifyFeasibilitySample (Tick biTicks, int maxExisting, std::uint64_t count, std::uint64_t seed, Execution exec)
{
  const TimeBase tb (biTicks);
  const auto pieces = FamilyPieces (biTicks);
  const auto periods = FamilyPeriods (biTicks);

  std::vector<VerifyStats> parts (count);
  const auto n = static_cast<std::ptrdiff_t> (count);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::kParallel)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    {
      std::mt19937_64 rng (seed + static_cast<std::uint64_t> (i));
      std::uniform_int_distribution<std::size_t> pick (0, pieces.size () - 1);
      Schedule s (tb);
      std::uint64_t used = 0;
      // draw until maxExisting pieces fit or attempts run out
      for (int attempt = 0; attempt < 64 && static_cast<int> (s.Size ()) < maxExisting; ++attempt)
        {
          const Piece &p = pieces[pick (rng)];
          if (p.mask & used)
            continue;
          Allocation a = p.alloc;
          a.id = "e" + std::to_string (s.Size ());
          s.Add (a);
          used |= p.mask;
        }
      CheckAllCandidates (s, periods, false, parts[static_cast<std::size_t> (i)]);
    }
  VerifyStats total;
  for (const auto &p : parts)
    total.Merge (p);
  return total;
}

std::vector<AllocationRequest>
MaxMinRequestTypes (const MaxMinFamily &family)
{
  const TimeBase tb (family.biTicks);
  std::vector<AllocationRequest> out;
  for (const auto &p : family.periods)
    {
      Tick tp = PeriodTicks (p, tb);
      Tick cap = std::min ({tp, tb.BiTicks (), family.maxTmax});
      for (Tick tmin = 1; tmin < cap; ++tmin)
        for (Tick tmax = tmin + 1; tmax <= cap; ++tmax)
          out.push_back ({"r", p, tmin, tmax, std::nullopt});
    }
  return out;
}

namespace {

void
WalkAdmissions (const Schedule &state, const std::vector<AllocationRequest> &types, int depthLeft,
                const std::string &trail, VerifyStats &stats)
{
  for (std::size_t t = 0; t < types.size (); ++t)
    {
      AllocationRequest req = types[t];
      req.id = "r" + std::to_string (state.Size ());
      auto oracle = OracleMaxMin (state, req);
      auto outcome = EvaluateMaxMin (state, req);
      ++stats.instances;

      std::string step = trail + " +(" + req.period.ToString () + "," + std::to_string (req.tmin) + ".."
                         + std::to_string (req.tmax) + ")";
      if (outcome.Accepted () != oracle.has_value ())
        {
          Record (stats, step + ": scheduler " + (outcome.Accepted () ? "accepts" : "rejects") + ", oracle "
                             + (oracle ? "accepts" : "rejects") + " on " + DescribeSchedule (state));
          continue;
        }
      if (!outcome.Accepted ())
        continue;
      const Schedule &next = outcome.Best ().schedule;
      Rational got = MinRatio (next);
      if (got != *oracle || ValidateSchedule (next))
        {
          Record (stats, step + ": scheduler min ratio " + got.ToString () + ", oracle " + oracle->ToString () + " on "
                             + DescribeSchedule (state) + " -> " + DescribeSchedule (next));
        }
      if (depthLeft > 1)
        WalkAdmissions (next, types, depthLeft - 1, step, stats);
    }
}

} // namespace

VerifyStats
VerifyMaxMinFamily (const MaxMinFamily &family, Execution exec)
{
  const TimeBase tb (family.biTicks);
  const auto types = MaxMinRequestTypes (family);
  std::vector<VerifyStats> parts (types.size ());
  const auto count = static_cast<std::ptrdiff_t> (types.size ());

#pragma omp parallel for schedule(dynamic) if (exec == Execution::kParallel)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    {
      auto idx = static_cast<std::size_t> (i);
      Schedule empty (tb);
      AllocationRequest req = types[idx];
      req.id = "r0";
      VerifyStats &stats = parts[idx];
      auto oracle = OracleMaxMin (empty, req);
      auto outcome = EvaluateMaxMin (empty, req);
      ++stats.instances;
      std::string step = "+(" + req.period.ToString () + "," + std::to_string (req.tmin) + ".."
                         + std::to_string (req.tmax) + ")";
      if (!outcome.Accepted () || !oracle || MinRatio (outcome.Best ().schedule) != *oracle)
        {
          Record (stats, step + ": first admission disagrees with oracle");
          continue;
        }
      if (family.maxAdmissions > 1)
        WalkAdmissions (outcome.Best ().schedule, types, family.maxAdmissions - 1, step, stats);
    }

  VerifyStats total;
  for (const auto &p : parts)
    total.Merge (p);
  return total;
}

} // namespace spsched
