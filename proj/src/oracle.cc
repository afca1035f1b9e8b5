// SPDX-License-Identifier: GPL-2.0-only

#include "spsched/oracle.h"

#include <algorithm>

namespace spsched {

namespace {

using Occupancy = std::vector<char>;

/// Ticks of [0, horizon) covered by `a` with duration `tblk`.
void
Paint (Occupancy &occ, Tick tStart, Tick tp, Tick tblk)
{
  const Tick horizon = static_cast<Tick> (occ.size ());
  for (Tick t = 0; t < horizon; ++t)
    {
      Tick phase = ((t - tStart) % tp + tp) % tp;
      if (phase < tblk)
        occ[static_cast<std::size_t> (t)] += 1;
    }
}

bool
Fits (const Occupancy &occ, Tick bi, Tick start, Tick tp, Tick tblk)
{
  if (tblk > tp)
    return false;
  const Tick horizon = static_cast<Tick> (occ.size ());
  for (Tick s = start; s < start + horizon; s += tp)
    {
      Tick local = s % horizon;
      if (local / bi != (local + tblk - 1) / bi)
        return false;
      for (Tick t = local; t < local + tblk; ++t)
        {
          if (occ[static_cast<std::size_t> (t % horizon)] != 0)
            return false;
        }
    }
  return true;
}

} // namespace

OccupancyMap::OccupancyMap (const Schedule &s, Tick horizon)
  : m_bi (s.GetTimeBase ().BiTicks ()),
    m_horizon (horizon),
    m_busy (static_cast<std::size_t> (2 * horizon + 1), 0),
    m_biEnd (static_cast<std::size_t> (horizon))
{
  for (Tick t = 0; t < horizon; ++t)
    m_biEnd[static_cast<std::size_t> (t)] = (t / m_bi + 1) * m_bi;
  Occupancy occ (static_cast<std::size_t> (horizon), 0);
  for (const auto &a : s.Allocations ())
    Paint (occ, a.tStart, a.tp, a.tblk);
  for (Tick t = 0; t < 2 * horizon; ++t)
    m_busy[static_cast<std::size_t> (t + 1)] = m_busy[static_cast<std::size_t> (t)]
                                                + (occ[static_cast<std::size_t> (t % horizon)] != 0);
}

bool
OccupancyMap::Fits (Tick start, const Candidate &c) const
{
  if (c.tblk > c.tp || c.tblk > m_horizon || start < 0)
    return false;
  start %= m_horizon;
  for (Tick s = start; s < start + m_horizon; s += c.tp)
    {
      const Tick local = s < m_horizon ? s : s - m_horizon;
      if (local + c.tblk > m_biEnd[static_cast<std::size_t> (local)])
        return false;
      if (m_busy[static_cast<std::size_t> (local + c.tblk)] != m_busy[static_cast<std::size_t> (local)])
        return false;
    }
  return true;
}

std::optional<Tick>
OccupancyMap::EarliestFit (const Candidate &c, const SearchWindow &window) const
{
  for (Tick s = window.tMin; s + c.tblk <= window.tMax; ++s)
    {
      if (Fits (s, c))
        return s;
    }
  return std::nullopt;
}

std::optional<Tick>
OracleFeasible (const Schedule &existing, const Candidate &c, const SearchWindow &window)
{
  return OccupancyMap (existing, existing.HorizonWith (c.tp)).EarliestFit (c, window);
}

std::vector<bool>
OracleFeasibleStarts (const Schedule &existing, const Candidate &c)
{
  const OccupancyMap occ (existing, existing.HorizonWith (c.tp));
  std::vector<bool> out (static_cast<std::size_t> (c.tp), false);
  for (Tick s = 0; s + c.tblk <= c.tp; ++s)
    out[static_cast<std::size_t> (s)] = occ.Fits (s, c);
  return out;
}

std::vector<FeasibleInterval>
OracleFeasibleIntervals (const Schedule &existing, const Candidate &c)
{
  const OccupancyMap occ (existing, existing.HorizonWith (c.tp));
  const auto starts = OracleFeasibleStarts (existing, c);
  const Candidate wider{c.tp, c.tblk + 1};
  std::vector<FeasibleInterval> out;
  for (Tick s = 0; s < c.tp; ++s)
    {
      if (!starts[static_cast<std::size_t> (s)])
        continue;
      Tick e = s;
      while (e + 1 < c.tp && starts[static_cast<std::size_t> (e + 1)] && occ.Fits (e, wider))
        ++e;
      out.push_back ({s, e + c.tblk});
      s = e;
    }
  return out;
}

std::optional<Rational>
OracleMaxMin (const Schedule &existing, const AllocationRequest &req)
{
  const TimeBase &tb = existing.GetTimeBase ();
  const Tick tp = PeriodTicks (req.period, tb);
  const Tick horizon = existing.HorizonWith (tp);
  const auto &priors = existing.Allocations ();
  const std::size_t n = priors.size ();

  std::vector<Tick> tblk (n);
  for (std::size_t i = 0; i < n; ++i)
    tblk[i] = priors[i].tmin;

  std::optional<Rational> best;
  while (true)
    {
      Rational priorMin (1);
      for (std::size_t i = 0; i < n; ++i)
        priorMin = std::min (priorMin, Rational (tblk[i] - priors[i].tmin, priors[i].tmax - priors[i].tmin));

      if (!best || priorMin > *best)
        {
          Occupancy occ (static_cast<std::size_t> (horizon), 0);
          for (std::size_t i = 0; i < n; ++i)
            Paint (occ, priors[i].tStart, priors[i].tp, tblk[i]);
          bool valid = std::all_of (occ.begin (), occ.end (), [] (char v) { return v <= 1; });
          for (std::size_t i = 0; valid && i < n; ++i)
            {
              for (Tick s = priors[i].tStart; s < horizon; s += priors[i].tp)
                valid = valid && tb.BiIndex (s) == tb.BiIndex (s + tblk[i] - 1);
            }
          for (Tick s = 0; valid && s < tp; ++s)
            {
              for (Tick d = req.tmax; d >= req.tmin; --d)
                {
                  if (s + d <= tp && Fits (occ, tb.BiTicks (), s, tp, d))
                    {
                      Rational score = std::min (priorMin, Rational (d - req.tmin, req.tmax - req.tmin));
                      if (!best || score > *best)
                        best = score;
                      break;
                    }
                }
            }
        }

      // odometer over prior durations
      std::size_t i = 0;
      for (; i < n; ++i)
        {
          if (tblk[i] < priors[i].tblk)
            {
              ++tblk[i];
              break;
            }
          tblk[i] = priors[i].tmin;
        }
      if (i == n)
        break;
    }
  return best;
}

} // namespace spsched
