// SPDX-License-Identifier: GPL-2.0-only
//
// Brute-force references at tick granularity. These work on dense per-tick
// occupancy over one horizon and share no code with the interval arithmetic
// of the schedulers they check. Exponential; desk-scale inputs only.

#ifndef SPSCHED_ORACLE_H
#define SPSCHED_ORACLE_H

#include "spsched/feasibility.h"

#include <optional>
#include <vector>

namespace spsched {

/// Earliest start s in the window (s >= tMin, s + tblk <= tMax) whose blocks
/// are disjoint from every existing block and stay inside one BI.
std::optional<Tick> OracleFeasible (const Schedule &existing, const Candidate &c, const SearchWindow &window);

/// Per-tick occupancy of a schedule painted once over `horizon`, which must
/// be a multiple of every horizon it is queried with. Lets one painting serve
/// many candidates.
class OccupancyMap
{
public:
  OccupancyMap (const Schedule &s, Tick horizon);

  Tick Horizon () const { return m_horizon; }
  /// Same contract as OracleFeasible; needs Horizon() % HorizonWith(c.tp) == 0.
  std::optional<Tick> EarliestFit (const Candidate &c, const SearchWindow &window) const;
  bool Fits (Tick start, const Candidate &c) const;

private:
  Tick m_bi;
  Tick m_horizon;
  std::vector<Tick> m_busy;  // busy ticks in [0, t) over two unrolled horizons
  std::vector<Tick> m_biEnd; // end of the BI holding tick t
};

/// feasible[s] for every start s in [0, Tp).
std::vector<bool> OracleFeasibleStarts (const Schedule &existing, const Candidate &c);

/// Maximal runs of feasible starts [a, b] reported as intervals [a, b + tblk].
/// Neighbouring starts join a run only if one block can cover both, so a run
/// never spans a BI boundary.
std::vector<FeasibleInterval> OracleFeasibleIntervals (const Schedule &existing, const Candidate &c);

/// Best achievable min ratio when admitting `req` into `existing`: every
/// prior keeps its start and takes any tick duration in [tmin, current tblk],
/// the newcomer takes any start in [0, Tp) and any duration in [tmin, tmax].
/// nullopt when the request does not fit even with everything at tmin.
std::optional<Rational> OracleMaxMin (const Schedule &existing, const AllocationRequest &req);

} // namespace spsched

#endif // SPSCHED_ORACLE_H
