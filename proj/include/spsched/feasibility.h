// SPDX-License-Identifier: GPL-2.0-only
//
// Earliest feasible start of a fixed-duration periodic allocation against a
// frozen schedule, its right boundary, and the list of feasible intervals.

#ifndef SPSCHED_FEASIBILITY_H
#define SPSCHED_FEASIBILITY_H

#include "spsched/model.h"

#include <optional>
#include <vector>

namespace spsched {

/// New allocation whose start is being searched: period and fixed duration.
struct Candidate
{
  Tick tp = 0;
  Tick tblk = 0;
};

/// Range of admissible first-block positions: start >= tMin and
/// start + tblk <= tMax.
struct SearchWindow
{
  Tick tMin = 0;
  Tick tMax = 0;
};

/// First block b_0 may sit anywhere inside [tFeas, tLim].
struct FeasibleInterval
{
  Tick tFeas = 0;
  Tick tLim = 0;

  Tick Length () const { return tLim - tFeas; }
  friend bool operator== (const FeasibleInterval &, const FeasibleInterval &) = default;
};

/// Default window for a fresh request: [0, Tp).
inline SearchWindow
DefaultWindow (const Candidate &c)
{
  return {0, c.tp};
}

/// Shift-on-collision search. Starting at window.tMin, every collision of a
/// candidate block h with an existing block k moves the start by
/// end(k) - start(h); a block crossing a BI boundary moves it so that block
/// starts at the next BI. Returns the first collision-free start, or nullopt
/// once start + tblk > window.tMax.
std::optional<Tick> FeasibilityCheck (const Schedule &existing, const Candidate &c, const SearchWindow &window);

/// t_lim for a feasible placement at tFeas: tFeas + tblk + d, where d is the
/// smallest gap between the end of any candidate block and the next
/// obstruction (an existing block start, the end of the enclosing BI, or
/// the candidate's own next block).
Tick RightBoundary (const Schedule &existing, const Candidate &c, Tick tFeas);

/// All feasible intervals inside [0, Tp), found by re-running the search from
/// the previous interval's t_lim until it fails.
std::vector<FeasibleInterval> EnumerateFeasibleIntervals (const Schedule &existing, const Candidate &c);

namespace detail {

/// First block of `a` that ends after t.
inline Tick
FirstBlockEndingAfter (const Allocation &a, Tick t)
{
  return FloorDiv (t - a.tStart - a.tblk, a.tp) + 1;
}

/// Start of the first block of `a` that begins at or after t.
inline Tick
NextBlockStart (const Allocation &a, Tick t)
{
  return a.tStart + CeilDiv (t - a.tStart, a.tp) * a.tp;
}

/// Block of `a` overlapping [start, end), if any.
inline std::optional<Block>
Overlapping (const Allocation &a, Tick start, Tick end)
{
  Block b = a.BlockAt (FirstBlockEndingAfter (a, start));
  if (b.start < end)
    return b;
  return std::nullopt;
}

/// Nearest obstruction at or after `end` for a candidate block, considering
/// existing block starts and the BI end: min over allocations.
Tick NextObstruction (const Schedule &existing, Tick blockStart, Tick end);

} // namespace detail

} // namespace spsched

#endif // SPSCHED_FEASIBILITY_H
