// SPDX-License-Identifier: GPL-2.0-only
//
// Max-min fair admission. A request is accepted whenever it fits with every
// allocation shrunk to tmin; prior allocations then keep their start times
// and give up duration so that the smallest allocation ratio
//   r = (tblk - tmin) / (tmax - tmin)
// over the whole schedule is as large as the greedy collision resolution
// allows. Each feasible interval yields one candidate configuration; the
// candidate with the best score (min r) wins, earliest interval on ties.

#ifndef SPSCHED_SCHED_MAXMIN_H
#define SPSCHED_SCHED_MAXMIN_H

#include "spsched/execution.h"
#include "spsched/feasibility.h"

#include <optional>
#include <vector>

namespace spsched {

/// One side of a colliding block pair, in the coordinates of that pair.
struct CollisionParty
{
  Tick start = 0; // start of the colliding block
  Tick tblk = 0;
  Tick tmin = 0;
  Tick tmax = 0;

  Rational Ratio () const { return Rational (tblk - tmin, tmax - tmin); }
};

enum class CollisionCase
{
  kBothBelow,     // r_n <= r*, r_N <= r*: newcomer delayed
  kNewcomerAbove, // r_n <= r* < r_N: newcomer delayed and trimmed to t_lim
  kBothAbove,     // both trimmed to r*, newcomer ends at t_lim
  kPriorAbove,    // r_N <= r* < r_n: prior cut at the newcomer's start
};

struct CollisionResolution
{
  CollisionCase which;
  Rational fairRatio;
  Tick priorTblk;
  Tick newcomerStart;
  Tick newcomerTblk;
};

/// r* = min{1, (tLim - start_n - tmin_n - tmin_N) / ((tmax_n - tmin_n) + (tmax_N - tmin_N))}
Rational FairAllocationRatio (const CollisionParty &prior, const CollisionParty &newcomer, Tick tLim);

/// Case analysis for a prior block that reaches the newcomer block
/// (prior.start + prior.tblk >= newcomer.start). tLim bounds the newcomer
/// block's end. Neither ratio grows, the newcomer never moves left and never
/// ends past tLim. When both sides are trimmed to r*, the tick split is the
/// floor or ceiling of Tblk_n(r*), whichever leaves the larger pair minimum.
CollisionResolution ResolveCollision (const CollisionParty &prior, const CollisionParty &newcomer, Tick tLim);

/// Prior shrunk during one candidate evaluation, with its duration before the
/// admission call.
struct CollidingEntry
{
  std::size_t index;
  Tick tblkPrev;
  Rational ratioPrev;
};

struct CandidateConfig
{
  std::size_t intervalIndex;
  FeasibleInterval interval;
  Schedule schedule; // newcomer appended last
  std::vector<CollidingEntry> colliding;
  Rational score;
};

struct MaxMinOutcome
{
  /// Feasible intervals with all allocations at tmin; empty means rejected.
  std::vector<FeasibleInterval> intervals;
  std::vector<CandidateConfig> candidates;
  std::optional<std::size_t> chosen;

  bool Accepted () const { return chosen.has_value (); }
  const CandidateConfig &Best () const { return candidates.at (*chosen); }
};

/// Evaluates every candidate configuration without touching `s`.
MaxMinOutcome EvaluateMaxMin (const Schedule &s, const AllocationRequest &req,
                              Execution exec = Execution::kSerial);

/// Replaces `s` with the best configuration and returns the newcomer's
/// allocation, or returns nullopt leaving `s` untouched.
std::optional<Allocation> AdmitMaxMin (Schedule &s, const AllocationRequest &req,
                                       Execution exec = Execution::kSerial);

/// min over allocations of r; 1 for an empty schedule.
Rational MinRatio (const Schedule &s);

} // namespace spsched

#endif // SPSCHED_SCHED_MAXMIN_H
