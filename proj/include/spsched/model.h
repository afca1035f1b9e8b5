// SPDX-License-Identifier: GPL-2.0-only
//
// Requests, allocations, periodic blocks and schedules.

#ifndef SPSCHED_MODEL_H
#define SPSCHED_MODEL_H

#include "spsched/timebase.h"

#include <optional>
#include <string>
#include <vector>

namespace spsched {

/// A stream's periodic demand: one block of [tmin, tmax] ticks every period.
struct AllocationRequest
{
  std::string id;
  RationalPeriod period;
  Tick tmin = 0;
  Tick tmax = 0;
  std::optional<std::string> classLabel;
};

/// Throws ConfigError unless 0 < tmin < tmax <= min(Tp, T_BI).
void ValidateRequest (const AllocationRequest &req, const TimeBase &tb);

/// Half-open interval [start, end).
struct Block
{
  Tick start = 0;
  Tick end = 0;

  Tick Length () const { return end - start; }
  bool Overlaps (const Block &o) const { return start < o.end && o.start < end; }

  friend bool operator== (const Block &, const Block &) = default;
};

/// An accepted stream: blocks [tStart + k*tp, tStart + k*tp + tblk).
struct Allocation
{
  std::string id;
  Tick tStart = 0;
  Tick tp = 0;
  Tick tblk = 0;
  Tick tmin = 0;
  Tick tmax = 0;

  /// k-th block (k may be negative: blocks repeat in both directions).
  Block BlockAt (Tick k) const { return {tStart + k * tp, tStart + k * tp + tblk}; }
  /// r = (tblk - tmin) / (tmax - tmin); zero when tmax == tmin.
  Rational Ratio () const;
  /// Tblk(r) = tmin + r (tmax - tmin), floored to a tick.
  Tick DurationAt (const Rational &r) const;

  friend bool operator== (const Allocation &, const Allocation &) = default;
};

/// Blocks of `a` with start < horizon, for k = 0, 1, 2, ...
std::vector<Block> ExpandBlocks (const Allocation &a, Tick horizon);

/// Accepted allocations in admission order.
class Schedule
{
public:
  explicit Schedule (TimeBase tb = TimeBase ());

  const TimeBase &GetTimeBase () const { return m_timeBase; }
  const std::vector<Allocation> &Allocations () const { return m_allocations; }
  std::vector<Allocation> &MutableAllocations () { return m_allocations; }
  std::size_t Size () const { return m_allocations.size (); }
  bool Empty () const { return m_allocations.empty (); }

  /// lcm of member periods; 0 for an empty schedule.
  Tick JointPeriodTicks () const { return m_jointPeriod; }
  /// Window over which the block pattern and the BI grid both repeat:
  /// lcm(joint period, T_BI).
  Tick Horizon () const;
  /// Horizon for this schedule plus one more period.
  Tick HorizonWith (Tick extraPeriod) const;

  void Add (Allocation a);
  const Allocation *Find (const std::string &id) const;

  /// Copy with every tblk set to its tmin.
  Schedule ShrunkToMinimum () const;

  friend bool operator== (const Schedule &, const Schedule &) = default;

private:
  TimeBase m_timeBase;
  std::vector<Allocation> m_allocations;
  Tick m_jointPeriod = 0;
};

struct Violation
{
  enum class Kind
  {
    kOverlap,
    kBiCrossing,
    kDurationOutOfRange,
    kStartOutOfRange,
  };

  Kind kind;
  std::string first;  // offending allocation id
  std::string second; // other allocation id (overlap only)
  Block firstBlock;
  Block secondBlock;

  std::string Describe () const;
};

/// Checks block disjointness, BI containment and tmin <= tblk <= tmax over
/// one horizon. Returns the first violation, or nullopt when valid.
std::optional<Violation> ValidateSchedule (const Schedule &s);

} // namespace spsched

#endif // SPSCHED_MODEL_H
