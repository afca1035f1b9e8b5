// SPDX-License-Identifier: GPL-2.0-only

#include "spsched/model.h"

#include <algorithm>

namespace spsched {

void
ValidateRequest (const AllocationRequest &req, const TimeBase &tb)
{
  Tick tp = PeriodTicks (req.period, tb);
  auto fail = [&] (const std::string &why) {
    throw ConfigError ("request '" + req.id + "': " + why);
  };
  if (req.tmin <= 0)
    fail ("tmin must be positive");
  if (req.tmin >= req.tmax)
    fail ("tmin must be strictly less than tmax");
  if (req.tmax > tp)
    fail ("tmax exceeds the block period");
  if (req.tmax > tb.BiTicks ())
    fail ("tmax exceeds the beacon interval");
}

Rational
Allocation::Ratio () const
{
  if (tmax == tmin)
    return Rational (0);
  return Rational (tblk - tmin, tmax - tmin);
}

Tick
Allocation::DurationAt (const Rational &r) const
{
  return tmin + (r * Rational (tmax - tmin)).Floor ();
}

std::vector<Block>
ExpandBlocks (const Allocation &a, Tick horizon)
{
  std::vector<Block> out;
  if (a.tp <= 0)
    return out;
  for (Tick s = a.tStart; s < horizon; s += a.tp)
    {
      out.push_back ({s, s + a.tblk});
    }
  return out;
}

Schedule::Schedule (TimeBase tb)
  : m_timeBase (tb)
{
}

Tick
Schedule::Horizon () const
{
  return HorizonWith (m_timeBase.BiTicks ());
}

Tick
Schedule::HorizonWith (Tick extraPeriod) const
{
  Tick h = Lcm (extraPeriod, m_timeBase.BiTicks ());
  return m_jointPeriod == 0 ? h : Lcm (h, m_jointPeriod);
}

void
Schedule::Add (Allocation a)
{
  if (a.tp <= 0)
    {
      throw UsageError ("allocation '" + a.id + "' has a non-positive period");
    }
  m_jointPeriod = m_jointPeriod == 0 ? a.tp : Lcm (m_jointPeriod, a.tp);
  m_allocations.push_back (std::move (a));
}

const Allocation *
Schedule::Find (const std::string &id) const
{
  auto it = std::find_if (m_allocations.begin (), m_allocations.end (),
                          [&] (const Allocation &a) { return a.id == id; });
  return it == m_allocations.end () ? nullptr : &*it;
}

Schedule
Schedule::ShrunkToMinimum () const
{
  Schedule out = *this;
  for (auto &a : out.m_allocations)
    {
      a.tblk = a.tmin;
    }
  return out;
}

std::string
Violation::Describe () const
{
  auto blk = [] (const Block &b) {
    return "[" + std::to_string (b.start) + "," + std::to_string (b.end) + ")";
  };
  switch (kind)
    {
    case Kind::kOverlap:
      return "overlap: " + first + " " + blk (firstBlock) + " and " + second + " " + blk (secondBlock);
    case Kind::kBiCrossing:
      return "BI crossing: " + first + " " + blk (firstBlock) + " crosses boundary at "
             + std::to_string (secondBlock.start);
    case Kind::kDurationOutOfRange:
      return "duration out of range: " + first + " tblk " + std::to_string (firstBlock.Length ());
    case Kind::kStartOutOfRange:
      return "start out of range: " + first + " t_start " + std::to_string (firstBlock.start);
    }
  return "unknown violation";
}

std::optional<Violation>
ValidateSchedule (const Schedule &s)
{
  const TimeBase &tb = s.GetTimeBase ();
  for (const auto &a : s.Allocations ())
    {
      if (a.tblk < a.tmin || a.tblk > a.tmax || a.tblk <= 0)
        {
          return Violation{Violation::Kind::kDurationOutOfRange, a.id, {}, a.BlockAt (0), {}};
        }
    }

  struct Tagged
  {
    Block block;
    std::size_t owner;
  };
  std::vector<Tagged> blocks;
  Tick horizon = s.Horizon ();
  for (std::size_t i = 0; i < s.Size (); ++i)
    {
      const auto &a = s.Allocations ()[i];
      for (const Block &b : ExpandBlocks (a, horizon))
        {
          if (tb.BiIndex (b.start) != tb.BiIndex (b.end - 1))
            {
              Tick boundary = tb.BiEnd (b.start);
              return Violation{Violation::Kind::kBiCrossing, a.id, {}, b, {boundary, boundary}};
            }
          blocks.push_back ({b, i});
        }
    }

  std::stable_sort (blocks.begin (), blocks.end (),
                    [] (const Tagged &x, const Tagged &y) { return x.block.start < y.block.start; });
  // sweep keeping the block that reaches furthest right
  for (std::size_t i = 1, reach = 0; i < blocks.size (); ++i)
    {
      if (blocks[i].block.start < blocks[reach].block.end)
        {
          const auto &a = s.Allocations ()[blocks[reach].owner];
          const auto &b = s.Allocations ()[blocks[i].owner];
          return Violation{Violation::Kind::kOverlap, a.id, b.id, blocks[reach].block, blocks[i].block};
        }
      if (blocks[i].block.end > blocks[reach].block.end)
        reach = i;
    }

  for (const auto &a : s.Allocations ())
    {
      if (a.tStart < 0 || a.tStart >= a.tp)
        {
          return Violation{Violation::Kind::kStartOutOfRange, a.id, {}, a.BlockAt (0), {}};
        }
    }
  return std::nullopt;
}

} // namespace spsched
