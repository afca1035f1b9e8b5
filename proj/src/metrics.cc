// SPDX-License-Identifier: GPL-2.0-only

#include "spsched/metrics.h"

#include <algorithm>
#include <vector>

namespace spsched {

TrafficProfile
TrafficProfile::Make (Rational rho, Rational lambda, RationalPeriod period, const TimeBase &tb)
{
  if (rho <= Rational (0) || rho >= Rational (1))
    throw ConfigError ("rho must lie in (0, 1), got " + rho.ToString ());
  if (lambda <= Rational (0))
    throw ConfigError ("lambda must be positive, got " + lambda.ToString ());

  TrafficProfile p;
  p.rho = rho;
  p.lambda = lambda;
  p.period = period;
  p.tp = PeriodTicks (period, tb);
  const Rational tp (p.tp);
  const Rational two (2);
  const Rational onePlusRho = Rational (1) + rho;
  p.tmin = std::max<Tick> (1, (two * lambda * rho / onePlusRho * tp).Floor ());
  p.tmax = (two * lambda / onePlusRho * tp).Floor ();
  if (p.tmin >= p.tmax)
    throw ConfigError ("profile rho=" + rho.ToString () + " lambda=" + lambda.ToString ()
                       + " degenerates to tmin >= tmax in ticks");
  if (p.tmax > p.tp || p.tmax > tb.BiTicks ())
    throw ConfigError ("profile tmax exceeds the block period");
  return p;
}

AllocationRequest
TrafficProfile::Request (std::string id, std::optional<std::string> label) const
{
  return {std::move (id), period, tmin, tmax, std::move (label)};
}

std::int64_t
NMax (const TrafficProfile &profile)
{
  return std::min<std::int64_t> (profile.tp / profile.tmin, kMaxOffered);
}

double
JainIndex (std::span<const double> values)
{
  if (values.empty ())
    return 1.0;
  double sum = 0.0;
  double sumSq = 0.0;
  for (double v : values)
    {
      sum += v;
      sumSq += v * v;
    }
  if (sumSq == 0.0)
    return 1.0;
  return sum * sum / (static_cast<double> (values.size ()) * sumSq);
}

double
Variability (std::int64_t countC1, std::int64_t countC2)
{
  auto hi = std::max (countC1, countC2);
  if (hi == 0)
    return 0.0;
  return static_cast<double> (std::min (countC1, countC2)) / static_cast<double> (hi);
}

Rational
BiOccupancyExact (const Schedule &s)
{
  if (s.Empty ())
    return Rational (0);
  const Tick horizon = s.Horizon ();
  Tick busy = 0;
  for (const auto &a : s.Allocations ())
    busy += a.tblk * (horizon / a.tp);
  return Rational (busy, horizon);
}

double
BiOccupancy (const Schedule &s)
{
  return BiOccupancyExact (s).ToDouble ();
}

std::optional<double>
MeanTblkNorm (const Schedule &s)
{
  if (s.Empty ())
    return std::nullopt;
  double total = 0.0;
  for (const auto &a : s.Allocations ())
    total += static_cast<double> (a.tblk) / static_cast<double> (a.tmax);
  return total / static_cast<double> (s.Size ());
}

Rational
MinOccupancy (const TrafficProfile &profile)
{
  return Rational (profile.tmin, profile.tp);
}

MetricsReport
Measure (const Schedule &s, std::int64_t offered, std::int64_t denominator)
{
  MetricsReport m;
  m.offered = offered;
  m.accepted = static_cast<std::int64_t> (s.Size ());
  m.acceptanceRate = denominator > 0 ? Rational (m.accepted, denominator) : Rational (0);
  std::vector<double> tblk;
  std::vector<double> ratio;
  for (const auto &a : s.Allocations ())
    {
      tblk.push_back (static_cast<double> (a.tblk));
      ratio.push_back (a.Ratio ().ToDouble ());
    }
  m.jainTblk = JainIndex (tblk);
  m.jainRatio = JainIndex (ratio);
  m.meanTblkNorm = MeanTblkNorm (s);
  m.occupancy = BiOccupancy (s);
  return m;
}

} // namespace spsched
