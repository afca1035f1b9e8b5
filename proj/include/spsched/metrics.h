// SPDX-License-Identifier: GPL-2.0-only
//
// Traffic shaping parameters and evaluation metrics.

#ifndef SPSCHED_METRICS_H
#define SPSCHED_METRICS_H

#include "spsched/model.h"

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace spsched {

/// Homogeneous request shape from interval ratio rho = Tmin/Tmax and load
/// factor lambda = Tavg/Tp, Tavg = (Tmin + Tmax)/2. Tick durations are
/// floored, tmin at least one tick:
///   tmin = floor(2 lambda rho / (1 + rho) * Tp),  tmax = floor(2 lambda / (1 + rho) * Tp)
struct TrafficProfile
{
  Rational rho;
  Rational lambda;
  RationalPeriod period;
  Tick tp = 0;
  Tick tmin = 0;
  Tick tmax = 0;

  /// Throws ConfigError unless 0 < rho < 1, lambda > 0 and tmin < tmax <= min(Tp, T_BI).
  static TrafficProfile Make (Rational rho, Rational lambda, RationalPeriod period, const TimeBase &tb);

  Rational Tavg () const { return Rational (tmin + tmax, 2); }
  AllocationRequest Request (std::string id, std::optional<std::string> label = std::nullopt) const;
};

/// Upper bound on homogeneous acceptances: min(floor(Tp / Tmin), 100).
inline constexpr std::int64_t kMaxOffered = 100;
std::int64_t NMax (const TrafficProfile &profile);

/// Jain's index (sum x)^2 / (n sum x^2); 1 for an empty list.
double JainIndex (std::span<const double> values);

/// min/max of two class counts; 0 when both are zero.
double Variability (std::int64_t countC1, std::int64_t countC2);

/// Scheduled ticks over total ticks in one horizon; 0 for an empty schedule.
double BiOccupancy (const Schedule &s);
Rational BiOccupancyExact (const Schedule &s);

/// Mean of tblk / tmax over the accepted allocations; nullopt when none.
std::optional<double> MeanTblkNorm (const Schedule &s);

/// O_min = Tmin / Tp.
Rational MinOccupancy (const TrafficProfile &profile);

struct MetricsReport
{
  std::int64_t offered = 0;
  std::int64_t accepted = 0;
  Rational acceptanceRate;
  std::int64_t nMax = 0;
  double jainTblk = 1.0;
  double jainRatio = 1.0;
  std::optional<double> meanTblkNorm;
  double nu = 0.0;
  double occupancy = 0.0;
  double oMin = 0.0;
};

/// Fills every schedule-derived field; acceptanceRate = accepted / denominator.
MetricsReport Measure (const Schedule &s, std::int64_t offered, std::int64_t denominator);

} // namespace spsched

#endif // SPSCHED_METRICS_H
