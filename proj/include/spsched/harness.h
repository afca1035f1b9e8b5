// SPDX-License-Identifier: GPL-2.0-only
//
// Experiment drivers: the homogeneous rho sweep (scenario 1), the two-class
// mix sweep (scenario 2), batch admission, and CSV emission.

#ifndef SPSCHED_HARNESS_H
#define SPSCHED_HARNESS_H

#include "spsched/execution.h"
#include "spsched/metrics.h"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spsched {

enum class Policy
{
  kSimple,
  kMaxMin,
};

std::string_view PolicyName (Policy p);
/// "simple", "maxmin" or "both". Throws ConfigError otherwise.
std::vector<Policy> ParsePolicies (std::string_view text);

/// Inclusive arithmetic grid "start:stop:step" over exact decimals.
struct Grid
{
  Rational start;
  Rational stop;
  Rational step;
  int digits = 2; // fractional digits used when printing grid values

  /// Throws ConfigError on malformed text, non-positive step or start > stop.
  static Grid Parse (std::string_view text);
  std::vector<Rational> Values () const;
};

/// Per-request outcome of a batch admission.
struct AdmissionRecord
{
  std::string id;
  bool accepted = false;
  Tick tStart = 0; // grant at admission time
  Tick tblk = 0;
};

struct BatchResult
{
  Schedule schedule;
  std::vector<AdmissionRecord> log;
};

/// Offers `requests` in order to an initially empty schedule.
BatchResult AdmitAll (Policy policy, const TimeBase &tb, const std::vector<AllocationRequest> &requests);

struct Scenario1Config
{
  TimeBase timeBase;
  Rational lambda{1, 10};
  RationalPeriod period = RationalPeriod::Fraction (3);
  Grid rhoGrid = Grid::Parse ("0.01:0.99:0.02");
  std::vector<Policy> policies{Policy::kSimple, Policy::kMaxMin};
};

struct Scenario1Row
{
  Rational rho;
  Policy policy;
  MetricsReport metrics;
};

/// For each rho and policy offers min(n_max, 100) identical requests.
std::vector<Scenario1Row> RunScenario1 (const Scenario1Config &cfg, Execution exec = Execution::kSerial);
void WriteScenario1Csv (std::ostream &os, const std::vector<Scenario1Row> &rows, int rhoDigits);

struct TrafficClass
{
  std::string label;
  RationalPeriod period;
};

struct Scenario2Config
{
  TimeBase timeBase;
  Rational lambda{1, 10};
  Rational rho{1, 10};
  TrafficClass c1{"C1", RationalPeriod::Fraction (3)};
  TrafficClass c2{"C2", RationalPeriod::Fraction (5)};
  Grid pc1Grid = Grid::Parse ("0:1:0.05");
  int runs = 30;
  std::uint64_t baseSeed = 1;
  std::vector<Policy> policies{Policy::kSimple, Policy::kMaxMin};
};

/// seed = base + run * 10007 + gridIndex
std::uint64_t RunSeed (std::uint64_t base, int run, std::size_t gridIndex);

/// Requests drawn i.i.d. (C1 with probability pc1), offered while the running
/// sum of O_min stays <= 1.
std::vector<AllocationRequest> DrawScenario2Requests (const Scenario2Config &cfg, const Rational &pc1,
                                                      std::uint64_t seed);

struct Scenario2Row
{
  Rational pc1;
  Policy policy;
  int run = 0;
  std::uint64_t seed = 0;
  std::int64_t offered = 0;
  std::int64_t acceptedC1 = 0;
  std::int64_t acceptedC2 = 0;
  double nu = 0.0;
  double occupancy = 0.0;
};

struct MeanCi
{
  double mean = 0.0;
  double ci95 = 0.0; // half-width, normal approximation
};

MeanCi Summarize (const std::vector<double> &xs);

struct Scenario2Aggregate
{
  Rational pc1;
  Policy policy;
  int runs = 0;
  MeanCi acceptedC1;
  MeanCi acceptedC2;
  MeanCi nu;
  MeanCi occupancy;
};

/// Rows ordered by (pc1, policy, run).
std::vector<Scenario2Row> RunScenario2 (const Scenario2Config &cfg, Execution exec = Execution::kSerial);
std::vector<Scenario2Aggregate> AggregateScenario2 (const std::vector<Scenario2Row> &rows);
void WriteScenario2Csv (std::ostream &os, const std::vector<Scenario2Row> &rows, int pc1Digits);
void WriteScenario2AggregateCsv (std::ostream &os, const std::vector<Scenario2Aggregate> &rows, int pc1Digits);

} // namespace spsched

#endif // SPSCHED_HARNESS_H
