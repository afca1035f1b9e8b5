// SPDX-License-Identifier: GPL-2.0-only

#include "spsched/harness.h"

#include "spsched/sched_maxmin.h"
#include "spsched/sched_simple.h"

#include <fmt/format.h>

#include <cmath>
#include <map>
#include <ostream>
#include <random>

namespace spsched {

namespace {

int
FractionalDigits (std::string_view text)
{
  auto dot = text.find ('.');
  return dot == std::string_view::npos ? 0 : static_cast<int> (text.size () - dot - 1);
}

std::string
FormatReal (double v)
{
  return fmt::format ("{:.10g}", v);
}

std::optional<Allocation>
Admit (Policy policy, Schedule &s, const AllocationRequest &req, Execution exec)
{
  return policy == Policy::kSimple ? AdmitSimple (s, req) : AdmitMaxMin (s, req, exec);
}

} // namespace

std::string_view
PolicyName (Policy p)
{
  return p == Policy::kSimple ? "simple" : "maxmin";
}

std::vector<Policy>
ParsePolicies (std::string_view text)
{
  if (text == "simple")
    return {Policy::kSimple};
  if (text == "maxmin")
    return {Policy::kMaxMin};
  if (text == "both")
    return {Policy::kSimple, Policy::kMaxMin};
  throw ConfigError ("unknown policy '" + std::string (text) + "' (expected simple, maxmin or both)");
}

Grid
Grid::Parse (std::string_view text)
{
  std::vector<std::string_view> parts;
  std::size_t from = 0;
  while (true)
    {
      auto colon = text.find (':', from);
      parts.push_back (text.substr (from, colon == std::string_view::npos ? colon : colon - from));
      if (colon == std::string_view::npos)
        break;
      from = colon + 1;
    }
  if (parts.size () != 3)
    throw ConfigError ("grid must be start:stop:step, got '" + std::string (text) + "'");

  Grid g;
  try
    {
      g.start = Rational::Parse (parts[0]);
      g.stop = Rational::Parse (parts[1]);
      g.step = Rational::Parse (parts[2]);
    }
  catch (const std::exception &e)
    {
      throw ConfigError ("bad grid '" + std::string (text) + "': " + e.what ());
    }
  if (g.step <= Rational (0))
    throw ConfigError ("grid step must be positive");
  if (g.start > g.stop)
    throw ConfigError ("grid start exceeds stop");
  g.digits = std::max ({FractionalDigits (parts[0]), FractionalDigits (parts[1]), FractionalDigits (parts[2])});
  return g;
}

std::vector<Rational>
Grid::Values () const
{
  std::vector<Rational> out;
  for (Rational v = start; v <= stop; v = v + step)
    out.push_back (v);
  return out;
}

BatchResult
AdmitAll (Policy policy, const TimeBase &tb, const std::vector<AllocationRequest> &requests)
{
  BatchResult r{Schedule (tb), {}};
  for (const auto &req : requests)
    {
      AdmissionRecord rec{req.id, false, 0, 0};
      if (auto a = Admit (policy, r.schedule, req, Execution::kSerial))
        {
          rec.accepted = true;
          rec.tStart = a->tStart;
          rec.tblk = a->tblk;
        }
      r.log.push_back (std::move (rec));
    }
  return r;
}

std::vector<Scenario1Row>
RunScenario1 (const Scenario1Config &cfg, Execution exec)
{
  const auto rhos = cfg.rhoGrid.Values ();
  std::vector<TrafficProfile> profiles;
  for (const auto &rho : rhos)
    profiles.push_back (TrafficProfile::Make (rho, cfg.lambda, cfg.period, cfg.timeBase));

  const std::size_t nPolicies = cfg.policies.size ();
  std::vector<Scenario1Row> rows (rhos.size () * nPolicies);
  const auto count = static_cast<std::ptrdiff_t> (rows.size ());

#pragma omp parallel for schedule(dynamic) if (exec == Execution::kParallel)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    {
      const auto idx = static_cast<std::size_t> (i);
      const TrafficProfile &profile = profiles[idx / nPolicies];
      const Policy policy = cfg.policies[idx % nPolicies];
      const std::int64_t nMax = NMax (profile);

      Schedule s (cfg.timeBase);
      for (std::int64_t k = 0; k < nMax; ++k)
        Admit (policy, s, profile.Request ("r" + std::to_string (k)), Execution::kSerial);

      Scenario1Row &row = rows[idx];
      row.rho = profile.rho;
      row.policy = policy;
      row.metrics = Measure (s, nMax, nMax);
      row.metrics.nMax = nMax;
      row.metrics.oMin = MinOccupancy (profile).ToDouble ();
    }
  return rows;
}

void
WriteScenario1Csv (std::ostream &os, const std::vector<Scenario1Row> &rows, int rhoDigits)
{
  os << "rho,policy,offered,accepted,acceptance_rate,n_max,jain_tblk,jain_r,mean_tblk_norm,occupancy\n";
  for (const auto &r : rows)
    {
      const auto &m = r.metrics;
      os << r.rho.ToDecimal (rhoDigits) << ',' << PolicyName (r.policy) << ',' << m.offered << ',' << m.accepted
         << ',' << FormatReal (m.acceptanceRate.ToDouble ()) << ',' << m.nMax << ',' << FormatReal (m.jainTblk) << ','
         << FormatReal (m.jainRatio) << ',' << (m.meanTblkNorm ? FormatReal (*m.meanTblkNorm) : std::string ())
         << ',' << FormatReal (m.occupancy) << '\n';
    }
}

std::uint64_t
RunSeed (std::uint64_t base, int run, std::size_t gridIndex)
{
  return base + static_cast<std::uint64_t> (run) * 10007u + gridIndex;
}

std::vector<AllocationRequest>
DrawScenario2Requests (const Scenario2Config &cfg, const Rational &pc1, std::uint64_t seed)
{
  const auto p1 = TrafficProfile::Make (cfg.rho, cfg.lambda, cfg.c1.period, cfg.timeBase);
  const auto p2 = TrafficProfile::Make (cfg.rho, cfg.lambda, cfg.c2.period, cfg.timeBase);
  const Rational o1 = MinOccupancy (p1);
  const Rational o2 = MinOccupancy (p2);
  const double threshold = pc1.ToDouble ();

  std::mt19937_64 rng (seed);
  std::vector<AllocationRequest> out;
  Rational load (0);
  while (true)
    {
      // 53-bit uniform in [0, 1)
      const double u = static_cast<double> (rng () >> 11) * 0x1.0p-53;
      const bool isC1 = u < threshold;
      const Rational next = load + (isC1 ? o1 : o2);
      if (next > Rational (1))
        break;
      load = next;
      const std::string id = "r" + std::to_string (out.size ());
      out.push_back (isC1 ? p1.Request (id, cfg.c1.label) : p2.Request (id, cfg.c2.label));
    }
  return out;
}

std::vector<Scenario2Row>
RunScenario2 (const Scenario2Config &cfg, Execution exec)
{
  if (cfg.runs <= 0)
    throw ConfigError ("runs must be positive");
  const auto grid = cfg.pc1Grid.Values ();
  for (const auto &p : grid)
    if (p < Rational (0) || p > Rational (1))
      throw ConfigError ("P(C1) grid values must lie in [0, 1]");

  const std::size_t nPolicies = cfg.policies.size ();
  const std::size_t runs = static_cast<std::size_t> (cfg.runs);
  std::vector<Scenario2Row> rows (grid.size () * nPolicies * runs);
  const auto tasks = static_cast<std::ptrdiff_t> (grid.size () * runs);

#pragma omp parallel for schedule(dynamic) if (exec == Execution::kParallel)
  for (std::ptrdiff_t i = 0; i < tasks; ++i)
    {
      const auto gi = static_cast<std::size_t> (i) / runs;
      const auto run = static_cast<int> (static_cast<std::size_t> (i) % runs);
      const std::uint64_t seed = RunSeed (cfg.baseSeed, run, gi);
      const auto requests = DrawScenario2Requests (cfg, grid[gi], seed);

      for (std::size_t pi = 0; pi < nPolicies; ++pi)
        {
          const auto batch = AdmitAll (cfg.policies[pi], cfg.timeBase, requests);
          Scenario2Row &row = rows[(gi * nPolicies + pi) * runs + static_cast<std::size_t> (run)];
          row.pc1 = grid[gi];
          row.policy = cfg.policies[pi];
          row.run = run;
          row.seed = seed;
          row.offered = static_cast<std::int64_t> (requests.size ());
          for (std::size_t k = 0; k < requests.size (); ++k)
            {
              if (!batch.log[k].accepted)
                continue;
              if (requests[k].classLabel == cfg.c1.label)
                ++row.acceptedC1;
              else
                ++row.acceptedC2;
            }
          row.nu = Variability (row.acceptedC1, row.acceptedC2);
          row.occupancy = BiOccupancy (batch.schedule);
        }
    }
  return rows;
}

MeanCi
Summarize (const std::vector<double> &xs)
{
  MeanCi out;
  if (xs.empty ())
    return out;
  double sum = 0.0;
  for (double x : xs)
    sum += x;
  out.mean = sum / static_cast<double> (xs.size ());
  if (xs.size () < 2)
    return out;
  double ss = 0.0;
  for (double x : xs)
    ss += (x - out.mean) * (x - out.mean);
  const double sd = std::sqrt (ss / static_cast<double> (xs.size () - 1));
  out.ci95 = 1.96 * sd / std::sqrt (static_cast<double> (xs.size ()));
  return out;
}

std::vector<Scenario2Aggregate>
AggregateScenario2 (const std::vector<Scenario2Row> &rows)
{
  struct Acc
  {
    std::vector<double> c1, c2, nu, occ;
  };
  // rows arrive grouped by (pc1, policy); keep first-seen order
  std::vector<std::pair<Rational, Policy>> order;
  std::map<std::pair<Rational, int>, Acc> groups;
  for (const auto &r : rows)
    {
      auto key = std::make_pair (r.pc1, static_cast<int> (r.policy));
      auto [it, inserted] = groups.try_emplace (key);
      if (inserted)
        order.emplace_back (r.pc1, r.policy);
      it->second.c1.push_back (static_cast<double> (r.acceptedC1));
      it->second.c2.push_back (static_cast<double> (r.acceptedC2));
      it->second.nu.push_back (r.nu);
      it->second.occ.push_back (r.occupancy);
    }

  std::vector<Scenario2Aggregate> out;
  for (const auto &[pc1, policy] : order)
    {
      const Acc &acc = groups.at ({pc1, static_cast<int> (policy)});
      Scenario2Aggregate a;
      a.pc1 = pc1;
      a.policy = policy;
      a.runs = static_cast<int> (acc.nu.size ());
      a.acceptedC1 = Summarize (acc.c1);
      a.acceptedC2 = Summarize (acc.c2);
      a.nu = Summarize (acc.nu);
      a.occupancy = Summarize (acc.occ);
      out.push_back (a);
    }
  return out;
}

void
WriteScenario2Csv (std::ostream &os, const std::vector<Scenario2Row> &rows, int pc1Digits)
{
  os << "pc1,policy,run,seed,offered,accepted_c1,accepted_c2,nu,occupancy\n";
  for (const auto &r : rows)
    {
      os << r.pc1.ToDecimal (pc1Digits) << ',' << PolicyName (r.policy) << ',' << r.run << ',' << r.seed << ','
         << r.offered << ',' << r.acceptedC1 << ',' << r.acceptedC2 << ',' << FormatReal (r.nu) << ','
         << FormatReal (r.occupancy) << '\n';
    }
}

void
WriteScenario2AggregateCsv (std::ostream &os, const std::vector<Scenario2Aggregate> &rows, int pc1Digits)
{
  os << "pc1,policy,runs,accepted_c1_mean,accepted_c1_ci95,accepted_c2_mean,accepted_c2_ci95,nu_mean,nu_ci95,"
        "occupancy_mean,occupancy_ci95\n";
  for (const auto &a : rows)
    {
      os << a.pc1.ToDecimal (pc1Digits) << ',' << PolicyName (a.policy) << ',' << a.runs << ','
         << FormatReal (a.acceptedC1.mean) << ',' << FormatReal (a.acceptedC1.ci95) << ','
         << FormatReal (a.acceptedC2.mean) << ',' << FormatReal (a.acceptedC2.ci95) << ',' << FormatReal (a.nu.mean)
         << ',' << FormatReal (a.nu.ci95) << ',' << FormatReal (a.occupancy.mean) << ','
         << FormatReal (a.occupancy.ci95) << '\n';
    }
}

} // namespace spsched
