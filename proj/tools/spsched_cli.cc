// SPDX-License-Identifier: GPL-2.0-only
//
// spsched: scenario sweeps, batch admission and oracle verification.
// Exit codes: 0 ok, 1 validation or usage error, 2 I/O error.

#include "spsched/harness.h"
#include "spsched/json_io.h"
#include "spsched/verify.h"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace spsched;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

struct IoError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

// Writes `content` to `path`, or stdout when path is empty or "-".
void
Emit (const std::string &path, const std::string &content)
{
  if (path.empty () || path == "-")
    {
      std::cout << content;
      std::cout.flush ();
      return;
    }
  std::ofstream out (path, std::ios::binary);
  if (!out)
    throw IoError ("cannot open '" + path + "' for writing");
  out << content;
  if (!out.flush ())
    throw IoError ("write to '" + path + "' failed");
}

std::string
Slurp (const std::string &path)
{
  std::ifstream in (path, std::ios::binary);
  if (!in)
    throw IoError ("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf ();
  return ss.str ();
}

struct Common
{
  Tick biTicks = kDefaultBiTicks;
  std::string policy = "both";
  std::string out;
  std::string lambda = "0.1";
  bool serial = false;

  Execution Exec () const { return serial ? Execution::kSerial : Execution::kParallel; }
};

void
AddCommon (CLI::App *cmd, Common &c)
{
  cmd->add_option ("--bi-ticks", c.biTicks, "Ticks per beacon interval")->capture_default_str ();
  cmd->add_option ("--policy", c.policy, "simple, maxmin or both")->capture_default_str ();
  cmd->add_option ("--out", c.out, "Output CSV (stdout when omitted)");
  cmd->add_option ("--lambda", c.lambda, "Load factor Tavg/Tp")->capture_default_str ();
  cmd->add_flag ("--serial", c.serial, "Run on one thread");
}

RationalPeriod
ParsePeriod (const std::string &text)
{
  Rational r = Rational::Parse (text);
  RationalPeriod p{r.Num (), r.Den ()};
  if (!p.IsWellFormed ())
    throw ConfigError ("period must be 1/q or an integer, got '" + text + "'");
  return p;
}

int
RunVerify (Tick maxBi, bool serial)
{
  const Execution exec = serial ? Execution::kSerial : Execution::kParallel;
  if (maxBi < 2)
    throw ConfigError ("--max-bi-ticks must be at least 2");
  bool ok = true;
  auto report = [&] (const std::string &what, const VerifyStats &st) {
    std::cout << (st.Passed () ? "PASS " : "FAIL ") << what << ": " << st.instances << " instances, "
              << st.mismatches << " mismatches\n";
    for (const auto &s : st.samples)
      std::cout << "  " << s << '\n';
    ok = ok && st.Passed ();
  };

  for (Tick bi : {4, 6, 8, 12, 24})
    {
      if (bi > maxBi)
        break;
      const int depth = bi <= 12 ? 3 : 2;
      report ("feasibility bi=" + std::to_string (bi) + " existing<=" + std::to_string (depth),
              VerifyFeasibilityFamily ({bi, depth, bi <= 8}, exec));
      if (depth < 3)
        report ("feasibility bi=" + std::to_string (bi) + " sampled existing<=3",
                VerifyFeasibilitySample (bi, 3, 20000, 1, exec));
    }

  MaxMinFamily mm;
  mm.biTicks = std::min<Tick> (12, maxBi);
  std::erase_if (mm.periods, [&] (const RationalPeriod &p) { return mm.biTicks % p.den != 0; });
  report ("max-min bi=" + std::to_string (mm.biTicks) + " admissions<=" + std::to_string (mm.maxAdmissions),
          VerifyMaxMinFamily (mm, exec));
  return ok ? kExitOk : kExitValidation;
}

int
Dispatch (int argc, char **argv)
{
  CLI::App app{"Service period scheduling: admission, sweeps and verification"};
  app.require_subcommand (1);

  Common s1c;
  std::string rhoGrid = "0.01:0.99:0.02";
  std::string s1Period = "1/3";
  auto *s1 = app.add_subcommand ("scenario1", "Homogeneous requests over a rho grid");
  AddCommon (s1, s1c);
  s1->add_option ("--rho-grid", rhoGrid, "start:stop:step")->capture_default_str ();
  s1->add_option ("--period", s1Period, "Allocation period in BIs")->capture_default_str ();

  Common s2c;
  std::string pc1Grid = "0:1:0.05";
  std::string rho2 = "0.1";
  int runs = 30;
  std::uint64_t seed = 1;
  std::string aggregateOut;
  auto *s2 = app.add_subcommand ("scenario2", "Two request classes over a P(C1) grid");
  AddCommon (s2, s2c);
  s2->add_option ("--pc1-grid", pc1Grid, "start:stop:step")->capture_default_str ();
  s2->add_option ("--rho", rho2, "Interval ratio Tmin/Tmax")->capture_default_str ();
  s2->add_option ("--runs", runs, "Seeds per grid point")->capture_default_str ();
  s2->add_option ("--seed", seed, "Base seed")->capture_default_str ();
  s2->add_option ("--aggregate-out", aggregateOut, "Per-(pc1, policy) mean and ci95 CSV");

  std::string requestsPath;
  std::string schedPolicy = "maxmin";
  std::string schedOut;
  std::string logOut;
  auto *sc = app.add_subcommand ("schedule", "Admit a JSON request list in order");
  sc->add_option ("--requests", requestsPath, "Request file")->required ();
  sc->add_option ("--policy", schedPolicy, "simple or maxmin")->capture_default_str ();
  sc->add_option ("--out", schedOut, "Schedule document (stdout when omitted)");
  sc->add_option ("--log", logOut, "Accept/reject log CSV (stderr when omitted)");

  Tick maxBi = 12;
  bool verifySerial = false;
  auto *vf = app.add_subcommand ("verify", "Exhaustive oracle-equivalence sweep");
  vf->add_option ("--max-bi-ticks", maxBi, "Largest BI length of the instance families")->capture_default_str ();
  vf->add_flag ("--serial", verifySerial, "Run on one thread");

  try
    {
      app.parse (argc, argv);
    }
  catch (const CLI::CallForHelp &e)
    {
      return app.exit (e);
    }
  catch (const CLI::ParseError &e)
    {
      app.exit (e);
      return kExitValidation;
    }

  if (s1->parsed ())
    {
      Scenario1Config cfg;
      cfg.timeBase = TimeBase (s1c.biTicks);
      cfg.lambda = Rational::Parse (s1c.lambda);
      cfg.period = ParsePeriod (s1Period);
      cfg.rhoGrid = Grid::Parse (rhoGrid);
      cfg.policies = ParsePolicies (s1c.policy);
      std::ostringstream os;
      WriteScenario1Csv (os, RunScenario1 (cfg, s1c.Exec ()), cfg.rhoGrid.digits);
      Emit (s1c.out, os.str ());
      return kExitOk;
    }

  if (s2->parsed ())
    {
      Scenario2Config cfg;
      cfg.timeBase = TimeBase (s2c.biTicks);
      cfg.lambda = Rational::Parse (s2c.lambda);
      cfg.rho = Rational::Parse (rho2);
      cfg.pc1Grid = Grid::Parse (pc1Grid);
      cfg.runs = runs;
      cfg.baseSeed = seed;
      cfg.policies = ParsePolicies (s2c.policy);
      const auto rows = RunScenario2 (cfg, s2c.Exec ());
      std::ostringstream os;
      WriteScenario2Csv (os, rows, cfg.pc1Grid.digits);
      Emit (s2c.out, os.str ());
      if (!aggregateOut.empty ())
        {
          std::ostringstream agg;
          WriteScenario2AggregateCsv (agg, AggregateScenario2 (rows), cfg.pc1Grid.digits);
          Emit (aggregateOut, agg.str ());
        }
      return kExitOk;
    }

  if (sc->parsed ())
    {
      const auto policies = ParsePolicies (schedPolicy);
      if (policies.size () != 1)
        throw ConfigError ("schedule takes a single policy");
      nlohmann::json doc;
      try
        {
          doc = nlohmann::json::parse (Slurp (requestsPath));
        }
      catch (const nlohmann::json::parse_error &e)
        {
          throw ConfigError (std::string ("malformed request file: ") + e.what ());
        }
      const RequestFile file = RequestFileFromJson (doc);
      const BatchResult result = AdmitAll (policies.front (), file.timeBase, file.requests);

      std::ostringstream log;
      log << "id,accepted,t_start,tblk\n";
      for (const auto &r : result.log)
        {
          log << r.id << ',' << (r.accepted ? "true" : "false") << ',';
          if (r.accepted)
            log << r.tStart << ',' << r.tblk;
          else
            log << ',';
          log << '\n';
        }
      Emit (schedOut, ScheduleToJson (result.schedule).dump (2) + "\n");
      if (logOut.empty ())
        std::cerr << log.str ();
      else
        Emit (logOut, log.str ());
      return kExitOk;
    }

  return RunVerify (maxBi, verifySerial);
}

} // namespace

int
main (int argc, char **argv)
{
  try
    {
      return Dispatch (argc, argv);
    }
  catch (const IoError &e)
    {
      std::cerr << "spsched: " << e.what () << '\n';
      return kExitIo;
    }
  catch (const std::exception &e)
    {
      std::cerr << "spsched: " << e.what () << '\n';
      return kExitValidation;
    }
}
