// SPDX-License-Identifier: GPL-2.0-only

#include "spsched/oracle.h"
#include "spsched/sched_maxmin.h"
#include "spsched/sched_simple.h"
#include "support.h"

#include "doctest.h"

using namespace spsched;
using spsched::test::MakeSchedule;

namespace {

AllocationRequest
Req (const std::string &id, std::int64_t q, Tick tmin, Tick tmax)
{
  return {id, RationalPeriod::Fraction (q), tmin, tmax, std::nullopt};
}

} // namespace

TEST_SUITE ("sched_maxmin")
{
  TEST_CASE ("repeated identical requests share the period fairly")
  {
    Schedule s (TimeBase (12));
    auto first = AdmitMaxMin (s, Req ("r0", 2, 2, 5));
    REQUIRE (first.has_value ());
    CHECK (first->tStart == 0);
    CHECK (first->tblk == 5);

    const Schedule one = s;
    auto second = AdmitMaxMin (s, Req ("r1", 2, 2, 5));
    REQUIRE (second.has_value ());
    REQUIRE (s.Size () == 2);
    CHECK (s.Allocations ()[0] == Allocation{"r0", 0, 6, 3, 2, 5});
    CHECK (s.Allocations ()[1] == Allocation{"r1", 3, 6, 3, 2, 5});
    CHECK (s.Allocations ()[0].Ratio () == Rational (1, 3));
    CHECK (s.Allocations ()[1].Ratio () == Rational (1, 3));
    CHECK (MinRatio (s) == Rational (1, 3));
    CHECK (OracleMaxMin (one, Req ("r1", 2, 2, 5)) == Rational (1, 3));

    const Schedule two = s;
    CHECK_FALSE (AdmitMaxMin (s, Req ("r2", 2, 2, 5)).has_value ());
    CHECK (s == two);
    CHECK_FALSE (OracleMaxMin (two, Req ("r2", 2, 2, 5)).has_value ());
    // with everything at tmin the gaps are [2, 3) and [5, 6)
    CHECK (OracleFeasibleIntervals (two.ShrunkToMinimum (), {6, 1})
           == std::vector<FeasibleInterval>{{2, 3}, {5, 6}});
  }

  TEST_CASE ("empty schedule grants tmax at zero")
  {
    for (Tick tmin = 1; tmin < 6; ++tmin)
      for (Tick tmax = tmin + 1; tmax <= 6; ++tmax)
        {
          Schedule s (TimeBase (12));
          auto a = AdmitMaxMin (s, Req ("r", 2, tmin, tmax));
          REQUIRE (a.has_value ());
          CHECK (a->tStart == 0);
          CHECK (a->tblk == tmax);
          CHECK (a->Ratio () == Rational (1));
        }
  }

  TEST_CASE ("prior pinned at its minimum is left alone")
  {
    Schedule s = MakeSchedule (12, {Allocation{"a", 0, 6, 2, 2, 5}});
    auto a = AdmitMaxMin (s, Req ("r", 2, 2, 4));
    REQUIRE (a.has_value ());
    CHECK (a->tStart == 2);
    CHECK (a->tblk == 4);
    CHECK (s.Allocations ()[0] == Allocation{"a", 0, 6, 2, 2, 5});
  }

  TEST_CASE ("fair allocation ratio")
  {
    const CollisionParty prior{0, 6, 2, 6};
    const CollisionParty newcomer{3, 6, 2, 6};
    CHECK (FairAllocationRatio (prior, newcomer, 10) == Rational (3, 4));
    CHECK (FairAllocationRatio (prior, newcomer, 40) == Rational (1));
    CHECK (FairAllocationRatio ({5, 6, 2, 6}, newcomer, 15) == Rational (3, 4));
  }

  TEST_CASE ("both above the fair ratio are trimmed to it")
  {
    const CollisionParty prior{0, 5, 2, 5};   // r = 1
    const CollisionParty newcomer{2, 4, 2, 5}; // r = 2/3
    const auto res = ResolveCollision (prior, newcomer, 6);
    CHECK (res.which == CollisionCase::kBothAbove);
    CHECK (res.fairRatio == Rational (1, 3));
    CHECK (res.priorTblk == 3);
    CHECK (res.newcomerStart == 3);
    CHECK (res.newcomerTblk == 3);
  }

  TEST_CASE ("prior at its minimum delays the newcomer")
  {
    const CollisionParty prior{0, 2, 2, 5};    // r = 0
    const CollisionParty newcomer{2, 4, 2, 5}; // r = 2/3
    const auto res = ResolveCollision (prior, newcomer, 6);
    CHECK (res.which == CollisionCase::kNewcomerAbove);
    CHECK (res.priorTblk == 2);
    CHECK (res.newcomerStart == 2);
    CHECK (res.newcomerTblk == 4);

    const auto low = ResolveCollision (prior, {2, 3, 2, 5}, 10);
    CHECK (low.which == CollisionCase::kBothBelow);
    CHECK (low.priorTblk == 2);
    CHECK (low.newcomerStart == 2);
    CHECK (low.newcomerTblk == 3);
  }

  TEST_CASE ("newcomer below the fair ratio cuts the prior")
  {
    const CollisionParty prior{0, 5, 2, 5};    // r = 1
    const CollisionParty newcomer{3, 2, 2, 5}; // r = 0
    const auto res = ResolveCollision (prior, newcomer, 8);
    CHECK (res.which == CollisionCase::kPriorAbove);
    CHECK (res.fairRatio == Rational (2, 3));
    CHECK (res.priorTblk == 3);
    CHECK (res.newcomerStart == 3);
    CHECK (res.newcomerTblk == 2);
  }

  TEST_CASE ("trimmed split picks the better tick rounding")
  {
    // r* = 10/11 puts the split at 1.91 ticks; flooring leaves the prior at r = 0,
    // rounding up keeps it at 1 and the newcomer at 9/10
    const CollisionParty prior{0, 2, 1, 2};
    const CollisionParty newcomer{1, 11, 1, 11};
    const auto res = ResolveCollision (prior, newcomer, 12);
    CHECK (res.fairRatio == Rational (10, 11));
    CHECK (res.priorTblk == 2);
    CHECK (res.newcomerStart == 2);
    CHECK (res.newcomerTblk == 10);
  }

  TEST_CASE ("collision resolution respects its constraints")
  {
    std::mt19937_64 rng (29);
    for (int iter = 0; iter < 20000; ++iter)
      {
        auto pick = [&] (Tick lo, Tick hi) { return std::uniform_int_distribution<Tick> (lo, hi) (rng); };
        CollisionParty prior;
        prior.start = pick (0, 10);
        prior.tmin = pick (1, 6);
        prior.tmax = pick (prior.tmin + 1, 12);
        prior.tblk = pick (prior.tmin, prior.tmax);
        CollisionParty nc;
        nc.tmin = pick (1, 6);
        nc.tmax = pick (nc.tmin + 1, 12);
        nc.start = pick (prior.start + prior.tmin, prior.start + prior.tblk);
        nc.tblk = pick (nc.tmin, nc.tmax);
        const Tick tLim = nc.start + nc.tblk + pick (0, 6);

        const auto res = ResolveCollision (prior, nc, tLim);
        CHECK (res.priorTblk >= prior.tmin);
        CHECK (res.priorTblk <= prior.tblk);
        CHECK (res.newcomerStart >= nc.start);
        CHECK (res.newcomerStart >= prior.start + res.priorTblk);
        CHECK (res.newcomerTblk >= nc.tmin);
        CHECK (res.newcomerTblk <= nc.tblk);
        CHECK (res.newcomerStart + res.newcomerTblk <= tLim);
        CHECK (res.fairRatio <= Rational (1));
      }
  }

  TEST_CASE ("candidate configurations are consistent")
  {
    std::mt19937_64 rng (31);
    for (int iter = 0; iter < 400; ++iter)
      {
        const TimeBase tb (iter % 2 ? 12 : 24);
        Schedule s (tb);
        for (int k = 0; k < 3; ++k)
          AdmitMaxMin (s, test::RandomRequest (rng, tb, "p" + std::to_string (k)));
        const AllocationRequest req = test::RandomRequest (rng, tb, "n");
        const Tick tp = PeriodTicks (req.period, tb);

        const auto out = EvaluateMaxMin (s, req);
        CHECK (out.intervals == EnumerateFeasibleIntervals (s.ShrunkToMinimum (), {tp, req.tmin}));
        CHECK (out.Accepted () == !out.intervals.empty ());
        CHECK (out.candidates.size () == out.intervals.size ());
        for (std::size_t m = 0; m < out.candidates.size (); ++m)
          {
            const auto &c = out.candidates[m];
            CHECK (c.intervalIndex == m);
            CHECK (c.schedule.Size () == s.Size () + 1);
            CHECK (c.schedule.Allocations ().back ().id == "n");
            CHECK (c.score == MinRatio (c.schedule));
            CHECK (test::TickValid (c.schedule));
            for (const auto &e : c.colliding)
              {
                CHECK (e.tblkPrev == s.Allocations ()[e.index].tblk);
                CHECK (e.ratioPrev == s.Allocations ()[e.index].Ratio ());
              }
          }
        if (out.Accepted ())
          {
            for (const auto &c : out.candidates)
              CHECK (c.score <= out.Best ().score);
            for (std::size_t m = 0; m < *out.chosen; ++m)
              CHECK (out.candidates[m].score < out.Best ().score);
          }

        const auto par = EvaluateMaxMin (s, req, Execution::kParallel);
        CHECK (par.chosen == out.chosen);
        if (par.Accepted () && out.Accepted ())
          CHECK (par.Best ().schedule == out.Best ().schedule);
      }
  }

  TEST_CASE ("max-min matches the oracle on random small instances")
  {
    std::mt19937_64 rng (37);
    for (int iter = 0; iter < 600; ++iter)
      {
        const TimeBase tb (iter % 2 ? 12 : 24);
        Schedule s (tb);
        const int priors = std::uniform_int_distribution<int> (0, 3) (rng);
        for (int k = 0; k < priors; ++k)
          AdmitMaxMin (s, test::RandomRequest (rng, tb, "p" + std::to_string (k)));
        const AllocationRequest req = test::RandomRequest (rng, tb, "n");
        const auto oracle = OracleMaxMin (s, req);
        Schedule t = s;
        const bool ok = AdmitMaxMin (t, req).has_value ();
        REQUIRE (ok == oracle.has_value ());
        if (ok)
          CHECK (MinRatio (t) == *oracle);
      }
  }

  TEST_CASE ("max-min accepts whatever simple accepts")
  {
    std::mt19937_64 rng (41);
    for (int iter = 0; iter < 1000; ++iter)
      {
        const TimeBase tb (iter % 2 ? 12 : 60);
        Schedule s (tb);
        for (int k = 0; k < 4; ++k)
          AdmitMaxMin (s, test::RandomRequest (rng, tb, "p" + std::to_string (k)));
        const AllocationRequest req = test::RandomRequest (rng, tb, "n");
        Schedule a = s;
        Schedule b = s;
        if (AdmitSimple (a, req))
          CHECK (AdmitMaxMin (b, req).has_value ());
      }
  }

  TEST_CASE ("min ratio")
  {
    CHECK (MinRatio (Schedule (TimeBase (12))) == Rational (1));
    CHECK (MinRatio (MakeSchedule (12, {Allocation{"a", 0, 6, 3, 2, 5}, Allocation{"b", 3, 6, 3, 1, 4}}))
           == Rational (1, 3));
  }
}
