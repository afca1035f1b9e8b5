// SPDX-License-Identifier: GPL-2.0-only

#include "spsched/model.h"
#include "support.h"

#include "doctest.h"

using namespace spsched;
using spsched::test::Fixed;
using spsched::test::MakeSchedule;
using spsched::test::TickValid;

TEST_SUITE ("model")
{
  TEST_CASE ("expand blocks")
  {
    CHECK (ExpandBlocks (Fixed ("a", 2, 6, 3), 12) == std::vector<Block>{{2, 5}, {8, 11}});
    CHECK (ExpandBlocks (Fixed ("a", 0, 6, 2), 12) == std::vector<Block>{{0, 2}, {6, 8}});
    CHECK (ExpandBlocks (Fixed ("a", 5, 6, 1), 6) == std::vector<Block>{{5, 6}});
    CHECK (ExpandBlocks (Fixed ("a", 5, 6, 1), 5).empty ());
  }

  TEST_CASE ("expanded blocks are sorted, disjoint and periodic")
  {
    for (Tick tp = 1; tp <= 12; ++tp)
      for (Tick ts = 0; ts < tp; ++ts)
        for (Tick b = 1; b <= tp; ++b)
          {
            const Allocation a = Fixed ("a", ts, tp, b);
            const auto blocks = ExpandBlocks (a, 48);
            const auto longer = ExpandBlocks (a, 48 + tp);
            REQUIRE (longer.size () == blocks.size () + 1);
            for (std::size_t k = 0; k < blocks.size (); ++k)
              {
                CHECK (blocks[k].Length () == b);
                CHECK (blocks[k].start < 48);
                if (k > 0)
                  CHECK (blocks[k - 1].end <= blocks[k].start);
                CHECK (longer[k + 1] == Block{blocks[k].start + tp, blocks[k].end + tp});
              }
          }
  }

  TEST_CASE ("block overlap is half-open")
  {
    CHECK (Block{0, 2}.Overlaps ({1, 3}));
    CHECK_FALSE (Block{0, 2}.Overlaps ({2, 4}));
    CHECK_FALSE (Block{2, 4}.Overlaps ({0, 2}));
    CHECK (Block{0, 10}.Overlaps ({3, 4}));
  }

  TEST_CASE ("ratio and duration")
  {
    Allocation a{"a", 0, 6, 3, 2, 5};
    CHECK (a.Ratio () == Rational (1, 3));
    CHECK (a.DurationAt (Rational (0)) == 2);
    CHECK (a.DurationAt (Rational (1)) == 5);
    CHECK (a.DurationAt (Rational (1, 2)) == 3);
    CHECK (a.DurationAt (Rational (2, 3)) == 4);
  }

  TEST_CASE ("validate schedule examples")
  {
    const Schedule ok = MakeSchedule (12, {Fixed ("a", 0, 6, 2), Fixed ("b", 2, 6, 3)});
    CHECK_FALSE (ValidateSchedule (ok).has_value ());
    CHECK (TickValid (ok));

    const auto overlap = ValidateSchedule (MakeSchedule (12, {Fixed ("a", 0, 6, 2), Fixed ("b", 1, 6, 2)}));
    REQUIRE (overlap.has_value ());
    CHECK (overlap->kind == Violation::Kind::kOverlap);
    CHECK (overlap->firstBlock == Block{0, 2});
    CHECK (overlap->secondBlock == Block{1, 3});
    CHECK (overlap->first == "a");
    CHECK (overlap->second == "b");

    const auto crossing = ValidateSchedule (MakeSchedule (12, {Fixed ("a", 11, 6, 2)}));
    REQUIRE (crossing.has_value ());
    CHECK (crossing->kind == Violation::Kind::kBiCrossing);
    CHECK (crossing->firstBlock == Block{11, 13});
    CHECK (crossing->Describe ().find ("12") != std::string::npos);
  }

  TEST_CASE ("validate schedule flags duration and start range")
  {
    Allocation low{"a", 0, 6, 1, 2, 4};
    CHECK (ValidateSchedule (MakeSchedule (12, {low}))->kind == Violation::Kind::kDurationOutOfRange);
    Allocation high{"a", 0, 6, 5, 2, 4};
    CHECK (ValidateSchedule (MakeSchedule (12, {high}))->kind == Violation::Kind::kDurationOutOfRange);
    CHECK (ValidateSchedule (MakeSchedule (12, {Fixed ("a", 7, 6, 2)}))->kind == Violation::Kind::kStartOutOfRange);
  }

  TEST_CASE ("validate schedule sees overlaps across different periods")
  {
    // (2, 4, 1) threads between [0, 2) repeats; (1, 4, 1) hits it
    CHECK_FALSE (ValidateSchedule (MakeSchedule (12, {Fixed ("a", 0, 12, 2), Fixed ("b", 2, 4, 1)})));
    CHECK (ValidateSchedule (MakeSchedule (12, {Fixed ("a", 0, 12, 2), Fixed ("b", 1, 4, 1)})));
    // period of two BIs: second block of the short one lands on the long one
    CHECK (ValidateSchedule (MakeSchedule (12, {Fixed ("a", 18, 24, 2), Fixed ("b", 6, 12, 1)})));
    CHECK_FALSE (ValidateSchedule (MakeSchedule (12, {Fixed ("a", 19, 24, 2), Fixed ("b", 6, 12, 1)})));
  }

  TEST_CASE ("validate schedule agrees with tick scan")
  {
    std::mt19937_64 rng (11);
    for (int i = 0; i < 3000; ++i)
      {
        Schedule s (TimeBase (12));
        const int n = std::uniform_int_distribution<int> (1, 3) (rng);
        for (int k = 0; k < n; ++k)
          {
            static const Tick periods[] = {2, 3, 4, 6, 12, 24};
            const Tick tp = periods[std::uniform_int_distribution<int> (0, 5) (rng)];
            const Tick b = std::uniform_int_distribution<Tick> (1, std::min<Tick> (tp, 12)) (rng);
            s.Add (Fixed ("a" + std::to_string (k), std::uniform_int_distribution<Tick> (0, tp - 1) (rng), tp, b));
          }
        CHECK (ValidateSchedule (s).has_value () == !TickValid (s));
      }
  }

  TEST_CASE ("shrinking a valid schedule keeps it valid")
  {
    std::mt19937_64 rng (3);
    for (int i = 0; i < 500; ++i)
      {
        Schedule s = test::RandomSchedule (rng, 24, 4);
        for (auto &a : s.MutableAllocations ())
          a.tmin = 1;
        REQUIRE_FALSE (ValidateSchedule (s));
        for (std::size_t k = 0; k < s.Size (); ++k)
          {
            Schedule t = s;
            auto &a = t.MutableAllocations ()[k];
            a.tblk = std::uniform_int_distribution<Tick> (a.tmin, a.tblk) (rng);
            CHECK_FALSE (ValidateSchedule (t));
          }
        CHECK_FALSE (ValidateSchedule (s.ShrunkToMinimum ()));
      }
  }

  TEST_CASE ("schedule bookkeeping")
  {
    Schedule s (TimeBase (12));
    CHECK (s.Empty ());
    CHECK (s.JointPeriodTicks () == 0);
    CHECK (s.Horizon () == 12);
    s.Add (Fixed ("a", 0, 4, 1));
    s.Add (Fixed ("b", 1, 6, 1));
    CHECK (s.JointPeriodTicks () == 12);
    CHECK (s.HorizonWith (24) == 24);
    REQUIRE (s.Find ("b") != nullptr);
    CHECK (s.Find ("b")->tStart == 1);
    CHECK (s.Find ("c") == nullptr);

    Schedule fractional (TimeBase (12));
    fractional.Add (Fixed ("a", 0, 3, 1));
    CHECK (fractional.JointPeriodTicks () == 3);
    CHECK (fractional.Horizon () == 12);
  }

  TEST_CASE ("request validation")
  {
    TimeBase tb (12);
    CHECK_NOTHROW (ValidateRequest ({"r", RationalPeriod::Fraction (2), 2, 5, std::nullopt}, tb));
    CHECK_THROWS_AS (ValidateRequest ({"r", RationalPeriod::Fraction (2), 3, 3, std::nullopt}, tb), ConfigError);
    CHECK_THROWS_AS (ValidateRequest ({"r", RationalPeriod::Fraction (2), 0, 3, std::nullopt}, tb), ConfigError);
    CHECK_THROWS_AS (ValidateRequest ({"r", RationalPeriod::Fraction (2), 2, 8, std::nullopt}, tb), ConfigError);
    CHECK_THROWS_AS (ValidateRequest ({"r", RationalPeriod::Multiple (2), 2, 13, std::nullopt}, tb), ConfigError);
    CHECK_THROWS_AS (ValidateRequest ({"r", RationalPeriod::Fraction (5), 1, 2, std::nullopt}, tb), ConfigError);
  }
}
