// SPDX-License-Identifier: GPL-2.0-only
//
// Integer-tick time axis and rational period algebra over beacon intervals.

#ifndef SPSCHED_TIMEBASE_H
#define SPSCHED_TIMEBASE_H

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spsched {

/// Atomic unit of simulated time.
using Tick = std::int64_t;

/// Default beacon interval length: lcm(1..12), so every 1/q period with
/// q <= 12 is an exact tick count.
inline constexpr Tick kDefaultBiTicks = 27720;

/// Invalid run configuration (bad period, non-divisible BI, bad request).
class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Caller misuse (e.g. empty argument list).
class UsageError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

// Checked integer helpers. Overflow is a programming error and aborts.
Tick CheckedAdd (Tick a, Tick b);
Tick CheckedSub (Tick a, Tick b);
Tick CheckedMul (Tick a, Tick b);
Tick Gcd (Tick a, Tick b);
Tick Lcm (Tick a, Tick b);

/// floor(a / b) for b > 0, correct for negative a.
constexpr Tick
FloorDiv (Tick a, Tick b)
{
  Tick q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

/// ceil(a / b) for b > 0.
constexpr Tick
CeilDiv (Tick a, Tick b)
{
  return -FloorDiv (-a, b);
}

/// Exact normalized fraction num/den with den > 0.
class Rational
{
public:
  constexpr Rational () = default;
  Rational (std::int64_t num, std::int64_t den = 1);

  std::int64_t Num () const { return m_num; }
  std::int64_t Den () const { return m_den; }

  double ToDouble () const { return static_cast<double> (m_num) / static_cast<double> (m_den); }
  /// floor(num/den)
  std::int64_t Floor () const { return FloorDiv (m_num, m_den); }
  std::int64_t Ceil () const { return CeilDiv (m_num, m_den); }

  /// Parses "3", "-2", "0.05", "1/3". Throws ConfigError on malformed input.
  static Rational Parse (std::string_view text);
  /// Decimal rendering with exactly `digits` fractional digits (rounded half up).
  std::string ToDecimal (int digits) const;
  std::string ToString () const;

  friend Rational operator+ (const Rational &a, const Rational &b);
  friend Rational operator- (const Rational &a, const Rational &b);
  friend Rational operator* (const Rational &a, const Rational &b);
  friend Rational operator/ (const Rational &a, const Rational &b);
  friend bool operator== (const Rational &a, const Rational &b) = default;
  friend std::strong_ordering operator<=> (const Rational &a, const Rational &b);

private:
  std::int64_t m_num = 0;
  std::int64_t m_den = 1;
};

/// Block period as a fraction of the beacon interval: p = num/den with
/// num == 1 or den == 1 (integer multiple or integer fraction of a BI).
struct RationalPeriod
{
  std::int64_t num = 1;
  std::int64_t den = 1;

  static RationalPeriod Multiple (std::int64_t n) { return {n, 1}; }
  static RationalPeriod Fraction (std::int64_t q) { return {1, q}; }

  bool IsWellFormed () const { return num > 0 && den > 0 && (num == 1 || den == 1); }
  Rational AsRational () const { return Rational (num, den); }
  std::string ToString () const;

  friend bool operator== (const RationalPeriod &, const RationalPeriod &) = default;
};

class TimeBase
{
public:
  /// Throws ConfigError unless biTicks > 0.
  explicit TimeBase (Tick biTicks = kDefaultBiTicks);

  Tick BiTicks () const { return m_biTicks; }
  /// Index of the beacon interval that contains tick t.
  Tick BiIndex (Tick t) const { return FloorDiv (t, m_biTicks); }
  Tick BiStart (Tick t) const { return BiIndex (t) * m_biTicks; }
  Tick BiEnd (Tick t) const { return BiStart (t) + m_biTicks; }

  friend bool operator== (const TimeBase &, const TimeBase &) = default;

private:
  Tick m_biTicks;
};

/// Tp = p * T_BI in ticks. Throws ConfigError for malformed periods or a
/// BI length not divisible by p.den.
Tick PeriodTicks (const RationalPeriod &p, const TimeBase &tb);

/// lcm of all periods evaluated over the rationals as lcm(nums)/gcd(dens),
/// then converted to ticks. Throws UsageError on an empty list.
Tick JointPeriod (std::span<const RationalPeriod> periods, const TimeBase &tb);

/// lcm over tick-valued periods. Throws UsageError on an empty list.
Tick JointPeriodTicks (std::span<const Tick> periods);

} // namespace spsched

#endif // SPSCHED_TIMEBASE_H
