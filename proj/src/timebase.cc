// SPDX-License-Identifier: GPL-2.0-only

#include "spsched/timebase.h"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace spsched {

namespace {

__extension__ typedef __int128 Wide;

[[noreturn]] void
Overflow (const char *what)
{
  std::fprintf (stderr, "spsched: integer overflow in %s\n", what);
  std::abort ();
}

std::int64_t
Narrow (Wide v, const char *what)
{
  if (v > std::numeric_limits<std::int64_t>::max () || v < std::numeric_limits<std::int64_t>::min ())
    {
      Overflow (what);
    }
  return static_cast<std::int64_t> (v);
}

Wide
WideGcd (Wide a, Wide b)
{
  if (a < 0)
    a = -a;
  if (b < 0)
    b = -b;
  while (b != 0)
    {
      Wide t = a % b;
      a = b;
      b = t;
    }
  return a;
}

Rational
MakeWide (Wide num, Wide den)
{
  if (den == 0)
    {
      throw UsageError ("rational with zero denominator");
    }
  if (den < 0)
    {
      num = -num;
      den = -den;
    }
  Wide g = WideGcd (num, den);
  if (g > 1)
    {
      num /= g;
      den /= g;
    }
  return Rational (Narrow (num, "rational"), Narrow (den, "rational"));
}

} // namespace

Tick
CheckedAdd (Tick a, Tick b)
{
  Tick r;
  if (__builtin_add_overflow (a, b, &r))
    Overflow ("add");
  return r;
}

Tick
CheckedSub (Tick a, Tick b)
{
  Tick r;
  if (__builtin_sub_overflow (a, b, &r))
    Overflow ("sub");
  return r;
}

Tick
CheckedMul (Tick a, Tick b)
{
  Tick r;
  if (__builtin_mul_overflow (a, b, &r))
    Overflow ("mul");
  return r;
}

Tick
Gcd (Tick a, Tick b)
{
  return std::gcd (a, b);
}

Tick
Lcm (Tick a, Tick b)
{
  if (a == 0 || b == 0)
    return 0;
  return CheckedMul (a / Gcd (a, b), b);
}

Rational::Rational (std::int64_t num, std::int64_t den)
{
  if (den == 0)
    {
      throw UsageError ("rational with zero denominator");
    }
  if (den < 0)
    {
      num = CheckedMul (num, -1);
      den = CheckedMul (den, -1);
    }
  std::int64_t g = std::gcd (num, den);
  if (g > 1)
    {
      num /= g;
      den /= g;
    }
  m_num = num;
  m_den = den;
}

Rational
operator+ (const Rational &a, const Rational &b)
{
  return MakeWide (Wide (a.m_num) * b.m_den + Wide (b.m_num) * a.m_den, Wide (a.m_den) * b.m_den);
}

Rational
operator- (const Rational &a, const Rational &b)
{
  return MakeWide (Wide (a.m_num) * b.m_den - Wide (b.m_num) * a.m_den, Wide (a.m_den) * b.m_den);
}

Rational
operator* (const Rational &a, const Rational &b)
{
  return MakeWide (Wide (a.m_num) * b.m_num, Wide (a.m_den) * b.m_den);
}

Rational
operator/ (const Rational &a, const Rational &b)
{
  return MakeWide (Wide (a.m_num) * b.m_den, Wide (a.m_den) * b.m_num);
}

std::strong_ordering
operator<=> (const Rational &a, const Rational &b)
{
  Wide lhs = Wide (a.m_num) * b.m_den;
  Wide rhs = Wide (b.m_num) * a.m_den;
  if (lhs < rhs)
    return std::strong_ordering::less;
  if (lhs > rhs)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational
Rational::Parse (std::string_view text)
{
  auto fail = [&] () -> Rational {
    throw ConfigError ("malformed number '" + std::string (text) + "'");
  };
  if (text.empty ())
    return fail ();

  auto parseInt = [&] (std::string_view s, std::int64_t &out) {
    if (s.empty ())
      return false;
    auto [ptr, ec] = std::from_chars (s.data (), s.data () + s.size (), out);
    return ec == std::errc () && ptr == s.data () + s.size ();
  };

  if (auto slash = text.find ('/'); slash != std::string_view::npos)
    {
      std::int64_t n, d;
      if (!parseInt (text.substr (0, slash), n) || !parseInt (text.substr (slash + 1), d) || d == 0)
        return fail ();
      return Rational (n, d);
    }

  bool negative = false;
  std::string_view body = text;
  if (body.front () == '-' || body.front () == '+')
    {
      negative = body.front () == '-';
      body.remove_prefix (1);
    }
  std::string_view intPart = body;
  std::string_view fracPart;
  if (auto dot = body.find ('.'); dot != std::string_view::npos)
    {
      intPart = body.substr (0, dot);
      fracPart = body.substr (dot + 1);
    }
  if (intPart.empty () && fracPart.empty ())
    return fail ();
  for (char c : intPart)
    if (c < '0' || c > '9')
      return fail ();
  for (char c : fracPart)
    if (c < '0' || c > '9')
      return fail ();
  if (fracPart.size () > 17)
    return fail ();

  std::int64_t whole = 0;
  if (!intPart.empty () && !parseInt (intPart, whole))
    return fail ();
  std::int64_t scale = 1;
  std::int64_t frac = 0;
  for (char c : fracPart)
    {
      scale = CheckedMul (scale, 10);
      frac = CheckedAdd (CheckedMul (frac, 10), c - '0');
    }
  std::int64_t num = CheckedAdd (CheckedMul (whole, scale), frac);
  return Rational (negative ? -num : num, scale);
}

std::string
Rational::ToDecimal (int digits) const
{
  Wide scale = 1;
  for (int i = 0; i < digits; ++i)
    scale *= 10;
  Wide num = m_num;
  bool negative = num < 0;
  if (negative)
    num = -num;
  // round half up on the magnitude
  Wide scaled = (num * scale * 2 + m_den) / (Wide (m_den) * 2);
  Wide whole = scaled / scale;
  Wide frac = scaled % scale;
  std::string out = negative && scaled != 0 ? "-" : "";
  out += std::to_string (static_cast<long long> (whole));
  if (digits > 0)
    {
      std::string f = std::to_string (static_cast<long long> (frac));
      out += '.';
      out += std::string (static_cast<std::size_t> (digits) - f.size (), '0');
      out += f;
    }
  return out;
}

std::string
Rational::ToString () const
{
  if (m_den == 1)
    return std::to_string (m_num);
  return std::to_string (m_num) + "/" + std::to_string (m_den);
}

std::string
RationalPeriod::ToString () const
{
  if (den == 1)
    return std::to_string (num);
  return std::to_string (num) + "/" + std::to_string (den);
}

TimeBase::TimeBase (Tick biTicks)
  : m_biTicks (biTicks)
{
  if (biTicks <= 0)
    {
      throw ConfigError ("bi_ticks must be positive, got " + std::to_string (biTicks));
    }
}

Tick
PeriodTicks (const RationalPeriod &p, const TimeBase &tb)
{
  if (!p.IsWellFormed ())
    {
      throw ConfigError ("period " + p.ToString () + " is neither an integer multiple nor an integer fraction of the BI");
    }
  if (tb.BiTicks () % p.den != 0)
    {
      throw ConfigError ("bi_ticks " + std::to_string (tb.BiTicks ()) + " not divisible by period denominator "
                         + std::to_string (p.den));
    }
  return CheckedMul (p.num, tb.BiTicks () / p.den);
}

Tick
JointPeriod (std::span<const RationalPeriod> periods, const TimeBase &tb)
{
  if (periods.empty ())
    {
      throw UsageError ("joint period of an empty period list");
    }
  // lcm(a/b, c/d) = lcm(a, c) / gcd(b, d), folded over the list
  std::int64_t num = 0;
  std::int64_t den = 0;
  for (const auto &p : periods)
    {
      PeriodTicks (p, tb); // validates
      num = num == 0 ? p.num : Lcm (num, p.num);
      den = den == 0 ? p.den : Gcd (den, p.den);
    }
  return PeriodTicks (RationalPeriod{num, den}, tb);
}

Tick
JointPeriodTicks (std::span<const Tick> periods)
{
  if (periods.empty ())
    {
      throw UsageError ("joint period of an empty period list");
    }
  Tick out = 1;
  for (Tick p : periods)
    {
      if (p <= 0)
        throw UsageError ("non-positive period");
      out = Lcm (out, p);
    }
  return out;
}

} // namespace spsched
