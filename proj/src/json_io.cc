// SPDX-License-Identifier: GPL-2.0-only

#include "spsched/json_io.h"

#include <set>

namespace spsched {

using nlohmann::json;

namespace {

Tick
RequireInt (const json &obj, const char *key, const std::string &where)
{
  if (!obj.contains (key) || !obj.at (key).is_number_integer ())
    {
      throw ConfigError (where + ": missing or non-integer field '" + key + "'");
    }
  return obj.at (key).get<Tick> ();
}

std::string
RequireString (const json &obj, const char *key, const std::string &where)
{
  if (!obj.contains (key) || !obj.at (key).is_string ())
    {
      throw ConfigError (where + ": missing or non-string field '" + key + "'");
    }
  return obj.at (key).get<std::string> ();
}

TimeBase
ReadTimeBase (const json &doc)
{
  if (!doc.is_object ())
    throw ConfigError ("document root must be an object");
  if (!doc.contains ("bi_ticks"))
    return TimeBase ();
  return TimeBase (RequireInt (doc, "bi_ticks", "document"));
}

} // namespace

json
ScheduleToJson (const Schedule &s)
{
  json allocs = json::array ();
  for (const auto &a : s.Allocations ())
    {
      allocs.push_back ({{"id", a.id},
                         {"t_start", a.tStart},
                         {"tp", a.tp},
                         {"tblk", a.tblk},
                         {"tmin", a.tmin},
                         {"tmax", a.tmax}});
    }
  return {{"bi_ticks", s.GetTimeBase ().BiTicks ()}, {"allocations", std::move (allocs)}};
}

Schedule
ScheduleFromJson (const json &doc)
{
  Schedule s (ReadTimeBase (doc));
  if (!doc.contains ("allocations"))
    return s;
  if (!doc.at ("allocations").is_array ())
    throw ConfigError ("'allocations' must be an array");
  std::size_t index = 0;
  for (const auto &item : doc.at ("allocations"))
    {
      std::string where = "allocation #" + std::to_string (index++);
      if (!item.is_object ())
        throw ConfigError (where + " is not an object");
      Allocation a;
      a.id = RequireString (item, "id", where);
      a.tStart = RequireInt (item, "t_start", where);
      a.tp = RequireInt (item, "tp", where);
      a.tblk = RequireInt (item, "tblk", where);
      a.tmin = RequireInt (item, "tmin", where);
      a.tmax = RequireInt (item, "tmax", where);
      if (a.tp <= 0)
        throw ConfigError (where + ": tp must be positive");
      s.Add (std::move (a));
    }
  return s;
}

RequestFile
RequestFileFromJson (const json &doc)
{
  RequestFile out{ReadTimeBase (doc), {}};
  if (!doc.contains ("requests"))
    return out;
  if (!doc.at ("requests").is_array ())
    throw ConfigError ("'requests' must be an array");
  std::set<std::string> seen;
  std::size_t index = 0;
  for (const auto &item : doc.at ("requests"))
    {
      std::string where = "request #" + std::to_string (index++);
      if (!item.is_object ())
        throw ConfigError (where + " is not an object");
      AllocationRequest req;
      req.id = RequireString (item, "id", where);
      if (!item.contains ("period") || !item.at ("period").is_object ())
        throw ConfigError (where + ": missing object field 'period'");
      req.period.num = RequireInt (item.at ("period"), "num", where + " period");
      req.period.den = RequireInt (item.at ("period"), "den", where + " period");
      req.tmin = RequireInt (item, "tmin", where);
      req.tmax = RequireInt (item, "tmax", where);
      if (item.contains ("class") && !item.at ("class").is_null ())
        req.classLabel = RequireString (item, "class", where);
      if (!seen.insert (req.id).second)
        throw ConfigError (where + ": duplicate id '" + req.id + "'");
      ValidateRequest (req, out.timeBase);
      out.requests.push_back (std::move (req));
    }
  return out;
}

json
RequestFileToJson (const RequestFile &file)
{
  json reqs = json::array ();
  for (const auto &r : file.requests)
    {
      json item = {{"id", r.id},
                   {"period", {{"num", r.period.num}, {"den", r.period.den}}},
                   {"tmin", r.tmin},
                   {"tmax", r.tmax}};
      if (r.classLabel)
        item["class"] = *r.classLabel;
      reqs.push_back (std::move (item));
    }
  return {{"bi_ticks", file.timeBase.BiTicks ()}, {"requests", std::move (reqs)}};
}

} // namespace spsched
