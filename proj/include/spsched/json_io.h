// SPDX-License-Identifier: GPL-2.0-only
//
// JSON documents: schedules (output of `schedule`) and request lists (input).

#ifndef SPSCHED_JSON_IO_H
#define SPSCHED_JSON_IO_H

#include "spsched/model.h"

#include "json.hpp"

#include <vector>

namespace spsched {

//   { "bi_ticks": int,
//     "allocations": [ { "id": str, "t_start": int, "tp": int, "tblk": int,
//                        "tmin": int, "tmax": int } ] }
nlohmann::json ScheduleToJson (const Schedule &s);
/// Throws ConfigError on schema errors.
Schedule ScheduleFromJson (const nlohmann::json &doc);

struct RequestFile
{
  TimeBase timeBase;
  std::vector<AllocationRequest> requests;
};

//   { "bi_ticks": int,
//     "requests": [ { "id": str, "period": {"num": int, "den": int},
//                     "tmin": int, "tmax": int, "class": str? } ] }
/// Throws ConfigError on schema errors or invalid requests.
RequestFile RequestFileFromJson (const nlohmann::json &doc);
nlohmann::json RequestFileToJson (const RequestFile &file);

} // namespace spsched

#endif // SPSCHED_JSON_IO_H
