// SPDX-License-Identifier: GPL-2.0-only
//
// First-come-first-served admission. Earlier allocations are frozen; a
// newcomer gets the longest feasible interval, capped at its tmax.

#ifndef SPSCHED_SCHED_SIMPLE_H
#define SPSCHED_SCHED_SIMPLE_H

#include "spsched/feasibility.h"

#include <optional>

namespace spsched {

/// Appends the granted allocation to `s` and returns it, or returns nullopt
/// (leaving `s` untouched) when no interval fits tmin.
std::optional<Allocation> AdmitSimple (Schedule &s, const AllocationRequest &req);

} // namespace spsched

#endif // SPSCHED_SCHED_SIMPLE_H
