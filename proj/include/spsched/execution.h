// SPDX-License-Identifier: GPL-2.0-only

#ifndef SPSCHED_EXECUTION_H
#define SPSCHED_EXECUTION_H

namespace spsched {

/// Selects between the OpenMP kernels and the serial reference path. Both
/// produce identical results.
enum class Execution
{
  kSerial,
  kParallel,
};

/// Number of threads an OpenMP parallel region would use (1 without OpenMP).
int MaxThreads ();

} // namespace spsched

#endif // SPSCHED_EXECUTION_H
