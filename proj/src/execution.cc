// SPDX-License-Identifier: GPL-2.0-only

#include "spsched/execution.h"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spsched {

int
MaxThreads ()
{
#ifdef _OPENMP
  return omp_get_max_threads ();
#else
  return 1;
#endif
}

} // namespace spsched
