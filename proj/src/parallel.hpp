#pragma once

#include <omp.h>

#include <cstdlib>

namespace lforms {

// Worker cap for the parallel kernels: LORENTZ_FORMS_THREADS when set,
// otherwise the hardware default.
inline int worker_count() {
  static int cached = [] {
    int hw = omp_get_max_threads();
    if (const char* env = std::getenv("LORENTZ_FORMS_THREADS")) {
      int v = std::atoi(env);
      if (v >= 1 && v < hw) return v;
    }
    return hw;
  }();
  return cached;
}

}  // namespace lforms
