#include "qrtd/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace qrtd {

int max_threads() {
  static const int cached = [] {
    int t = omp_get_max_threads();
    if (const char* env = std::getenv("QRTD_THREADS")) {
      try {
        const int cap = std::stoi(env);
        if (cap >= 1 && cap < t) t = cap;
      } catch (...) {
        // ignore malformed values, keep the OpenMP default
      }
    }
    return t;
  }();
  return cached;
}

}  // namespace qrtd
