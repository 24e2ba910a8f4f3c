#include "gpid/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace gpid {

int worker_count() {
  if (const char* env = std::getenv("GPID_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t > 0) return t;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

}  // namespace gpid
