#include "rookfft/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rookfft {

namespace {
#ifdef _OPENMP
const int kDefaultThreads = omp_get_max_threads();
#endif
}  // namespace

void set_thread_limit(int threads) {
#ifdef _OPENMP
  omp_set_num_threads(threads > 0 ? threads : kDefaultThreads);
#else
  (void)threads;
#endif
}

void apply_thread_limit_from_env() {
  const char* env = std::getenv("ROOKFFT_THREADS");
  if (env == nullptr || *env == '\0') return;
  try {
    set_thread_limit(std::stoi(env));
  } catch (const std::exception&) {
    // unparsable values leave the runtime default in place
  }
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace rookfft
