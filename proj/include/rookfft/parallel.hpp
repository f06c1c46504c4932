#ifndef ROOKFFT_PARALLEL_HPP_
#define ROOKFFT_PARALLEL_HPP_

namespace rookfft {

// Every kernel with a data-parallel loop takes one of these.  The serial
// path is the reference; both produce bit-identical results.
enum class Execution { serial, parallel };

// Cap on OpenMP threads; 0 restores the runtime default.
void set_thread_limit(int threads);
// Reads ROOKFFT_THREADS (0 or unset = auto) and applies it.
void apply_thread_limit_from_env();
int max_threads();

}  // namespace rookfft

#endif  // ROOKFFT_PARALLEL_HPP_
