#pragma once

// Include this instead of <omp.h> so the library still builds serially
// when the compiler has no OpenMP support.

#if defined(_OPENMP)
#include <omp.h>
namespace gr2n {
constexpr bool kHaveOpenMp = true;
}
#else
namespace gr2n {
constexpr bool kHaveOpenMp = false;
}
inline int omp_get_thread_num() { return 0; }
inline int omp_get_max_threads() { return 1; }
inline int omp_get_num_threads() { return 1; }
inline void omp_set_num_threads(int) {}
inline double omp_get_wtime() { return 0.0; }
#endif
