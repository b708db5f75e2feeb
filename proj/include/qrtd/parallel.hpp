#ifndef QRTD_PARALLEL_HPP_
#define QRTD_PARALLEL_HPP_

#include <cstddef>

namespace qrtd {

// Thread budget: min(omp_get_max_threads(), QRTD_THREADS). Evaluated once.
int max_threads();

// Fixed block size for deterministic reductions. Partial sums are formed
// per block and combined in block order, so results do not depend on the
// number of threads.
inline constexpr std::size_t kReductionBlock = 1024;

inline std::size_t reduction_blocks(std::size_t n) {
  return (n + kReductionBlock - 1) / kReductionBlock;
}

}  // namespace qrtd

#endif  // QRTD_PARALLEL_HPP_
