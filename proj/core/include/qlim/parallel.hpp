#ifndef QLIM_PARALLEL_HPP
#define QLIM_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace qlim {

/// Thread count from the QLIM_THREADS environment variable, falling back
/// to 1. Outputs never depend on the count: workers own disjoint index
/// ranges and reductions run in fixed order.
unsigned default_thread_count();

/// Runs body(begin, end) over contiguous chunks of [0, n) on up to
/// `threads` std::threads. threads <= 1 runs inline.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace qlim

#endif
