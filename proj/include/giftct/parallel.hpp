#pragma once

#include <cstddef>
#include <functional>

namespace giftct {

// Worker count used by the data-parallel kernels. 0 restores the hardware
// default. Results are value-identical for any setting: work is split into
// chunks whose boundaries depend only on the problem size, and chunk results
// are merged in chunk-index order.
void set_worker_count(unsigned n);
unsigned worker_count();

// Runs fn(chunk) for chunk in [0, num_chunks). fn must only touch
// chunk-private state; the caller merges results in chunk order.
void parallel_chunks(std::size_t num_chunks, const std::function<void(std::size_t)>& fn);

// Fixed chunk sizing: at most `max_chunks` chunks, never smaller than
// `min_chunk` items, independent of the worker count.
std::size_t chunk_size_for(std::size_t items, std::size_t min_chunk, std::size_t max_chunks);

}  // namespace giftct
