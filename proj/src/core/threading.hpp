// Minimal fork-join helper. Worker count defaults to the hardware
// concurrency, capped by the NFT_THREADS environment variable.
#pragma once

#include <cstddef>
#include <functional>

namespace nft {

std::size_t worker_count();

/// Runs body(i) for i in [0, n), split across workers in contiguous ranges.
/// Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace nft
