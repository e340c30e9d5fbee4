#pragma once

#include <cstddef>
#include <functional>

namespace kext {

/// Worker count: min(hardware, KEXT_THREADS env var if set). Always >= 1.
int worker_count();

/// Runs fn(i) for i in [0, count) across worker threads. Blocks until done.
/// Chunk assignment is static, so results written to pre-sized buffers are
/// deterministic regardless of scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace kext
