#pragma once

#include <cstddef>
#include <functional>

namespace scramble {

// Worker count from the SCRAMBLE_WORKERS environment variable, else 1.
int default_worker_count();

// configured > 0 wins; 0 falls back to the environment default.
int resolve_worker_count(int configured);

// Runs fn(i) for i in [0, count) across up to `workers` threads. Callers keep
// determinism by writing only to slot i of preassigned storage; the iteration
// partition never affects results. Exceptions are rethrown on the caller
// after all workers join.
void parallel_for(int workers, std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace scramble
