#pragma once

#include <cstddef>
#include <functional>

namespace ccgof {

// Runs fn(i) for i in [0, count) across `workers` threads (0 = hardware
// concurrency). Work is striped statically; correctness must not depend on
// the assignment because every task is index-seeded and writes only slot i.
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& fn);

unsigned default_workers();

}  // namespace ccgof
