#pragma once

#include <cstdint>
#include <functional>

namespace covertmm {

/// Runs fn(i) for every i in [0, count) on a small thread pool. fn must
/// only touch state owned by index i; the caller reduces results in index
/// order so the outcome is independent of scheduling. Exceptions from fn
/// are rethrown after all workers finish.
void parallel_for_index(std::int64_t count, const std::function<void(std::int64_t)>& fn);

}  // namespace covertmm
