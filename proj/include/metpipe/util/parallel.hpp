#pragma once

#include <cstddef>
#include <functional>

namespace metpipe {

/// Worker count: METPIPE_JOBS env var if set, otherwise hardware concurrency.
int default_jobs();

/// Runs fn(i) for i in [0, n) on up to `jobs` threads using static contiguous
/// chunks. Results must be written to pre-sized, index-addressed storage so the
/// outcome is identical for any job count. The first exception is rethrown.
void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& fn);

} // namespace metpipe
