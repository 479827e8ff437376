#pragma once

#include <functional>
#include <vector>

namespace turan {

/// Worker count: env TURAN_THREADS when set and positive, otherwise the
/// hardware concurrency (at least 1).
int thread_count();

/// Splits [0, total) into contiguous chunks, runs `work(begin, end, chunk)`
/// on a pool, and returns when all chunks finish. Chunk boundaries depend
/// only on `total` and the worker count, and callers combine per-chunk
/// results in chunk order, so reductions stay deterministic.
void parallel_chunks(long long total,
                     const std::function<void(long long, long long, int)>& work,
                     int* chunks_used = nullptr);

/// Number of chunks parallel_chunks will use for the given total.
int chunk_count(long long total);

}  // namespace turan
