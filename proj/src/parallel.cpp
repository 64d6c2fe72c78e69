#include "lgcp/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lgcp {

namespace {
int g_max_workers = 0;
}

void set_max_workers(int n) { g_max_workers = n < 0 ? 0 : n; }

int max_workers() {
#ifdef _OPENMP
    return g_max_workers > 0 ? g_max_workers : omp_get_max_threads();
#else
    return 1;
#endif
}

namespace detail {

void run_parallel(std::int64_t n_items, int workers, void* ctx, void (*fn)(void*, std::int64_t)) {
    if (workers == 0) workers = max_workers();
#ifdef _OPENMP
    if (workers > 1 && n_items > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(workers)
        for (std::int64_t i = 0; i < n_items; ++i) fn(ctx, i);
        return;
    }
#endif
    for (std::int64_t i = 0; i < n_items; ++i) fn(ctx, i);
}

}

std::vector<BlockRange> make_blocks(std::int64_t n, std::int64_t block_size) {
    std::vector<BlockRange> blocks;
    if (block_size < 1) block_size = 1;
    blocks.reserve(static_cast<std::size_t>((n + block_size - 1) / block_size));
    for (std::int64_t lo = 0; lo < n; lo += block_size)
        blocks.push_back({lo, lo + block_size < n ? lo + block_size : n});
    return blocks;
}

}
