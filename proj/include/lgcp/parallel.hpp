#pragma once

#include <cstdint>
#include <vector>

namespace lgcp {

// Process-wide worker count. 0 means "use the OpenMP default".
void set_max_workers(int n);
int max_workers();

namespace detail {
void run_parallel(std::int64_t n_items, int workers, void* ctx, void (*fn)(void*, std::int64_t));
}

// Parallel loop over [0, n). Results must be written to disjoint slots so the
// outcome does not depend on the schedule. workers == 1 runs the plain serial
// loop; workers == 0 uses the process-wide setting.
template <class F>
void parallel_for(std::int64_t n, F&& f, int workers = 0) {
    struct Ctx { F* f; } ctx{&f};
    detail::run_parallel(n, workers, &ctx, [](void* c, std::int64_t i) {
        (*static_cast<Ctx*>(c)->f)(i);
    });
}

// Fixed block partition of [0, n). The partition depends only on n and
// block_size, never on the thread count, so blocked reductions are
// bit-reproducible: reduce per-block partials in block order afterwards.
struct BlockRange {
    std::int64_t lo, hi;
};

std::vector<BlockRange> make_blocks(std::int64_t n, std::int64_t block_size);

}
