#pragma once

#include <cstdint>
#include <cmath>
#include <random>

namespace lgcp {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic random stream. Distributions are implemented here rather than
// taken from <random> so that draws are reproducible bit-for-bit across
// standard library versions. Streams derived from the same root seed with
// distinct ids are independent for practical purposes.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0) {
        std::uint64_t s = seed ^ (0xd1b54a32d192ed03ULL * (stream_id + 1));
        engine_.seed(splitmix64(s));
    }

    static RngStream substream(std::uint64_t root_seed, std::uint64_t id) {
        return RngStream(root_seed, id);
    }

    std::uint64_t next_u64() { return engine_(); }

    // uniform on [0, 1)
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // uniform on (0, 1]
    double uniform_pos() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int n) {  // 0..n-1
        return static_cast<int>(engine_() % static_cast<std::uint64_t>(n));
    }

    // Box-Muller; consumes two uniforms per draw, no cached spare.
    double normal() {
        double u1 = uniform_pos();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    // Exact Poisson by multiplication of uniforms; large means are split into
    // chunks of <= 500 to avoid exp underflow (Poisson additivity).
    long poisson(double mean) {
        long total = 0;
        while (mean > 500.0) {
            total += poisson_small_(500.0);
            mean -= 500.0;
        }
        total += poisson_small_(mean);
        return total;
    }

private:
    long poisson_small_(double mean) {
        if (mean <= 0.0) return 0;
        const double limit = std::exp(-mean);
        double prod = uniform_pos();
        long k = 0;
        while (prod > limit) {
            prod *= uniform_pos();
            ++k;
        }
        return k;
    }

    std::mt19937_64 engine_;
};

}
