#pragma once

#include <cstdint>
#include <random>

namespace chromalab {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
std::uint64_t splitmix64(std::uint64_t x);

/// Per-stream seed: splitmix64(master ^ splitmix64(stream + 1)).
std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t stream_index);

/// Portable random stream: std::mt19937_64 (bit-exact across standard
/// libraries) seeded with stream_seed(), with doubles formed from the top
/// 53 bits. The std distributions are avoided because their output is
/// implementation-defined. Reference outputs are listed in docs/rng.md.
class RandomStream {
public:
    RandomStream(std::uint64_t master_seed, std::uint64_t stream_index)
        : engine_(stream_seed(master_seed, stream_index))
    {
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

private:
    std::mt19937_64 engine_;
};

} // namespace chromalab
