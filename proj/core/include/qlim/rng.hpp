#ifndef QLIM_RNG_HPP
#define QLIM_RNG_HPP

#include <cstdint>

namespace qlim {

/// Deterministic counter-friendly generator (splitmix64 core, Box-Muller
/// gaussians). Fully specified here so that seeded runs are byte-identical
/// across platforms and thread counts; `stream(seed, index)` derives
/// independent streams for parallel workers.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    /// Independent stream derived from (seed, stream_index).
    static Rng stream(std::uint64_t seed, std::uint64_t stream_index);

    std::uint64_t next_u64();

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform();
    double uniform(double lo, double hi);

    /// Standard normal. Box-Muller; pairs are cached.
    double gaussian();

  private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace qlim

#endif
