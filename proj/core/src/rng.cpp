#include "qlim/rng.hpp"

#include <cmath>

namespace qlim {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

}  // namespace

Rng::Rng(std::uint64_t seed) : state_(mix(seed + kGolden)) {}

Rng Rng::stream(std::uint64_t seed, std::uint64_t stream_index) {
    Rng r(seed);
    r.state_ = mix(r.state_ ^ mix(stream_index * kGolden + kGolden));
    return r;
}

std::uint64_t Rng::next_u64() {
    state_ += kGolden;
    return mix(state_);
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

double Rng::gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

}  // namespace qlim
