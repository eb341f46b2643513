#ifndef QLIM_SYNTH_HPP
#define QLIM_SYNTH_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qlim/spectrum.hpp"

namespace qlim {

/// Real time-domain samples at fixed interval dt, tagged with the seed
/// that produced them.
struct TimeSeries {
    std::vector<double> samples;
    double dt = 0.0;
    std::uint64_t seed = 0;
};

/// Stationary Gaussian series whose expected periodogram equals the target
/// spectrum on the covered bins.
///
/// Frequency-domain synthesis: complex Gaussian coefficients with Hermitian
/// symmetry are shaped by the target density and inverse-transformed. The
/// DC bin is always zero. The spectrum must be Symmetrized (callers pass
/// symmetrize(s)) and its band must cover [2 pi / duration, pi / dt];
/// missing coverage throws with the offending bin range in the message.
/// Deterministic in (spectrum, duration, dt, seed).
TimeSeries synthesize(const Spectrum& s, double duration, double dt, std::uint64_t seed);

/// Welch-averaged periodogram: Hann window, 50% overlap, segment length the
/// largest power of two that fits n_segments segments. The spectrum grid
/// excludes the DC and Nyquist bins; sidedness is Symmetrized. The series
/// mean is removed first and reported as dc_power.
struct PeriodogramResult {
    Spectrum spectrum;
    double dc_power = 0.0;
    bool dc_removed = false;
    std::size_t segment_length = 0;
    std::size_t segment_count = 0;
};

PeriodogramResult periodogram(const TimeSeries& ts, std::size_t n_segments);

}  // namespace qlim

#endif
