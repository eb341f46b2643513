#ifndef QLIM_GEODESIC_MC_HPP
#define QLIM_GEODESIC_MC_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qlim/constants.hpp"
#include "qlim/gravity.hpp"
#include "qlim/spectrum.hpp"

namespace qlim {

/// One transverse-traceless plane-wave mode of the stochastic ensemble:
/// angular frequency (rad/s), propagation direction, and one complex
/// Gaussian amplitude per polarization.
struct GwMode {
    double omega = 0.0;
    std::array<double, 3> direction{};
    std::complex<double> amp_plus;
    std::complex<double> amp_cross;
};

/// A draw of the classical surrogate for gravitational-wave zero-point
/// fluctuations: mode statistics reproduce the symmetrized curvature
/// spectrum over the band.
struct GwRealization {
    std::vector<GwMode> modes;
    std::uint64_t seed = 0;
    double band_lo = 0.0;
    double band_hi = 0.0;
};

struct McConfig {
    std::size_t realizations = 200;
    std::size_t modes = 64;
    double band_lo = 0.0;   // rad/s
    double band_hi = 0.0;   // rad/s
    double path_length = 0.0;  // m
    std::array<double, 3> direction{0.0, 0.0, 1.0};
    bool round_trip = false;  // one-way is the documented default geometry
    std::uint64_t seed = 0;
    double amplitude_scale = 1.0;  // 0 synthesizes a null field (tests)
    // sampling of the synthetic record
    double oversample = 4.0;          // samples per shortest period / 2
    std::size_t segment_length = 2048;  // power of two
    std::size_t segments = 3;           // Welch segments per realization
    // fit band [lo_factor * band_lo, hi_factor * band_hi], log-rebinned
    double fit_lo_factor = 3.0;
    double fit_hi_factor = 0.5;
    std::size_t log_bins = 24;
    std::size_t min_realizations = 50;
    unsigned threads = 1;
};

/// Fit of log C_qq = log beta_hat + 2 log l_p - log omega over the fit
/// band. slope_hat comes from an unconstrained log-log fit; beta_hat from
/// the band power (exact for a 1/omega law), with a 95% confidence interval
/// across realizations.
struct McFit {
    double beta_hat = 0.0;
    double slope_hat = 0.0;
    double beta_ci_low = 0.0;
    double beta_ci_high = 0.0;
    double ci_width_fraction = 0.0;  // (ci_high - ci_low) / beta_hat
    bool degenerate = false;
    std::size_t realizations = 0;
};

struct McResult {
    Spectrum spectrum;  // one-sided, unit_scale = l_p^2
    McFit fit;
};

/// Orthonormal pair spanning the plane transverse to dir (deterministic).
std::array<std::array<double, 3>, 2> transverse_basis(const std::array<double, 3>& dir);

/// Plus/cross polarization tensors for the given propagation direction,
/// embedded as 4x4 covariant components (time row/column zero).
std::array<Mat4, 2> polarization_tensors(const std::array<double, 3>& dir);

/// Per-mode amplitude variance sigma^2(omega) of the surrogate ensemble
/// (per polarization), chosen so the mode statistics reproduce the
/// symmetrized curvature spectrum.
double surrogate_mode_variance(double omega, double band_lo, double band_hi, std::size_t modes,
                               double l_p, double c);

/// Independent stream (seed, index) -> one realization of the ensemble.
GwRealization draw_realization(const McConfig& cfg, std::size_t index,
                               const PhysicalConstants& k);

/// Monte-Carlo estimate of the gravitational distance-noise spectrum.
///
/// Each realization propagates a probe ray of length `path_length` along
/// `direction` through its plane-wave ensemble, integrating the geodesic
/// deviation law along the path; the acceleration is double-integrated in
/// the frequency domain (exact -c^2/omega^2 transfer per mode), the
/// periodogram estimated, averaged over realizations and reported
/// one-sided. Deterministic in the seed for any thread count.
McResult geodesic_deviation_mc(const McConfig& cfg, const PhysicalConstants& k);

}  // namespace qlim

#endif
