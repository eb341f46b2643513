#ifndef QLIM_RESPONSE_HPP
#define QLIM_RESPONSE_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "qlim/constants.hpp"
#include "qlim/frequency_grid.hpp"
#include "qlim/mirror.hpp"
#include "qlim/spectrum.hpp"

namespace qlim {

enum class ResponseModel { MechanicalBound, VacuumMotional, Dressed, Custom };

/// Complex susceptibility chi[omega] sampled on a positive-frequency grid.
///
/// Negative frequencies are never stored; chi[-w] = conj(chi[w]) by the
/// reality condition. Physically admissible responses have Im chi >= 0 for
/// omega > 0. Divergent samples (undamped resonance hitting the grid) are
/// stored as 0 and reported through the flagged-index list instead of
/// returning infinities.
class ComplexResponse {
  public:
    ComplexResponse(FrequencyGrid grid, std::vector<std::complex<double>> values,
                    ResponseModel model, std::vector<std::size_t> flagged = {});

    const FrequencyGrid& grid() const noexcept { return grid_; }
    const std::vector<std::complex<double>>& values() const noexcept { return values_; }
    std::complex<double> value(std::size_t i) const { return values_[i]; }
    std::size_t size() const noexcept { return values_.size(); }
    ResponseModel model() const noexcept { return model_; }

    const std::vector<std::size_t>& flagged() const noexcept { return flagged_; }
    bool has_flagged_points() const noexcept { return !flagged_.empty(); }

    /// chi[-omega_i] via the reality condition.
    std::complex<double> value_at_negative(std::size_t i) const { return std::conj(values_[i]); }

  private:
    FrequencyGrid grid_;
    std::vector<std::complex<double>> values_;
    ResponseModel model_;
    std::vector<std::size_t> flagged_;
};

/// chi_qq[w] = 1 / (m (omega0^2 - w^2 - i gamma w)). Requires fixed-gamma
/// params; alpha-mode mirrors go through dressed_susceptibility instead.
/// An exact undamped resonance on the grid is flagged, not infinite.
ComplexResponse mech_susceptibility(const MirrorParams& p, const FrequencyGrid& grid);

/// chi_FF[w] = i alpha hbar w^3 / c^2, the irreducible vacuum motional
/// force response. Purely imaginary; paired with a mass m it is equivalent
/// to gamma(w) = alpha hbar w^2 / (m c^2).
ComplexResponse vacuum_motional_susceptibility(double alpha, const FrequencyGrid& grid,
                                               const PhysicalConstants& k);

/// chi_qq[w] = 1 / (m (omega0^2 - w^2) - chi_FF[w]). With chi_FF = i m gamma w
/// this reproduces mech_susceptibility exactly.
ComplexResponse dressed_susceptibility(const MirrorParams& p, const ComplexResponse& chi_ff);

/// Zero-temperature relation: C[w] = 2 hbar theta(w) Im chi[w], returned as
/// a OneSidedVacuum spectrum. Throws if Im chi < 0 anywhere (dissipation
/// positivity) or if the response carries divergence flags.
Spectrum vacuum_spectrum_from_response(const ComplexResponse& chi, double hbar);

/// Vacuum radiation-pressure position noise of a (nearly) free mirror.
///
/// `exact` is 2 hbar Im chi_qq of the mirror dressed by the vacuum motional
/// force; `small_gamma` is the leading-order closed form
/// 2 alpha lambda_c^2 theta(w)/w, lambda_c = hbar/(m c). The two agree to
/// O((gamma/w)^2). regime_warning is set when omega0 is not negligible
/// against the grid.
struct VacuumPositionSpectra {
    Spectrum exact;
    Spectrum small_gamma;
    bool regime_warning = false;
};

VacuumPositionSpectra vacuum_position_spectrum(const MirrorParams& p, double alpha,
                                               const FrequencyGrid& grid,
                                               const PhysicalConstants& k);

}  // namespace qlim

#endif
