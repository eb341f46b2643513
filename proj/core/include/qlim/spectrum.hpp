#ifndef QLIM_SPECTRUM_HPP
#define QLIM_SPECTRUM_HPP

#include <optional>
#include <vector>

#include "qlim/frequency_grid.hpp"

namespace qlim {

/// How samples stored on the positive-frequency grid extend to omega < 0.
///
///   TwoSided        C[-w] = C[w]   (even classical density)
///   OneSidedVacuum  C[-w] = 0      (theta(omega) support, zero-temperature)
///   Symmetrized     (C[w] + C[-w])/2, already even by construction
enum class Sidedness { TwoSided, OneSidedVacuum, Symmetrized };

/// Samples of a spectral density over a FrequencyGrid. Values are
/// non-negative; units depend on the quantity (m^2 s for position spectra,
/// N^2 s for force spectra). `unit_scale` is an optional reference area
/// (m^2) used when reporting dimensionless ratios.
class Spectrum {
  public:
    Spectrum(FrequencyGrid grid, std::vector<double> values, Sidedness sidedness,
             std::optional<double> unit_scale = std::nullopt);

    static Spectrum zeros(FrequencyGrid grid, Sidedness sidedness);

    const FrequencyGrid& grid() const noexcept { return grid_; }
    const std::vector<double>& values() const noexcept { return values_; }
    double value(std::size_t i) const { return values_[i]; }
    std::size_t size() const noexcept { return values_.size(); }
    Sidedness sidedness() const noexcept { return sidedness_; }
    const std::optional<double>& unit_scale() const noexcept { return unit_scale_; }

    /// Copy with a different reporting scale; values are unchanged (SI).
    Spectrum with_unit_scale(std::optional<double> scale) const;

  private:
    FrequencyGrid grid_;
    std::vector<double> values_;
    Sidedness sidedness_;
    std::optional<double> unit_scale_;
};

/// C_sym[w] = (C[w] + C[-w]) / 2 with C[-w] given by the sidedness tag.
/// Idempotent; OneSidedVacuum input halves, even input is a fixed point.
Spectrum symmetrize(const Spectrum& s);

}  // namespace qlim

#endif
