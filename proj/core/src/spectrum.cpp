#include "qlim/spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qlim {

Spectrum::Spectrum(FrequencyGrid grid, std::vector<double> values, Sidedness sidedness,
                   std::optional<double> unit_scale)
    : grid_(std::move(grid)),
      values_(std::move(values)),
      sidedness_(sidedness),
      unit_scale_(unit_scale) {
    if (values_.size() != grid_.size()) {
        throw std::invalid_argument("Spectrum: values/grid size mismatch");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]) || values_[i] < 0.0) {
            throw std::invalid_argument("Spectrum: values must be finite and >= 0 (index " +
                                        std::to_string(i) + ")");
        }
    }
    if (unit_scale_ && !(std::isfinite(*unit_scale_) && *unit_scale_ > 0.0)) {
        throw std::invalid_argument("Spectrum: unit_scale must be finite and > 0");
    }
}

Spectrum Spectrum::zeros(FrequencyGrid grid, Sidedness sidedness) {
    std::vector<double> v(grid.size(), 0.0);
    return Spectrum(std::move(grid), std::move(v), sidedness);
}

Spectrum Spectrum::with_unit_scale(std::optional<double> scale) const {
    return Spectrum(grid_, values_, sidedness_, scale);
}

Spectrum symmetrize(const Spectrum& s) {
    if (s.sidedness() == Sidedness::Symmetrized || s.sidedness() == Sidedness::TwoSided) {
        // C[-w] = C[w] already: the even extension is a fixed point.
        return Spectrum(s.grid(), s.values(), Sidedness::Symmetrized, s.unit_scale());
    }
    // OneSidedVacuum: C[-w] = 0 for w > 0, so the symmetric part is C/2.
    std::vector<double> v = s.values();
    for (double& x : v) x *= 0.5;
    return Spectrum(s.grid(), std::move(v), Sidedness::Symmetrized, s.unit_scale());
}

}  // namespace qlim
