#include "qlim/response.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qlim {

ComplexResponse::ComplexResponse(FrequencyGrid grid, std::vector<std::complex<double>> values,
                                 ResponseModel model, std::vector<std::size_t> flagged)
    : grid_(std::move(grid)),
      values_(std::move(values)),
      model_(model),
      flagged_(std::move(flagged)) {
    if (values_.size() != grid_.size()) {
        throw std::invalid_argument("ComplexResponse: values/grid size mismatch");
    }
    for (std::size_t i : flagged_) {
        if (i >= values_.size()) {
            throw std::invalid_argument("ComplexResponse: flagged index out of range");
        }
    }
}

ComplexResponse mech_susceptibility(const MirrorParams& p, const FrequencyGrid& grid) {
    if (!p.uses_fixed_gamma()) {
        throw std::invalid_argument(
            "mech_susceptibility: alpha-mode mirror has no fixed gamma; "
            "use dressed_susceptibility with the vacuum motional response");
    }
    const double m = p.mass();
    const double w0 = p.omega0();
    const double g = p.gamma();

    std::vector<std::complex<double>> chi(grid.size());
    std::vector<std::size_t> flagged;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double w = grid[i];
        const std::complex<double> denom(m * (w0 * w0 - w * w), -(m * g * w));
        if (denom == std::complex<double>(0.0, 0.0)) {
            // undamped resonance exactly on the grid
            chi[i] = 0.0;
            flagged.push_back(i);
        } else {
            chi[i] = 1.0 / denom;
        }
    }
    return ComplexResponse(grid, std::move(chi), ResponseModel::MechanicalBound,
                           std::move(flagged));
}

ComplexResponse vacuum_motional_susceptibility(double alpha, const FrequencyGrid& grid,
                                               const PhysicalConstants& k) {
    if (!(std::isfinite(alpha) && alpha > 0.0)) {
        throw std::invalid_argument("vacuum_motional_susceptibility: alpha must be > 0");
    }
    k.validate();
    std::vector<std::complex<double>> chi(grid.size());
    const double c2 = k.c * k.c;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double w = grid[i];
        chi[i] = std::complex<double>(0.0, alpha * k.hbar * w * w * w / c2);
    }
    return ComplexResponse(grid, std::move(chi), ResponseModel::VacuumMotional);
}

ComplexResponse dressed_susceptibility(const MirrorParams& p, const ComplexResponse& chi_ff) {
    const FrequencyGrid& grid = chi_ff.grid();
    const double m = p.mass();
    const double w0 = p.omega0();

    std::vector<std::complex<double>> chi(grid.size());
    std::vector<std::size_t> flagged;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double w = grid[i];
        const std::complex<double> denom =
            std::complex<double>(m * (w0 * w0 - w * w), 0.0) - chi_ff.value(i);
        if (denom == std::complex<double>(0.0, 0.0)) {
            chi[i] = 0.0;
            flagged.push_back(i);
        } else {
            chi[i] = 1.0 / denom;
        }
    }
    return ComplexResponse(grid, std::move(chi), ResponseModel::Dressed, std::move(flagged));
}

Spectrum vacuum_spectrum_from_response(const ComplexResponse& chi, double hbar) {
    if (chi.has_flagged_points()) {
        throw std::invalid_argument(
            "vacuum_spectrum_from_response: response has divergent (flagged) points");
    }
    if (!(std::isfinite(hbar) && hbar > 0.0)) {
        throw std::invalid_argument("vacuum_spectrum_from_response: hbar must be > 0");
    }
    std::vector<double> values(chi.size());
    for (std::size_t i = 0; i < chi.size(); ++i) {
        const double im = chi.value(i).imag();
        if (im < 0.0) {
            throw std::domain_error(
                "vacuum_spectrum_from_response: Im chi < 0 at index " + std::to_string(i) +
                " violates dissipation positivity");
        }
        values[i] = 2.0 * hbar * im;
    }
    return Spectrum(chi.grid(), std::move(values), Sidedness::OneSidedVacuum);
}

VacuumPositionSpectra vacuum_position_spectrum(const MirrorParams& p, double alpha,
                                               const FrequencyGrid& grid,
                                               const PhysicalConstants& k) {
    const ComplexResponse chi_ff = vacuum_motional_susceptibility(alpha, grid, k);
    const ComplexResponse chi_qq = dressed_susceptibility(p, chi_ff);
    Spectrum exact = vacuum_spectrum_from_response(chi_qq, k.hbar);

    const double lambda_c = compton_wavelength(p.mass(), k);
    const double scale = lambda_c * lambda_c;
    std::vector<double> approx(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        approx[i] = 2.0 * alpha * scale / grid[i];
    }

    VacuumPositionSpectra out{
        exact.with_unit_scale(scale),
        Spectrum(grid, std::move(approx), Sidedness::OneSidedVacuum, scale),
        /*regime_warning=*/p.omega0() > 1e-3 * grid.front(),
    };
    return out;
}

}  // namespace qlim
