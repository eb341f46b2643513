#include "qlim/measurement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qlim {
namespace {

constexpr double kDetFloorSlack = 1e-12;

void require_unflagged(const ComplexResponse& chi, const char* who) {
    if (chi.has_flagged_points()) {
        throw std::invalid_argument(std::string(who) +
                                    ": response has divergent (flagged) points; add damping");
    }
}

}  // namespace

ProbeParams::ProbeParams(double K0) : K0_(K0) {
    if (!(std::isfinite(K0_) && K0_ > 0.0)) {
        throw std::invalid_argument("ProbeParams: K0 must be > 0");
    }
}

double phase_estimator(double displacement, double K0) {
    return 2.0 * K0 * displacement;
}

QuadratureCovariance::QuadratureCovariance(FrequencyGrid grid, std::vector<double> s_phiphi,
                                           std::vector<double> s_ii, std::vector<double> s_phii)
    : grid_(std::move(grid)),
      s_phiphi_(std::move(s_phiphi)),
      s_ii_(std::move(s_ii)),
      s_phii_(std::move(s_phii)) {
    const std::size_t n = grid_.size();
    if (s_phiphi_.size() != n || s_ii_.size() != n || s_phii_.size() != n) {
        throw std::invalid_argument("QuadratureCovariance: entry/grid size mismatch");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!(s_phiphi_[i] > 0.0) || !(s_ii_[i] > 0.0) || !std::isfinite(s_phii_[i])) {
            throw std::invalid_argument("QuadratureCovariance: S_pp, S_ii must be > 0 (index " +
                                        std::to_string(i) + ")");
        }
        // det - 1 computed from stored entries carries cancellation error of
        // order eps * |S_pp S_ii|, so the floor tolerance scales with the
        // products' magnitude.
        const double scale = 1.0 + std::abs(s_phiphi_[i] * s_ii_[i]) + s_phii_[i] * s_phii_[i];
        if (det(i) < 1.0 - kDetFloorSlack * scale) {
            throw std::invalid_argument(
                "QuadratureCovariance: determinant below the Heisenberg floor at index " +
                std::to_string(i));
        }
    }
}

QuadratureCovariance QuadratureCovariance::coherent(const FrequencyGrid& grid) {
    const std::size_t n = grid.size();
    return QuadratureCovariance(grid, std::vector<double>(n, 1.0), std::vector<double>(n, 1.0),
                                std::vector<double>(n, 0.0));
}

double added_noise_value(double a_coef, std::complex<double> b_coef, double s_phiphi,
                         double s_ii, double s_phii) {
    const double b2 = std::norm(b_coef);
    return a_coef * a_coef * s_phiphi + b2 * s_ii + 2.0 * a_coef * b_coef.real() * s_phii;
}

Spectrum added_noise_spectrum(const ComplexResponse& chi_qq, const ProbeParams& probe,
                              const QuadratureCovariance& cov, double hbar) {
    require_unflagged(chi_qq, "added_noise_spectrum");
    if (!chi_qq.grid().same_as(cov.grid())) {
        throw std::invalid_argument("added_noise_spectrum: response and covariance grids differ");
    }
    const double a_coef = 1.0 / (2.0 * probe.K0());
    std::vector<double> values(chi_qq.size());
    for (std::size_t i = 0; i < chi_qq.size(); ++i) {
        const std::complex<double> b_coef = 2.0 * hbar * probe.K0() * chi_qq.value(i);
        const double v = added_noise_value(a_coef, b_coef, cov.s_phiphi(i), cov.s_ii(i),
                                           cov.s_phii(i));
        values[i] = std::max(v, 0.0);  // clamp rounding at det-saturated optima
    }
    return Spectrum(chi_qq.grid(), std::move(values), Sidedness::Symmetrized);
}

namespace {

BoundSpectra bound_from(const ComplexResponse& chi_qq, double mass, double hbar,
                        bool imaginary_part_only) {
    if (!(mass > 0.0) || !(hbar > 0.0)) {
        throw std::invalid_argument("bound: mass and hbar must be > 0");
    }
    const auto& grid = chi_qq.grid();
    std::vector<double> values(chi_qq.size());
    std::vector<double> energy(chi_qq.size());
    for (std::size_t i = 0; i < chi_qq.size(); ++i) {
        const double mag = imaginary_part_only ? std::abs(chi_qq.value(i).imag())
                                               : std::abs(chi_qq.value(i));
        values[i] = 2.0 * hbar * mag;
        const double w = grid[i];
        energy[i] = 0.5 * mass * w * w * values[i];
    }
    return BoundSpectra{Spectrum(grid, std::move(values), Sidedness::Symmetrized),
                        std::move(energy)};
}

}  // namespace

BoundSpectra sql_bound(const ComplexResponse& chi_qq, double mass, double hbar) {
    require_unflagged(chi_qq, "sql_bound");
    return bound_from(chi_qq, mass, hbar, false);
}

BoundSpectra uql_bound(const ComplexResponse& chi_qq, double mass, double hbar) {
    require_unflagged(chi_qq, "uql_bound");
    return bound_from(chi_qq, mass, hbar, true);
}

double sql_variance(double mass, double tau, double hbar) {
    if (!(mass > 0.0) || !(tau > 0.0) || !(hbar > 0.0)) {
        throw std::invalid_argument("sql_variance: mass, tau, hbar must be > 0");
    }
    return hbar * tau / mass;
}

double measurement_time(double delta_omega, double omega) {
    if (!(delta_omega > 0.0) || !(omega > 0.0)) {
        throw std::invalid_argument("measurement_time: delta_omega and omega must be > 0");
    }
    return delta_omega / (omega * omega);
}

}  // namespace qlim
