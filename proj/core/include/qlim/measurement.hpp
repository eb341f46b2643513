#ifndef QLIM_MEASUREMENT_HPP
#define QLIM_MEASUREMENT_HPP

#include <complex>
#include <vector>

#include "qlim/response.hpp"
#include "qlim/spectrum.hpp"

namespace qlim {

/// Monochromatic plane-wave probe, wave-number K0 (rad/m).
class ProbeParams {
  public:
    explicit ProbeParams(double K0);
    double K0() const noexcept { return K0_; }

  private:
    double K0_;
};

/// phi(t) = 2 K0 q(t): phase-shift estimator of the mirror position.
double phase_estimator(double displacement, double K0);

/// Per-frequency real symmetric covariance of the probe's phase/intensity
/// quadratures, normalized so the coherent state is (1, 1, 0) and the
/// Heisenberg floor reads det = S_pp S_ii - S_pi^2 >= 1 at every frequency.
class QuadratureCovariance {
  public:
    QuadratureCovariance(FrequencyGrid grid, std::vector<double> s_phiphi,
                         std::vector<double> s_ii, std::vector<double> s_phii);

    static QuadratureCovariance coherent(const FrequencyGrid& grid);

    const FrequencyGrid& grid() const noexcept { return grid_; }
    std::size_t size() const noexcept { return s_phiphi_.size(); }
    double s_phiphi(std::size_t i) const { return s_phiphi_[i]; }
    double s_ii(std::size_t i) const { return s_ii_[i]; }
    double s_phii(std::size_t i) const { return s_phii_[i]; }
    double det(std::size_t i) const { return s_phiphi_[i] * s_ii_[i] - s_phii_[i] * s_phii_[i]; }

  private:
    FrequencyGrid grid_;
    std::vector<double> s_phiphi_, s_ii_, s_phii_;
};

/// Noise quadratic form A^2 S_pp + |B|^2 S_ii + 2 A Re(B) S_pi for a single
/// frequency; shared by added_noise_spectrum, the optimizer and its oracle.
double added_noise_value(double a_coef, std::complex<double> b_coef, double s_phiphi,
                         double s_ii, double s_phii);

/// Probe-added position noise
///   q_n = d(phi)/(2 K0) + chi_qq 2 hbar K0 d(I),
/// i.e. C[w] = A^2 S_pp + |B|^2 S_ii + 2 A Re(B) S_pi with A = 1/(2 K0)
/// and B = 2 hbar K0 chi_qq[w]. Always >= 0 under the determinant floor.
Spectrum added_noise_spectrum(const ComplexResponse& chi_qq, const ProbeParams& probe,
                              const QuadratureCovariance& cov, double hbar);

/// A bound spectrum plus its spectral energy density (1/2) m w^2 C.
struct BoundSpectra {
    Spectrum bound;
    std::vector<double> energy_density;  // J s
};

/// Standard quantum limit C_SQL[w] = 2 hbar |chi_qq[w]|; for a free mirror
/// the energy density is exactly hbar.
BoundSpectra sql_bound(const ComplexResponse& chi_qq, double mass, double hbar);

/// Ultimate quantum limit C_UQL[w] = 2 hbar |Im chi_qq[w]|, set by the
/// dissipative part of the response alone.
BoundSpectra uql_bound(const ComplexResponse& chi_qq, double mass, double hbar);

/// Delta q^2_SQL = hbar tau / m.
double sql_variance(double mass, double tau, double hbar);

/// tau = delta_omega / omega^2, the measurement-time parameter of a
/// detection bandwidth delta_omega around omega.
double measurement_time(double delta_omega, double omega);

}  // namespace qlim

#endif
