#ifndef QLIM_GRAVITY_HPP
#define QLIM_GRAVITY_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "qlim/constants.hpp"
#include "qlim/frequency_grid.hpp"
#include "qlim/mirror.hpp"
#include "qlim/spectrum.hpp"

namespace qlim {

using Mat4 = std::array<std::array<double, 4>, 4>;

/// Minkowski metric diag(+,-,-,-), fixed project-wide.
inline constexpr std::array<double, 4> kMetricDiag = {1.0, -1.0, -1.0, -1.0};

/// Four-dimensional wave vector, stored contravariant (k^0, k^1, k^2, k^3)
/// in rad/m. The delta(k^2) support of vacuum curvature fluctuations lives
/// on the null cone; is_null() classifies against |k.k| < tol |k|^2_E.
class WaveVector {
  public:
    WaveVector(double k0, double k1, double k2, double k3);

    /// On-shell builder: k = (w/c) (1, dir), dir normalized internally.
    static WaveVector null_vector(double omega_over_c, const std::array<double, 3>& dir);

    double contravariant(std::size_t i) const { return k_[i]; }
    double covariant(std::size_t i) const { return kMetricDiag[i] * k_[i]; }

    double minkowski_square() const;  // k.k
    double euclidean_square() const;  // sum k_i^2, normalization for the null test
    bool is_null(double tol = 1e-12) const;

  private:
    std::array<double, 4> k_;
};

/// Building block of curvature correlations, generalized to an arbitrary
/// symmetric tensor e in the metric slot:
///   R[k,e]_{l m r n} = 1/2 (k_l k_r e_{m n} + k_m k_n e_{l r}
///                          - k_m k_r e_{l n} - k_l k_n e_{m r})
/// (all indices covariant). With e = eta this is the paper-level block; with
/// e a TT polarization tensor it is the Riemann amplitude of a single
/// gravitational plane wave. Indices out of [0,3] throw std::out_of_range.
double r_building_block_with(const WaveVector& k, const Mat4& e, int l, int mu, int rho, int nu);
double r_building_block(const WaveVector& k, int l, int mu, int rho, int nu);

/// Rank-8 correlation tensor of Riemann curvature fluctuations at a null
/// wave vector, with the delta(k^2) weight factored out (on-shell density):
///   C = 16 pi^2 l_p^2 ( R_{lm l'm'} R_{rn r'n'} + R_{lm r'n'} R_{rn l'm'}
///                       - R_{lm rn} R_{l'm'r'n'} )
/// Zero off-shell or for k0 <= 0 (theta(k0) support), with flags.
class CurvatureSpectrum {
  public:
    CurvatureSpectrum(WaveVector k, std::vector<double> components, double l_p, bool null_ok,
                      bool positive_frequency);

    static std::size_t flat_index(int l, int mu, int rho, int nu, int lp, int mup, int rhop,
                                  int nup);
    double component(int l, int mu, int rho, int nu, int lp, int mup, int rhop, int nup) const;
    const std::vector<double>& flat() const noexcept { return components_; }

    const WaveVector& wave_vector() const noexcept { return k_; }
    double planck_length() const noexcept { return l_p_; }
    bool on_shell() const noexcept { return null_ok_ && positive_frequency_; }
    bool null_within_tol() const noexcept { return null_ok_; }
    bool positive_frequency() const noexcept { return positive_frequency_; }

  private:
    WaveVector k_;
    std::vector<double> components_;  // 4^8 entries
    double l_p_;
    bool null_ok_;
    bool positive_frequency_;
};

CurvatureSpectrum curvature_spectrum(const WaveVector& k, double l_p, double null_tol = 1e-12);

/// Correlations of the Einstein tensor obtained by contracting the rank-8
/// tensor; they vanish on-shell. Returned as the 4x4x4x4 array indexed
/// (mu, nu, mu', nu') flattened row-major.
std::vector<double> einstein_correlation(const CurvatureSpectrum& c);

/// Residuals of the index symmetries the tensor must satisfy, relative to
/// its largest component: antisymmetry within each index pair, pair
/// exchange inside each Riemann factor, primed/unprimed block exchange.
struct CurvatureSymmetryReport {
    double antisymmetry = 0.0;
    double pair_exchange = 0.0;
    double block_exchange = 0.0;
    bool passed(double tol) const {
        return antisymmetry < tol && pair_exchange < tol && block_exchange < tol;
    }
};

CurvatureSymmetryReport check_curvature_symmetries(const CurvatureSpectrum& c);

/// Boost with the given rapidity along a spatial axis (contravariant action).
Mat4 lorentz_boost(double rapidity, const std::array<double, 3>& axis);
WaveVector apply_lorentz(const Mat4& lambda, const WaveVector& k);
/// Transforms all eight covariant slots; lambda is the contravariant matrix
/// (its inverse-transpose, eta lambda eta, acts on covariant indices).
std::vector<double> transform_rank8_covariant(const Mat4& lambda, const std::vector<double>& c);

/// Universal gravitational distance noise C_qq[w] = beta l_p^2 theta(w)/w.
/// Independent of the endpoint mass; unit_scale set to l_p^2.
Spectrum gravitational_distance_spectrum(double beta, double l_p, const FrequencyGrid& grid);

enum class MassRegime { Microscopic, Macroscopic };

/// Regime split of ultimate position fluctuations: radiation pressure
/// dominates for m << m_p (lambda_c > l_p), metric fluctuations for
/// m >> m_p. prefactor_ratio = (lambda_c/l_p)^2 = (m_p/m)^2.
struct RegimeReport {
    MassRegime regime = MassRegime::Macroscopic;
    bool boundary = false;
    double mass = 0.0;
    double planck_mass = 0.0;
    double lambda_c = 0.0;
    double planck_length = 0.0;
    double microscopic_prefactor = 0.0;  // lambda_c^2
    double macroscopic_prefactor = 0.0;  // l_p^2
    double prefactor_ratio = 0.0;
};

RegimeReport classify_regime(double mass, const PhysicalConstants& k);

/// Pointwise sum of the two 1/w regime spectra,
///   C_total[w] = (alpha lambda_c^2 + beta l_p^2) theta(w)/w,
/// with each addend recorded. Both addends follow the common regime form,
/// so at m = m_p with alpha = beta they are equal identically; the exact
/// dressed-mirror spectrum (which carries an extra factor 2/(1+(gamma/w)^2)
/// relative to this form) is available from vacuum_position_spectrum.
struct CombinedSpectrum {
    Spectrum total;
    Spectrum radiation_pressure;
    Spectrum gravitational;
    RegimeReport regime;
};

CombinedSpectrum combined_spectrum(const MirrorParams& p, double alpha, double beta,
                                   const FrequencyGrid& grid, const PhysicalConstants& k);

}  // namespace qlim

#endif
