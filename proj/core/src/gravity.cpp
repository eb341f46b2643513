#include "qlim/gravity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qlim {
namespace {

constexpr double kPi = 3.14159265358979323846;

void check_index(int i) {
    if (i < 0 || i > 3) throw std::out_of_range("tensor index out of range [0,3]");
}

// eta lambda^T eta: the inverse of a Lorentz matrix, which transposed acts
// on covariant components.
Mat4 lorentz_inverse(const Mat4& l) {
    Mat4 inv{};
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            inv[a][b] = kMetricDiag[a] * l[b][a] * kMetricDiag[b];
        }
    }
    return inv;
}

}  // namespace

WaveVector::WaveVector(double k0, double k1, double k2, double k3) : k_{k0, k1, k2, k3} {
    for (double v : k_) {
        if (!std::isfinite(v)) throw std::invalid_argument("WaveVector: components must be finite");
    }
}

WaveVector WaveVector::null_vector(double omega_over_c, const std::array<double, 3>& dir) {
    if (!(omega_over_c > 0.0)) {
        throw std::invalid_argument("WaveVector::null_vector: omega/c must be > 0");
    }
    const double norm = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
    if (!(norm > 0.0)) {
        throw std::invalid_argument("WaveVector::null_vector: direction must be non-zero");
    }
    return WaveVector(omega_over_c, omega_over_c * dir[0] / norm, omega_over_c * dir[1] / norm,
                      omega_over_c * dir[2] / norm);
}

double WaveVector::minkowski_square() const {
    return k_[0] * k_[0] - k_[1] * k_[1] - k_[2] * k_[2] - k_[3] * k_[3];
}

double WaveVector::euclidean_square() const {
    return k_[0] * k_[0] + k_[1] * k_[1] + k_[2] * k_[2] + k_[3] * k_[3];
}

bool WaveVector::is_null(double tol) const {
    const double e2 = euclidean_square();
    if (e2 == 0.0) return false;
    return std::abs(minkowski_square()) < tol * e2;
}

double r_building_block_with(const WaveVector& k, const Mat4& e, int l, int mu, int rho, int nu) {
    check_index(l);
    check_index(mu);
    check_index(rho);
    check_index(nu);
    const double kl = k.covariant(static_cast<std::size_t>(l));
    const double km = k.covariant(static_cast<std::size_t>(mu));
    const double kr = k.covariant(static_cast<std::size_t>(rho));
    const double kn = k.covariant(static_cast<std::size_t>(nu));
    return 0.5 * (kl * kr * e[mu][nu] + km * kn * e[l][rho] - km * kr * e[l][nu] -
                  kl * kn * e[mu][rho]);
}

double r_building_block(const WaveVector& k, int l, int mu, int rho, int nu) {
    Mat4 eta{};
    for (int i = 0; i < 4; ++i) eta[i][i] = kMetricDiag[i];
    return r_building_block_with(k, eta, l, mu, rho, nu);
}

CurvatureSpectrum::CurvatureSpectrum(WaveVector k, std::vector<double> components, double l_p,
                                     bool null_ok, bool positive_frequency)
    : k_(k),
      components_(std::move(components)),
      l_p_(l_p),
      null_ok_(null_ok),
      positive_frequency_(positive_frequency) {
    if (components_.size() != 65536) {
        throw std::invalid_argument("CurvatureSpectrum: expected 4^8 components");
    }
}

std::size_t CurvatureSpectrum::flat_index(int l, int mu, int rho, int nu, int lp, int mup,
                                          int rhop, int nup) {
    return ((((((static_cast<std::size_t>(l) * 4 + mu) * 4 + rho) * 4 + nu) * 4 + lp) * 4 + mup) *
                4 +
            rhop) *
               4 +
           nup;
}

double CurvatureSpectrum::component(int l, int mu, int rho, int nu, int lp, int mup, int rhop,
                                    int nup) const {
    check_index(l);
    check_index(mu);
    check_index(rho);
    check_index(nu);
    check_index(lp);
    check_index(mup);
    check_index(rhop);
    check_index(nup);
    return components_[flat_index(l, mu, rho, nu, lp, mup, rhop, nup)];
}

CurvatureSpectrum curvature_spectrum(const WaveVector& k, double l_p, double null_tol) {
    if (!(l_p > 0.0) || !std::isfinite(l_p)) {
        throw std::invalid_argument("curvature_spectrum: l_p must be > 0");
    }
    const bool null_ok = k.is_null(null_tol);
    const bool positive = k.contravariant(0) > 0.0;

    std::vector<double> c(65536, 0.0);
    if (null_ok && positive) {
        // R4[(l*4+mu)*4+rho)*4+nu] = R_{l mu rho nu} with the metric slot
        std::array<double, 256> r4{};
        Mat4 eta{};
        for (int i = 0; i < 4; ++i) eta[i][i] = kMetricDiag[i];
        for (int l = 0; l < 4; ++l)
            for (int m = 0; m < 4; ++m)
                for (int r = 0; r < 4; ++r)
                    for (int n = 0; n < 4; ++n)
                        r4[static_cast<std::size_t>(((l * 4 + m) * 4 + r) * 4 + n)] =
                            r_building_block_with(k, eta, l, m, r, n);

        auto r = [&r4](int a, int b, int c2, int d) {
            return r4[static_cast<std::size_t>(((a * 4 + b) * 4 + c2) * 4 + d)];
        };
        const double scale = 16.0 * kPi * kPi * l_p * l_p;
        std::size_t idx = 0;
        for (int l = 0; l < 4; ++l)
            for (int m = 0; m < 4; ++m)
                for (int rho = 0; rho < 4; ++rho)
                    for (int n = 0; n < 4; ++n)
                        for (int lp2 = 0; lp2 < 4; ++lp2)
                            for (int mp = 0; mp < 4; ++mp)
                                for (int rp = 0; rp < 4; ++rp)
                                    for (int np = 0; np < 4; ++np, ++idx)
                                        c[idx] = scale * (r(l, m, lp2, mp) * r(rho, n, rp, np) +
                                                          r(l, m, rp, np) * r(rho, n, lp2, mp) -
                                                          r(l, m, rho, n) * r(lp2, mp, rp, np));
    }
    return CurvatureSpectrum(k, std::move(c), l_p, null_ok, positive);
}

std::vector<double> einstein_correlation(const CurvatureSpectrum& cs) {
    const auto& c = cs.flat();
    // Ricci correlation: contract slot 0 with 2 and slot 4 with 6 using the
    // inverse metric (diagonal, same entries).
    std::vector<double> ric(256, 0.0);
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            for (int mp = 0; mp < 4; ++mp)
                for (int np = 0; np < 4; ++np) {
                    double sum = 0.0;
                    for (int l = 0; l < 4; ++l)
                        for (int lp = 0; lp < 4; ++lp)
                            sum += kMetricDiag[l] * kMetricDiag[lp] *
                                   c[CurvatureSpectrum::flat_index(l, m, l, n, lp, mp, lp, np)];
                    ric[static_cast<std::size_t>(((m * 4 + n) * 4 + mp) * 4 + np)] = sum;
                }

    auto ric_at = [&ric](int m, int n, int mp, int np) {
        return ric[static_cast<std::size_t>(((m * 4 + n) * 4 + mp) * 4 + np)];
    };

    // scalar-curvature traces
    std::array<double, 16> tr_right{};  // eta^{m'n'} ric -> indexed (m, n)
    std::array<double, 16> tr_left{};   // eta^{mn} ric -> indexed (m', n')
    double scalar = 0.0;
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
            double sr = 0.0, sl = 0.0;
            for (int a = 0; a < 4; ++a) {
                sr += kMetricDiag[a] * ric_at(m, n, a, a);
                sl += kMetricDiag[a] * ric_at(a, a, m, n);
            }
            tr_right[static_cast<std::size_t>(m * 4 + n)] = sr;
            tr_left[static_cast<std::size_t>(m * 4 + n)] = sl;
        }
    for (int a = 0; a < 4; ++a) scalar += kMetricDiag[a] * tr_right[static_cast<std::size_t>(a * 4 + a)];

    // <G G> = <Ric Ric> - 1/2 eta <Ric R> - 1/2 eta <R Ric> + 1/4 eta eta <R R>
    std::vector<double> g(256, 0.0);
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            for (int mp = 0; mp < 4; ++mp)
                for (int np = 0; np < 4; ++np) {
                    const double eta_mn = (m == n) ? kMetricDiag[m] : 0.0;
                    const double eta_mpnp = (mp == np) ? kMetricDiag[mp] : 0.0;
                    g[static_cast<std::size_t>(((m * 4 + n) * 4 + mp) * 4 + np)] =
                        ric_at(m, n, mp, np) -
                        0.5 * eta_mpnp * tr_right[static_cast<std::size_t>(m * 4 + n)] -
                        0.5 * eta_mn * tr_left[static_cast<std::size_t>(mp * 4 + np)] +
                        0.25 * eta_mn * eta_mpnp * scalar;
                }
    return g;
}

CurvatureSymmetryReport check_curvature_symmetries(const CurvatureSpectrum& cs) {
    const auto& c = cs.flat();
    double cmax = 0.0;
    for (double v : c) cmax = std::max(cmax, std::abs(v));
    CurvatureSymmetryReport rep;
    if (cmax == 0.0) return rep;

    auto at = [&c](int i0, int i1, int i2, int i3, int i4, int i5, int i6, int i7) {
        return c[CurvatureSpectrum::flat_index(i0, i1, i2, i3, i4, i5, i6, i7)];
    };

    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int d = 0; d < 4; ++d)
                for (int e = 0; e < 4; ++e)
                    for (int f = 0; f < 4; ++f)
                        for (int g = 0; g < 4; ++g)
                            for (int h = 0; h < 4; ++h)
                                for (int i = 0; i < 4; ++i) {
                                    const double v = at(a, b, d, e, f, g, h, i);
                                    // antisymmetry within each of the four pairs
                                    rep.antisymmetry = std::max(
                                        {rep.antisymmetry,
                                         std::abs(v + at(b, a, d, e, f, g, h, i)),
                                         std::abs(v + at(a, b, e, d, f, g, h, i)),
                                         std::abs(v + at(a, b, d, e, g, f, h, i)),
                                         std::abs(v + at(a, b, d, e, f, g, i, h))});
                                    // pair exchange inside each Riemann factor
                                    rep.pair_exchange = std::max(
                                        {rep.pair_exchange,
                                         std::abs(v - at(d, e, a, b, f, g, h, i)),
                                         std::abs(v - at(a, b, d, e, h, i, f, g))});
                                    // primed <-> unprimed blocks
                                    rep.block_exchange =
                                        std::max(rep.block_exchange,
                                                 std::abs(v - at(f, g, h, i, a, b, d, e)));
                                }
    rep.antisymmetry /= cmax;
    rep.pair_exchange /= cmax;
    rep.block_exchange /= cmax;
    return rep;
}

Mat4 lorentz_boost(double rapidity, const std::array<double, 3>& axis) {
    const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (!(norm > 0.0)) throw std::invalid_argument("lorentz_boost: axis must be non-zero");
    const std::array<double, 3> n{axis[0] / norm, axis[1] / norm, axis[2] / norm};
    const double ch = std::cosh(rapidity);
    const double sh = std::sinh(rapidity);

    Mat4 l{};
    l[0][0] = ch;
    for (int i = 0; i < 3; ++i) {
        l[0][i + 1] = -sh * n[i];
        l[i + 1][0] = -sh * n[i];
        for (int j = 0; j < 3; ++j) {
            l[i + 1][j + 1] = (i == j ? 1.0 : 0.0) + (ch - 1.0) * n[i] * n[j];
        }
    }
    return l;
}

WaveVector apply_lorentz(const Mat4& lambda, const WaveVector& k) {
    std::array<double, 4> out{};
    for (int a = 0; a < 4; ++a) {
        double sum = 0.0;
        for (int b = 0; b < 4; ++b) sum += lambda[a][b] * k.contravariant(static_cast<std::size_t>(b));
        out[static_cast<std::size_t>(a)] = sum;
    }
    return WaveVector(out[0], out[1], out[2], out[3]);
}

std::vector<double> transform_rank8_covariant(const Mat4& lambda, const std::vector<double>& c) {
    if (c.size() != 65536) {
        throw std::invalid_argument("transform_rank8_covariant: expected 4^8 components");
    }
    // covariant components transform with m[a][b] = (lambda^{-1})[b][a]
    const Mat4 inv = lorentz_inverse(lambda);
    Mat4 m{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) m[a][b] = inv[b][a];

    // one index slot at a time; stride pattern keeps this cache-friendly
    std::vector<double> cur = c;
    std::vector<double> next(65536, 0.0);
    for (int slot = 0; slot < 8; ++slot) {
        const std::size_t stride = static_cast<std::size_t>(1) << (2 * (7 - slot));
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t base = 0; base < 65536; ++base) {
            const std::size_t digit = (base / stride) % 4;
            const std::size_t rest = base - digit * stride;
            double sum = 0.0;
            for (std::size_t b = 0; b < 4; ++b) {
                sum += m[digit][b] * cur[rest + b * stride];
            }
            next[base] = sum;
        }
        std::swap(cur, next);
    }
    return cur;
}

Spectrum gravitational_distance_spectrum(double beta, double l_p, const FrequencyGrid& grid) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw std::invalid_argument("gravitational_distance_spectrum: beta must be > 0");
    }
    if (!(l_p > 0.0) || !std::isfinite(l_p)) {
        throw std::invalid_argument("gravitational_distance_spectrum: l_p must be > 0");
    }
    const double lp2 = l_p * l_p;
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        values[i] = beta * lp2 / grid[i];
    }
    return Spectrum(grid, std::move(values), Sidedness::OneSidedVacuum, lp2);
}

RegimeReport classify_regime(double mass, const PhysicalConstants& k) {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw std::invalid_argument("classify_regime: mass must be > 0");
    }
    k.validate();
    RegimeReport rep;
    rep.mass = mass;
    rep.planck_mass = k.planck_mass();
    rep.lambda_c = compton_wavelength(mass, k);
    rep.planck_length = k.planck_length();
    rep.microscopic_prefactor = rep.lambda_c * rep.lambda_c;
    rep.macroscopic_prefactor = rep.planck_length * rep.planck_length;
    const double r = rep.planck_mass / mass;
    rep.prefactor_ratio = r * r;
    // boundary convention: m = m_p classifies Macroscopic with a flag
    rep.boundary = std::abs(mass / rep.planck_mass - 1.0) < 1e-9;
    rep.regime = (mass >= rep.planck_mass || rep.boundary) ? MassRegime::Macroscopic
                                                           : MassRegime::Microscopic;
    return rep;
}

CombinedSpectrum combined_spectrum(const MirrorParams& p, double alpha, double beta,
                                   const FrequencyGrid& grid, const PhysicalConstants& k) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("combined_spectrum: alpha must be > 0");
    }
    RegimeReport regime = classify_regime(p.mass(), k);

    const double lc2 = regime.microscopic_prefactor;
    const double lp2 = regime.macroscopic_prefactor;
    std::vector<double> rp(grid.size()), total(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        rp[i] = alpha * lc2 / grid[i];
    }
    Spectrum grav = gravitational_distance_spectrum(beta, regime.planck_length, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        total[i] = rp[i] + grav.value(i);
    }

    CombinedSpectrum out{
        Spectrum(grid, std::move(total), Sidedness::OneSidedVacuum, lp2),
        Spectrum(grid, std::move(rp), Sidedness::OneSidedVacuum, lc2),
        std::move(grav),
        regime,
    };
    return out;
}

}  // namespace qlim
