#include "qlim/geodesic_mc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qlim/parallel.hpp"
#include "qlim/rng.hpp"
#include "qlim/synth.hpp"

namespace qlim {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

std::array<double, 3> normalized(const std::array<double, 3>& v) {
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (!(n > 0.0)) throw std::invalid_argument("direction must be non-zero");
    return {v[0] / n, v[1] / n, v[2] / n};
}

// l e^{i q l / 2} sinc(q l / 2): the path integral int_0^l e^{i q s} ds
std::complex<double> segment_factor(double q, double l) {
    const double half = 0.5 * q * l;
    const double sinc = std::abs(half) < 1e-8 ? 1.0 - half * half / 6.0 : std::sin(half) / half;
    return std::polar(l * sinc, half);
}

void validate(const McConfig& cfg) {
    if (cfg.realizations < cfg.min_realizations) {
        throw std::invalid_argument(
            "geodesic_deviation_mc: statistical power too low: " +
            std::to_string(cfg.realizations) + " realizations requested, at least " +
            std::to_string(cfg.min_realizations) + " required");
    }
    if (!(cfg.band_lo > 0.0) || !(cfg.band_hi > cfg.band_lo)) {
        throw std::invalid_argument("geodesic_deviation_mc: need 0 < band_lo < band_hi");
    }
    if (!(cfg.path_length > 0.0)) {
        throw std::invalid_argument("geodesic_deviation_mc: path_length must be > 0");
    }
    if (cfg.modes == 0) throw std::invalid_argument("geodesic_deviation_mc: modes must be > 0");
    if (!(cfg.oversample >= 2.5)) {
        throw std::invalid_argument("geodesic_deviation_mc: oversample must be >= 2.5");
    }
    if (cfg.segment_length < 64 || (cfg.segment_length & (cfg.segment_length - 1)) != 0) {
        throw std::invalid_argument(
            "geodesic_deviation_mc: segment_length must be a power of two >= 64");
    }
    if (cfg.segments == 0) throw std::invalid_argument("geodesic_deviation_mc: segments must be > 0");
    if (!(cfg.amplitude_scale >= 0.0)) {
        throw std::invalid_argument("geodesic_deviation_mc: amplitude_scale must be >= 0");
    }
    if (!(cfg.fit_lo_factor >= 1.0) || !(cfg.fit_hi_factor <= 1.0) ||
        !(cfg.fit_lo_factor * cfg.band_lo < cfg.fit_hi_factor * cfg.band_hi)) {
        throw std::invalid_argument("geodesic_deviation_mc: empty fit band");
    }
    if (cfg.log_bins < 3) throw std::invalid_argument("geodesic_deviation_mc: log_bins must be >= 3");
}

}  // namespace

std::array<std::array<double, 3>, 2> transverse_basis(const std::array<double, 3>& dir) {
    const std::array<double, 3> m = normalized(dir);
    // reference axis away from m
    const std::array<double, 3> ref =
        std::abs(m[2]) < 0.9 ? std::array<double, 3>{0.0, 0.0, 1.0}
                             : std::array<double, 3>{1.0, 0.0, 0.0};
    std::array<double, 3> e1{ref[1] * m[2] - ref[2] * m[1], ref[2] * m[0] - ref[0] * m[2],
                             ref[0] * m[1] - ref[1] * m[0]};
    e1 = normalized(e1);
    const std::array<double, 3> e2{m[1] * e1[2] - m[2] * e1[1], m[2] * e1[0] - m[0] * e1[2],
                                   m[0] * e1[1] - m[1] * e1[0]};
    return {e1, e2};
}

std::array<Mat4, 2> polarization_tensors(const std::array<double, 3>& dir) {
    const auto basis = transverse_basis(dir);
    const auto& e1 = basis[0];
    const auto& e2 = basis[1];
    Mat4 plus{}, cross{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            plus[i + 1][j + 1] = e1[i] * e1[j] - e2[i] * e2[j];
            cross[i + 1][j + 1] = e1[i] * e2[j] + e2[i] * e1[j];
        }
    }
    return {plus, cross};
}

double surrogate_mode_variance(double omega, double band_lo, double band_hi, std::size_t modes,
                               double l_p, double c) {
    // Matching the symmetrized curvature spectrum with N log-uniform modes,
    // isotropic directions and two polarizations per mode gives
    //   sigma^2(w) = 4 l_p^2 w^2 ln(band_hi/band_lo) / (pi c^2 N).
    const double log_span = std::log(band_hi / band_lo);
    return 4.0 * l_p * l_p * omega * omega * log_span /
           (kPi * c * c * static_cast<double>(modes));
}

GwRealization draw_realization(const McConfig& cfg, std::size_t index,
                               const PhysicalConstants& k) {
    Rng rng = Rng::stream(cfg.seed, index);
    const double l_lo = std::log(cfg.band_lo);
    const double l_hi = std::log(cfg.band_hi);

    GwRealization r;
    r.seed = cfg.seed;
    r.band_lo = cfg.band_lo;
    r.band_hi = cfg.band_hi;
    r.modes.resize(cfg.modes);
    for (GwMode& mode : r.modes) {
        mode.omega = std::exp(rng.uniform(l_lo, l_hi));
        const double mu = rng.uniform(-1.0, 1.0);
        const double phi = rng.uniform(0.0, kTwoPi);
        const double st = std::sqrt(std::max(0.0, 1.0 - mu * mu));
        mode.direction = {st * std::cos(phi), st * std::sin(phi), mu};

        const double sigma =
            std::sqrt(surrogate_mode_variance(mode.omega, cfg.band_lo, cfg.band_hi, cfg.modes,
                                              k.planck_length(), k.c)) *
            cfg.amplitude_scale;
        const double inv_sqrt2 = 0.70710678118654752440;
        mode.amp_plus = sigma * inv_sqrt2 * std::complex<double>(rng.gaussian(), rng.gaussian());
        mode.amp_cross = sigma * inv_sqrt2 * std::complex<double>(rng.gaussian(), rng.gaussian());
    }
    return r;
}

McResult geodesic_deviation_mc(const McConfig& cfg, const PhysicalConstants& k) {
    validate(cfg);
    k.validate();
    const double c = k.c;
    const double l_p = k.planck_length();
    const std::array<double, 3> n_hat = normalized(cfg.direction);
    const std::array<double, 4> u = {1.0, n_hat[0], n_hat[1], n_hat[2]};

    const double dt = kTwoPi / (cfg.oversample * cfg.band_hi);
    const std::size_t n_samples = cfg.segment_length * (cfg.segments + 1) / 2;

    // one periodogram row per realization; rows are later reduced in fixed
    // order so results do not depend on the thread count
    const std::size_t n_bins = cfg.segment_length / 2 - 1;
    std::vector<std::vector<double>> rows(cfg.realizations);

    parallel_for(cfg.realizations, cfg.threads, [&](std::size_t begin, std::size_t end) {
        std::vector<double> series(n_samples);
        for (std::size_t rz = begin; rz < end; ++rz) {
            const GwRealization real = draw_realization(cfg, rz, k);
            std::fill(series.begin(), series.end(), 0.0);
            for (const GwMode& mode : real.modes) {
                const double w = mode.omega;
                const WaveVector kv = WaveVector::null_vector(w / c, mode.direction);
                const auto pols = polarization_tensors(mode.direction);

                // R_{0 mu 0 rho} u^mu u^rho for each polarization
                std::complex<double> amp_sum = 0.0;
                const std::array<std::complex<double>, 2> amps{mode.amp_plus, mode.amp_cross};
                for (int pol = 0; pol < 2; ++pol) {
                    double contr = 0.0;
                    for (int m = 0; m < 4; ++m)
                        for (int r2 = 0; r2 < 4; ++r2)
                            contr += r_building_block_with(kv, pols[pol], 0, m, 0, r2) *
                                     u[static_cast<std::size_t>(m)] * u[static_cast<std::size_t>(r2)];
                    amp_sum += amps[static_cast<std::size_t>(pol)] * contr;
                }

                // path integral along the ray; k.u = k_mu u^mu
                const double mdotn = mode.direction[0] * n_hat[0] +
                                     mode.direction[1] * n_hat[1] + mode.direction[2] * n_hat[2];
                std::complex<double> path;
                if (!cfg.round_trip) {
                    path = segment_factor(w / c * (1.0 - mdotn), cfg.path_length);
                } else {
                    // return leg (reception side) plus outgoing leg with its
                    // accumulated phase offset
                    const double q_ret = w / c * (1.0 + mdotn);
                    const double q_out = w / c * (1.0 - mdotn);
                    const std::complex<double> leg_ret = segment_factor(q_ret, cfg.path_length);
                    const std::complex<double> leg_out =
                        std::polar(1.0, (w / c) * 2.0 * cfg.path_length * mdotn + q_out * cfg.path_length) *
                        segment_factor(q_out, cfg.path_length);
                    path = leg_ret + leg_out;
                }

                // delta q(t) = (c^2/w^2) Re[ amp * contr * path * e^{-i w t} ]
                std::complex<double> z = (c * c / (w * w)) * amp_sum * path;
                const std::complex<double> rot = std::polar(1.0, -w * dt);
                for (std::size_t j = 0; j < n_samples; ++j) {
                    series[j] += z.real();
                    z *= rot;
                }
            }
            const PeriodogramResult pg =
                periodogram(TimeSeries{series, dt, cfg.seed}, cfg.segments);
            rows[rz] = pg.spectrum.values();
        }
    });

    // fixed-order reduction
    std::vector<double> avg(n_bins, 0.0);
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < n_bins; ++i) avg[i] += row[i];
    }
    for (double& v : avg) v /= static_cast<double>(cfg.realizations);

    // one-sided: twice the symmetrized estimate
    const double bin = kTwoPi / (static_cast<double>(cfg.segment_length) * dt);
    std::vector<double> omegas_out, values_out;
    std::vector<std::size_t> out_index;
    for (std::size_t i = 0; i < n_bins; ++i) {
        const double w = bin * static_cast<double>(i + 1);
        if (w >= cfg.band_lo && w <= cfg.band_hi) {
            omegas_out.push_back(w);
            values_out.push_back(2.0 * avg[i]);
            out_index.push_back(i);
        }
    }
    if (omegas_out.size() < 4) {
        throw std::invalid_argument(
            "geodesic_deviation_mc: fewer than 4 periodogram bins inside the band; "
            "increase segment_length or widen the band");
    }

    McFit fit;
    fit.realizations = cfg.realizations;
    const double fit_lo = cfg.fit_lo_factor * cfg.band_lo;
    const double fit_hi = cfg.fit_hi_factor * cfg.band_hi;

    double vmax = 0.0;
    for (double v : values_out) vmax = std::max(vmax, v);
    if (vmax == 0.0) {
        fit.degenerate = true;
    } else {
        // beta from band power: int C dw = beta l_p^2 ln(fit_hi/fit_lo)
        const double lp2 = l_p * l_p;
        const double denom = lp2 * std::log(fit_hi / fit_lo);
        std::vector<double> betas;
        betas.reserve(cfg.realizations);
        for (const auto& row : rows) {
            double power = 0.0;
            for (std::size_t i = 0; i < n_bins; ++i) {
                const double w = bin * static_cast<double>(i + 1);
                if (w >= fit_lo && w <= fit_hi) power += 2.0 * row[i] * bin;
            }
            betas.push_back(power / denom);
        }
        double mean = 0.0;
        for (double b : betas) mean += b;
        mean /= static_cast<double>(betas.size());
        double var = 0.0;
        for (double b : betas) var += (b - mean) * (b - mean);
        var /= static_cast<double>(betas.size() - 1);
        const double half_ci = 1.96 * std::sqrt(var / static_cast<double>(betas.size()));
        fit.beta_hat = mean;
        fit.beta_ci_low = mean - half_ci;
        fit.beta_ci_high = mean + half_ci;
        fit.ci_width_fraction = mean > 0.0 ? 2.0 * half_ci / mean : 0.0;

        // slope from the log-rebinned ensemble average
        std::vector<double> lx, ly;
        const double le0 = std::log(fit_lo);
        const double le1 = std::log(fit_hi);
        for (std::size_t b = 0; b < cfg.log_bins; ++b) {
            const double e_lo = std::exp(le0 + (le1 - le0) * static_cast<double>(b) /
                                                   static_cast<double>(cfg.log_bins));
            const double e_hi = std::exp(le0 + (le1 - le0) * static_cast<double>(b + 1) /
                                                   static_cast<double>(cfg.log_bins));
            double sum = 0.0, sum_lw = 0.0;
            std::size_t count = 0;
            for (std::size_t i = 0; i < n_bins; ++i) {
                const double w = bin * static_cast<double>(i + 1);
                if (w >= e_lo && w < e_hi) {
                    sum += 2.0 * avg[i];
                    sum_lw += std::log(w);
                    ++count;
                }
            }
            if (count > 0 && sum > 0.0) {
                lx.push_back(sum_lw / static_cast<double>(count));
                ly.push_back(std::log(sum / static_cast<double>(count)));
            }
        }
        if (lx.size() < 3) {
            fit.degenerate = true;
        } else {
            double mx = 0.0, my = 0.0;
            for (std::size_t i = 0; i < lx.size(); ++i) {
                mx += lx[i];
                my += ly[i];
            }
            mx /= static_cast<double>(lx.size());
            my /= static_cast<double>(lx.size());
            double sxy = 0.0, sxx = 0.0;
            for (std::size_t i = 0; i < lx.size(); ++i) {
                sxy += (lx[i] - mx) * (ly[i] - my);
                sxx += (lx[i] - mx) * (lx[i] - mx);
            }
            fit.slope_hat = sxy / sxx;
        }
    }

    McResult out{
        Spectrum(FrequencyGrid(std::move(omegas_out)), std::move(values_out),
                 Sidedness::OneSidedVacuum, l_p * l_p),
        fit,
    };
    return out;
}

}  // namespace qlim
