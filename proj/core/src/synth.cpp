#include "qlim/synth.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "qlim/fft.hpp"
#include "qlim/rng.hpp"

namespace qlim {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Interpolates the target density onto synthesis bins: piecewise power law
// when all samples are positive, piecewise linear otherwise; end-slope
// power-law extension outside the sampled band.
class DensityInterpolant {
  public:
    explicit DensityInterpolant(const Spectrum& s)
        : w_(s.grid().omegas()), v_(s.values()) {
        log_ok_ = w_.size() >= 2;
        for (double x : v_) {
            if (!(x > 0.0)) {
                log_ok_ = false;
                break;
            }
        }
        if (log_ok_) {
            lw_.resize(w_.size());
            lv_.resize(w_.size());
            for (std::size_t i = 0; i < w_.size(); ++i) {
                lw_[i] = std::log(w_[i]);
                lv_[i] = std::log(v_[i]);
            }
        }
    }

    double operator()(double w) const {
        if (w_.size() == 1) return v_[0];
        if (!log_ok_) return linear(w);
        const double lx = std::log(w);
        std::size_t lo, hi;
        double t;
        if (lx <= lw_.front()) {
            lo = 0;
            hi = 1;
        } else if (lx >= lw_.back()) {
            lo = lw_.size() - 2;
            hi = lw_.size() - 1;
        } else {
            hi = static_cast<std::size_t>(std::upper_bound(lw_.begin(), lw_.end(), lx) -
                                          lw_.begin());
            lo = hi - 1;
        }
        t = (lx - lw_[lo]) / (lw_[hi] - lw_[lo]);
        return std::exp(lv_[lo] + t * (lv_[hi] - lv_[lo]));
    }

  private:
    double linear(double w) const {
        if (w <= w_.front()) return v_.front();
        if (w >= w_.back()) return v_.back();
        const std::size_t hi = static_cast<std::size_t>(
            std::upper_bound(w_.begin(), w_.end(), w) - w_.begin());
        const std::size_t lo = hi - 1;
        const double t = (w - w_[lo]) / (w_[hi] - w_[lo]);
        return v_[lo] + t * (v_[hi] - v_[lo]);
    }

    const std::vector<double>& w_;
    std::vector<double> v_;
    std::vector<double> lw_, lv_;
    bool log_ok_ = false;
};

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

std::size_t prev_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p * 2 <= n) p <<= 1;
    return p;
}

}  // namespace

TimeSeries synthesize(const Spectrum& s, double duration, double dt, std::uint64_t seed) {
    if (s.sidedness() != Sidedness::Symmetrized) {
        throw std::invalid_argument("synthesize: pass symmetrize(spectrum)");
    }
    if (!(dt > 0.0) || !(duration > 0.0)) {
        throw std::invalid_argument("synthesize: duration and dt must be > 0");
    }
    const std::size_t n = static_cast<std::size_t>(std::llround(duration / dt));
    if (n < 2) throw std::invalid_argument("synthesize: need at least 2 samples");

    // coverage: every analysis bin in [2 pi/duration, pi/dt] must lie inside
    // the sampled band
    const double w_lo_req = kTwoPi / duration;
    const double w_hi_req = kTwoPi / (2.0 * dt);
    if (s.grid().front() > w_lo_req || s.grid().back() < w_hi_req) {
        throw std::invalid_argument(
            "synthesize: spectrum band [" + std::to_string(s.grid().front()) + ", " +
            std::to_string(s.grid().back()) + "] rad/s does not cover required bins [" +
            std::to_string(w_lo_req) + ", " + std::to_string(w_hi_req) + "] rad/s");
    }

    bool all_zero = true;
    for (double v : s.values()) {
        if (v != 0.0) {
            all_zero = false;
            break;
        }
    }
    if (all_zero) {
        return TimeSeries{std::vector<double>(n, 0.0), dt, seed};
    }

    // generate on a power-of-two length >= n and truncate: truncation of a
    // stationary series keeps its spectrum
    const std::size_t big_n = next_pow2(n);
    const DensityInterpolant density(s);
    Rng rng(seed);

    std::vector<std::complex<double>> coeff(big_n / 2 + 1, 0.0);
    const double bin = kTwoPi / (static_cast<double>(big_n) * dt);
    // E|X_k|^2 = C(w_k) n dt so that |X_k|^2/(n dt) estimates C
    for (std::size_t k2 = 1; k2 < big_n / 2; ++k2) {
        const double w = bin * static_cast<double>(k2);
        const double amp = std::sqrt(density(w) * static_cast<double>(big_n) * dt * 0.5);
        coeff[k2] = std::complex<double>(amp * rng.gaussian(), amp * rng.gaussian());
    }
    {
        const double w = bin * static_cast<double>(big_n / 2);
        coeff[big_n / 2] =
            std::sqrt(density(w) * static_cast<double>(big_n) * dt) * rng.gaussian();
    }

    std::vector<double> series;
    fft::real_inverse(coeff, big_n, series);
    const double norm = 1.0 / (static_cast<double>(big_n) * dt);
    series.resize(n);
    for (double& x : series) x *= norm;
    return TimeSeries{std::move(series), dt, seed};
}

PeriodogramResult periodogram(const TimeSeries& ts, std::size_t n_segments) {
    if (!(ts.dt > 0.0)) throw std::invalid_argument("periodogram: dt must be > 0");
    if (n_segments == 0) throw std::invalid_argument("periodogram: n_segments must be > 0");
    const std::size_t n = ts.samples.size();
    if (n < 2 * n_segments || n < 8) {
        throw std::invalid_argument("periodogram: series too short for " +
                                    std::to_string(n_segments) + " segments");
    }

    // 50% overlap: (k+1) half-segments cover k segments
    const std::size_t max_len = 2 * n / (n_segments + 1);
    const std::size_t seg = prev_pow2(max_len);
    if (seg < 8) throw std::invalid_argument("periodogram: series too short");
    const std::size_t hop = seg / 2;
    const std::size_t count = (n - seg) / hop + 1;

    double mean = 0.0;
    for (double x : ts.samples) mean += x;
    mean /= static_cast<double>(n);

    std::vector<double> window(seg);
    double wsum2 = 0.0;
    for (std::size_t j = 0; j < seg; ++j) {
        window[j] = 0.5 * (1.0 - std::cos(kTwoPi * static_cast<double>(j) /
                                          static_cast<double>(seg)));
        wsum2 += window[j] * window[j];
    }
    const double norm = ts.dt / wsum2;

    std::vector<double> acc(seg / 2 + 1, 0.0);
    std::vector<double> buf(seg);
    std::vector<std::complex<double>> bins;
    for (std::size_t sidx = 0; sidx < count; ++sidx) {
        const std::size_t off = sidx * hop;
        for (std::size_t j = 0; j < seg; ++j) {
            buf[j] = (ts.samples[off + j] - mean) * window[j];
        }
        fft::real_forward(buf, bins);
        for (std::size_t k2 = 0; k2 <= seg / 2; ++k2) {
            acc[k2] += std::norm(bins[k2]) * norm;
        }
    }

    // bins 1 .. seg/2-1 (DC excluded by construction, Nyquist dropped)
    std::vector<double> omegas(seg / 2 - 1), values(seg / 2 - 1);
    const double bin = kTwoPi / (static_cast<double>(seg) * ts.dt);
    for (std::size_t k2 = 1; k2 < seg / 2; ++k2) {
        omegas[k2 - 1] = bin * static_cast<double>(k2);
        values[k2 - 1] = acc[k2] / static_cast<double>(count);
    }

    PeriodogramResult out{
        Spectrum(FrequencyGrid(std::move(omegas)), std::move(values), Sidedness::Symmetrized),
        mean * mean,
        true,
        seg,
        count,
    };
    return out;
}

}  // namespace qlim
