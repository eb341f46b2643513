#include "qlim/fdt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace qlim {
namespace {

double negative_side(const Spectrum& c, std::size_t i) {
    switch (c.sidedness()) {
        case Sidedness::OneSidedVacuum:
            return 0.0;
        case Sidedness::TwoSided:
        case Sidedness::Symmetrized:
            return c.value(i);
    }
    return 0.0;
}

// Piecewise power-law interpolant of Im chi over the sampled grid, with
// end-slope extrapolation. Falls back to linear interpolation when samples
// are not strictly positive.
class ImagInterpolant {
  public:
    ImagInterpolant(const std::vector<double>& omegas, const std::vector<double>& im)
        : w_(omegas), im_(im) {
        log_ok_ = true;
        for (double v : im_) {
            if (!(v > 0.0)) {
                log_ok_ = false;
                break;
            }
        }
        if (log_ok_) {
            lw_.resize(w_.size());
            li_.resize(w_.size());
            for (std::size_t i = 0; i < w_.size(); ++i) {
                lw_[i] = std::log(w_[i]);
                li_[i] = std::log(im_[i]);
            }
        }
    }

    double operator()(double x) const {
        return log_ok_ ? eval_loglog(x) : eval_linear(x);
    }

  private:
    double eval_loglog(double x) const {
        const double lx = std::log(x);
        if (lx <= lw_.front()) {
            const double s = (li_[1] - li_[0]) / (lw_[1] - lw_[0]);
            return std::exp(li_[0] + s * (lx - lw_[0]));
        }
        if (lx >= lw_.back()) {
            const std::size_t n = lw_.size();
            const double s = (li_[n - 1] - li_[n - 2]) / (lw_[n - 1] - lw_[n - 2]);
            return std::exp(li_[n - 1] + s * (lx - lw_[n - 1]));
        }
        const auto it = std::upper_bound(lw_.begin(), lw_.end(), lx);
        const std::size_t hi = static_cast<std::size_t>(it - lw_.begin());
        const std::size_t lo = hi - 1;
        const double t = (lx - lw_[lo]) / (lw_[hi] - lw_[lo]);
        return std::exp(li_[lo] + t * (li_[hi] - li_[lo]));
    }

    double eval_linear(double x) const {
        if (x <= w_.front()) return im_.front() * (x / w_.front());
        if (x >= w_.back()) return 0.0;
        const auto it = std::upper_bound(w_.begin(), w_.end(), x);
        const std::size_t hi = static_cast<std::size_t>(it - w_.begin());
        const std::size_t lo = hi - 1;
        const double t = (x - w_[lo]) / (w_[hi] - w_[lo]);
        return im_[lo] + t * (im_[hi] - im_[lo]);
    }

    const std::vector<double>& w_;
    std::vector<double> im_;
    std::vector<double> lw_, li_;
    bool log_ok_ = false;
};

// Re chi(w) = (2/pi) PV int_0^inf x Im chi(x) / (x^2 - w^2) dx, truncated to
// [a, b]. The singularity is subtracted and its principal value restored
// analytically:
//   PV int_a^b dx/(x^2-w^2) = (1/2w) ln( (b-w)(w+a) / ((b+w)(w-a)) ).
double kk_reconstruct_re(double w, double im_w, const std::vector<double>& x,
                         const std::vector<double>& ix, double a, double b) {
    double integral = 0.0;
    double prev_g = 0.0, prev_lx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        double g;
        if (std::abs(xi - w) < 1e-9 * w) {
            // removable point: use the analytic limit via a small offset
            const double eps = 1e-6 * w;
            const double num = (xi + eps) * ix[i] - w * im_w;
            g = num / ((xi + eps - w) * (xi + eps + w));
        } else {
            g = (xi * ix[i] - w * im_w) / ((xi - w) * (xi + w));
        }
        const double lx = std::log(xi);
        if (i > 0) {
            // trapezoid in log x:  int g dx = int g(x) x dln x
            integral += 0.5 * (g * xi + prev_g * x[i - 1]) * (lx - prev_lx);
        }
        prev_g = g;
        prev_lx = lx;
    }
    const double pv = im_w * 0.5 * std::log(((b - w) * (w + a)) / ((b + w) * (w - a)));
    return (2.0 / 3.14159265358979323846) * (integral + pv);
}

}  // namespace

FdtReport check_fdt(const Spectrum& c, const ComplexResponse& chi, double hbar,
                    const FdtOptions& options) {
    if (!c.grid().same_as(chi.grid())) {
        throw std::invalid_argument("check_fdt: spectrum and response grids differ");
    }
    if (!(std::isfinite(hbar) && hbar > 0.0)) {
        throw std::invalid_argument("check_fdt: hbar must be > 0");
    }

    FdtReport report;
    report.tol = options.tol;
    report.kk_tol = options.kk_tol;

    for (std::size_t i = 0; i < c.size(); ++i) {
        const double commutator = 2.0 * hbar * chi.value(i).imag();
        const double cpos = c.value(i);
        const double cneg = negative_side(c, i);
        const double scale = std::max({std::abs(cpos), std::abs(commutator), 1e-300});

        const double r_comm = std::abs(commutator - (cpos - cneg)) / scale;
        const double r_zero = std::abs(cpos - commutator) / scale;  // theta(w) = 1 on the grid
        report.max_residual_commutator = std::max(report.max_residual_commutator, r_comm);
        report.max_residual_zero_temp = std::max(report.max_residual_zero_temp, r_zero);
    }

    if (options.check_causality) {
        report.causality_checked = true;
        const auto& omegas = chi.grid().omegas();
        std::vector<double> im(chi.size());
        double chi_scale = 0.0;
        for (std::size_t i = 0; i < chi.size(); ++i) {
            im[i] = chi.value(i).imag();
            chi_scale = std::max(chi_scale, std::abs(chi.value(i)));
        }
        const ImagInterpolant interp(omegas, im);

        const double a = options.kk_cutoff_lo * omegas.front();
        const double b = options.kk_cutoff_hi * omegas.back();
        const std::size_t n_aux = std::max<std::size_t>(options.kk_aux_points, 64);
        std::vector<double> x(n_aux), ix(n_aux);
        const double la = std::log(a);
        const double step = (std::log(b) - la) / static_cast<double>(n_aux - 1);
        for (std::size_t i = 0; i < n_aux; ++i) {
            x[i] = std::exp(la + step * static_cast<double>(i));
            ix[i] = interp(x[i]);
        }

        double worst = 0.0;
        for (std::size_t i = 0; i < chi.size(); ++i) {
            const double w = omegas[i];
            const double re_rec = kk_reconstruct_re(w, im[i], x, ix, a, b);
            worst = std::max(worst, std::abs(re_rec - chi.value(i).real()));
        }
        report.kk_residual = chi_scale > 0.0 ? worst / chi_scale : 0.0;
    }

    report.passed = report.max_residual_commutator < options.tol &&
                    report.max_residual_zero_temp < options.tol &&
                    (!options.check_causality || report.kk_residual < options.kk_tol);
    return report;
}

}  // namespace qlim
