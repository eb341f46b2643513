#include "qlim/optimizer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qlim/parallel.hpp"

namespace qlim {
namespace {

// exp(2 * 170) stays far from double overflow in the det products
constexpr double kSqueezeGuard = 170.0;

}  // namespace

QuadratureOptimum optimize_quadratures(double a_coef, std::complex<double> b_coef, double r_max) {
    if (!(a_coef > 0.0) || !std::isfinite(a_coef)) {
        throw std::invalid_argument("optimize_quadratures: A must be > 0");
    }
    if (std::isnan(r_max) || r_max < 0.0) {
        throw std::invalid_argument("optimize_quadratures: r_max must be >= 0");
    }

    const double a = a_coef * a_coef;
    const double b = std::norm(b_coef);
    const double re_b = b_coef.real();
    const double im_b = b_coef.imag();

    const double p = a + b;
    const double q = std::hypot(a - b, 2.0 * a_coef * re_b);
    const double p_minus_q = 4.0 * a * im_b * im_b / (p + q);  // exact P - Q, no cancellation

    QuadratureOptimum opt;
    opt.degenerate = (im_b == 0.0);
    opt.squeeze_interior = opt.degenerate
                               ? std::numeric_limits<double>::infinity()
                               : std::log((p + q) / (2.0 * a_coef * std::abs(im_b)));
    const double s = std::min({r_max, opt.squeeze_interior, kSqueezeGuard});
    opt.squeeze_used = s;
    opt.achieved = 0.5 * (p_minus_q * std::exp(s) + (p + q) * std::exp(-s));

    if (s == 0.0 || q == 0.0) {
        // coherent state is optimal (or theta is unconstrained at Q = 0)
        opt.s_phiphi = 1.0;
        opt.s_ii = 1.0;
        opt.s_phii = 0.0;
        return opt;
    }
    const double cos2t = -(a - b) / q;
    const double sin2t = -(2.0 * a_coef * re_b) / q;
    const double ch = std::cosh(s);
    const double sh = std::sinh(s);
    opt.s_phiphi = ch + sh * cos2t;
    opt.s_ii = ch - sh * cos2t;
    opt.s_phii = sh * sin2t;
    return opt;
}

Strategy optimize_strategy(const ComplexResponse& chi_qq, const ProbeParams& probe, double r_max,
                           double hbar, unsigned threads) {
    if (chi_qq.has_flagged_points()) {
        throw std::invalid_argument(
            "optimize_strategy: response has divergent (flagged) points; add damping");
    }
    if (!(hbar > 0.0)) {
        throw std::invalid_argument("optimize_strategy: hbar must be > 0");
    }
    const std::size_t n = chi_qq.size();
    const double a_coef = 1.0 / (2.0 * probe.K0());

    std::vector<double> s_pp(n), s_ii(n), s_pi(n), achieved(n);
    std::vector<unsigned char> degen(n, 0);

    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const std::complex<double> b_coef = 2.0 * hbar * probe.K0() * chi_qq.value(i);
            const QuadratureOptimum o = optimize_quadratures(a_coef, b_coef, r_max);
            s_pp[i] = o.s_phiphi;
            s_ii[i] = o.s_ii;
            s_pi[i] = o.s_phii;
            achieved[i] = std::max(o.achieved, 0.0);
            degen[i] = o.degenerate ? 1 : 0;
        }
    });

    std::vector<std::size_t> degenerate;
    for (std::size_t i = 0; i < n; ++i) {
        if (degen[i]) degenerate.push_back(i);
    }

    Strategy out{
        QuadratureCovariance(chi_qq.grid(), std::move(s_pp), std::move(s_ii), std::move(s_pi)),
        Spectrum(chi_qq.grid(), std::move(achieved), Sidedness::Symmetrized),
        r_max,
        std::move(degenerate),
    };
    return out;
}

}  // namespace qlim
