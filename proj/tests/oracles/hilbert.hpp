#ifndef QLIM_TESTS_ORACLES_HILBERT_HPP
#define QLIM_TESTS_ORACLES_HILBERT_HPP

#include <cmath>
#include <functional>

namespace qlim_oracles {

// Independent Hilbert-transform oracle: reconstructs Re chi(w) from a
// closed-form Im chi by Simpson quadrature of the subtracted principal-value
// integrand on a uniform grid in u = ln x, plus the analytic PV remainder.
// Discretization differs from the production check on purpose.
inline double hilbert_reconstruct_re(const std::function<double(double)>& im_chi, double w,
                                     double a, double b, std::size_t n = 32768) {
    if (n % 2 == 1) ++n;
    const double la = std::log(a);
    const double lb = std::log(b);
    const double h = (lb - la) / static_cast<double>(n);
    const double im_w = im_chi(w);

    auto integrand = [&](double u) {
        const double x = std::exp(u);
        if (std::abs(x - w) < 1e-10 * w) {
            const double eps = 1e-5 * w;
            return ((x + eps) * im_chi(x + eps) - w * im_w) /
                   (((x + eps) - w) * ((x + eps) + w)) * x;
        }
        return (x * im_chi(x) - w * im_w) / ((x - w) * (x + w)) * x;
    };

    double sum = integrand(la) + integrand(lb);
    for (std::size_t i = 1; i < n; ++i) {
        sum += integrand(la + h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    const double integral = sum * h / 3.0;
    const double pv = im_w * 0.5 * std::log(((b - w) * (w + a)) / ((b + w) * (w - a)));
    return (2.0 / 3.14159265358979323846) * (integral + pv);
}

}  // namespace qlim_oracles

#endif
