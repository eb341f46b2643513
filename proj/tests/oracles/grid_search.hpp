#ifndef QLIM_TESTS_ORACLES_GRID_SEARCH_HPP
#define QLIM_TESTS_ORACLES_GRID_SEARCH_HPP

#include <cmath>
#include <complex>
#include <vector>

namespace qlim_oracles {

// Brute-force minimizer of A^2 S_pp + |B|^2 S_ii + 2 A Re(B) S_pi over the
// covariance constraint surface, independent of the closed-form solver.
//
// Any covariance with det > 1 can be shrunk (objective is linear in the
// overall scale, det quadratic), so the minimum lies on det = 1; that
// surface is R(theta) diag(e^s, e^-s) R(theta)^T and both parameters are
// scanned exhaustively at fixed resolution.
inline double grid_search_min_noise(double a_coef, std::complex<double> b_coef, double s_max,
                                    double ds = 1e-3, double dtheta = 1e-3) {
    const double a = a_coef * a_coef;
    const double b = std::norm(b_coef);
    const double c = a_coef * b_coef.real();
    const double p = a + b;

    std::vector<double> bracket;
    const double pi = 3.14159265358979323846;
    for (double th = 0.0; th < pi; th += dtheta) {
        bracket.push_back((a - b) * std::cos(2.0 * th) + 2.0 * c * std::sin(2.0 * th));
    }

    double best = p;  // s = 0 (coherent)
    for (double s = 0.0; s <= s_max; s += ds) {
        const double ch = std::cosh(s);
        const double sh = std::sinh(s);
        const double pch = p * ch;
        for (double br : bracket) {
            const double f = pch + sh * br;
            if (f < best) best = f;
        }
    }
    return best;
}

}  // namespace qlim_oracles

#endif
