#ifndef QLIM_OPTIMIZER_HPP
#define QLIM_OPTIMIZER_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "qlim/measurement.hpp"
#include "qlim/response.hpp"

namespace qlim {

/// Single-frequency minimizer of A^2 S_pp + |B|^2 S_ii + 2 A Re(B) S_pi over
/// covariances with det >= 1 and eigenvalue ratio <= e^{2 r_max}.
///
/// Scaling fixes det = 1 at the optimum, so covariances are parametrized as
/// R(theta) diag(e^s, e^-s) R(theta)^T with s in [0, r_max]. Along the
/// optimal theta the objective is
///   f(s) = P cosh s - Q sinh s,   P = A^2 + |B|^2,
///   Q = sqrt((A^2 - |B|^2)^2 + 4 A^2 Re(B)^2),
/// minimized at tanh s* = Q/P with f(s*) = sqrt(P^2 - Q^2) = 2 A |Im B|.
/// The capped optimum is f(min(r_max, s*)); r_max = 0 reproduces the
/// coherent value P and r_max -> infinity the dissipative floor 2 A |Im B|.
///
/// P - Q is evaluated as 4 A^2 Im(B)^2 / (P + Q) to avoid cancellation.
struct QuadratureOptimum {
    double s_phiphi = 1.0;
    double s_ii = 1.0;
    double s_phii = 0.0;
    double achieved = 0.0;
    double squeeze_used = 0.0;      // s actually applied
    double squeeze_interior = 0.0;  // s* (infinity when Im B = 0)
    bool degenerate = false;        // Im B == 0: infimum 0 not attained
};

QuadratureOptimum optimize_quadratures(double a_coef, std::complex<double> b_coef, double r_max);

/// Per-frequency optimal covariance plus the achieved noise spectrum.
struct Strategy {
    QuadratureCovariance covariance;
    Spectrum achieved;
    double r_max = 0.0;
    std::vector<std::size_t> degenerate;  // frequencies where Im B = 0
};

/// Applies optimize_quadratures at each frequency with A = 1/(2 K0),
/// B = 2 hbar K0 chi_qq[w]. Frequencies are independent; `threads` > 1
/// splits the grid with deterministic output.
Strategy optimize_strategy(const ComplexResponse& chi_qq, const ProbeParams& probe, double r_max,
                           double hbar, unsigned threads = 1);

}  // namespace qlim

#endif
