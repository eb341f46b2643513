#ifndef QLIM_FDT_HPP
#define QLIM_FDT_HPP

#include <cstddef>

#include "qlim/response.hpp"
#include "qlim/spectrum.hpp"

namespace qlim {

struct FdtOptions {
    double tol = 1e-9;        // commutator & zero-temperature residual tolerance
    bool check_causality = false;
    double kk_tol = 1e-3;
    // principal-value quadrature: log-spaced auxiliary grid with endpoint
    // cutoffs at kk_cutoff_lo * omega_min and kk_cutoff_hi * omega_max
    std::size_t kk_aux_points = 16384;
    double kk_cutoff_lo = 1e-3;
    double kk_cutoff_hi = 1e3;
};

/// Verdict record for the fluctuation-dissipation identities. Residuals are
/// dimensionless: pointwise |lhs - rhs| / max(|C|, 2 hbar |Im chi|) for the
/// two spectrum relations, and |Re chi_reconstructed - Re chi| / max|chi|
/// for the causality (dispersion-relation) check.
struct FdtReport {
    double max_residual_commutator = 0.0;
    double max_residual_zero_temp = 0.0;
    double kk_residual = 0.0;
    bool causality_checked = false;
    bool passed = false;
    double tol = 0.0;
    double kk_tol = 0.0;
};

/// Checks 2 hbar Im chi[w] = C[w] - C[-w] (commutator relation) and
/// C[w] = 2 hbar theta(w) Im chi[w] (zero-temperature relation), where
/// C[-w] follows from the spectrum's sidedness. Optionally reconstructs
/// Re chi from Im chi through a principal-value dispersion transform and
/// reports the causality residual.
FdtReport check_fdt(const Spectrum& c, const ComplexResponse& chi, double hbar,
                    const FdtOptions& options = {});

}  // namespace qlim

#endif
