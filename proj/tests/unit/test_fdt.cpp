#include <cmath>
#include <complex>

#include "doctest.h"
#include "oracles/hilbert.hpp"
#include "qlim/fdt.hpp"
#include "qlim/response.hpp"

using namespace qlim;

TEST_CASE("constructive fdt identities have zero residual") {
    const FrequencyGrid grid = FrequencyGrid::log_spaced(0.1, 10.0, 60);
    const auto chi = mech_susceptibility(MirrorParams::with_gamma(1.0, 1.0, 0.2), grid);
    const Spectrum c = vacuum_spectrum_from_response(chi, 1.0);

    const FdtReport rep = check_fdt(c, chi, 1.0);
    CHECK(rep.max_residual_commutator == 0.0);
    CHECK(rep.max_residual_zero_temp == 0.0);
    CHECK(rep.passed);
}

TEST_CASE("one-percent injected fault is detected at tol 1e-3") {
    const FrequencyGrid grid = FrequencyGrid::log_spaced(0.1, 10.0, 60);
    const auto chi = mech_susceptibility(MirrorParams::with_gamma(1.0, 1.0, 0.2), grid);
    const Spectrum c = vacuum_spectrum_from_response(chi, 1.0);

    std::vector<double> v = c.values();
    v[30] *= 1.01;
    const Spectrum faulty(c.grid(), std::move(v), c.sidedness());

    FdtOptions opt;
    opt.tol = 1e-3;
    const FdtReport rep = check_fdt(faulty, chi, 1.0, opt);
    CHECK(!rep.passed);
    // residual ~ 0.01/1.01 under the max normalization
    CHECK(rep.max_residual_commutator > 0.005);
    CHECK(rep.max_residual_commutator < 0.02);
    CHECK(rep.max_residual_zero_temp > 0.005);
}

TEST_CASE("grid mismatch is an error") {
    const FrequencyGrid g1 = FrequencyGrid::log_spaced(0.1, 10.0, 16);
    const FrequencyGrid g2 = FrequencyGrid::log_spaced(0.1, 10.0, 17);
    const auto chi = mech_susceptibility(MirrorParams::with_gamma(1.0, 1.0, 0.2), g1);
    const Spectrum c = Spectrum::zeros(g2, Sidedness::OneSidedVacuum);
    CHECK_THROWS_AS(check_fdt(c, chi, 1.0), std::invalid_argument);
}

TEST_CASE("dispersion relation reconstructs Re chi of a damped mirror") {
    // log-dense grid spanning 4 decades around the resonance
    const double m = 1.0, w0 = 1.0, g = 0.1;
    const FrequencyGrid grid = FrequencyGrid::log_spaced(1e-2, 1e2, 3200);
    const auto chi = mech_susceptibility(MirrorParams::with_gamma(m, w0, g), grid);
    const Spectrum c = vacuum_spectrum_from_response(chi, 1.0);

    FdtOptions opt;
    opt.check_causality = true;
    const FdtReport rep = check_fdt(c, chi, 1.0, opt);
    CHECK(rep.causality_checked);
    CHECK(rep.kk_residual < 1e-3);
    CHECK(rep.passed);
}

TEST_CASE("independent hilbert oracle agrees with the closed form") {
    const double m = 1.0, w0 = 1.0, g = 0.1;
    auto chi_exact = [&](double w) {
        return 1.0 / (m * std::complex<double>(w0 * w0 - w * w, -g * w));
    };
    auto im_chi = [&](double w) { return chi_exact(w).imag(); };

    double chi_scale = 0.0;
    for (double w = 0.5; w < 2.0; w += 0.01) chi_scale = std::max(chi_scale, std::abs(chi_exact(w)));

    for (double w : {0.03, 0.3, 0.9, 1.0, 1.1, 3.0, 30.0}) {
        const double re_rec = qlim_oracles::hilbert_reconstruct_re(im_chi, w, 1e-5, 1e5);
        CHECK(std::abs(re_rec - chi_exact(w).real()) / chi_scale < 1e-3);
    }
}

TEST_CASE("lossless response fails the causality check honestly") {
    // undamped bound mirror: poles on the real axis, Im chi = 0, so the
    // dispersion transform cannot reproduce the nonzero Re chi
    const FrequencyGrid grid = FrequencyGrid::log_spaced(0.01, 0.5, 200);
    const auto chi = mech_susceptibility(MirrorParams::with_gamma(1.0, 1.0, 0.0), grid);
    const Spectrum c = vacuum_spectrum_from_response(chi, 1.0);

    FdtOptions opt;
    opt.check_causality = true;
    const FdtReport rep = check_fdt(c, chi, 1.0, opt);
    CHECK(rep.max_residual_commutator == 0.0);  // identities still hold
    CHECK(rep.kk_residual > 0.1);
    CHECK(!rep.passed);
}
