#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "qlim/response.hpp"
#include "qlim/rng.hpp"

using namespace qlim;
using cplx = std::complex<double>;

TEST_CASE("mechanical susceptibility") {
    SUBCASE("free lossless mirror is -1/(m w^2)") {
        const auto chi = mech_susceptibility(MirrorParams::with_gamma(1.0, 0.0, 0.0),
                                             FrequencyGrid({1.0}));
        CHECK(chi.value(0).real() == doctest::Approx(-1.0));
        CHECK(chi.value(0).imag() == 0.0);
        CHECK(!chi.has_flagged_points());
    }

    SUBCASE("undamped resonance on the grid is flagged, not infinite") {
        const auto chi = mech_susceptibility(MirrorParams::with_gamma(1.0, 2.0, 0.0),
                                             FrequencyGrid({1.0, 2.0, 3.0}));
        REQUIRE(chi.flagged().size() == 1);
        CHECK(chi.flagged()[0] == 1);
        CHECK(chi.value(1) == cplx(0.0, 0.0));
        CHECK(std::isfinite(chi.value(0).real()));
    }

    SUBCASE("damped free mirror at unit values") {
        // 1/(-1 - i) = (-1 + i)/2, cross-checked by direct complex division
        const auto chi = mech_susceptibility(MirrorParams::with_gamma(1.0, 0.0, 1.0),
                                             FrequencyGrid({1.0}));
        CHECK(chi.value(0).real() == doctest::Approx(-0.5).epsilon(1e-14));
        CHECK(chi.value(0).imag() == doctest::Approx(0.5).epsilon(1e-14));
        const cplx direct = 1.0 / cplx(-1.0, -1.0);
        CHECK(std::abs(chi.value(0) - direct) < 1e-15);
    }

    SUBCASE("alpha-mode mirror is a configuration error") {
        CHECK_THROWS_AS(mech_susceptibility(MirrorParams::with_alpha(1.0, 0.0, 1.0),
                                            FrequencyGrid({1.0})),
                        std::invalid_argument);
    }

    SUBCASE("dissipation positivity on random damped mirrors") {
        Rng rng(11);
        for (int t = 0; t < 50; ++t) {
            const auto p = MirrorParams::with_gamma(rng.uniform(0.1, 10.0),
                                                    rng.uniform(0.0, 5.0),
                                                    rng.uniform(0.0, 2.0));
            const auto chi = mech_susceptibility(p, FrequencyGrid::log_spaced(0.01, 100.0, 50));
            for (std::size_t i = 0; i < chi.size(); ++i) {
                CHECK(chi.value(i).imag() >= 0.0);
            }
        }
    }

    SUBCASE("reality condition: models are odd in Im under w -> -w") {
        // chi(-w) = conj(chi(w)) holds for the closed forms; evaluated directly
        const double m = 2.0, w0 = 1.5, g = 0.3;
        for (double w : {0.5, 1.5, 4.0}) {
            const cplx plus = 1.0 / (m * cplx(w0 * w0 - w * w, -g * w));
            const cplx minus = 1.0 / (m * cplx(w0 * w0 - w * w, g * w));
            CHECK(std::abs(minus - std::conj(plus)) < 1e-15);
        }
    }

    SUBCASE("poles lie in the lower half-plane for gamma > 0") {
        // denominator roots w = (-i g +- sqrt(4 w0^2 - g^2)) / 2
        Rng rng(13);
        for (int t = 0; t < 100; ++t) {
            const double w0 = rng.uniform(0.01, 10.0);
            const double g = rng.uniform(1e-6, 10.0);
            const cplx disc = std::sqrt(cplx(4.0 * w0 * w0 - g * g, 0.0));
            const cplx pole1 = 0.5 * (disc - cplx(0.0, g));
            const cplx pole2 = 0.5 * (-disc - cplx(0.0, g));
            CHECK(pole1.imag() < 0.0);
            CHECK(pole2.imag() < 0.0);
        }
    }
}

TEST_CASE("vacuum motional susceptibility") {
    const PhysicalConstants natural = PhysicalConstants::natural();

    SUBCASE("unit constants give i at w = 1") {
        const auto chi = vacuum_motional_susceptibility(1.0, FrequencyGrid({1.0}), natural);
        CHECK(chi.value(0).real() == 0.0);
        CHECK(chi.value(0).imag() == doctest::Approx(1.0));
        CHECK(chi.model() == ResponseModel::VacuumMotional);
    }

    SUBCASE("cubic law: doubling w multiplies |chi_FF| by 8") {
        const auto chi = vacuum_motional_susceptibility(1.0, FrequencyGrid({1.0, 2.0}), natural);
        CHECK(std::abs(chi.value(1)) == doctest::Approx(8.0 * std::abs(chi.value(0))));
    }

    SUBCASE("gamma/omega is tiny for macroscopic mirrors") {
        const PhysicalConstants k = PhysicalConstants::codata();
        const double m = 1.0, w = 1e3, alpha = 1.0;
        // gamma(w) = alpha hbar w^2 / (m c^2), from Im chi_FF / (m w)
        const auto chi = vacuum_motional_susceptibility(alpha, FrequencyGrid({w}), k);
        const double gamma = chi.value(0).imag() / (m * w);
        CHECK(gamma / w < 1e-40);
        CHECK(gamma / w == doctest::Approx(alpha * k.hbar * w / (m * k.c * k.c)).epsilon(1e-12));
    }

    SUBCASE("alpha must be positive") {
        CHECK_THROWS_AS(vacuum_motional_susceptibility(0.0, FrequencyGrid({1.0}), natural),
                        std::invalid_argument);
    }
}

TEST_CASE("dressed susceptibility") {
    const FrequencyGrid grid = FrequencyGrid::log_spaced(0.1, 10.0, 100);

    SUBCASE("zero motional force gives the bare lossless response") {
        std::vector<cplx> zeros(grid.size(), 0.0);
        const ComplexResponse chi_ff(grid, zeros, ResponseModel::Custom);
        const auto chi = dressed_susceptibility(MirrorParams::with_gamma(2.0, 3.0, 0.0), chi_ff);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double w = grid[i];
            const double expect = 1.0 / (2.0 * (9.0 - w * w));
            CHECK(chi.value(i).real() == doctest::Approx(expect).epsilon(1e-14));
            CHECK(chi.value(i).imag() == 0.0);
        }
    }

    SUBCASE("chi_FF = i m gamma w reproduces the mechanical model") {
        const double m = 1.7, w0 = 0.9, g = 0.25;
        std::vector<cplx> vals(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            vals[i] = cplx(0.0, m * g * grid[i]);
        }
        const ComplexResponse chi_ff(grid, vals, ResponseModel::Custom);
        const auto dressed = dressed_susceptibility(MirrorParams::with_gamma(m, w0, g), chi_ff);
        const auto mech = mech_susceptibility(MirrorParams::with_gamma(m, w0, g), grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            CHECK(std::abs(dressed.value(i) - mech.value(i)) <= 1e-15 * std::abs(mech.value(i)));
        }
    }
}

TEST_CASE("vacuum spectrum from response") {
    const FrequencyGrid grid = FrequencyGrid::log_spaced(1.0, 100.0, 20);
    const PhysicalConstants natural = PhysicalConstants::natural();

    SUBCASE("lossless response gives a zero spectrum") {
        std::vector<cplx> vals(grid.size(), cplx(0.3, 0.0));
        const Spectrum s = vacuum_spectrum_from_response(
            ComplexResponse(grid, vals, ResponseModel::Custom), 1.0);
        for (double v : s.values()) CHECK(v == 0.0);
        CHECK(s.sidedness() == Sidedness::OneSidedVacuum);
    }

    SUBCASE("vacuum motional model gives 2 alpha hbar^2 w^3 / c^2") {
        const double alpha = 1.3;
        const auto chi = vacuum_motional_susceptibility(alpha, grid, natural);
        const Spectrum s = vacuum_spectrum_from_response(chi, natural.hbar);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double w = grid[i];
            CHECK(s.value(i) == doctest::Approx(2.0 * alpha * w * w * w).epsilon(1e-14));
        }
    }

    SUBCASE("negative Im chi violates dissipation positivity") {
        std::vector<cplx> vals(grid.size(), cplx(0.0, -1e-3));
        CHECK_THROWS_AS(vacuum_spectrum_from_response(
                            ComplexResponse(grid, vals, ResponseModel::Custom), 1.0),
                        std::domain_error);
    }
}

TEST_CASE("vacuum position spectrum") {
    const PhysicalConstants natural = PhysicalConstants::natural();

    SUBCASE("small-gamma closed form is 2 alpha lambda_c^2 / w") {
        const FrequencyGrid grid = FrequencyGrid::log_spaced(1.0, 100.0, 30);
        const double m = 1e6, alpha = 1.0;  // gamma/w ~ 1e-6 at w=1
        const auto out = vacuum_position_spectrum(MirrorParams::with_alpha(m, 0.0, alpha), alpha,
                                                  grid, natural);
        const double lc = compton_wavelength(m, natural);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            CHECK(out.small_gamma.value(i) ==
                  doctest::Approx(2.0 * alpha * lc * lc / grid[i]).epsilon(1e-14));
        }
        CHECK(!out.regime_warning);

        // exact vs approximate gap < 1e-10 whenever gamma/w < 1e-6;
        // the series expansion gives gap = eps^2/(1+eps^2), eps = gamma/w
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double eps = alpha * natural.hbar * grid[i] / (m * natural.c * natural.c);
            REQUIRE(eps <= 1e-4);  // regime of the claim at the top of the grid
            const double gap =
                std::abs(out.exact.value(i) / out.small_gamma.value(i) - 1.0);
            if (eps < 1e-6) CHECK(gap < 1e-10);
            CHECK(gap == doctest::Approx(eps * eps).epsilon(1e-3));
        }
    }

    SUBCASE("doubling the mass quarters the spectrum") {
        const FrequencyGrid grid({1.0, 2.0});
        const auto s1 = vacuum_position_spectrum(MirrorParams::with_alpha(1e5, 0.0, 1.0), 1.0,
                                                 grid, natural);
        const auto s2 = vacuum_position_spectrum(MirrorParams::with_alpha(2e5, 0.0, 1.0), 1.0,
                                                 grid, natural);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            CHECK(s2.small_gamma.value(i) ==
                  doctest::Approx(0.25 * s1.small_gamma.value(i)).epsilon(1e-12));
            CHECK(s2.exact.value(i) == doctest::Approx(0.25 * s1.exact.value(i)).epsilon(1e-9));
        }
    }

    SUBCASE("non-negligible omega0 raises the regime warning") {
        const FrequencyGrid grid({1.0, 10.0});
        const auto out = vacuum_position_spectrum(MirrorParams::with_alpha(1e6, 0.5, 1.0), 1.0,
                                                  grid, natural);
        CHECK(out.regime_warning);
    }

    SUBCASE("exact form equals 2 hbar Im chi of the dressed mirror") {
        const FrequencyGrid grid = FrequencyGrid::log_spaced(0.5, 50.0, 25);
        const double m = 123.0, alpha = 0.7;
        const auto out = vacuum_position_spectrum(MirrorParams::with_alpha(m, 0.0, alpha), alpha,
                                                  grid, natural);
        const auto chi = dressed_susceptibility(
            MirrorParams::with_alpha(m, 0.0, alpha),
            vacuum_motional_susceptibility(alpha, grid, natural));
        for (std::size_t i = 0; i < grid.size(); ++i) {
            CHECK(out.exact.value(i) ==
                  doctest::Approx(2.0 * natural.hbar * chi.value(i).imag()).epsilon(1e-14));
        }
    }
}
