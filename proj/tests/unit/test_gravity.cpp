#include <array>
#include <cmath>

#include "doctest.h"
#include "qlim/gravity.hpp"
#include "qlim/rng.hpp"

using namespace qlim;

namespace {

WaveVector random_null(Rng& rng) {
    const double w = std::exp(rng.uniform(-1.0, 1.0));
    const double mu = rng.uniform(-1.0, 1.0);
    const double ph = rng.uniform(0.0, 6.283185307179586);
    const double st = std::sqrt(1.0 - mu * mu);
    return WaveVector::null_vector(w, {st * std::cos(ph), st * std::sin(ph), mu});
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

TEST_CASE("wave vector basics") {
    const WaveVector k(1.0, 1.0, 0.0, 0.0);
    CHECK(k.minkowski_square() == 0.0);
    CHECK(k.is_null());
    CHECK(k.covariant(0) == 1.0);
    CHECK(k.covariant(1) == -1.0);

    const WaveVector off(1.0, 0.5, 0.0, 0.0);
    CHECK(!off.is_null());
}

TEST_CASE("building block index symmetries") {
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        // formula-level identities: hold on and off shell
        const WaveVector k(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                           rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        for (int l = 0; l < 4; ++l)
            for (int m = 0; m < 4; ++m)
                for (int r = 0; r < 4; ++r)
                    for (int n = 0; n < 4; ++n) {
                        const double v = r_building_block(k, l, m, r, n);
                        CHECK(v + r_building_block(k, m, l, r, n) == doctest::Approx(0.0));
                        CHECK(v + r_building_block(k, l, m, n, r) == doctest::Approx(0.0));
                        CHECK(v == doctest::Approx(r_building_block(k, r, n, l, m)));
                    }
    }
}

TEST_CASE("building block hand-computed value") {
    // k = (1,1,0,0), indices (0,1,0,1):
    // 1/2 (k0 k0 eta_11 + k1 k1 eta_00 - k1 k0 eta_01 - k0 k1 eta_10) = 0
    const WaveVector k(1.0, 1.0, 0.0, 0.0);
    CHECK(r_building_block(k, 0, 1, 0, 1) == doctest::Approx(0.0));
    CHECK_THROWS_AS(r_building_block(k, 0, 1, 0, 4), std::out_of_range);
}

TEST_CASE("curvature spectrum support") {
    SUBCASE("negative frequency gives the zero tensor") {
        const WaveVector k(-1.0, 1.0, 0.0, 0.0);
        const auto c = curvature_spectrum(k, 1.0);
        CHECK(!c.on_shell());
        CHECK(!c.positive_frequency());
        CHECK(max_abs(c.flat()) == 0.0);
    }

    SUBCASE("off-shell k gives the zero tensor with a flag") {
        const WaveVector k(1.0, 0.3, 0.0, 0.0);
        const auto c = curvature_spectrum(k, 1.0);
        CHECK(!c.on_shell());
        CHECK(!c.null_within_tol());
        CHECK(c.positive_frequency());
        CHECK(max_abs(c.flat()) == 0.0);
    }
}

TEST_CASE("curvature tensor symmetry suite") {
    Rng rng(17);
    for (int t = 0; t < 5; ++t) {
        const auto c = curvature_spectrum(random_null(rng), 1.0);
        REQUIRE(c.on_shell());
        const auto rep = check_curvature_symmetries(c);
        CHECK(rep.antisymmetry < 1e-12);
        CHECK(rep.pair_exchange < 1e-12);
        CHECK(rep.block_exchange < 1e-12);
    }
}

TEST_CASE("einstein-tensor correlations vanish on-shell") {
    Rng rng(19);
    for (int t = 0; t < 10; ++t) {
        const auto c = curvature_spectrum(random_null(rng), 1.0);
        const auto g = einstein_correlation(c);
        CHECK(max_abs(g) < 1e-12 * max_abs(c.flat()));
    }
}

TEST_CASE("curvature spectrum scales as l_p^2") {
    Rng rng(23);
    const WaveVector k = random_null(rng);
    const auto c1 = curvature_spectrum(k, 1.0);
    const auto c2 = curvature_spectrum(k, 2.0);
    const auto& f1 = c1.flat();
    const auto& f2 = c2.flat();
    for (std::size_t i = 0; i < f1.size(); ++i) {
        CHECK(f2[i] == doctest::Approx(4.0 * f1[i]).epsilon(1e-15));
    }
}

TEST_CASE("numerical lorentz covariance") {
    Rng rng(29);
    for (int t = 0; t < 3; ++t) {
        const WaveVector k = random_null(rng);
        const double rapidity = rng.uniform(-2.0, 2.0);
        const std::array<double, 3> axis{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                                         rng.uniform(-1.0, 1.0)};
        const Mat4 boost = lorentz_boost(rapidity, axis);
        const WaveVector boosted = apply_lorentz(boost, k);
        REQUIRE(boosted.is_null(1e-10));

        const auto direct = curvature_spectrum(boosted, 1.0, 1e-10);
        const auto transported = transform_rank8_covariant(lorentz_boost(rapidity, axis),
                                                           curvature_spectrum(k, 1.0).flat());
        const double scale = max_abs(direct.flat());
        REQUIRE(scale > 0.0);
        for (std::size_t i = 0; i < transported.size(); ++i) {
            CHECK(std::abs(direct.flat()[i] - transported[i]) < 1e-10 * scale);
        }
    }
}

TEST_CASE("gravitational distance spectrum") {
    const PhysicalConstants k = PhysicalConstants::codata();
    const double lp = k.planck_length();
    const FrequencyGrid grid = FrequencyGrid::log_spaced(0.1, 1000.0, 64);

    const Spectrum s = gravitational_distance_spectrum(1.0, lp, grid);
    CHECK(s.sidedness() == Sidedness::OneSidedVacuum);
    REQUIRE(s.unit_scale().has_value());
    CHECK(*s.unit_scale() == lp * lp);

    SUBCASE("log-log slope is exactly -1") {
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            const double slope = std::log(s.value(i + 1) / s.value(i)) /
                                 std::log(grid[i + 1] / grid[i]);
            CHECK(slope == doctest::Approx(-1.0).epsilon(1e-12));
        }
    }

    SUBCASE("value at omega = 1 is l_p^2, i.e. 1.0 in l_p^2 units") {
        const Spectrum one = gravitational_distance_spectrum(1.0, lp, FrequencyGrid({1.0}));
        CHECK(one.value(0) == lp * lp);
        CHECK(one.value(0) / *one.unit_scale() == 1.0);
        CHECK(one.value(0) == doctest::Approx(2.61e-70).epsilon(0.01));
    }

    CHECK_THROWS_AS(gravitational_distance_spectrum(0.0, lp, grid), std::invalid_argument);
}

TEST_CASE("regime classification") {
    const PhysicalConstants k = PhysicalConstants::codata();

    SUBCASE("one gram is macroscopic") {
        const auto rep = classify_regime(1e-3, k);
        CHECK(rep.regime == MassRegime::Macroscopic);
        CHECK(!rep.boundary);
    }

    SUBCASE("one nanogram is microscopic with ratio ~ 4.7e8") {
        const auto rep = classify_regime(1e-12, k);
        CHECK(rep.regime == MassRegime::Microscopic);
        CHECK(rep.prefactor_ratio == doctest::Approx(4.74e8).epsilon(0.02));
    }

    SUBCASE("the planck mass is the boundary, macroscopic by convention") {
        const auto rep = classify_regime(k.planck_mass(), k);
        CHECK(rep.regime == MassRegime::Macroscopic);
        CHECK(rep.boundary);
        CHECK(rep.prefactor_ratio == doctest::Approx(1.0).epsilon(1e-12));
        // the crossover sits at ~22 micrograms
        CHECK(rep.planck_mass == doctest::Approx(2.176434e-8).epsilon(1e-5));
    }
}

TEST_CASE("combined spectrum") {
    const PhysicalConstants k = PhysicalConstants::codata();
    const FrequencyGrid grid = FrequencyGrid::log_spaced(1.0, 100.0, 16);

    SUBCASE("macroscopic: metric fluctuations dominate") {
        const double m = 1e-3;
        const auto comb = combined_spectrum(MirrorParams::with_alpha(m, 0.0, 1.0), 1.0, 1.0,
                                            grid, k);
        const double expect = comb.regime.prefactor_ratio;  // (m_p/m)^2
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double excess = comb.total.value(i) / comb.gravitational.value(i) - 1.0;
            CHECK(excess == doctest::Approx(expect).epsilon(1e-10));
            CHECK(excess < 1e-9);
        }
    }

    SUBCASE("microscopic: radiation pressure dominates") {
        const double m = 1e-12;
        const auto comb = combined_spectrum(MirrorParams::with_alpha(m, 0.0, 1.0), 1.0, 1.0,
                                            grid, k);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double excess = comb.total.value(i) / comb.radiation_pressure.value(i) - 1.0;
            CHECK(excess == doctest::Approx(1.0 / comb.regime.prefactor_ratio).epsilon(1e-10));
        }
    }

    SUBCASE("alpha = beta at the planck mass: addends agree identically") {
        const auto comb = combined_spectrum(MirrorParams::with_alpha(k.planck_mass(), 0.0, 1.0),
                                            1.0, 1.0, grid, k);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            CHECK(std::abs(comb.radiation_pressure.value(i) / comb.gravitational.value(i) - 1.0) <
                  1e-14);
        }
    }

    SUBCASE("gravitational addend does not depend on the mass") {
        const auto a = combined_spectrum(MirrorParams::with_alpha(1e-3, 0.0, 1.0), 1.0, 1.0,
                                         grid, k);
        const auto b = combined_spectrum(MirrorParams::with_alpha(7e2, 0.0, 1.0), 1.0, 1.0,
                                         grid, k);
        CHECK(a.gravitational.values() == b.gravitational.values());
    }
}
