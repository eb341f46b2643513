#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "qlim/fdt.hpp"
#include "qlim/geodesic_mc.hpp"
#include "qlim/gravity.hpp"
#include "qlim/measurement.hpp"
#include "qlim/optimizer.hpp"
#include "qlim/response.hpp"
#include "qlim/synth.hpp"

namespace qlim::cli {
namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

int fail_validation(const std::vector<ValidationError>& errors) {
    std::cerr << validation_report_json(errors) << "\n";
    return kExitValidation;
}

int fail_validation(const std::string& path, const std::string& message) {
    return fail_validation(std::vector<ValidationError>{{path, message}});
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

FrequencyGrid make_grid(const GridConfig& g) {
    return g.spacing == "linear" ? FrequencyGrid::linear(g.omega_min, g.omega_max, g.points)
                                 : FrequencyGrid::log_spaced(g.omega_min, g.omega_max, g.points);
}

MirrorParams make_mirror(const MirrorConfig& m) {
    return m.gamma ? MirrorParams::with_gamma(m.mass, m.omega0, *m.gamma)
                   : MirrorParams::with_alpha(m.mass, m.omega0, m.alpha);
}

/// chi_qq per the configured damping model: fixed gamma uses the mechanical
/// susceptibility, alpha mode dresses the mirror with the vacuum motional
/// response.
ComplexResponse make_chi_qq(const MirrorConfig& m, const FrequencyGrid& grid,
                            const PhysicalConstants& k) {
    const MirrorParams p = make_mirror(m);
    if (m.gamma) {
        return mech_susceptibility(p, grid);
    }
    return dressed_susceptibility(p, vacuum_motional_susceptibility(m.alpha, grid, k));
}

struct UnitScale {
    double area = 1.0;  // m^2
    std::string label = "si";
};

UnitScale resolve_unit_scale(const RunConfig& cfg) {
    UnitScale s;
    s.label = cfg.output.unit_scale;
    if (cfg.output.unit_scale == "lp2") {
        const double lp = cfg.constants.planck_length();
        s.area = lp * lp;
    } else if (cfg.output.unit_scale == "lambda_c2") {
        const double lc = compton_wavelength(cfg.mirror ? cfg.mirror->mass : 1.0, cfg.constants);
        s.area = lc * lc;
    }
    return s;
}

McConfig make_mc_config(const McSettings& s, const CliOptions& opt) {
    McConfig mc;
    mc.realizations = s.realizations;
    mc.modes = s.modes;
    mc.band_lo = s.band_lo;
    mc.band_hi = s.band_hi;
    mc.path_length = s.path_length;
    mc.direction = s.direction;
    mc.round_trip = s.round_trip;
    mc.seed = opt.seed.value_or(s.seed);
    mc.amplitude_scale = s.amplitude_scale;
    mc.threads = opt.threads;
    return mc;
}

json mc_fit_json(const McResult& result, const McConfig& mc) {
    json out;
    out["beta_hat"] = result.fit.beta_hat;
    out["slope_hat"] = result.fit.slope_hat;
    out["beta_ci_low"] = result.fit.beta_ci_low;
    out["beta_ci_high"] = result.fit.beta_ci_high;
    out["ci_width_fraction"] = result.fit.ci_width_fraction;
    out["degenerate"] = result.fit.degenerate;
    out["realizations"] = result.fit.realizations;
    out["modes"] = mc.modes;
    out["seed"] = mc.seed;
    out["round_trip"] = mc.round_trip;
    return out;
}

}  // namespace

int run_budget(const RunConfig& cfg, const CliOptions& opt) {
    std::vector<ValidationError> errors;
    if (!cfg.mirror) errors.push_back({"/mirror", "required by budget"});
    if (!cfg.grid) errors.push_back({"/grid", "required by budget"});
    if (!cfg.gravity) errors.push_back({"/gravity", "required by budget"});
    if (!errors.empty()) return fail_validation(errors);

    try {
        const PhysicalConstants& k = cfg.constants;
        k.validate();
        const FrequencyGrid grid = make_grid(*cfg.grid);
        const MirrorParams p = make_mirror(*cfg.mirror);
        const ComplexResponse chi = make_chi_qq(*cfg.mirror, grid, k);

        const BoundSpectra sql = sql_bound(chi, p.mass(), k.hbar);
        const BoundSpectra uql = uql_bound(chi, p.mass(), k.hbar);
        const VacuumPositionSpectra vac = vacuum_position_spectrum(p, cfg.mirror->alpha, grid, k);

        double beta = cfg.gravity->beta;
        std::string beta_source = "config";
        if (cfg.gravity->use_mc) {
            const McConfig mc = make_mc_config(*cfg.gravity->mc, opt);
            const McResult est = geodesic_deviation_mc(mc, k);
            if (est.fit.degenerate || !(est.fit.beta_hat > 0.0)) {
                std::cerr << "budget: Monte-Carlo beta estimate is degenerate\n";
                return kExitNumerical;
            }
            beta = est.fit.beta_hat;
            beta_source = "mc";
        }
        const CombinedSpectrum comb = combined_spectrum(p, cfg.mirror->alpha, beta, grid, k);
        const UnitScale scale = resolve_unit_scale(cfg);

        std::ostringstream csv;
        csv << "# qlim budget\n";
        csv << "# unit_scale=" << scale.label << " reference_area_m2=" << fmt(scale.area) << "\n";
        csv << "# beta=" << fmt(beta) << " beta_source=" << beta_source << "\n";
        if (vac.regime_warning) {
            csv << "# warning=omega0 not negligible against the grid; vacuum free-mirror form degraded\n";
        }
        csv << "omega_rad_s,C_sql,C_uql,C_vac_rp,C_grav,C_total,regime\n";
        const char* regime =
            comb.regime.regime == MassRegime::Macroscopic ? "Macroscopic" : "Microscopic";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            csv << fmt(grid[i]) << ',' << fmt(sql.bound.value(i) / scale.area) << ','
                << fmt(uql.bound.value(i) / scale.area) << ','
                << fmt(vac.exact.value(i) / scale.area) << ','
                << fmt(comb.gravitational.value(i) / scale.area) << ','
                << fmt(comb.total.value(i) / scale.area) << ',' << regime << "\n";
        }
        if (!write_file(opt.out, csv.str())) {
            std::cerr << "budget: cannot write " << opt.out << "\n";
            return kExitIo;
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return fail_validation("/", e.what());
    }
}

int run_optimize(const RunConfig& cfg, const CliOptions& opt) {
    std::vector<ValidationError> errors;
    if (!cfg.mirror) errors.push_back({"/mirror", "required by optimize"});
    if (!cfg.probe_K0) errors.push_back({"/probe", "required by optimize"});
    if (!cfg.grid) errors.push_back({"/grid", "required by optimize"});
    if (!cfg.r_max) errors.push_back({"/optimizer", "required by optimize"});
    if (!errors.empty()) return fail_validation(errors);

    try {
        const PhysicalConstants& k = cfg.constants;
        k.validate();
        const FrequencyGrid grid = make_grid(*cfg.grid);
        const MirrorParams p = make_mirror(*cfg.mirror);
        const ComplexResponse chi = make_chi_qq(*cfg.mirror, grid, k);
        const ProbeParams probe(*cfg.probe_K0);

        const Strategy strat = optimize_strategy(chi, probe, *cfg.r_max, k.hbar, opt.threads);
        const BoundSpectra sql = sql_bound(chi, p.mass(), k.hbar);
        const BoundSpectra uql = uql_bound(chi, p.mass(), k.hbar);
        const UnitScale scale = resolve_unit_scale(cfg);

        std::ostringstream csv;
        csv << "# qlim optimize\n";
        csv << "# unit_scale=" << scale.label << " reference_area_m2=" << fmt(scale.area) << "\n";
        csv << "# r_max=" << fmt(*cfg.r_max) << "\n";
        csv << "omega_rad_s,S_pp,S_ii,S_pi,achieved,sql,uql\n";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            csv << fmt(grid[i]) << ',' << fmt(strat.covariance.s_phiphi(i)) << ','
                << fmt(strat.covariance.s_ii(i)) << ',' << fmt(strat.covariance.s_phii(i)) << ','
                << fmt(strat.achieved.value(i) / scale.area) << ','
                << fmt(sql.bound.value(i) / scale.area) << ','
                << fmt(uql.bound.value(i) / scale.area) << "\n";
        }
        if (!write_file(opt.out, csv.str())) {
            std::cerr << "optimize: cannot write " << opt.out << "\n";
            return kExitIo;
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return fail_validation("/", e.what());
    }
}

int run_fdt(const RunConfig& cfg, const CliOptions& opt) {
    std::vector<ValidationError> errors;
    if (!cfg.mirror) errors.push_back({"/mirror", "required by fdt"});
    if (!cfg.grid) errors.push_back({"/grid", "required by fdt"});
    if (!cfg.fdt) errors.push_back({"/fdt", "required by fdt"});
    if (!errors.empty()) return fail_validation(errors);

    try {
        const PhysicalConstants& k = cfg.constants;
        k.validate();
        const FrequencyGrid grid = make_grid(*cfg.grid);
        const FdtConfig& f = *cfg.fdt;

        ComplexResponse chi = [&]() -> ComplexResponse {
            if (f.model == "mechanical") {
                if (!cfg.mirror->gamma) {
                    throw std::invalid_argument("fdt model \"mechanical\" needs mirror gamma");
                }
                return mech_susceptibility(make_mirror(*cfg.mirror), grid);
            }
            if (f.model == "vacuum") {
                return vacuum_motional_susceptibility(cfg.mirror->alpha, grid, k);
            }
            return dressed_susceptibility(
                make_mirror(*cfg.mirror),
                vacuum_motional_susceptibility(cfg.mirror->alpha, grid, k));
        }();

        Spectrum c = vacuum_spectrum_from_response(chi, k.hbar);
        if (f.inject_fault != 0.0) {
            std::vector<double> v = c.values();
            v[v.size() / 2] *= (1.0 + f.inject_fault);
            c = Spectrum(c.grid(), std::move(v), c.sidedness(), c.unit_scale());
        }

        FdtOptions options;
        options.tol = f.tolerance;
        options.check_causality = f.causality;
        options.kk_tol = f.kk_tolerance;
        const FdtReport report = check_fdt(c, chi, k.hbar, options);

        json out;
        out["model"] = f.model;
        out["tolerance"] = report.tol;
        out["kk_tolerance"] = report.kk_tol;
        out["max_residual_commutator"] = report.max_residual_commutator;
        out["max_residual_zero_temp"] = report.max_residual_zero_temp;
        out["kk_residual"] = report.kk_residual;
        out["causality_checked"] = report.causality_checked;
        out["injected_fault"] = f.inject_fault;
        out["passed"] = report.passed;
        if (!write_file(opt.out, out.dump(2) + "\n")) {
            std::cerr << "fdt: cannot write " << opt.out << "\n";
            return kExitIo;
        }
        return report.passed ? kExitOk : kExitNumerical;
    } catch (const std::exception& e) {
        return fail_validation("/", e.what());
    }
}

int run_gw_mc(const RunConfig& cfg, const CliOptions& opt) {
    if (!cfg.gravity || !cfg.gravity->mc) {
        return fail_validation("/gravity/mc", "required by gw-mc");
    }
    try {
        const PhysicalConstants& k = cfg.constants;
        k.validate();
        const McConfig mc = make_mc_config(*cfg.gravity->mc, opt);
        const McResult result = geodesic_deviation_mc(mc, k);
        const UnitScale scale = resolve_unit_scale(cfg);

        std::ostringstream csv;
        csv << "# qlim gw-mc\n";
        csv << "# unit_scale=" << scale.label << " reference_area_m2=" << fmt(scale.area) << "\n";
        csv << "# realizations=" << mc.realizations << " modes=" << mc.modes
            << " seed=" << mc.seed << "\n";
        csv << "omega_rad_s,C_qq\n";
        for (std::size_t i = 0; i < result.spectrum.size(); ++i) {
            csv << fmt(result.spectrum.grid()[i]) << ','
                << fmt(result.spectrum.value(i) / scale.area) << "\n";
        }
        if (!write_file(opt.out, csv.str())) {
            std::cerr << "gw-mc: cannot write " << opt.out << "\n";
            return kExitIo;
        }
        const json fit = mc_fit_json(result, mc);
        if (!write_file(opt.out + ".fit.json", fit.dump(2) + "\n")) {
            std::cerr << "gw-mc: cannot write " << opt.out << ".fit.json\n";
            return kExitIo;
        }
        return result.fit.degenerate ? kExitNumerical : kExitOk;
    } catch (const std::exception& e) {
        return fail_validation("/", e.what());
    }
}

int run_synth(const RunConfig& cfg, const CliOptions& opt) {
    std::vector<ValidationError> errors;
    if (!cfg.synth) errors.push_back({"/synth", "required by synth"});
    if (!errors.empty()) return fail_validation(errors);

    try {
        const PhysicalConstants& k = cfg.constants;
        k.validate();
        const SynthConfig& s = *cfg.synth;

        // internal grid covering every synthesis bin
        const double w_lo = 0.5 * 2.0 * M_PI / s.duration;
        const double w_hi = 1.001 * M_PI / s.dt;
        const FrequencyGrid grid = FrequencyGrid::log_spaced(w_lo, w_hi, 512);

        Spectrum source = [&]() -> Spectrum {
            if (s.source == "gravitational") {
                if (!cfg.gravity || cfg.gravity->use_mc) {
                    throw std::invalid_argument("synth source \"gravitational\" needs numeric gravity beta");
                }
                return gravitational_distance_spectrum(cfg.gravity->beta, k.planck_length(), grid);
            }
            if (s.source == "vacuum_rp") {
                if (!cfg.mirror) throw std::invalid_argument("synth source \"vacuum_rp\" needs mirror");
                return vacuum_position_spectrum(make_mirror(*cfg.mirror), cfg.mirror->alpha, grid, k)
                    .exact;
            }
            if (!cfg.mirror) throw std::invalid_argument("synth source \"combined\" needs mirror");
            if (!cfg.gravity || cfg.gravity->use_mc) {
                throw std::invalid_argument("synth source \"combined\" needs numeric gravity beta");
            }
            return combined_spectrum(make_mirror(*cfg.mirror), cfg.mirror->alpha,
                                     cfg.gravity->beta, grid, k)
                .total;
        }();

        const std::uint64_t seed = opt.seed.value_or(s.seed);
        const TimeSeries series = synthesize(symmetrize(source), s.duration, s.dt, seed);

        std::ostringstream csv;
        csv << "# qlim synth\n";
        csv << "# dt=" << fmt(series.dt) << " seed=" << seed << " samples=" << series.samples.size()
            << "\n";
        csv << "sample,value\n";
        for (std::size_t i = 0; i < series.samples.size(); ++i) {
            csv << i << ',' << fmt(series.samples[i]) << "\n";
        }
        if (!write_file(opt.out, csv.str())) {
            std::cerr << "synth: cannot write " << opt.out << "\n";
            return kExitIo;
        }

        json meta;
        meta["dt"] = series.dt;
        meta["seed"] = seed;
        meta["samples"] = series.samples.size();
        meta["source"] = s.source;
        meta["sidedness"] = "symmetrized";
        if (!write_file(opt.out + ".meta.json", meta.dump(2) + "\n")) {
            std::cerr << "synth: cannot write " << opt.out << ".meta.json\n";
            return kExitIo;
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return fail_validation("/", e.what());
    }
}

}  // namespace qlim::cli
