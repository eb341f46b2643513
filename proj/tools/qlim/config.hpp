#ifndef QLIM_TOOLS_CONFIG_HPP
#define QLIM_TOOLS_CONFIG_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlim/constants.hpp"

namespace qlim::cli {

struct MirrorConfig {
    double mass = 0.0;
    double omega0 = 0.0;
    std::optional<double> gamma;  // absent: alpha-mode susceptibility
    double alpha = 1.0;           // vacuum coupling, used by the vacuum columns either way
};

struct GridConfig {
    double omega_min = 0.0;
    double omega_max = 0.0;
    std::size_t points = 0;
    std::string spacing = "log";  // "log" | "linear"
};

struct McSettings {
    std::size_t realizations = 200;
    std::size_t modes = 64;
    double band_lo = 0.0;
    double band_hi = 0.0;
    double path_length = 0.0;
    std::array<double, 3> direction{0.0, 0.0, 1.0};
    bool round_trip = false;
    std::uint64_t seed = 0;
    double amplitude_scale = 1.0;
};

struct GravityConfig {
    bool use_mc = false;  // "beta": "mc" estimates beta from the oracle run
    double beta = 1.0;
    std::optional<McSettings> mc;
};

struct FdtConfig {
    std::string model = "mechanical";  // "mechanical" | "vacuum" | "dressed"
    double tolerance = 1e-9;
    bool causality = false;
    double kk_tolerance = 1e-3;
    double inject_fault = 0.0;  // relative perturbation applied at the middle grid point
};

struct SynthConfig {
    double duration = 0.0;
    double dt = 0.0;
    std::string source = "gravitational";  // | "vacuum_rp" | "combined"
    std::uint64_t seed = 0;
};

struct OutputConfig {
    std::string unit_scale = "lp2";  // "lp2" | "lambda_c2" | "si"
};

struct RunConfig {
    PhysicalConstants constants;
    std::optional<MirrorConfig> mirror;
    std::optional<double> probe_K0;
    std::optional<GridConfig> grid;
    std::optional<double> r_max;
    std::optional<GravityConfig> gravity;
    std::optional<FdtConfig> fdt;
    std::optional<SynthConfig> synth;
    OutputConfig output;
};

struct ValidationError {
    std::string path;
    std::string message;
};

struct LoadResult {
    std::optional<RunConfig> config;
    std::vector<ValidationError> errors;
};

/// Parses and validates the JSON config. Strict: unknown keys anywhere are
/// errors; all problems are aggregated into one report.
LoadResult load_config(const std::string& path);

/// Serializes the report as the machine-readable JSON emitted on stderr.
std::string validation_report_json(const std::vector<ValidationError>& errors);

}  // namespace qlim::cli

#endif
