#ifndef QLIM_TOOLS_COMMANDS_HPP
#define QLIM_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "config.hpp"

namespace qlim::cli {

// exit codes: 0 success, 2 validation failure, 3 numerical-check failure, 4 I/O
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

struct CliOptions {
    std::string out;
    std::optional<std::uint64_t> seed;  // overrides config seeds
    unsigned threads = 1;
};

int run_budget(const RunConfig& cfg, const CliOptions& opt);
int run_optimize(const RunConfig& cfg, const CliOptions& opt);
int run_fdt(const RunConfig& cfg, const CliOptions& opt);
int run_gw_mc(const RunConfig& cfg, const CliOptions& opt);
int run_synth(const RunConfig& cfg, const CliOptions& opt);

}  // namespace qlim::cli

#endif
