#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cubewalk/compile.hpp"
#include "cubewalk/hitting.hpp"
#include "cubewalk/qasm.hpp"

namespace cubewalk::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kConfigError = 2;
inline constexpr int kResourceError = 3;
inline constexpr int kUnsupportedStrategy = 4;
inline constexpr int kVerificationFailure = 5;

struct RunConfig {
    // Graph source: family+n or a generating-set file, never both.
    std::optional<Family> family;
    int n = 0;
    int n_from = 0, n_to = 0;   // sweep range
    std::string omega_file;
    bool canonicalize = false;
    int extra = 0;              // random family: degree n+extra
    std::uint64_t seed = 0;

    int steps = -1;             // T
    std::optional<int> window_lo, window_hi;
    std::string start_bits;     // default 0^n
    std::string target_bits;    // default xor of generators
    std::optional<CoinStrategy> strategy; // unset = by degree
    McxLowering lowering = McxLowering::Opaque;
    std::optional<CoinPadding> padding;   // unset = family default
    double tolerance = 1e-10;
    int limit_wires = kMaxWalkWires;

    std::string out_path;       // primary output, empty = stdout
    std::string counts_path;    // compile: gate-count JSON
    std::string program_path;   // compile: program dump out; verify: program to check
    std::string trace_path;     // walk: per-step distribution rows
    std::string plot_path;      // sweep: degree/T pairs
};

int cmd_walk(const RunConfig& config);
int cmd_compile(const RunConfig& config);
int cmd_hit(const RunConfig& config);
int cmd_sweep(const RunConfig& config);
int cmd_verify(const RunConfig& config);
int cmd_families(const RunConfig& config);

} // namespace cubewalk::cli
