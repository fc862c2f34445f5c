#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubewalk/cli.hpp"

namespace {

using cubewalk::CoinPadding;
using cubewalk::CoinStrategy;
using cubewalk::Family;
using cubewalk::McxLowering;
using cubewalk::cli::RunConfig;

const std::map<std::string, Family> kFamilies{
    {"hypercube", Family::Hypercube},
    {"augmented", Family::Augmented},
    {"complete", Family::Complete},
    {"random", Family::Random},
};
const std::map<std::string, CoinStrategy> kStrategies{
    {"paper-diffusion", CoinStrategy::PaperDiffusion},
    {"prepare-reflect", CoinStrategy::PrepareReflect},
};
const std::map<std::string, McxLowering> kLowerings{
    {"opaque", McxLowering::Opaque},
    {"ancilla-ladder", McxLowering::AncillaLadder},
};
const std::map<std::string, CoinPadding> kPaddings{
    {"zero", CoinPadding::Zero},
    {"loop", CoinPadding::Loop},
};

template <typename T>
bool lookup(const std::map<std::string, T>& table, const std::string& value, T& out) {
    auto it = table.find(value);
    if (it == table.end()) return false;
    out = it->second;
    return true;
}

// Flat key=value file applied before flag parsing, so flags override it.
// Keys are the long option names without the leading dashes.
bool apply_config_file(const std::string& path, RunConfig& cfg, std::string& error) {
    std::ifstream in(path);
    if (!in) {
        error = "cannot open config file " + path;
        return false;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            error = path + ":" + std::to_string(lineno) + ": expected key=value";
            return false;
        }
        std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        try {
            if (key == "family") {
                Family f;
                if (!lookup(kFamilies, value, f)) throw std::invalid_argument(value);
                cfg.family = f;
            } else if (key == "dimension" || key == "n") {
                cfg.n = std::stoi(value);
            } else if (key == "n-from") {
                cfg.n_from = std::stoi(value);
            } else if (key == "n-to") {
                cfg.n_to = std::stoi(value);
            } else if (key == "omega-file") {
                cfg.omega_file = value;
            } else if (key == "canonicalize") {
                cfg.canonicalize = (value == "1" || value == "true");
            } else if (key == "extra") {
                cfg.extra = std::stoi(value);
            } else if (key == "seed") {
                cfg.seed = std::stoull(value);
            } else if (key == "steps" || key == "T") {
                cfg.steps = std::stoi(value);
            } else if (key == "window-lo") {
                cfg.window_lo = std::stoi(value);
            } else if (key == "window-hi") {
                cfg.window_hi = std::stoi(value);
            } else if (key == "start") {
                cfg.start_bits = value;
            } else if (key == "target") {
                cfg.target_bits = value;
            } else if (key == "strategy") {
                CoinStrategy s;
                if (!lookup(kStrategies, value, s)) throw std::invalid_argument(value);
                cfg.strategy = s;
            } else if (key == "lowering") {
                McxLowering l;
                if (!lookup(kLowerings, value, l)) throw std::invalid_argument(value);
                cfg.lowering = l;
            } else if (key == "padding") {
                CoinPadding p;
                if (!lookup(kPaddings, value, p)) throw std::invalid_argument(value);
                cfg.padding = p;
            } else if (key == "tolerance") {
                cfg.tolerance = std::stod(value);
            } else if (key == "limit-wires") {
                cfg.limit_wires = std::stoi(value);
            } else if (key == "out") {
                cfg.out_path = value;
            } else if (key == "counts") {
                cfg.counts_path = value;
            } else if (key == "program") {
                cfg.program_path = value;
            } else if (key == "trace") {
                cfg.trace_path = value;
            } else if (key == "plot") {
                cfg.plot_path = value;
            } else {
                error = path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'";
                return false;
            }
        } catch (const std::exception&) {
            error = path + ":" + std::to_string(lineno) + ": bad value for '" + key + "'";
            return false;
        }
    }
    return true;
}

void add_graph_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--family", cfg.family, "built-in family")->transform(CLI::CheckedTransformer(kFamilies));
    cmd->add_option("-n,--dimension", cfg.n, "dimension of the family graph");
    cmd->add_option("--omega-file", cfg.omega_file, "generating-set file (n=<int> header, one bit string per line)");
    cmd->add_flag("--canonicalize", cfg.canonicalize, "sort a file-supplied generating set");
    cmd->add_option("--extra", cfg.extra, "random family: extra non-basis generators");
    cmd->add_option("--seed", cfg.seed, "random family seed");
    cmd->add_option("--padding", cfg.padding, "coin padding: zero (reflect over edge slots) or loop")
        ->transform(CLI::CheckedTransformer(kPaddings));
    cmd->add_option("--limit-wires", cfg.limit_wires, "refuse graphs needing more joint wires");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubewalk: exact coined quantum walks on cubelike graphs, circuit compilation and hitting-time experiments"};
    app.require_subcommand(1);

    RunConfig cfg;

    // Pull --config out of argv and apply it first; remaining flags override.
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        std::string config_path;
        if (arg == "--config" && i + 1 < argc) {
            config_path = argv[++i];
        } else if (arg.rfind("--config=", 0) == 0) {
            config_path = arg.substr(9);
        } else {
            args.push_back(arg);
            continue;
        }
        std::string error;
        if (!apply_config_file(config_path, cfg, error)) {
            std::fprintf(stderr, "cubewalk: %s\n", error.c_str());
            return cubewalk::cli::kConfigError;
        }
    }

    CLI::App* walk = app.add_subcommand("walk", "evolve a walk and write the position distribution CSV");
    add_graph_options(walk, cfg);
    walk->add_option("-T,--steps", cfg.steps, "number of walk steps");
    walk->add_option("--start", cfg.start_bits, "start vertex bits (default all zeros)");
    walk->add_option("-o,--out", cfg.out_path, "distribution CSV path (default stdout)");
    walk->add_option("--trace", cfg.trace_path, "per-step distribution CSV path");

    CLI::App* compile = app.add_subcommand("compile", "compile the walk circuit to OpenQASM 2.0 plus gate counts");
    add_graph_options(compile, cfg);
    compile->add_option("-T,--steps", cfg.steps, "steps in the compiled walk (default 1)");
    compile->add_option("--strategy", cfg.strategy, "coin strategy")->transform(CLI::CheckedTransformer(kStrategies));
    compile->add_option("--lowering", cfg.lowering, "MCX lowering for emission")->transform(CLI::CheckedTransformer(kLowerings));
    compile->add_option("-o,--out", cfg.out_path, "QASM path (default stdout)");
    compile->add_option("--counts", cfg.counts_path, "gate-count JSON path");
    compile->add_option("--program", cfg.program_path, "abstract gate program dump path");

    CLI::App* hit = app.add_subcommand("hit", "find the one-shot hitting time and write the record JSON");
    add_graph_options(hit, cfg);
    hit->add_option("--start", cfg.start_bits, "start vertex bits (default all zeros)");
    hit->add_option("--target", cfg.target_bits, "target vertex bits (default xor of generators)");
    hit->add_option("--window-lo", cfg.window_lo, "search window lower bound");
    hit->add_option("--window-hi", cfg.window_hi, "search window upper bound");
    hit->add_option("-o,--out", cfg.out_path, "record JSON path (default stdout)");

    CLI::App* sweep = app.add_subcommand("sweep", "hitting times across a dimension range, CSV plus fit");
    add_graph_options(sweep, cfg);
    sweep->add_option("--n-from", cfg.n_from, "first dimension");
    sweep->add_option("--n-to", cfg.n_to, "last dimension");
    sweep->add_option("-o,--out", cfg.out_path, "sweep CSV path (default stdout)");
    sweep->add_option("--plot", cfg.plot_path, "degree/T plot data path");

    CLI::App* verify = app.add_subcommand("verify", "check compiled or supplied circuits against the dense operator");
    add_graph_options(verify, cfg);
    verify->add_option("-T,--steps", cfg.steps, "steps to verify (default 1)");
    verify->add_option("--strategy", cfg.strategy, "coin strategy")->transform(CLI::CheckedTransformer(kStrategies));
    verify->add_option("--program", cfg.program_path, "verify this program dump instead of compiling");
    verify->add_option("--tolerance", cfg.tolerance, "max entrywise deviation accepted");
    verify->add_option("-o,--out", cfg.out_path, "report JSON path (default stdout)");

    CLI::App* families = app.add_subcommand("families", "list built-in graph families");
    families->add_option("-o,--out", cfg.out_path, "output path (default stdout)");

    try {
        std::reverse(args.begin(), args.end()); // CLI11 expects a reversed vector
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : cubewalk::cli::kConfigError;
    }

    if (walk->parsed()) return cubewalk::cli::cmd_walk(cfg);
    if (compile->parsed()) return cubewalk::cli::cmd_compile(cfg);
    if (hit->parsed()) return cubewalk::cli::cmd_hit(cfg);
    if (sweep->parsed()) return cubewalk::cli::cmd_sweep(cfg);
    if (verify->parsed()) return cubewalk::cli::cmd_verify(cfg);
    if (families->parsed()) return cubewalk::cli::cmd_families(cfg);
    return cubewalk::cli::kConfigError;
}
