#include "cubewalk/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "cubewalk/error.hpp"
#include "cubewalk/execute.hpp"
#include "cubewalk/verify.hpp"

namespace cubewalk::cli {

namespace {

using nlohmann::json;

int exit_code_for(const WalkError& e) {
    switch (e.code()) {
        case ErrorCode::TooManyWires:
        case ErrorCode::WireLimitExceeded:
            return kResourceError;
        case ErrorCode::DegreeNotPowerOfTwo:
            return kUnsupportedStrategy;
        default:
            return kConfigError;
    }
}

struct GraphSource {
    CubelikeGraph graph;
    std::string label;
    CoinPadding padding;
};

GraphSource build_graph(const RunConfig& c) {
    GraphSource src{CubelikeGraph{}, "", CoinPadding::Zero};
    if (c.family && !c.omega_file.empty())
        fail(ErrorCode::InvalidArgument, "give either a family or a generating-set file, not both");
    if (c.family) {
        switch (*c.family) {
            case Family::Hypercube: src.graph = hypercube(c.n); break;
            case Family::Augmented: src.graph = augmented_cube(c.n); break;
            case Family::Complete: src.graph = complete_graph(c.n); break;
            case Family::Random: src.graph = random_cubelike(c.n, c.extra, c.seed); break;
        }
        src.label = family_name(*c.family);
        src.padding = family_padding(*c.family);
    } else if (!c.omega_file.empty()) {
        src.graph = load_generating_set_file(c.omega_file, c.canonicalize);
        src.label = "file:" + c.omega_file;
    } else {
        fail(ErrorCode::InvalidArgument, "no graph source: use a family with -n or a generating-set file");
    }
    if (c.padding)
        src.padding = *c.padding;
    int wires = src.graph.n + src.graph.coin_width();
    if (wires > c.limit_wires)
        fail(ErrorCode::WireLimitExceeded,
             "graph needs " + std::to_string(wires) + " wires, --limit-wires is " + std::to_string(c.limit_wires));
    return src;
}

BitString parse_vertex(const std::string& bits, int n, const char* what) {
    if (bits.empty())
        return BitString(0, n);
    BitString b = parse_bits(bits);
    if (b.width != n)
        fail(ErrorCode::WidthMismatch, std::string(what) + " " + bits + " has width " + std::to_string(b.width) +
                                           ", dimension is " + std::to_string(n));
    return b;
}

// Writes to the path, or stdout when empty.
void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        fail(ErrorCode::InvalidArgument, "cannot write " + path);
    f << text;
}

json graph_json(const GraphSource& src) {
    return json{{"source", src.label},
                {"n", src.graph.n},
                {"delta", src.graph.degree()},
                {"m", src.graph.coin_width()}};
}

json counts_json(const GateCounts& c) {
    return json{{"x", c.x_count}, {"mcx", c.mcx_count}, {"h", c.h_count}, {"phase", c.phase_count}, {"rotations", c.rotation_count}};
}

const char* strategy_name(CoinStrategy s) {
    return s == CoinStrategy::PaperDiffusion ? "paper-diffusion" : "prepare-reflect";
}

const char* padding_name(CoinPadding p) {
    return p == CoinPadding::Zero ? "zero" : "loop";
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const WalkError& e) {
        std::cerr << "cubewalk: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "cubewalk: " << e.what() << "\n";
        return kConfigError;
    }
}

} // namespace

int cmd_walk(const RunConfig& config) {
    return guarded([&]() {
        GraphSource src = build_graph(config);
        if (config.steps < 0)
            fail(ErrorCode::InvalidArgument, "walk needs -T <steps>");
        BitString start = parse_vertex(config.start_bits, src.graph.n, "start vertex");

        WalkState s = initial_state(src.graph, start, src.padding);
        std::ostringstream trace;
        if (!config.trace_path.empty()) {
            trace << "step,vertex,bits,probability\n";
            char buf[64];
            auto emit = [&](int t, const Distribution& d) {
                for (std::uint64_t v = 0; v < d.probabilities.size(); ++v) {
                    std::snprintf(buf, sizeof buf, "%.12g", d.probabilities[v]);
                    trace << t << ',' << v << ',' << BitString(v, src.graph.n).text() << ',' << buf << '\n';
                }
            };
            emit(0, position_distribution(s));
            for (int t = 1; t <= config.steps; ++t) {
                step(s);
                emit(t, position_distribution(s));
            }
        } else {
            evolve(s, config.steps);
        }

        std::ostringstream csv;
        write_distribution_csv(csv, src.graph, position_distribution(s));
        write_text(config.out_path, csv.str());
        if (!config.trace_path.empty())
            write_text(config.trace_path, trace.str());
        return kOk;
    });
}

int cmd_compile(const RunConfig& config) {
    return guarded([&]() {
        GraphSource src = build_graph(config);
        int steps = config.steps < 0 ? 1 : config.steps;
        if (steps < 1)
            fail(ErrorCode::InvalidArgument, "compile needs at least one step");
        CoinStrategy strategy = config.strategy.value_or(default_strategy(src.graph));

        GateProgram walk = compile_walk(src.graph, steps, strategy);
        std::string qasm = emit_qasm(walk, config.lowering);
        write_text(config.out_path, qasm);

        if (!config.program_path.empty())
            write_text(config.program_path, format_program(walk));

        GateProgram coin = compile_coin(src.graph, strategy);
        GateProgram shift = compile_shift(src.graph);
        GateProgram init{src.graph.n, src.graph.coin_width(), 0, {}};
        {
            GateProgram rest = compile_step(src.graph, strategy);
            std::size_t body = std::size_t(steps) * rest.gates.size();
            init.gates.assign(walk.gates.begin(), walk.gates.end() - static_cast<std::ptrdiff_t>(body));
        }
        json out{{"graph", graph_json(src)},
                 {"steps", steps},
                 {"strategy", strategy_name(strategy)},
                 {"lowering", config.lowering == McxLowering::Opaque ? "opaque" : "ancilla-ladder"},
                 {"total", counts_json(gate_counts(walk))},
                 {"init", counts_json(gate_counts(init))},
                 {"coin", counts_json(gate_counts(coin))},
                 {"shift", counts_json(gate_counts(shift))}};
        std::string text = out.dump(2) + "\n";
        if (!config.counts_path.empty())
            write_text(config.counts_path, text);
        else if (!config.out_path.empty())
            write_text("", text);
        return kOk;
    });
}

int cmd_hit(const RunConfig& config) {
    return guarded([&]() {
        GraphSource src = build_graph(config);
        BitString start = parse_vertex(config.start_bits, src.graph.n, "start vertex");
        std::optional<BitString> target;
        if (!config.target_bits.empty())
            target = parse_vertex(config.target_bits, src.graph.n, "target vertex");
        std::optional<Window> window;
        if (config.window_lo || config.window_hi) {
            Window w = default_window(src.graph);
            if (config.window_lo) w.lo = *config.window_lo;
            if (config.window_hi) w.hi = *config.window_hi;
            window = w;
        }

        HittingRecord rec = find_hitting_time(src.graph, start, target, window, src.padding);
        json out{{"graph", graph_json(src)},
                 {"padding", padding_name(src.padding)},
                 {"T", rec.steps},
                 {"target", rec.target.text()},
                 {"p", rec.probability},
                 {"window", json::array({rec.window.lo, rec.window.hi})}};
        write_text(config.out_path, out.dump(2) + "\n");
        return kOk;
    });
}

int cmd_sweep(const RunConfig& config) {
    return guarded([&]() {
        if (!config.family)
            fail(ErrorCode::InvalidArgument, "sweep needs --family");
        SweepOptions opts;
        opts.family = *config.family;
        opts.n_from = config.n_from;
        opts.n_to = config.n_to;
        opts.extra = config.extra;
        opts.seed = config.seed;
        opts.padding = config.padding;
        if (opts.n_from < 1)
            fail(ErrorCode::InvalidArgument, "sweep needs --n-from >= 1");

        // Probe the largest graph first so wire limits reject early.
        {
            RunConfig largest = config;
            largest.n = opts.n_to;
            build_graph(largest);
        }

        SweepReport report = family_sweep(opts);
        std::ostringstream csv;
        write_sweep_csv(csv, report);
        write_text(config.out_path, csv.str());
        if (!config.plot_path.empty()) {
            std::ostringstream plot;
            write_sweep_plot(plot, report);
            write_text(config.plot_path, plot.str());
        }
        return kOk;
    });
}

int cmd_verify(const RunConfig& config) {
    return guarded([&]() {
        GraphSource src = build_graph(config);
        int steps = config.steps < 0 ? 1 : config.steps;
        CoinStrategy strategy = config.strategy.value_or(default_strategy(src.graph));

        GateProgram program;
        if (!config.program_path.empty())
            program = parse_program_file(config.program_path);
        else
            program = compile_step(src.graph, strategy);

        EquivalenceReport rep = verify_program(src.graph, program, steps, config.tolerance);

        // Cross-check the gate route against the structured engine: full walk
        // from the start vertex, position marginals compared.
        GateProgram walk_prog{src.graph.n, src.graph.coin_width(), 0, {}};
        if (src.graph.degree() == (1 << src.graph.coin_width())) {
            for (int j = 0; j < src.graph.coin_width(); ++j)
                walk_prog.gates.push_back(Gate::h(src.graph.n + j));
        } else {
            walk_prog.append(uniform_prep(src.graph, src.graph.degree()));
        }
        for (int t = 0; t < steps; ++t)
            walk_prog.append(program);
        StateVector vec = execute_program(walk_prog, 0);
        WalkState ws = initial_state(src.graph, BitString(0, src.graph.n));
        evolve(ws, steps);
        Distribution engine_dist = position_distribution(ws);
        double walk_dev = 0.0;
        for (std::uint64_t v = 0; v < src.graph.vertex_count(); ++v) {
            double p = 0.0;
            for (int k = 0; k < (1 << src.graph.coin_width()); ++k)
                p += std::norm(vec[(std::uint64_t(k) << src.graph.n) | v]);
            walk_dev = std::max(walk_dev, std::abs(p - engine_dist.probabilities[v]));
        }

        bool pass = rep.pass && walk_dev < 1e-9;
        json out{{"graph", graph_json(src)},
                 {"steps", steps},
                 {"strategy", strategy_name(strategy)},
                 {"program", config.program_path.empty() ? "compiled" : config.program_path},
                 {"columns", rep.columns},
                 {"max_deviation", rep.max_deviation},
                 {"tolerance", config.tolerance},
                 {"walk_deviation", walk_dev},
                 {"pass", pass}};
        write_text(config.out_path, out.dump(2) + "\n");
        return pass ? kOk : kVerificationFailure;
    });
}

int cmd_families(const RunConfig& config) {
    return guarded([&]() {
        std::ostringstream out;
        out << "hypercube   n >= 1   generators: unit vectors            degree n\n"
            << "augmented   n >= 2   unit vectors + suffix-ones strings  degree 2n-1\n"
            << "complete    n >= 1   all nonzero strings                 degree 2^n-1 (loop-padded walk)\n"
            << "random      n >= 1   unit vectors + --extra sampled non-basis strings (--seed), degree n+extra\n";
        write_text(config.out_path, out.str());
        return kOk;
    });
}

} // namespace cubewalk::cli
