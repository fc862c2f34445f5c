#include "cubewalk/verify.hpp"

#include <algorithm>
#include <cmath>

#include "cubewalk/dense.hpp"
#include "cubewalk/error.hpp"
#include "cubewalk/execute.hpp"

namespace cubewalk {

EquivalenceReport verify_program(const CubelikeGraph& g, const GateProgram& program, int steps, double tolerance) {
    if (g.n + g.coin_width() > kMaxDenseWires)
        fail(ErrorCode::TooManyWires,
             "dense verification limited to " + std::to_string(kMaxDenseWires) + " wires, graph needs " +
                 std::to_string(g.n + g.coin_width()));
    if (program.n != g.n || program.m != g.coin_width())
        fail(ErrorCode::InvalidArgument, "program register shape does not match graph");
    if (steps < 1)
        fail(ErrorCode::InvalidArgument, "verification needs at least one step");

    const std::uint64_t dim = std::uint64_t(1) << (g.n + g.coin_width());
    EquivalenceReport report;
    report.columns = dim;
    report.steps = steps;

    StateVector circuit(dim), dense(dim);
    for (std::uint64_t j = 0; j < dim; ++j) {
        std::fill(circuit.begin(), circuit.end(), std::complex<double>(0.0, 0.0));
        circuit[j] = 1.0;
        dense = circuit;
        for (int t = 0; t < steps; ++t) {
            apply_program(program, circuit);
            apply_dense_step(g, dense);
        }
        for (std::uint64_t i = 0; i < dim; ++i)
            report.max_deviation = std::max(report.max_deviation, std::abs(circuit[i] - dense[i]));
    }
    report.pass = report.max_deviation < tolerance;
    return report;
}

EquivalenceReport verify_equivalence(const CubelikeGraph& g, int steps, CoinStrategy strategy, double tolerance) {
    return verify_program(g, compile_step(g, strategy), steps, tolerance);
}

} // namespace cubewalk
