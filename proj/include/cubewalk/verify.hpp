#pragma once

#include "cubewalk/compile.hpp"
#include "cubewalk/gates.hpp"
#include "cubewalk/graph.hpp"

namespace cubewalk {

// Dense-mode verification is column-by-column over the full joint space.
inline constexpr int kMaxDenseWires = 12;

struct EquivalenceReport {
    double max_deviation = 0.0;
    bool pass = false;
    std::uint64_t columns = 0;
    int steps = 1;
};

// Executes the compiled step program T times from every basis state and
// compares against the reference dense step applied T times. Phases count:
// equality is exact operator equality, not equality up to global phase.
EquivalenceReport verify_equivalence(const CubelikeGraph& g, int steps, CoinStrategy strategy, double tolerance = 1e-10);

// Same comparison for an externally supplied step program.
EquivalenceReport verify_program(const CubelikeGraph& g, const GateProgram& program, int steps, double tolerance = 1e-10);

} // namespace cubewalk
