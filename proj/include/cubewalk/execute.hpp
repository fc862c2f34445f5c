#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cubewalk/gates.hpp"

namespace cubewalk {

// Reference gate-by-gate statevector executor over all program wires
// (position, coin, ancillas). Global phase factors are applied literally so
// program/operator comparisons can demand exact equality.
inline constexpr int kMaxExecutorWires = 26;

using StateVector = std::vector<std::complex<double>>;

void apply_gate(const Gate& g, StateVector& state);
void apply_program(const GateProgram& p, StateVector& state);

// Runs the program from the given computational basis state.
StateVector execute_program(const GateProgram& p, std::uint64_t initial_basis);

} // namespace cubewalk
