#pragma once

#include <string>

#include "cubewalk/gates.hpp"

namespace cubewalk {

// Opaque keeps every multi-controlled X as one declared gate per arity;
// AncillaLadder rewrites them as Toffoli V-chains over a borrowed ancilla
// register that returns to |0> after every gate.
enum class McxLowering { Opaque, AncillaLadder };

// Rewrites controlled rotations as RY halves around MCX pairs and, for
// AncillaLadder, each MCX with three or more controls as a CCX chain over
// m-1 ancilla wires. The result uses only H, X, RY, MCX with <= 2 controls
// (AncillaLadder) and is operator-identical to the input.
GateProgram lower_program(const GateProgram& p, McxLowering lowering);

// OpenQASM 2.0 text: register q[n+m] (+ anc when the ladder needs it),
// classical c[n], position wires measured ascending at the end. Global phase
// factors are physically unobservable and appear as comments, with the product
// recorded in the header. Output is deterministic for identical inputs.
std::string emit_qasm(const GateProgram& p, McxLowering lowering);

} // namespace cubewalk
