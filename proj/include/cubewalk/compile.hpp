#pragma once

#include "cubewalk/gates.hpp"
#include "cubewalk/graph.hpp"

namespace cubewalk {

// PaperDiffusion is the textbook Grover decomposition over all coin wires and
// needs degree == 2^m. PrepareReflect conjugates a reflection about |0...0>
// with a rotation network preparing the uniform state over the leading degree
// slots, so it handles any degree.
enum class CoinStrategy { PaperDiffusion, PrepareReflect };

// Picks PaperDiffusion when the degree is a power of two, else PrepareReflect.
CoinStrategy default_strategy(const CubelikeGraph& g);

// Coin operator on the coin wires only; dense action equals the padded
// reflection 2|D'><D'| - I exactly, global phases included.
GateProgram compile_coin(const CubelikeGraph& g, CoinStrategy strategy);

// Shift operator: per edge slot, X gates relabel the coin so one generalized
// Toffoli block per set generator bit moves the walker; slots past the degree
// get their relabeling X block but no Toffolis. The coin relabelings cancel
// over a full pass.
GateProgram compile_shift(const CubelikeGraph& g);

// step = coin then shift; walk = coin-register initialization then T steps.
// Initialization is H per coin wire at full degree and the uniform-state
// rotation network otherwise, matching the engine's start state.
GateProgram compile_step(const CubelikeGraph& g, CoinStrategy strategy);
GateProgram compile_walk(const CubelikeGraph& g, int steps, CoinStrategy strategy);

// Rotation network W with W|0^m> = uniform over the first `count` coin basis
// states. Exposed for reuse by the walk initialization.
GateProgram uniform_prep(const CubelikeGraph& g, int count);

} // namespace cubewalk
