#include "cubewalk/execute.hpp"

#include <cmath>

#include "cubewalk/error.hpp"

namespace cubewalk {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::uint64_t control_mask(const std::vector<int>& controls) {
    std::uint64_t mask = 0;
    for (int c : controls)
        mask |= std::uint64_t(1) << c;
    return mask;
}

} // namespace

void apply_gate(const Gate& g, StateVector& state) {
    const std::uint64_t dim = state.size();
    switch (g.kind) {
        case GateKind::H: {
            const std::uint64_t bit = std::uint64_t(1) << g.target;
            for (std::uint64_t i = 0; i < dim; ++i) {
                if (i & bit) continue;
                auto a = state[i], b = state[i | bit];
                state[i] = (a + b) * kInvSqrt2;
                state[i | bit] = (a - b) * kInvSqrt2;
            }
            break;
        }
        case GateKind::X: {
            const std::uint64_t bit = std::uint64_t(1) << g.target;
            for (std::uint64_t i = 0; i < dim; ++i)
                if (!(i & bit)) std::swap(state[i], state[i | bit]);
            break;
        }
        case GateKind::MCX: {
            const std::uint64_t bit = std::uint64_t(1) << g.target;
            const std::uint64_t ctrl = control_mask(g.controls);
            for (std::uint64_t i = 0; i < dim; ++i)
                if (!(i & bit) && (i & ctrl) == ctrl) std::swap(state[i], state[i | bit]);
            break;
        }
        case GateKind::GPhase: {
            for (auto& a : state)
                a *= g.phase;
            break;
        }
        case GateKind::RY:
        case GateKind::CRY: {
            const std::uint64_t bit = std::uint64_t(1) << g.target;
            const std::uint64_t ctrl = control_mask(g.controls);
            const double c = std::cos(g.angle / 2.0), s = std::sin(g.angle / 2.0);
            for (std::uint64_t i = 0; i < dim; ++i) {
                if ((i & bit) || (i & ctrl) != ctrl) continue;
                auto a = state[i], b = state[i | bit];
                state[i] = c * a - s * b;
                state[i | bit] = s * a + c * b;
            }
            break;
        }
    }
}

void apply_program(const GateProgram& p, StateVector& state) {
    if (p.wire_count() > kMaxExecutorWires)
        fail(ErrorCode::TooManyWires,
             "program uses " + std::to_string(p.wire_count()) + " wires, executor limit is " + std::to_string(kMaxExecutorWires));
    if (state.size() != (std::uint64_t(1) << p.wire_count()))
        fail(ErrorCode::InvalidArgument, "state dimension does not match program wires");
    for (const auto& g : p.gates)
        apply_gate(g, state);
}

StateVector execute_program(const GateProgram& p, std::uint64_t initial_basis) {
    if (p.wire_count() > kMaxExecutorWires)
        fail(ErrorCode::TooManyWires,
             "program uses " + std::to_string(p.wire_count()) + " wires, executor limit is " + std::to_string(kMaxExecutorWires));
    const std::uint64_t dim = std::uint64_t(1) << p.wire_count();
    if (initial_basis >= dim)
        fail(ErrorCode::InvalidArgument, "initial basis index outside register");
    StateVector state(dim, {0.0, 0.0});
    state[initial_basis] = 1.0;
    apply_program(p, state);
    return state;
}

} // namespace cubewalk
