#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cubewalk/graph.hpp"

namespace cubewalk {

using Amplitude = std::complex<double>;

// Treatment of the 2^m - degree unused coin slots.
//  Zero: the padded coin reflects about the uniform state over the real edge
//        slots only; padding amplitudes start at zero and stay there.
//  Loop: the generating set is conceptually padded with identity elements, so
//        the coin is the full 2^m reflection and padded slots shift nowhere.
//        On the all-nonzero-generators graph this walk returns to the start
//        vertex with probability exactly 1 every fourth step.
enum class CoinPadding { Zero, Loop };

// Exact amplitudes over (coin slot, vertex), coin-major so each coin slice is
// a contiguous 2^n block.
struct WalkState {
    CubelikeGraph graph;
    CoinPadding padding = CoinPadding::Zero;
    std::vector<Amplitude> amps;

    std::uint64_t positions() const { return graph.vertex_count(); }
    int coin_slots() const { return 1 << graph.coin_width(); }
    // Slots that carry walk amplitude: degree, or all 2^m in Loop mode.
    int active_slots() const { return padding == CoinPadding::Zero ? graph.degree() : coin_slots(); }

    Amplitude& amp(int coin, std::uint64_t pos) { return amps[(std::uint64_t(coin) << graph.n) | pos]; }
    const Amplitude& amp(int coin, std::uint64_t pos) const { return amps[(std::uint64_t(coin) << graph.n) | pos]; }
};

struct Distribution {
    std::vector<double> probabilities;
};

// Uniform superposition over the active coin slots at the start vertex.
WalkState initial_state(const CubelikeGraph& g, const BitString& start, CoinPadding padding = CoinPadding::Zero);

// Reflection about the uniform coin state, applied per position column.
void apply_coin(WalkState& s);

// Per-slice XOR permutation; slices beyond the degree stay put.
void apply_shift(WalkState& s);

// One step is coin followed by shift; evolve repeats it.
void step(WalkState& s);
void evolve(WalkState& s, int steps);

Distribution position_distribution(const WalkState& s);

double norm(const WalkState& s);

// CSV rows `vertex,bits,probability` for all vertices ascending.
void write_distribution_csv(std::ostream& out, const CubelikeGraph& g, const Distribution& dist);

} // namespace cubewalk
