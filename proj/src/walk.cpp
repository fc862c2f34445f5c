#include "cubewalk/walk.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "cubewalk/error.hpp"

namespace cubewalk {

WalkState initial_state(const CubelikeGraph& g, const BitString& start, CoinPadding padding) {
    if (start.width != g.n)
        fail(ErrorCode::WidthMismatch,
             "start vertex width " + std::to_string(start.width) + " for dimension " + std::to_string(g.n));
    WalkState s{g, padding, {}};
    s.amps.assign(std::uint64_t(s.coin_slots()) << g.n, Amplitude(0.0, 0.0));
    int active = s.active_slots();
    double a = 1.0 / std::sqrt(static_cast<double>(active));
    for (int k = 0; k < active; ++k)
        s.amp(k, start.value) = a;
    return s;
}

void apply_coin(WalkState& s) {
    const std::uint64_t npos = s.positions();
    const int slots = s.coin_slots();
    const int active = s.active_slots();
    const double scale = 2.0 / static_cast<double>(active);

    // Column sums over active slots, then one sweep per slice.
    static thread_local std::vector<Amplitude> sums;
    sums.assign(npos, Amplitude(0.0, 0.0));
    for (int k = 0; k < active; ++k) {
        const Amplitude* slice = s.amps.data() + (std::uint64_t(k) << s.graph.n);
        for (std::uint64_t a = 0; a < npos; ++a)
            sums[a] += slice[a];
    }
    for (int k = 0; k < slots; ++k) {
        Amplitude* slice = s.amps.data() + (std::uint64_t(k) << s.graph.n);
        if (k < active) {
            for (std::uint64_t a = 0; a < npos; ++a)
                slice[a] = scale * sums[a] - slice[a];
        } else {
            for (std::uint64_t a = 0; a < npos; ++a)
                slice[a] = -slice[a];
        }
    }
}

void apply_shift(WalkState& s) {
    const std::uint64_t npos = s.positions();
    for (int k = 1; k <= s.graph.degree(); ++k) {
        const std::uint64_t mask = s.graph.generator(k).value;
        Amplitude* slice = s.amps.data() + (std::uint64_t(k - 1) << s.graph.n);
        // XOR by mask pairs each index with a strictly larger partner once.
        for (std::uint64_t a = 0; a < npos; ++a) {
            std::uint64_t b = a ^ mask;
            if (a < b) std::swap(slice[a], slice[b]);
        }
    }
    // Loop-padded slices shift along the identity; Zero-padded slices are
    // fixed by definition. Either way: nothing to do.
}

void step(WalkState& s) {
    apply_coin(s);
    apply_shift(s);
}

void evolve(WalkState& s, int steps) {
    if (steps < 0)
        fail(ErrorCode::InvalidArgument, "negative step count");
    for (int t = 0; t < steps; ++t)
        step(s);
}

Distribution position_distribution(const WalkState& s) {
    Distribution d;
    d.probabilities.assign(s.positions(), 0.0);
    const std::uint64_t npos = s.positions();
    for (int k = 0; k < s.coin_slots(); ++k) {
        const Amplitude* slice = s.amps.data() + (std::uint64_t(k) << s.graph.n);
        for (std::uint64_t a = 0; a < npos; ++a)
            d.probabilities[a] += std::norm(slice[a]);
    }
    return d;
}

double norm(const WalkState& s) {
    double total = 0.0;
    for (const auto& a : s.amps)
        total += std::norm(a);
    return std::sqrt(total);
}

void write_distribution_csv(std::ostream& out, const CubelikeGraph& g, const Distribution& dist) {
    out << "vertex,bits,probability\n";
    char buf[64];
    for (std::uint64_t v = 0; v < dist.probabilities.size(); ++v) {
        std::snprintf(buf, sizeof buf, "%.12g", dist.probabilities[v]);
        out << v << ',' << BitString(v, g.n).text() << ',' << buf << '\n';
    }
}

} // namespace cubewalk
