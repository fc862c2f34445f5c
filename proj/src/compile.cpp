#include "cubewalk/compile.hpp"

#include <cmath>

#include "cubewalk/error.hpp"

namespace cubewalk {

namespace {

constexpr std::complex<double> kImag{0.0, 1.0};

std::vector<int> all_coin_wires(const CubelikeGraph& g) {
    std::vector<int> ws;
    for (int j = 0; j < g.coin_width(); ++j)
        ws.push_back(g.n + j);
    return ws;
}

// Reflection 2|0^m><0^m| - I on the coin wires: X conjugation of an
// all-controlled Z (H-MCX-H on the top wire), two iI factors supplying the
// overall minus sign.
void emit_zero_reflection(GateProgram& p, const CubelikeGraph& g) {
    const int m = g.coin_width();
    const int top = g.n + m - 1;
    std::vector<int> lower;
    for (int j = 0; j < m - 1; ++j)
        lower.push_back(g.n + j);

    for (int w : all_coin_wires(g)) p.gates.push_back(Gate::x(w));
    p.gates.push_back(Gate::gphase(kImag));
    p.gates.push_back(Gate::h(top));
    p.gates.push_back(Gate::mcx(lower, top));
    p.gates.push_back(Gate::h(top));
    p.gates.push_back(Gate::gphase(kImag));
    for (int w : all_coin_wires(g)) p.gates.push_back(Gate::x(w));
}

// Uniform superposition over [0, count) on w coin wires, recursing from the
// top wire down. `ctx` collects the positive controls of the branch taken.
void emit_prep(GateProgram& p, int base, int w, int count, std::vector<int>& ctx) {
    if (count <= 1 || w == 0) return;
    const int half = 1 << (w - 1);
    const int top = base + w - 1;

    auto rotate = [&](int wire, double theta) {
        if (ctx.empty())
            p.gates.push_back(Gate::ry(wire, theta));
        else
            p.gates.push_back(Gate::cry(ctx, wire, theta));
    };

    if (count == (1 << w)) {
        for (int j = 0; j < w; ++j)
            rotate(base + j, M_PI / 2.0);
        return;
    }
    if (count <= half) {
        emit_prep(p, base, w - 1, count, ctx);
        return;
    }
    // Split: |0> branch holds the full lower half, |1> branch the remainder.
    double theta = 2.0 * std::acos(std::sqrt(double(half) / double(count)));
    rotate(top, theta);

    p.gates.push_back(Gate::x(top));
    ctx.push_back(top);
    emit_prep(p, base, w - 1, half, ctx);
    ctx.pop_back();
    p.gates.push_back(Gate::x(top));

    ctx.push_back(top);
    emit_prep(p, base, w - 1, count - half, ctx);
    ctx.pop_back();
}

GateProgram reversed_adjoint(const GateProgram& p) {
    GateProgram out{p.n, p.m, p.ancillas, {}};
    for (auto it = p.gates.rbegin(); it != p.gates.rend(); ++it) {
        Gate g = *it;
        if (g.kind == GateKind::RY || g.kind == GateKind::CRY)
            g.angle = -g.angle;
        else if (g.kind == GateKind::GPhase)
            g.phase = std::conj(g.phase);
        out.gates.push_back(std::move(g));
    }
    return out;
}

} // namespace

CoinStrategy default_strategy(const CubelikeGraph& g) {
    return g.degree() == (1 << g.coin_width()) ? CoinStrategy::PaperDiffusion : CoinStrategy::PrepareReflect;
}

GateProgram uniform_prep(const CubelikeGraph& g, int count) {
    GateProgram p{g.n, g.coin_width(), 0, {}};
    std::vector<int> ctx;
    emit_prep(p, g.n, g.coin_width(), count, ctx);
    return p;
}

GateProgram compile_coin(const CubelikeGraph& g, CoinStrategy strategy) {
    const int m = g.coin_width();
    GateProgram p{g.n, m, 0, {}};
    if (m == 0)
        return p; // degree 1: the coin is the 1x1 identity

    if (strategy == CoinStrategy::PaperDiffusion) {
        if (g.degree() != (1 << m))
            fail(ErrorCode::DegreeNotPowerOfTwo,
                 "paper-diffusion needs degree 2^m, got " + std::to_string(g.degree()) + " with m=" + std::to_string(m));
        for (int w : all_coin_wires(g)) p.gates.push_back(Gate::h(w));
        emit_zero_reflection(p, g);
        for (int w : all_coin_wires(g)) p.gates.push_back(Gate::h(w));
        return p;
    }

    // W (2|0><0| - I) W^dag with W|0^m> = |D'>.
    GateProgram w = uniform_prep(g, g.degree());
    p.append(reversed_adjoint(w));
    emit_zero_reflection(p, g);
    p.append(w);
    return p;
}

GateProgram compile_shift(const CubelikeGraph& g) {
    const int m = g.coin_width();
    GateProgram p{g.n, m, 0, {}};
    std::vector<int> coin = all_coin_wires(g);

    if (m == 0) {
        // Single slot: the one generator shifts unconditionally.
        const BitString& omega = g.generator(1);
        for (int pos = 0; pos < g.n; ++pos)
            if (omega.bit(pos)) p.gates.push_back(Gate::mcx({}, pos));
        return p;
    }

    const auto bseq = b_sequence(m);
    for (int k = 1; k <= (1 << m); ++k) {
        const BitString& relabel = bseq[static_cast<std::size_t>(k - 1)];
        for (int j = 0; j < m; ++j)
            if (relabel.bit(j)) p.gates.push_back(Gate::x(g.n + j));
        if (k <= g.degree()) {
            const BitString& omega = g.generator(k);
            for (int pos = 0; pos < g.n; ++pos)
                if (omega.bit(pos)) p.gates.push_back(Gate::mcx(coin, pos));
        }
    }
    return p;
}

GateProgram compile_step(const CubelikeGraph& g, CoinStrategy strategy) {
    GateProgram p = compile_coin(g, strategy);
    p.append(compile_shift(g));
    return p;
}

GateProgram compile_walk(const CubelikeGraph& g, int steps, CoinStrategy strategy) {
    if (steps < 1)
        fail(ErrorCode::InvalidArgument, "walk needs at least one step");
    const int m = g.coin_width();
    GateProgram p{g.n, m, 0, {}};
    if (g.degree() == (1 << m)) {
        for (int w : all_coin_wires(g)) p.gates.push_back(Gate::h(w));
    } else {
        p.append(uniform_prep(g, g.degree()));
    }
    GateProgram one = compile_step(g, strategy);
    for (int t = 0; t < steps; ++t)
        p.append(one);
    return p;
}

} // namespace cubewalk
