#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "cubewalk/compile.hpp"
#include "cubewalk/dense.hpp"
#include "cubewalk/error.hpp"
#include "cubewalk/execute.hpp"
#include "cubewalk/verify.hpp"
#include "cubewalk/walk.hpp"

using namespace cubewalk;

namespace {

// Dense operator realized by a program, column by column through the executor.
std::vector<std::complex<double>> program_matrix(const GateProgram& p) {
    const std::uint64_t dim = std::uint64_t(1) << p.wire_count();
    std::vector<std::complex<double>> mat(dim * dim);
    for (std::uint64_t j = 0; j < dim; ++j) {
        auto col = execute_program(p, j);
        for (std::uint64_t i = 0; i < dim; ++i)
            mat[i * dim + j] = col[i];
    }
    return mat;
}

// Expected coin operator on the joint space: (2|D'><D'| - I) tensor identity.
std::vector<std::complex<double>> coin_kron_identity(const CubelikeGraph& g) {
    const std::uint64_t npos = g.vertex_count();
    const int slots = 1 << g.coin_width();
    const std::uint64_t dim = npos * std::uint64_t(slots);
    auto coin = dense_coin_matrix(g);
    std::vector<std::complex<double>> mat(dim * dim, 0.0);
    for (int r = 0; r < slots; ++r)
        for (int c = 0; c < slots; ++c)
            for (std::uint64_t a = 0; a < npos; ++a)
                mat[((std::uint64_t(r) << g.n) | a) * dim + ((std::uint64_t(c) << g.n) | a)] =
                    coin[std::size_t(r) * slots + c];
    return mat;
}

double max_abs_diff(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
    REQUIRE(a.size() == b.size());
    double dev = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        dev = std::max(dev, std::abs(a[i] - b[i]));
    return dev;
}

CubelikeGraph random_graph(int n, int delta, std::mt19937_64& gen) {
    std::vector<std::uint64_t> pool;
    for (std::uint64_t v = 1; v < (std::uint64_t(1) << n); ++v)
        pool.push_back(v);
    for (std::size_t i = 0; i + 1 < pool.size(); ++i)
        std::swap(pool[i], pool[i + gen() % (pool.size() - i)]);
    std::vector<BitString> elems;
    for (int i = 0; i < delta; ++i)
        elems.emplace_back(pool[static_cast<std::size_t>(i)], n);
    return make_graph(n, std::move(elems), true);
}

} // namespace

TEST_CASE("paper diffusion on one coin wire is the swap coin") {
    auto g = hypercube(2); // degree 2, m=1
    auto p = compile_coin(g, CoinStrategy::PaperDiffusion);
    auto mat = program_matrix(p);
    auto want = coin_kron_identity(g);
    CHECK(max_abs_diff(mat, want) < 1e-12);
}

TEST_CASE("paper diffusion at degree four has the -1/2 diagonal") {
    auto g = hypercube(4);
    auto coin = dense_coin_matrix(g);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            CHECK(coin[std::size_t(r) * 4 + c].real() == doctest::Approx(r == c ? -0.5 : 0.5));
    auto p = compile_coin(g, CoinStrategy::PaperDiffusion);
    CHECK(max_abs_diff(program_matrix(p), coin_kron_identity(g)) < 1e-12);
}

TEST_CASE("paper diffusion refuses padded degrees") {
    try {
        compile_coin(hypercube(3), CoinStrategy::PaperDiffusion);
        FAIL("expected DegreeNotPowerOfTwo");
    } catch (const WalkError& e) {
        CHECK(e.code() == ErrorCode::DegreeNotPowerOfTwo);
    }
}

TEST_CASE("prepare-reflect realizes the padded reflection") {
    auto g = hypercube(3); // degree 3 on two coin wires
    auto p = compile_coin(g, CoinStrategy::PrepareReflect);
    CHECK(max_abs_diff(program_matrix(p), coin_kron_identity(g)) < 1e-10);
}

TEST_CASE("prepare-reflect covers every degree up to 15") {
    std::mt19937_64 gen(17);
    for (int delta = 1; delta <= 15; ++delta) {
        auto g = random_graph(4, delta, gen);
        auto p = compile_coin(g, CoinStrategy::PrepareReflect);
        CHECK(max_abs_diff(program_matrix(p), coin_kron_identity(g)) < 1e-10);
    }
}

TEST_CASE("compiled shift for the 2-cube is the known gate list") {
    auto p = compile_shift(hypercube(2));
    REQUIRE(p.gates.size() == 4);
    CHECK(p.gates[0] == Gate::x(2));
    CHECK(p.gates[1] == Gate::mcx({2}, 0));
    CHECK(p.gates[2] == Gate::x(2));
    CHECK(p.gates[3] == Gate::mcx({2}, 1));
    auto counts = gate_counts(p);
    CHECK(counts.x_count == 2);
    CHECK(counts.mcx_count == 2);
}

TEST_CASE("compiled shift blocks follow the relabeling table") {
    auto g = make_graph(4, {parse_bits("0101"), parse_bits("0111"), parse_bits("1001"), parse_bits("1010")}, true);
    auto p = compile_shift(g); // n=4, m=2, coin wires 4 (low) and 5 (high)

    // X blocks: 11, 01, 11, 01 over wires {4,5}; Toffoli targets {0,2},{0,1,2},{0,3},{1,3}
    std::vector<Gate> want;
    want.push_back(Gate::x(4));
    want.push_back(Gate::x(5));
    want.push_back(Gate::mcx({4, 5}, 0));
    want.push_back(Gate::mcx({4, 5}, 2));
    want.push_back(Gate::x(4));
    want.push_back(Gate::mcx({4, 5}, 0));
    want.push_back(Gate::mcx({4, 5}, 1));
    want.push_back(Gate::mcx({4, 5}, 2));
    want.push_back(Gate::x(4));
    want.push_back(Gate::x(5));
    want.push_back(Gate::mcx({4, 5}, 0));
    want.push_back(Gate::mcx({4, 5}, 3));
    want.push_back(Gate::x(4));
    want.push_back(Gate::mcx({4, 5}, 1));
    want.push_back(Gate::mcx({4, 5}, 3));
    CHECK(p.gates == want);
    CHECK(gate_counts(p).mcx_count == 9);
}

TEST_CASE("padded shift keeps the relabeling block without toffolis") {
    auto p = compile_shift(hypercube(3)); // degree 3, m=2: fourth block is X-only
    auto counts = gate_counts(p);
    CHECK(counts.x_count == 6);
    CHECK(counts.mcx_count == 3);
    CHECK(p.gates.back() == Gate::x(3)); // final relabeling restores the coin
}

TEST_CASE("compiled shift equals the reference permutation") {
    std::mt19937_64 gen(23);
    for (int n = 2; n <= 4; ++n)
        for (int delta : {1, 2, 3, 5, 8}) {
            if (delta > (1 << n) - 1) continue;
            auto g = random_graph(n, delta, gen);
            auto p = compile_shift(g);
            auto perm = shift_permutation(g);
            const std::uint64_t dim = std::uint64_t(1) << (g.n + g.coin_width());
            for (std::uint64_t j = 0; j < dim; ++j) {
                auto col = execute_program(p, j);
                for (std::uint64_t i = 0; i < dim; ++i)
                    CHECK(std::abs(col[i] - (perm[j] == i ? 1.0 : 0.0)) < 1e-12);
            }
        }
}

TEST_CASE("coin wires carry an even number of X gates and the exact count") {
    std::mt19937_64 gen(31);
    for (int m = 1; m <= 5; ++m) {
        int n = 5;
        int delta = (1 << m) - (m > 1 ? 1 : 0); // exercise padded and full coins
        auto g = random_graph(n, delta, gen);
        REQUIRE(g.coin_width() == m);
        auto p = compile_shift(g);
        std::vector<int> xs(static_cast<std::size_t>(n + m), 0);
        for (const auto& gate : p.gates)
            if (gate.kind == GateKind::X) ++xs[static_cast<std::size_t>(gate.target)];
        std::int64_t total = 0;
        for (int w = 0; w < n + m; ++w) {
            CHECK(xs[static_cast<std::size_t>(w)] % 2 == 0);
            total += xs[static_cast<std::size_t>(w)];
        }
        CHECK(total == (std::int64_t(1) << (m + 1)) - 2);
    }
}

TEST_CASE("mcx count is the weight sum of the generating set") {
    std::mt19937_64 gen(37);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(gen() % 5);
        int delta = 1 + static_cast<int>(gen() % std::min(8, (1 << n) - 1));
        auto g = random_graph(n, delta, gen);
        std::int64_t weight_sum = 0;
        for (const auto& e : g.omega.elements)
            weight_sum += e.weight();
        CHECK(gate_counts(compile_shift(g)).mcx_count == weight_sum);
    }
}

TEST_CASE("hypercube shift counts match the closed forms") {
    for (int n : {2, 4, 8}) { // power-of-two degree: x = 2^{m+1}-2, mcx = n
        auto g = hypercube(n);
        auto counts = gate_counts(compile_shift(g));
        CHECK(counts.x_count == (std::int64_t(1) << (g.coin_width() + 1)) - 2);
        CHECK(counts.mcx_count == n);
    }
    CHECK(gate_counts(GateProgram{}) == GateCounts{});
}

TEST_CASE("one compiled step equals the dense evolution operator") {
    CHECK(verify_equivalence(hypercube(4), 1, CoinStrategy::PaperDiffusion).pass);
    CHECK(verify_equivalence(hypercube(4), 1, CoinStrategy::PaperDiffusion).max_deviation < 1e-12);
    CHECK(verify_equivalence(augmented_cube(3), 1, CoinStrategy::PrepareReflect).pass);
    CHECK(verify_equivalence(augmented_cube(3), 3, CoinStrategy::PrepareReflect).pass);
}

TEST_CASE("verification flags a corrupted program") {
    auto g = hypercube(3);
    auto p = compile_step(g, CoinStrategy::PrepareReflect);
    for (std::size_t i = 0; i < p.gates.size(); ++i) {
        if (p.gates[i].kind != GateKind::X) continue;
        GateProgram broken = p;
        broken.gates.erase(broken.gates.begin() + static_cast<std::ptrdiff_t>(i));
        auto rep = verify_program(g, broken, 1);
        CHECK_FALSE(rep.pass);
        CHECK(rep.max_deviation > 1e-3);
        break;
    }
}

TEST_CASE("executor basics") {
    GateProgram p{1, 0, 0, {Gate::h(0)}};
    auto v = execute_program(p, 0);
    CHECK(v[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(v[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));

    GateProgram big{20, 7, 0, {}};
    CHECK_THROWS_AS(execute_program(big, 0), WalkError);
}

TEST_CASE("one step program moves the diagonal start as in the worked example") {
    auto g = hypercube(2);
    auto p = compile_step(g, CoinStrategy::PaperDiffusion);
    StateVector state(8, {0.0, 0.0});
    state[0] = 1.0 / std::sqrt(2.0); // |0>|00>
    state[4] = 1.0 / std::sqrt(2.0); // |1>|00>
    apply_program(p, state);
    CHECK(state[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12)); // |0>|01>
    CHECK(state[6].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12)); // |1>|10>
    double rest = std::abs(state[0]) + std::abs(state[2]) + std::abs(state[3]) + std::abs(state[4]) +
                  std::abs(state[5]) + std::abs(state[7]);
    CHECK(rest < 1e-12);
}

TEST_CASE("compiled walk reproduces the engine distributions") {
    // two steps on the 2-cube: all probability on position 11
    auto walk2 = compile_walk(hypercube(2), 2, CoinStrategy::PaperDiffusion);
    auto v = execute_program(walk2, 0);
    double p11 = std::norm(v[3]) + std::norm(v[7]);
    CHECK(std::abs(p11 - 1.0) < 1e-12);

    // three steps on the 3-cube: target probability near the table value
    auto walk3 = compile_walk(hypercube(3), 3, CoinStrategy::PrepareReflect);
    auto w = execute_program(walk3, 0);
    double p7 = 0.0;
    for (int k = 0; k < 4; ++k)
        p7 += std::norm(w[(std::uint64_t(k) << 3) | 7]);
    CHECK(std::abs(p7 - 0.804) <= 0.02);

    // nine steps on the padded augmented 3-cube against the engine
    auto g = augmented_cube(3);
    auto prog = compile_walk(g, 9, CoinStrategy::PrepareReflect);
    auto amps = execute_program(prog, 0);
    auto s = initial_state(g, parse_bits("000"));
    evolve(s, 9);
    auto dist = position_distribution(s);
    for (std::uint64_t a = 0; a < 8; ++a) {
        double p = 0.0;
        for (int k = 0; k < 8; ++k)
            p += std::norm(amps[(std::uint64_t(k) << 3) | a]);
        CHECK(std::abs(p - dist.probabilities[a]) < 1e-9);
    }
}

TEST_CASE("program dumps round-trip") {
    auto g = augmented_cube(3);
    auto p = compile_walk(g, 2, CoinStrategy::PrepareReflect);
    std::string text = format_program(p);
    std::istringstream in(text);
    auto q = parse_program(in);
    CHECK(q.n == p.n);
    CHECK(q.m == p.m);
    CHECK(q.gates == p.gates);
}
