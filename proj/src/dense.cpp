#include "cubewalk/dense.hpp"

#include <algorithm>

namespace cubewalk {

std::vector<std::complex<double>> dense_coin_matrix(const CubelikeGraph& g) {
    const int dim = 1 << g.coin_width();
    const int delta = g.degree();
    const double off = 2.0 / static_cast<double>(delta);
    std::vector<std::complex<double>> c(std::size_t(dim) * dim, 0.0);
    for (int row = 0; row < dim; ++row)
        for (int col = 0; col < dim; ++col) {
            double v = (row < delta && col < delta) ? off : 0.0;
            if (row == col) v -= 1.0;
            c[std::size_t(row) * dim + col] = v;
        }
    return c;
}

std::vector<std::uint64_t> shift_permutation(const CubelikeGraph& g) {
    const std::uint64_t npos = g.vertex_count();
    const int slots = 1 << g.coin_width();
    std::vector<std::uint64_t> perm(std::uint64_t(slots) << g.n);
    for (int k = 0; k < slots; ++k) {
        std::uint64_t mask = (k < g.degree()) ? g.generator(k + 1).value : 0;
        for (std::uint64_t a = 0; a < npos; ++a)
            perm[(std::uint64_t(k) << g.n) | a] = (std::uint64_t(k) << g.n) | (a ^ mask);
    }
    return perm;
}

void apply_dense_step(const CubelikeGraph& g, std::vector<std::complex<double>>& state) {
    const std::uint64_t npos = g.vertex_count();
    const int slots = 1 << g.coin_width();
    const auto coin = dense_coin_matrix(g);

    std::vector<std::complex<double>> next(state.size(), 0.0);
    for (std::uint64_t a = 0; a < npos; ++a)
        for (int row = 0; row < slots; ++row) {
            std::complex<double> acc = 0.0;
            for (int col = 0; col < slots; ++col)
                acc += coin[std::size_t(row) * slots + col] * state[(std::uint64_t(col) << g.n) | a];
            next[(std::uint64_t(row) << g.n) | a] = acc;
        }

    const auto perm = shift_permutation(g);
    for (std::size_t i = 0; i < next.size(); ++i)
        state[perm[i]] = next[i];
}

std::vector<std::complex<double>> dense_step_matrix(const CubelikeGraph& g) {
    const std::uint64_t dim = std::uint64_t(1) << (g.n + g.coin_width());
    std::vector<std::complex<double>> u(dim * dim, 0.0);
    std::vector<std::complex<double>> col(dim);
    for (std::uint64_t j = 0; j < dim; ++j) {
        std::fill(col.begin(), col.end(), std::complex<double>(0.0, 0.0));
        col[j] = 1.0;
        apply_dense_step(g, col);
        for (std::uint64_t i = 0; i < dim; ++i)
            u[i * dim + j] = col[i];
    }
    return u;
}

} // namespace cubewalk
