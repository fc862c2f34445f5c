#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cubewalk/graph.hpp"

namespace cubewalk {

// Reference construction of one walk step as explicit linear algebra: the
// padded coin reflection as a dense 2^m x 2^m matrix and the shift as an
// index permutation. Deliberately naive; serves as the oracle the optimized
// engine and the compiled circuits are checked against.

// Row-major 2^m x 2^m matrix: 2/degree on the leading degree x degree block,
// minus the identity.
std::vector<std::complex<double>> dense_coin_matrix(const CubelikeGraph& g);

// Permutation of joint indices (coin slot * 2^n + position): slot k-1 sends a
// to a ^ omega(k) for k <= degree, later slots stay put.
std::vector<std::uint64_t> shift_permutation(const CubelikeGraph& g);

// Applies coin-tensor-identity then the shift permutation to a 2^{n+m} vector.
void apply_dense_step(const CubelikeGraph& g, std::vector<std::complex<double>>& state);

// Full dense step operator, dimension 2^{n+m}; intended for small graphs.
std::vector<std::complex<double>> dense_step_matrix(const CubelikeGraph& g);

} // namespace cubewalk
