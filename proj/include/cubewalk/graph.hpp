#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cubewalk/bitstring.hpp"

namespace cubewalk {

// Joint register limit: position (n) plus coin (m) wires.
inline constexpr int kMaxWalkWires = 30;

// Ordered generating set of Z_2^n; canonical form is strictly increasing.
struct GeneratingSet {
    std::vector<BitString> elements;

    int size() const { return static_cast<int>(elements.size()); }
    const BitString& at(int k) const { return elements[static_cast<std::size_t>(k)]; } // 0-based
};

// Cayley graph over the Boolean group: vertices are n-bit strings, vertex v is
// adjacent to v ^ omega(k) for each generator. Degree is |omega| and the coin
// register is the smallest m with degree <= 2^m.
struct CubelikeGraph {
    int n = 1;
    GeneratingSet omega;

    int degree() const { return omega.size(); }
    int coin_width() const;
    std::uint64_t vertex_count() const { return std::uint64_t(1) << n; }

    // 1-based access matching edge index k in 1..degree.
    const BitString& generator(int k) const { return omega.elements[static_cast<std::size_t>(k - 1)]; }
};

CubelikeGraph make_graph(int n, std::vector<BitString> elements, bool canonicalize);

// Built-in families.
CubelikeGraph hypercube(int n);
CubelikeGraph augmented_cube(int n);     // n >= 2
CubelikeGraph complete_graph(int n);
CubelikeGraph random_cubelike(int n, int extra, std::uint64_t seed);

// XOR of all generators; empirically the vertex of maximal probability at the
// conjectured hitting time.
BitString target_vertex(const CubelikeGraph& g);

// v ^ omega(k) for edge index k in 1..degree.
BitString neighbor(const CubelikeGraph& g, const BitString& v, int k);

// X-gate patterns applied per shift block: entry k-1 is the mask whose set
// bits get an X before the block-k Toffolis. Entry 0 is 1^m; later entries
// cover the trailing bits in which k-1 and k differ.
std::vector<BitString> b_sequence(int m);

// Plain-text generating set: first line `n=<int>`, one width-n string per
// line, `#` starts a comment.
CubelikeGraph load_generating_set(std::istream& in, bool canonicalize);
CubelikeGraph load_generating_set_file(const std::string& path, bool canonicalize);

} // namespace cubewalk
