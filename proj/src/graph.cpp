#include "cubewalk/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "cubewalk/error.hpp"

namespace cubewalk {

int CubelikeGraph::coin_width() const {
    // Smallest m with degree <= 2^m; degree 1 needs no coin wire at all.
    int d = degree();
    int m = 0;
    while ((1 << m) < d) ++m;
    return m;
}

namespace {

void check_wire_budget(int n, int delta) {
    int m = 0;
    while ((1 << m) < delta) ++m;
    if (n + m > kMaxWalkWires)
        fail(ErrorCode::WireLimitExceeded,
             "graph needs " + std::to_string(n + m) + " wires, limit is " + std::to_string(kMaxWalkWires));
}

} // namespace

CubelikeGraph make_graph(int n, std::vector<BitString> elements, bool canonicalize) {
    if (n < 1 || n > kMaxBitWidth)
        fail(ErrorCode::InvalidArgument, "dimension " + std::to_string(n) + " outside 1.." + std::to_string(kMaxBitWidth));
    if (elements.empty())
        fail(ErrorCode::EmptyGeneratingSet, "generating set is empty");
    for (const auto& e : elements) {
        if (e.width != n)
            fail(ErrorCode::WidthMismatch,
                 "generator " + e.text() + " has width " + std::to_string(e.width) + ", expected " + std::to_string(n));
        if (e.is_zero())
            fail(ErrorCode::IdentityInGeneratingSet, "generating set contains " + e.text());
    }
    if (canonicalize)
        std::sort(elements.begin(), elements.end());
    std::vector<std::uint64_t> values;
    values.reserve(elements.size());
    for (const auto& e : elements) values.push_back(e.value);
    std::sort(values.begin(), values.end());
    if (auto dup = std::adjacent_find(values.begin(), values.end()); dup != values.end())
        fail(ErrorCode::DuplicateGenerator, "generator " + BitString(*dup, n).text() + " listed twice");
    check_wire_budget(n, static_cast<int>(elements.size()));
    return CubelikeGraph{n, GeneratingSet{std::move(elements)}};
}

CubelikeGraph hypercube(int n) {
    std::vector<BitString> gens;
    gens.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        gens.emplace_back(std::uint64_t(1) << j, n);
    return make_graph(n, std::move(gens), true);
}

CubelikeGraph augmented_cube(int n) {
    if (n < 2)
        fail(ErrorCode::DimensionTooSmall, "augmented cube needs dimension >= 2");
    std::vector<BitString> gens;
    for (int j = 0; j < n; ++j)
        gens.emplace_back(std::uint64_t(1) << j, n);
    // Suffix-ones strings 0^{n-i}1^i; i=1 duplicates the first basis vector.
    for (int i = 2; i <= n; ++i)
        gens.emplace_back((std::uint64_t(1) << i) - 1, n);
    return make_graph(n, std::move(gens), true);
}

CubelikeGraph complete_graph(int n) {
    std::vector<BitString> gens;
    gens.reserve((std::size_t(1) << n) - 1);
    for (std::uint64_t v = 1; v < (std::uint64_t(1) << n); ++v)
        gens.emplace_back(v, n);
    return make_graph(n, std::move(gens), true);
}

namespace {

// Bounded draw via masked rejection; mt19937_64 output is fully specified, so
// results are reproducible across platforms.
std::uint64_t bounded_rand(std::mt19937_64& gen, std::uint64_t bound) {
    std::uint64_t mask = std::bit_ceil(bound) - 1;
    std::uint64_t draw;
    do {
        draw = gen() & mask;
    } while (draw >= bound);
    return draw;
}

} // namespace

CubelikeGraph random_cubelike(int n, int extra, std::uint64_t seed) {
    if (n < 1 || n > kMaxBitWidth)
        fail(ErrorCode::InvalidArgument, "dimension " + std::to_string(n) + " outside 1.." + std::to_string(kMaxBitWidth));
    std::uint64_t pool = (std::uint64_t(1) << n) - 1 - static_cast<std::uint64_t>(n);
    if (extra < 0 || static_cast<std::uint64_t>(extra) > pool)
        fail(ErrorCode::TooManyExtras,
             std::to_string(extra) + " extras requested, only " + std::to_string(pool) + " non-basis strings exist");
    std::vector<BitString> gens;
    for (int j = 0; j < n; ++j)
        gens.emplace_back(std::uint64_t(1) << j, n);

    std::mt19937_64 gen(seed);
    if ((std::uint64_t(1) << n) <= (std::uint64_t(1) << 22)) {
        // Partial Fisher-Yates over the materialized pool of non-basis strings.
        std::vector<std::uint64_t> candidates;
        candidates.reserve(pool);
        for (std::uint64_t v = 1; v < (std::uint64_t(1) << n); ++v)
            if (!std::has_single_bit(v)) candidates.push_back(v);
        for (int i = 0; i < extra; ++i) {
            std::uint64_t j = static_cast<std::uint64_t>(i) + bounded_rand(gen, candidates.size() - static_cast<std::uint64_t>(i));
            std::swap(candidates[static_cast<std::size_t>(i)], candidates[static_cast<std::size_t>(j)]);
            gens.emplace_back(candidates[static_cast<std::size_t>(i)], n);
        }
    } else {
        std::unordered_set<std::uint64_t> chosen;
        while (static_cast<int>(chosen.size()) < extra) {
            std::uint64_t v = 1 + bounded_rand(gen, (std::uint64_t(1) << n) - 1);
            if (std::has_single_bit(v)) continue;
            if (chosen.insert(v).second) gens.emplace_back(v, n);
        }
    }
    return make_graph(n, std::move(gens), true);
}

BitString target_vertex(const CubelikeGraph& g) {
    BitString acc(0, g.n);
    for (const auto& x : g.omega.elements)
        acc = acc ^ x;
    return acc;
}

BitString neighbor(const CubelikeGraph& g, const BitString& v, int k) {
    if (v.width != g.n)
        fail(ErrorCode::WidthMismatch, "vertex width " + std::to_string(v.width) + " for dimension " + std::to_string(g.n));
    if (k < 1 || k > g.degree())
        fail(ErrorCode::EdgeIndexOutOfRange, "edge index " + std::to_string(k) + " outside 1.." + std::to_string(g.degree()));
    return v ^ g.generator(k);
}

std::vector<BitString> b_sequence(int m) {
    if (m < 1)
        fail(ErrorCode::InvalidArgument, "b_sequence needs m >= 1");
    std::vector<BitString> seq;
    seq.reserve(std::size_t(1) << m);
    seq.emplace_back((std::uint64_t(1) << m) - 1, m); // base case: 1^m
    for (std::uint64_t k = 1; k < (std::uint64_t(1) << m); ++k) {
        // k-1 and k differ in their trailing carry run of length tz(k)+1.
        int r = std::countr_zero(k) + 1;
        seq.emplace_back((std::uint64_t(1) << r) - 1, m);
    }
    return seq;
}

CubelikeGraph load_generating_set(std::istream& in, bool canonicalize) {
    std::string line;
    int n = -1;
    std::vector<BitString> elems;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        // trim
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(first, last - first + 1);
        if (n < 0) {
            if (tok.rfind("n=", 0) != 0)
                fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected header n=<int>");
            try {
                n = std::stoi(tok.substr(2));
            } catch (const std::exception&) {
                fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad dimension in header");
            }
            continue;
        }
        BitString b = parse_bits(tok);
        if (b.width != n)
            fail(ErrorCode::WidthMismatch,
                 "line " + std::to_string(lineno) + ": string " + tok + " has width " + std::to_string(b.width) +
                     ", header says n=" + std::to_string(n));
        elems.push_back(b);
    }
    if (n < 0)
        fail(ErrorCode::ParseError, "missing n=<int> header");
    return make_graph(n, std::move(elems), canonicalize);
}

CubelikeGraph load_generating_set_file(const std::string& path, bool canonicalize) {
    std::ifstream f(path);
    if (!f)
        fail(ErrorCode::ParseError, "cannot open " + path);
    return load_generating_set(f, canonicalize);
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyGeneratingSet: return "EmptyGeneratingSet";
        case ErrorCode::IdentityInGeneratingSet: return "IdentityInGeneratingSet";
        case ErrorCode::DuplicateGenerator: return "DuplicateGenerator";
        case ErrorCode::WidthMismatch: return "WidthMismatch";
        case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorCode::TooManyExtras: return "TooManyExtras";
        case ErrorCode::EdgeIndexOutOfRange: return "EdgeIndexOutOfRange";
        case ErrorCode::DegreeNotPowerOfTwo: return "DegreeNotPowerOfTwo";
        case ErrorCode::TooManyWires: return "TooManyWires";
        case ErrorCode::WireLimitExceeded: return "WireLimitExceeded";
        case ErrorCode::EmptyWindow: return "EmptyWindow";
        case ErrorCode::TooFewRows: return "TooFewRows";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace cubewalk
