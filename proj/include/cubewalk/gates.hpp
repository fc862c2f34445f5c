#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cubewalk {

enum class GateKind { H, X, MCX, GPhase, RY, CRY };

// One abstract gate over the joint register. Wires 0..n-1 are position bits
// (wire p = bit p of the vertex label), wires n..n+m-1 are coin bits with
// wire n the least significant, ancillas follow when a program was lowered.
struct Gate {
    GateKind kind;
    int target = -1;
    std::vector<int> controls;          // MCX / CRY only; empty MCX acts as X
    double angle = 0.0;                 // RY / CRY
    std::complex<double> phase{1.0, 0.0}; // GPhase factor, modulus 1

    static Gate h(int wire) { return {GateKind::H, wire, {}, 0.0, {1.0, 0.0}}; }
    static Gate x(int wire) { return {GateKind::X, wire, {}, 0.0, {1.0, 0.0}}; }
    static Gate mcx(std::vector<int> ctrls, int wire) { return {GateKind::MCX, wire, std::move(ctrls), 0.0, {1.0, 0.0}}; }
    static Gate gphase(std::complex<double> factor) { return {GateKind::GPhase, -1, {}, 0.0, factor}; }
    static Gate ry(int wire, double theta) { return {GateKind::RY, wire, {}, theta, {1.0, 0.0}}; }
    static Gate cry(std::vector<int> ctrls, int wire, double theta) { return {GateKind::CRY, wire, std::move(ctrls), theta, {1.0, 0.0}}; }

    friend bool operator==(const Gate& a, const Gate& b) = default;
};

struct GateProgram {
    int n = 0;
    int m = 0;
    int ancillas = 0;
    std::vector<Gate> gates;

    int wire_count() const { return n + m + ancillas; }
    void append(const GateProgram& other) { gates.insert(gates.end(), other.gates.begin(), other.gates.end()); }
};

struct GateCounts {
    std::int64_t x_count = 0;
    std::int64_t mcx_count = 0;
    std::int64_t h_count = 0;
    std::int64_t phase_count = 0;
    std::int64_t rotation_count = 0;

    friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

GateCounts gate_counts(const GateProgram& p);

// Validates wire ranges and control/target disjointness.
void validate_program(const GateProgram& p);

// One gate per line: `H 2`, `X 4`, `MCX 4,5 -> 0`, `GPHASE i`,
// `RY 4 1.2309594`, `CRY 4,5 -> 3 1.2309594`. A header comment carries the
// register shape so programs round-trip through files.
std::string format_program(const GateProgram& p);
GateProgram parse_program(std::istream& in);
GateProgram parse_program_file(const std::string& path);

} // namespace cubewalk
