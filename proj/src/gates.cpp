#include "cubewalk/gates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "cubewalk/error.hpp"

namespace cubewalk {

GateCounts gate_counts(const GateProgram& p) {
    GateCounts c;
    for (const auto& g : p.gates) {
        switch (g.kind) {
            case GateKind::H: ++c.h_count; break;
            case GateKind::X: ++c.x_count; break;
            case GateKind::MCX: ++c.mcx_count; break;
            case GateKind::GPhase: ++c.phase_count; break;
            case GateKind::RY:
            case GateKind::CRY: ++c.rotation_count; break;
        }
    }
    return c;
}

void validate_program(const GateProgram& p) {
    const int wires = p.wire_count();
    for (const auto& g : p.gates) {
        if (g.kind == GateKind::GPhase) {
            if (std::abs(std::abs(g.phase) - 1.0) > 1e-12)
                fail(ErrorCode::InvalidArgument, "global phase factor is not unit modulus");
            continue;
        }
        if (g.target < 0 || g.target >= wires)
            fail(ErrorCode::InvalidArgument, "gate target " + std::to_string(g.target) + " outside 0.." + std::to_string(wires - 1));
        for (int c : g.controls) {
            if (c < 0 || c >= wires)
                fail(ErrorCode::InvalidArgument, "gate control " + std::to_string(c) + " outside 0.." + std::to_string(wires - 1));
            if (c == g.target)
                fail(ErrorCode::InvalidArgument, "gate controls its own target wire " + std::to_string(c));
        }
    }
}

namespace {

std::string phase_text(std::complex<double> z) {
    if (z == std::complex<double>(1.0, 0.0)) return "1";
    if (z == std::complex<double>(-1.0, 0.0)) return "-1";
    if (z == std::complex<double>(0.0, 1.0)) return "i";
    if (z == std::complex<double>(0.0, -1.0)) return "-i";
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

std::complex<double> parse_phase(const std::string& s) {
    if (s == "1") return {1.0, 0.0};
    if (s == "-1") return {-1.0, 0.0};
    if (s == "i") return {0.0, 1.0};
    if (s == "-i") return {0.0, -1.0};
    double re = 0.0, im = 0.0;
    if (std::sscanf(s.c_str(), "%lf%lfi", &re, &im) == 2)
        return {re, im};
    fail(ErrorCode::ParseError, "bad phase factor '" + s + "'");
}

std::string wire_list(const std::vector<int>& ws) {
    std::string out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ws[i]);
    }
    return out;
}

std::vector<int> parse_wire_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(std::stoi(tok));
    return out;
}

} // namespace

std::string format_program(const GateProgram& p) {
    std::string out = "# cubewalk program n=" + std::to_string(p.n) + " m=" + std::to_string(p.m) +
                      " ancillas=" + std::to_string(p.ancillas) + "\n";
    char buf[96];
    for (const auto& g : p.gates) {
        switch (g.kind) {
            case GateKind::H: out += "H " + std::to_string(g.target) + "\n"; break;
            case GateKind::X: out += "X " + std::to_string(g.target) + "\n"; break;
            case GateKind::MCX:
                out += "MCX " + wire_list(g.controls) + " -> " + std::to_string(g.target) + "\n";
                break;
            case GateKind::GPhase: out += "GPHASE " + phase_text(g.phase) + "\n"; break;
            case GateKind::RY:
                std::snprintf(buf, sizeof buf, "RY %d %.17g\n", g.target, g.angle);
                out += buf;
                break;
            case GateKind::CRY:
                std::snprintf(buf, sizeof buf, "CRY %s -> %d %.17g\n", wire_list(g.controls).c_str(), g.target, g.angle);
                out += buf;
                break;
        }
    }
    return out;
}

GateProgram parse_program(std::istream& in) {
    GateProgram p;
    std::string line;
    bool have_header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!have_header) {
            int n = 0, m = 0, anc = 0;
            if (std::sscanf(line.c_str(), "# cubewalk program n=%d m=%d ancillas=%d", &n, &m, &anc) != 3)
                fail(ErrorCode::ParseError, "missing program header");
            p.n = n;
            p.m = m;
            p.ancillas = anc;
            have_header = true;
            continue;
        }
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string op;
        ss >> op;
        try {
            if (op == "H" || op == "X") {
                int w;
                ss >> w;
                if (!ss) throw std::invalid_argument("wire");
                p.gates.push_back(op == "H" ? Gate::h(w) : Gate::x(w));
            } else if (op == "MCX") {
                std::string ctrls, arrow;
                int t;
                ss >> ctrls >> arrow >> t;
                if (!ss || arrow != "->") throw std::invalid_argument("mcx");
                p.gates.push_back(Gate::mcx(parse_wire_list(ctrls), t));
            } else if (op == "GPHASE") {
                std::string z;
                ss >> z;
                p.gates.push_back(Gate::gphase(parse_phase(z)));
            } else if (op == "RY") {
                int w;
                double a;
                ss >> w >> a;
                if (!ss) throw std::invalid_argument("ry");
                p.gates.push_back(Gate::ry(w, a));
            } else if (op == "CRY") {
                std::string ctrls, arrow;
                int t;
                double a;
                ss >> ctrls >> arrow >> t >> a;
                if (!ss || arrow != "->") throw std::invalid_argument("cry");
                p.gates.push_back(Gate::cry(parse_wire_list(ctrls), t, a));
            } else {
                throw std::invalid_argument("op");
            }
        } catch (const WalkError&) {
            throw;
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad gate '" + line + "'");
        }
    }
    if (!have_header)
        fail(ErrorCode::ParseError, "empty program file");
    validate_program(p);
    return p;
}

GateProgram parse_program_file(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        fail(ErrorCode::ParseError, "cannot open " + path);
    return parse_program(f);
}

} // namespace cubewalk
