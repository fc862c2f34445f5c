#include "cubewalk/qasm.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "cubewalk/error.hpp"

namespace cubewalk {

namespace {

// V-chain: fold controls pairwise into ancillas, CX onto the target, then
// uncompute. Needs k-1 ancillas for k controls and restores them all.
void emit_vchain(std::vector<Gate>& out, const std::vector<int>& ctrls, int target, int anc_base) {
    const int k = static_cast<int>(ctrls.size());
    std::vector<Gate> compute;
    compute.push_back(Gate::mcx({ctrls[0], ctrls[1]}, anc_base));
    for (int i = 2; i < k; ++i)
        compute.push_back(Gate::mcx({ctrls[static_cast<std::size_t>(i)], anc_base + i - 2}, anc_base + i - 1));
    for (const auto& g : compute) out.push_back(g);
    out.push_back(Gate::mcx({anc_base + k - 2}, target));
    for (auto it = compute.rbegin(); it != compute.rend(); ++it) out.push_back(*it);
}

} // namespace

GateProgram lower_program(const GateProgram& p, McxLowering lowering) {
    validate_program(p);
    GateProgram out{p.n, p.m, p.ancillas, {}};

    int max_ctrls = 0;
    for (const auto& g : p.gates)
        if (g.kind == GateKind::MCX || g.kind == GateKind::CRY)
            max_ctrls = std::max(max_ctrls, static_cast<int>(g.controls.size()));

    int anc_base = p.n + p.m + p.ancillas;
    if (lowering == McxLowering::AncillaLadder && max_ctrls >= 3)
        out.ancillas = p.ancillas + (max_ctrls - 1); // m-1 for compiler output, whose widest MCX has m controls

    for (const auto& g : p.gates) {
        switch (g.kind) {
            case GateKind::CRY: {
                // Controlled rotation as two half-angle rotations around MCX pairs.
                out.gates.push_back(Gate::ry(g.target, g.angle / 2.0));
                out.gates.push_back(Gate::mcx(g.controls, g.target));
                out.gates.push_back(Gate::ry(g.target, -g.angle / 2.0));
                out.gates.push_back(Gate::mcx(g.controls, g.target));
                break;
            }
            case GateKind::MCX:
                out.gates.push_back(g);
                break;
            default:
                out.gates.push_back(g);
                break;
        }
    }

    if (lowering == McxLowering::AncillaLadder) {
        std::vector<Gate> lowered;
        for (const auto& g : out.gates) {
            if (g.kind == GateKind::MCX && g.controls.size() >= 3)
                emit_vchain(lowered, g.controls, g.target, anc_base);
            else
                lowered.push_back(g);
        }
        out.gates = std::move(lowered);
    }
    validate_program(out);
    return out;
}

std::string emit_qasm(const GateProgram& p, McxLowering lowering) {
    GateProgram low = lower_program(p, lowering);

    std::complex<double> phase_product{1.0, 0.0};
    std::set<int> opaque_arities;
    for (const auto& g : low.gates) {
        if (g.kind == GateKind::GPhase) phase_product *= g.phase;
        if (g.kind == GateKind::MCX && g.controls.size() >= 3)
            opaque_arities.insert(static_cast<int>(g.controls.size()));
    }

    std::string out;
    char buf[160];
    out += "OPENQASM 2.0;\n";
    out += "include \"qelib1.inc\";\n";
    if (std::abs(phase_product - std::complex<double>(1.0, 0.0)) > 0.0) {
        std::snprintf(buf, sizeof buf, "// global phase factor %.17g%+.17gi applied by this circuit\n",
                      phase_product.real(), phase_product.imag());
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "qreg q[%d];\n", low.n + low.m);
    out += buf;
    if (low.ancillas > 0) {
        std::snprintf(buf, sizeof buf, "qreg anc[%d];\n", low.ancillas);
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "creg c[%d];\n", low.n);
    out += buf;
    for (int arity : opaque_arities) {
        out += "opaque mcx" + std::to_string(arity) + " ";
        for (int i = 0; i < arity; ++i)
            out += "c" + std::to_string(i) + ",";
        out += "t;\n";
    }

    const int main_wires = low.n + low.m;
    auto wire = [&](int w) -> std::string {
        if (w < main_wires) return "q[" + std::to_string(w) + "]";
        return "anc[" + std::to_string(w - main_wires) + "]";
    };

    for (const auto& g : low.gates) {
        switch (g.kind) {
            case GateKind::H:
                out += "h " + wire(g.target) + ";\n";
                break;
            case GateKind::X:
                out += "x " + wire(g.target) + ";\n";
                break;
            case GateKind::RY: {
                std::snprintf(buf, sizeof buf, "ry(%.17g) %s;\n", g.angle, wire(g.target).c_str());
                out += buf;
                break;
            }
            case GateKind::GPhase: {
                std::snprintf(buf, sizeof buf, "// gphase %.17g%+.17gi\n", g.phase.real(), g.phase.imag());
                out += buf;
                break;
            }
            case GateKind::MCX: {
                const std::size_t k = g.controls.size();
                if (k == 0) {
                    out += "x " + wire(g.target) + ";\n";
                } else if (k == 1) {
                    out += "cx " + wire(g.controls[0]) + "," + wire(g.target) + ";\n";
                } else if (k == 2) {
                    out += "ccx " + wire(g.controls[0]) + "," + wire(g.controls[1]) + "," + wire(g.target) + ";\n";
                } else {
                    out += "mcx" + std::to_string(k) + " ";
                    for (int c : g.controls)
                        out += wire(c) + ",";
                    out += wire(g.target) + ";\n";
                }
                break;
            }
            case GateKind::CRY:
                fail(ErrorCode::InvalidArgument, "controlled rotation survived lowering");
        }
    }
    for (int j = 0; j < low.n; ++j) {
        std::snprintf(buf, sizeof buf, "measure q[%d] -> c[%d];\n", j, j);
        out += buf;
    }
    return out;
}

} // namespace cubewalk
