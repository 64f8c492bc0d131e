#include "ftqec/frame.hpp"

#include <stdexcept>

namespace ftqec {

FrameRunResult propagate_pauli(const Circuit& c, const std::optional<InjectedFault>& fault) {
    if (fault) {
        if (fault->gate_index < 0 || fault->gate_index >= static_cast<int>(c.gates().size()))
            throw std::out_of_range("fault location out of range");
        if (!fault->pauli.is_identity() &&
            fault->pauli.num_qubits() != static_cast<size_t>(c.num_qubits()))
            throw std::invalid_argument("fault Pauli acts on qubits absent from the circuit");
    }
    PauliFrame frame(c.num_qubits());
    FrameRunResult out{PauliOperator{}, frame, {}, {}};

    const auto& gates = c.gates();
    for (int i = 0; i < static_cast<int>(gates.size()); ++i) {
        const Gate& g = gates[i];
        bool flip_here = false;
        switch (g.kind) {
            case GateKind::H: frame.apply_h(g.q0); break;
            case GateKind::CX: frame.apply_cx(g.q0, g.q1); break;
            case GateKind::Swap: frame.apply_swap(g.q0, g.q1); break;
            case GateKind::PrepZ: frame.clear(g.q0); break;
            case GateKind::MeasZ: flip_here = frame.flips_meas_z(g.q0); break;
        }
        if (fault && fault->gate_index == i) {
            if (!fault->pauli.is_identity()) frame.mul(fault->pauli);
            if (fault->meas_flip) {
                if (g.kind != GateKind::MeasZ)
                    throw std::invalid_argument("meas flip fault on a non-measurement op");
                flip_here = !flip_here;
            }
        }
        if (g.kind == GateKind::MeasZ) {
            out.flipped_bits.push_back(flip_here ? 1 : 0);
            out.label_ids.push_back(g.label_id);
        }
    }
    out.final_frame = frame;
    out.residual_data = frame.restricted_to(c.qubits_with_role(QubitRole::Data));
    return out;
}

}  // namespace ftqec
