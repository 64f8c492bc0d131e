#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ftqec/circuit.hpp"
#include "ftqec/pauli.hpp"

namespace ftqec {

// Classical Pauli frame carried through Clifford gates. Signs are dropped:
// only measurement flips and the residual error are observable.
class PauliFrame {
  public:
    explicit PauliFrame(int n) : n_(n) {}

    int num_qubits() const { return n_; }
    bool x(int q) const { return (x_ >> q) & 1u; }
    bool z(int q) const { return (z_ >> q) & 1u; }
    uint64_t x_bits() const { return x_; }
    uint64_t z_bits() const { return z_; }

    void clear() { x_ = z_ = 0; }
    void clear(int q) {
        x_ &= ~(uint64_t{1} << q);
        z_ &= ~(uint64_t{1} << q);
    }
    void mul_x(int q) { x_ ^= uint64_t{1} << q; }
    void mul_z(int q) { z_ ^= uint64_t{1} << q; }
    void mul(const PauliOperator& p) {
        x_ ^= p.x_bits();
        z_ ^= p.z_bits();
    }
    void mul_char(int q, char c) {
        if (c == 'X' || c == 'Y') mul_x(q);
        if (c == 'Z' || c == 'Y') mul_z(q);
    }

    void apply_h(int q) {
        uint64_t m = uint64_t{1} << q;
        uint64_t xb = x_ & m, zb = z_ & m;
        x_ = (x_ & ~m) | zb;
        z_ = (z_ & ~m) | xb;
    }
    void apply_cx(int c, int t) {
        if ((x_ >> c) & 1u) x_ ^= uint64_t{1} << t;
        if ((z_ >> t) & 1u) z_ ^= uint64_t{1} << c;
    }
    void apply_swap(int a, int b) {
        bool xa = x(a), xb = x(b), za = z(a), zb = z(b);
        clear(a);
        clear(b);
        if (xa) mul_x(b);
        if (za) mul_z(b);
        if (xb) mul_x(a);
        if (zb) mul_z(a);
    }

    // Flips a Z-basis measurement outcome iff the frame has an X component.
    bool flips_meas_z(int q) const { return x(q); }

    PauliOperator restricted_to(const std::vector<int>& qubits) const {
        PauliOperator p(qubits.size());
        for (size_t i = 0; i < qubits.size(); ++i) {
            p.set_x(i, x(qubits[i]));
            p.set_z(i, z(qubits[i]));
        }
        return p;
    }
    PauliOperator as_pauli() const {
        PauliOperator p(n_);
        p.set_masks(x_, z_);
        return p;
    }

  private:
    int n_;
    uint64_t x_ = 0;
    uint64_t z_ = 0;
};

// A fault injected immediately after the op at gate_index (for PrepZ: after
// the reset; for MeasZ: a classical outcome flip).
struct InjectedFault {
    int gate_index = -1;
    PauliOperator pauli;     // over the full register; empty for pure meas flips
    bool meas_flip = false;
};

struct FrameRunResult {
    PauliOperator residual_data;        // frame restricted to data qubits, in id order
    PauliFrame final_frame;             // full-register frame
    std::vector<uint8_t> flipped_bits;  // one entry per MeasZ, in circuit order
    std::vector<int> label_ids;         // label ids matching flipped_bits
};

// Deterministic frame propagation relative to the fault-free reference run
// with all random outcomes forced to zero. Reports which measurement bits
// flip and the residual Pauli on the data qubits.
FrameRunResult propagate_pauli(const Circuit& c, const std::optional<InjectedFault>& fault);

}  // namespace ftqec
