#include "ftqec/steane.hpp"

#include <bit>
#include <stdexcept>

namespace ftqec {

std::string syndrome_bits_to_string(uint8_t s) {
    std::string out(3, '0');
    for (int i = 0; i < 3; ++i)
        if ((s >> i) & 1) out[i] = '1';
    return out;
}

uint8_t syndrome_bits_from_string(const std::string& s) {
    if (s.size() != 3) throw std::invalid_argument("syndrome string must have 3 bits");
    uint8_t v = 0;
    for (int i = 0; i < 3; ++i)
        if (s[i] == '1') v |= uint8_t(1) << i;
    return v;
}

CodeDefinition::CodeDefinition() {
    rows_ = {0b0001111, 0b0110110, 0b1101100};  // qubits {1,2,3,4}, {2,3,5,6}, {3,4,6,7}
    for (int q = 0; q < 7; ++q) {
        uint8_t c = 0;
        for (int i = 0; i < 3; ++i)
            if ((rows_[i] >> q) & 1) c |= uint8_t(1) << i;
        cols_[q] = c;
    }
    lut_.fill(0);
    for (int q = 0; q < 7; ++q) lut_[cols_[q]] = uint8_t(1) << q;
    for (int s = 0; s < 8; ++s) {
        uint8_t m = 0;
        for (int i = 0; i < 3; ++i)
            if ((s >> i) & 1) m ^= rows_[i];
        row_group_[s] = m;
    }
}

PauliOperator CodeDefinition::stabilizer_x(int i) const {
    PauliOperator p(kN);
    p.set_masks(rows_[i], 0);
    return p;
}

PauliOperator CodeDefinition::stabilizer_z(int i) const {
    PauliOperator p(kN);
    p.set_masks(0, rows_[i]);
    return p;
}

PauliOperator CodeDefinition::logical_x() const {
    PauliOperator p(kN);
    p.set_masks(kLogicalMask, 0);
    return p;
}

PauliOperator CodeDefinition::logical_z() const {
    PauliOperator p(kN);
    p.set_masks(0, kLogicalMask);
    return p;
}

uint8_t CodeDefinition::syndrome_of_x_mask(uint8_t x_mask) const {
    uint8_t s = 0;
    for (int i = 0; i < 3; ++i)
        if (std::popcount(static_cast<unsigned>(x_mask & rows_[i])) & 1) s |= uint8_t(1) << i;
    return s;
}

Syndrome CodeDefinition::syndrome_of(const PauliOperator& e) const {
    if (e.num_qubits() != kN) throw std::invalid_argument("expected a 7-qubit Pauli");
    Syndrome s;
    s.s_x = syndrome_of_x_mask(static_cast<uint8_t>(e.z_bits()));
    s.s_z = syndrome_of_x_mask(static_cast<uint8_t>(e.x_bits()));
    return s;
}

uint8_t CodeDefinition::syndrome_from_bitstring(uint8_t b) const { return syndrome_of_x_mask(b); }

uint8_t CodeDefinition::syndrome_from_bitstring(const std::string& b) const {
    if (b.size() != 7) throw std::invalid_argument("bit string must have 7 bits");
    uint8_t m = 0;
    for (int q = 0; q < 7; ++q)
        if (b[q] == '1') m |= uint8_t(1) << q;
    return syndrome_from_bitstring(m);
}

PauliOperator CodeDefinition::recovery(const Syndrome& s) const {
    PauliOperator r(kN);
    r.set_masks(recovery_mask(s.s_z), recovery_mask(s.s_x));
    return r;
}

namespace {

PauliOperator reduce_over(const PauliOperator& e, const std::array<uint8_t, 8>& group,
                          uint8_t extra_x, uint8_t extra_z) {
    uint64_t best_x = e.x_bits(), best_z = e.z_bits();
    int best_w = std::popcount(best_x | best_z);
    for (int xi = 0; xi < 8; ++xi) {
        for (int zi = 0; zi < 8; ++zi) {
            for (int l = 0; l < 2; ++l) {
                uint64_t x = e.x_bits() ^ group[xi] ^ (l ? extra_x : 0);
                uint64_t z = e.z_bits() ^ group[zi] ^ (l ? extra_z : 0);
                int w = std::popcount(x | z);
                if (w < best_w || (w == best_w && (x < best_x || (x == best_x && z < best_z)))) {
                    best_x = x;
                    best_z = z;
                    best_w = w;
                }
                if (extra_x == 0 && extra_z == 0) break;
            }
        }
    }
    PauliOperator out(e.num_qubits());
    out.set_masks(best_x, best_z);
    return out;
}

}  // namespace

PauliOperator CodeDefinition::reduce_min_weight(const PauliOperator& e) const {
    return reduce_over(e, row_group_, 0, 0);
}

PauliOperator CodeDefinition::reduce_min_weight_zero_l(const PauliOperator& e) const {
    return reduce_over(e, row_group_, 0, kLogicalMask);
}

int CodeDefinition::min_x_weight_mod_x_group(uint8_t x_mask) const {
    int best = 8;
    for (uint8_t g : row_group_) best = std::min(best, std::popcount(static_cast<unsigned>(x_mask ^ g)));
    return best;
}

int CodeDefinition::min_z_weight_mod_z_group(uint8_t z_mask) const {
    return min_x_weight_mod_x_group(z_mask);
}

PauliOperator CodeDefinition::ideal_decode(const PauliOperator& e) const {
    PauliOperator r = recovery(syndrome_of(e));
    r.set_masks(r.x_bits() ^ e.x_bits(), r.z_bits() ^ e.z_bits());
    return reduce_min_weight(r);
}

bool CodeDefinition::is_estimated_logical_failure(const PauliOperator& r_dot_e) const {
    return std::popcount(r_dot_e.x_bits() & kLogicalMask) & 1;
}

bool CodeDefinition::is_true_logical_failure(const PauliOperator& residual) const {
    return is_estimated_logical_failure(ideal_decode(residual));
}

bool CodeDefinition::is_harmful_for_zero_l(const PauliOperator& e) const {
    // Z errors act trivially on the encoded |0>; failure is exactly an X
    // component that survives a perfect EC round as a logical flip.
    return is_true_logical_failure(e);
}

bool CodeDefinition::is_harmful_for_plus_l(const PauliOperator& e) const {
    uint8_t z = static_cast<uint8_t>(e.z_bits());
    uint8_t rec = recovery_mask(syndrome_of_x_mask(z));
    return std::popcount(static_cast<unsigned>((z ^ rec) & kLogicalMask)) & 1;
}

const CodeDefinition& steane_code() {
    static const CodeDefinition code;
    return code;
}

bool css_harmful(uint64_t x_mask, uint64_t z_mask,
                 const std::vector<uint64_t>& x_group,
                 const std::vector<uint64_t>& z_group) {
    auto min_weight = [](uint64_t m, const std::vector<uint64_t>& group) {
        int best = std::popcount(m);
        for (uint64_t g : group) best = std::min(best, std::popcount(m ^ g));
        return best;
    };
    return min_weight(x_mask, x_group) > 1 || min_weight(z_mask, z_group) > 1;
}

}  // namespace ftqec
