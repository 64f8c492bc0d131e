#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ftqec/pauli.hpp"

namespace ftqec {

// Syndrome bit strings for the three X-type and three Z-type checks. Bit i
// corresponds to stabilizer i+1; displayed left to right as "s1 s2 s3".
struct Syndrome {
    uint8_t s_x = 0;  // outcomes of the X-type checks (detect Z errors)
    uint8_t s_z = 0;  // outcomes of the Z-type checks (detect X errors)
};

std::string syndrome_bits_to_string(uint8_t s);
uint8_t syndrome_bits_from_string(const std::string& s);

// The [[7,1,3]] code: parity checks, stabilizers, minimum-weight logicals and
// the lookup-table decoder built from them.
class CodeDefinition {
  public:
    static constexpr int kN = 7;
    static constexpr uint8_t kLogicalMask = 0b1001001;  // qubits 1, 4, 7

    CodeDefinition();

    // Row i of the parity-check matrix as a 7-bit mask (bit q = qubit q+1).
    uint8_t h_row(int i) const { return rows_[i]; }
    // Column of the parity-check matrix for qubit q (0-based), as syndrome bits.
    uint8_t column(int q) const { return cols_[q]; }

    PauliOperator stabilizer_x(int i) const;
    PauliOperator stabilizer_z(int i) const;
    PauliOperator logical_x() const;
    PauliOperator logical_z() const;

    Syndrome syndrome_of(const PauliOperator& e) const;
    uint8_t syndrome_of_x_mask(uint8_t x_mask) const;  // Z-type checks on an X error

    // s = H . b mod 2 for a 7-bit measurement string (basis only names the
    // parity-check family; both use the same matrix).
    uint8_t syndrome_from_bitstring(uint8_t b) const;
    uint8_t syndrome_from_bitstring(const std::string& b) const;

    // Standard lookup table: syndrome -> single-qubit mask of the recovery
    // (0 for the trivial syndrome).
    uint8_t recovery_mask(uint8_t syndrome) const { return lut_[syndrome & 7]; }
    PauliOperator recovery(const Syndrome& s) const;  // X and Z parts decoded independently

    // Lowest-weight representative of e modulo the 64-element stabilizer
    // group; ties broken by smallest (x_bits, z_bits). Signs are ignored.
    PauliOperator reduce_min_weight(const PauliOperator& e) const;
    // Same, with Z_L (resp. X_L) adjoined to the group.
    PauliOperator reduce_min_weight_zero_l(const PauliOperator& e) const;

    int min_x_weight_mod_x_group(uint8_t x_mask) const;
    int min_z_weight_mod_z_group(uint8_t z_mask) const;

    // Residual after a perfect EC round: recovery(syndrome_of(e)) * e, reduced.
    PauliOperator ideal_decode(const PauliOperator& e) const;

    bool is_estimated_logical_failure(const PauliOperator& r_dot_e) const;
    bool is_true_logical_failure(const PauliOperator& residual) const;
    // Failure predicate for an encoded |0>: uncorrectable X component.
    bool is_harmful_for_zero_l(const PauliOperator& e) const;
    // Dual predicate for an encoded |+>: uncorrectable Z component.
    bool is_harmful_for_plus_l(const PauliOperator& e) const;

    // All 8 masks of the group generated by the three check rows.
    const std::array<uint8_t, 8>& row_group() const { return row_group_; }

  private:
    std::array<uint8_t, 3> rows_;
    std::array<uint8_t, 7> cols_;
    std::array<uint8_t, 8> lut_;
    std::array<uint8_t, 8> row_group_;
};

const CodeDefinition& steane_code();

// CSS harmfulness against an explicit group: true iff the X part (or Z part)
// cannot be reduced to weight <= 1 by XORing masks from the corresponding
// group. Used for circuits that are not full code blocks.
bool css_harmful(uint64_t x_mask, uint64_t z_mask,
                 const std::vector<uint64_t>& x_group,
                 const std::vector<uint64_t>& z_group);

}  // namespace ftqec
