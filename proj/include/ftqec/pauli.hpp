#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace ftqec {

// An n-qubit Pauli operator stored as X/Z bit masks plus a global phase
// exponent k with P = i^k * prod_q X^x_q Z^z_q. Supports up to 64 qubits.
class PauliOperator {
  public:
    PauliOperator() = default;
    explicit PauliOperator(size_t n) : n_(n) {}

    // Parses strings like "XIZ", "-XX", "+IYZ". '-' inside the body and 'I'
    // both mean identity on that qubit; a leading '+'/'-' sets the sign.
    static PauliOperator from_string(std::string_view s);
    static PauliOperator single(size_t n, size_t q, char kind);

    size_t num_qubits() const { return n_; }

    bool x(size_t q) const { return (x_bits_ >> q) & 1u; }
    bool z(size_t q) const { return (z_bits_ >> q) & 1u; }
    void set_x(size_t q, bool v) { x_bits_ = (x_bits_ & ~(uint64_t{1} << q)) | (uint64_t{v} << q); }
    void set_z(size_t q, bool v) { z_bits_ = (z_bits_ & ~(uint64_t{1} << q)) | (uint64_t{v} << q); }
    void clear(size_t q) { set_x(q, false); set_z(q, false); }

    uint64_t x_bits() const { return x_bits_; }
    uint64_t z_bits() const { return z_bits_; }
    void set_masks(uint64_t x, uint64_t z) { x_bits_ = x; z_bits_ = z; }

    int weight() const { return std::popcount(x_bits_ | z_bits_); }
    bool is_identity() const { return (x_bits_ | z_bits_) == 0; }

    // Phase exponent k of i^k in the X-then-Z normal form.
    int phase_exponent() const { return phase_; }

    PauliOperator& operator*=(const PauliOperator& other);
    friend PauliOperator operator*(PauliOperator a, const PauliOperator& b) { return a *= b; }

    bool commutes(const PauliOperator& other) const {
        int s = std::popcount(x_bits_ & other.z_bits_) + std::popcount(z_bits_ & other.x_bits_);
        return (s & 1) == 0;
    }

    // Equality of the operator content, ignoring phase.
    bool same_pauli(const PauliOperator& other) const {
        return x_bits_ == other.x_bits_ && z_bits_ == other.z_bits_;
    }
    bool operator==(const PauliOperator& other) const {
        return n_ == other.n_ && same_pauli(other) && phase_ == other.phase_;
    }

    char letter(size_t q) const {
        bool xb = x(q), zb = z(q);
        if (xb && zb) return 'Y';
        if (xb) return 'X';
        if (zb) return 'Z';
        return 'I';
    }

    // "IXYZ" style. With dashes (the table style) identity prints as '-'.
    std::string to_string() const;
    std::string to_dash_string() const;

  private:
    size_t n_ = 0;
    uint64_t x_bits_ = 0;
    uint64_t z_bits_ = 0;
    int phase_ = 0;  // exponent of i, mod 4
};

}  // namespace ftqec
