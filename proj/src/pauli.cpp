#include "ftqec/pauli.hpp"

#include <stdexcept>

namespace ftqec {

PauliOperator PauliOperator::from_string(std::string_view s) {
    int phase = 0;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        if (s.front() == '-') phase = 2;
        s.remove_prefix(1);
    }
    PauliOperator p(s.size());
    p.phase_ = phase;
    for (size_t q = 0; q < s.size(); ++q) {
        switch (s[q]) {
            case 'I': case '-': case '_': break;
            case 'X': p.set_x(q, true); break;
            case 'Z': p.set_z(q, true); break;
            case 'Y':
                p.set_x(q, true);
                p.set_z(q, true);
                p.phase_ = (p.phase_ + 1) & 3;  // Y = i XZ
                break;
            default: throw std::invalid_argument("bad Pauli character in \"" + std::string(s) + "\"");
        }
    }
    return p;
}

PauliOperator PauliOperator::single(size_t n, size_t q, char kind) {
    PauliOperator p(n);
    if (q >= n) throw std::out_of_range("qubit index out of range");
    switch (kind) {
        case 'I': break;
        case 'X': p.set_x(q, true); break;
        case 'Z': p.set_z(q, true); break;
        case 'Y': p.set_x(q, true); p.set_z(q, true); p.phase_ = 1; break;
        default: throw std::invalid_argument("bad Pauli kind");
    }
    return p;
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& other) {
    if (n_ != other.n_) throw std::invalid_argument("Pauli size mismatch");
    // Z^z1 X^x2 = (-1)^{|z1 & x2|} X^x2 Z^z1
    int flips = std::popcount(z_bits_ & other.x_bits_);
    phase_ = (phase_ + other.phase_ + 2 * flips) & 3;
    x_bits_ ^= other.x_bits_;
    z_bits_ ^= other.z_bits_;
    return *this;
}

std::string PauliOperator::to_string() const {
    std::string s;
    s.reserve(n_);
    for (size_t q = 0; q < n_; ++q) s.push_back(letter(q));
    return s;
}

std::string PauliOperator::to_dash_string() const {
    std::string s = to_string();
    for (auto& c : s)
        if (c == 'I') c = '-';
    return s;
}

}  // namespace ftqec
