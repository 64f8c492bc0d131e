#include "ftqec/tableau.hpp"

#include <stdexcept>

namespace ftqec {

TableauState::TableauState(size_t n) : n_(n), destab_(n), stab_(n) {
    if (n > 64) throw std::invalid_argument("TableauState supports at most 64 qubits");
    for (size_t q = 0; q < n; ++q) {
        destab_[q].x = uint64_t{1} << q;
        stab_[q].z = uint64_t{1} << q;
    }
}

void TableauState::apply_h(size_t q) {
    const uint64_t m = uint64_t{1} << q;
    for (auto* rows : {&destab_, &stab_}) {
        for (Row& row : *rows) {
            bool xb = row.x & m, zb = row.z & m;
            row.r ^= (xb && zb);
            row.x = (row.x & ~m) | (uint64_t{zb} << q);
            row.z = (row.z & ~m) | (uint64_t{xb} << q);
        }
    }
}

void TableauState::apply_cx(size_t c, size_t t) {
    const uint64_t mc = uint64_t{1} << c, mt = uint64_t{1} << t;
    for (auto* rows : {&destab_, &stab_}) {
        for (Row& row : *rows) {
            bool xc = row.x & mc, zt = row.z & mt;
            bool xt = row.x & mt, zc = row.z & mc;
            row.r ^= (xc && zt && (xt == zc));
            row.x ^= xc ? mt : 0;
            row.z ^= zt ? mc : 0;
        }
    }
}

void TableauState::apply_swap(size_t a, size_t b) {
    const uint64_t ma = uint64_t{1} << a, mb = uint64_t{1} << b;
    for (auto* rows : {&destab_, &stab_}) {
        for (Row& row : *rows) {
            bool xa = row.x & ma, xb = row.x & mb;
            bool za = row.z & ma, zb = row.z & mb;
            row.x = (row.x & ~(ma | mb)) | (xa ? mb : 0) | (xb ? ma : 0);
            row.z = (row.z & ~(ma | mb)) | (za ? mb : 0) | (zb ? ma : 0);
        }
    }
}

void TableauState::apply_x(size_t q) {
    const uint64_t m = uint64_t{1} << q;
    for (auto* rows : {&destab_, &stab_})
        for (Row& row : *rows) row.r ^= ((row.z & m) != 0);
}

void TableauState::apply_z(size_t q) {
    const uint64_t m = uint64_t{1} << q;
    for (auto* rows : {&destab_, &stab_})
        for (Row& row : *rows) row.r ^= ((row.x & m) != 0);
}

void TableauState::row_mult(Row& h, const Row& i) const {
    // Accumulate the power of i from multiplying h by i, qubit by qubit.
    int g = 0;
    uint64_t support = i.x | i.z | h.x | h.z;
    while (support) {
        int q = std::countr_zero(support);
        support &= support - 1;
        uint64_t m = uint64_t{1} << q;
        int x1 = (i.x & m) != 0, z1 = (i.z & m) != 0;
        int x2 = (h.x & m) != 0, z2 = (h.z & m) != 0;
        if (x1 && z1)
            g += z2 - x2;            // Y * P
        else if (x1)
            g += z2 * (2 * x2 - 1);  // X * P
        else if (z1)
            g += x2 * (1 - 2 * z2);  // Z * P
    }
    int phase = (2 * h.r + 2 * i.r + g) & 3;
    h.r = static_cast<uint8_t>(phase >> 1);
    h.x ^= i.x;
    h.z ^= i.z;
}

bool TableauState::is_deterministic_z(size_t q) const {
    const uint64_t m = uint64_t{1} << q;
    for (const Row& row : stab_)
        if (row.x & m) return false;
    return true;
}

bool TableauState::measure_z(size_t q, BitSource& rng) {
    const uint64_t m = uint64_t{1} << q;
    size_t p = n_;
    for (size_t i = 0; i < n_; ++i) {
        if (stab_[i].x & m) {
            p = i;
            break;
        }
    }
    if (p < n_) {
        // Random outcome: collapse onto Z_q with the drawn sign.
        for (size_t i = 0; i < n_; ++i) {
            if (i != p && (stab_[i].x & m)) row_mult(stab_[i], stab_[p]);
            if ((destab_[i].x & m)) row_mult(destab_[i], stab_[p]);
        }
        bool outcome = rng.bit();
        destab_[p] = stab_[p];
        stab_[p] = Row{0, m, static_cast<uint8_t>(outcome)};
        return outcome;
    }
    // Deterministic outcome: product of stabilizer rows selected by
    // destabilizers anticommuting with Z_q.
    Row acc{};
    for (size_t i = 0; i < n_; ++i)
        if (destab_[i].x & m) row_mult(acc, stab_[i]);
    return acc.r != 0;
}

void TableauState::prep_z(size_t q, BitSource& rng) {
    if (measure_z(q, rng)) apply_x(q);
}

int TableauState::expectation(const PauliOperator& p) const {
    // p is in the stabilizer group iff it is a product of stabilizer rows;
    // solve greedily using destabilizer anticommutation as coordinates.
    Row acc{};
    for (size_t i = 0; i < n_; ++i) {
        int anti = std::popcount(destab_[i].x & p.z_bits()) +
                   std::popcount(destab_[i].z & p.x_bits());
        if (anti & 1) row_mult(acc, stab_[i]);
    }
    if (acc.x != p.x_bits() || acc.z != p.z_bits()) return 0;
    // acc is (-1)^r times the letterwise Pauli; normalize p the same way
    // (each Y contributes X Z = -i Y to the stored phase).
    int ny = std::popcount(p.x_bits() & p.z_bits());
    int psign = ((p.phase_exponent() - ny) % 4 + 4) % 4;
    if (psign != 0 && psign != 2) throw std::invalid_argument("non-Hermitian observable");
    return (acc.r ? 2 : 0) == psign ? 1 : -1;
}

}  // namespace ftqec
