#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ftqec/pauli.hpp"

namespace ftqec {

// Source of intrinsic measurement randomness. forced_zero pins every random
// projective outcome to 0, which makes noiseless reference runs reproducible
// for fault enumeration.
struct BitSource {
    std::mt19937_64* gen = nullptr;
    bool forced_zero = false;

    bool bit() { return forced_zero ? false : ((*gen)() & 1) != 0; }
};

// Aaronson-Gottesman stabilizer/destabilizer tableau for up to 64 qubits.
class TableauState {
  public:
    explicit TableauState(size_t n);

    size_t num_qubits() const { return n_; }

    void apply_h(size_t q);
    void apply_cx(size_t c, size_t t);
    void apply_swap(size_t a, size_t b);
    void apply_x(size_t q);
    void apply_z(size_t q);

    // Z-basis measurement; random outcomes are drawn from rng.
    bool measure_z(size_t q, BitSource& rng);
    bool is_deterministic_z(size_t q) const;
    void prep_z(size_t q, BitSource& rng);

    // Expectation of a Pauli observable: +1 / -1 if the state is an
    // eigenstate, 0 otherwise.
    int expectation(const PauliOperator& p) const;

  private:
    struct Row {
        uint64_t x = 0, z = 0;
        uint8_t r = 0;  // sign: 0 => +1, 1 => -1
    };

    void row_mult(Row& h, const Row& i) const;  // h *= i with sign tracking

    size_t n_;
    std::vector<Row> destab_;
    std::vector<Row> stab_;
};

}  // namespace ftqec
