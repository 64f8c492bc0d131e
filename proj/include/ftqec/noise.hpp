#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ftqec/circuit.hpp"
#include "ftqec/frame.hpp"

namespace ftqec {

enum class SwapNoiseMode : uint8_t { Decomposed, Atomic };

// Circuit-level depolarizing noise at a single physical rate p:
//   1q gate: X, Y or Z with probability p/3 each;
//   2q gate: each non-identity two-qubit Pauli with probability p/15;
//   prep:    X- or Y-type init fault with probability p/3 each;
//   meas:    outcome flip with probability 2p/3.
// X-basis prep/meas carry no extra channel; their explicit H gates do.
struct NoiseParams {
    double p = 0.0;
    SwapNoiseMode swap_mode = SwapNoiseMode::Decomposed;
};

enum class SiteKind : uint8_t { OneQubitGate, TwoQubitGate, Prep, Meas };

struct FaultSite {
    int gate_index;
    SiteKind kind;
    int sub = 0;  // sub-CNOT index for decomposed SWAP noise, else 0
};

// One candidate fault at a site. pauli is the effective Pauli immediately
// after the full op (decomposed SWAP faults are conjugated through the
// remaining sub-CNOTs). label is the raw channel name, e.g. "-X", "Y", "flip".
struct FaultCandidate {
    FaultSite site;
    PauliOperator pauli;
    bool meas_flip = false;
    std::string label;
};

struct SampledFault {
    int gate_index;
    PauliOperator pauli;
    bool meas_flip = false;
};

std::vector<std::pair<FaultSite, std::vector<FaultCandidate>>> enumerate_fault_sites(
    const Circuit& c, const NoiseParams& params);

// Flat list of every candidate, in site order then channel order.
std::vector<FaultCandidate> enumerate_fault_candidates(const Circuit& c, const NoiseParams& params);

std::vector<SampledFault> sample_noise(const Circuit& c, const NoiseParams& params,
                                       std::mt19937_64& rng);

// Expected number of faults per shot under params (for sanity tests).
double expected_fault_count(const Circuit& c, const NoiseParams& params);

}  // namespace ftqec
