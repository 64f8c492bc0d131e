#pragma once

#include <array>
#include <string>
#include <vector>

#include "ftqec/circuit.hpp"
#include "ftqec/steane.hpp"

namespace ftqec {

enum class CheckType : uint8_t { X, Z };

// Wiring of one bridged parity-check: the syndrome qubit couples to the two
// flag qubits along tree_opens (given in X-check orientation, control first),
// every node feeds its data qubits in feed order, then the tree is unwound in
// reverse. flags[0] carries the first flag bit of the pair.
struct BridgeSpec {
    int synd;
    std::array<int, 2> flags;
    std::vector<std::pair<int, int>> tree_opens;
    std::vector<std::pair<int, int>> feeds;
};

// Builds a bridged weight-4 parity check over an existing register. Labels
// are "<s_label>[<s_index>]" and "<f_label>[<f_index0>]", "...[<f_index0>+1]".
Circuit build_bridge_check(const Circuit& reg, CheckType type, const BridgeSpec& spec,
                           const std::string& s_label, int s_index,
                           const std::string& f_label, int f_index0);

// Fig-style standalone weight-4 checks on data {0..3}: variant 1 uses one
// flag and is not grid-embeddable, variants 2 and 3 use flag qubits as
// bridges. Registers are self-contained (4 data + ancillas).
Circuit build_flag_circuit(int variant, CheckType type);

// A naive grid assignment for the variant-1 circuit (used to show that its
// syndrome qubit cannot be placed with nearest-neighbor couplings only).
Circuit build_flag_circuit_naive_grid(int variant, CheckType type);

// The 4x4 compact layout: seven data qubits wrapped around four shared
// ancillas, every plaquette of the code served by three of them.
class CitadelLayout {
  public:
    static constexpr int kNumQubits = 11;
    static constexpr std::array<int, 7> kData = {0, 1, 2, 3, 4, 5, 6};
    static constexpr int kAncA7 = 7, kAncA8 = 8, kAncA9 = 9, kAncA10 = 10;

    CitadelLayout();

    // Register with roles and 4x4 coordinates, no gates.
    const Circuit& reg() const { return reg_; }
    const BridgeSpec& plaquette_spec(int i) const { return specs_[i]; }

    Circuit x_plaquette(int i, const std::string& s_label, int s_index,
                        const std::string& f_label, int f_index0) const;
    Circuit z_plaquette(int i, const std::string& s_label, int s_index,
                        const std::string& f_label, int f_index0) const;

    // Sequential measurement of the three X-type checks starting from
    // |0>^7, with ancilla resets between plaquettes. Labels s0X / f0X.
    Circuit encoder() const;

    // EC-round plaquettes with neutral labels s[i], f[2i], f[2i+1].
    Circuit ec_plaquette(CheckType type, int i) const;

  private:
    Circuit reg_;
    std::array<BridgeSpec, 3> specs_;
};

const CitadelLayout& citadel();

// Verification-based encoder reconstruction: 7 data + 1 verification qubit
// on a 3x3 grid, 8 encoding CNOTs + 3 verification CNOTs.
struct GotorlEncoder {
    Circuit zero_l;              // prepares |0>_L, verification bit f0X[0]
    Circuit plus_l;              // dual circuit preparing |+>_L, bit f0Z[0]
    int anc = 7;
    std::array<int, 7> data = {0, 1, 2, 3, 4, 5, 6};
    uint8_t verification_z_mask = 0;  // support of the measured Z line
};

// Loads and certifies a verification-based encoder from a circuit file:
// qubit/gate counts, 3x3 nearest-neighbor layout, exact |0>_L preparation,
// and single-fault tolerance of both the circuit and its dual.
GotorlEncoder load_gotorl_encoder(const std::string& path);
GotorlEncoder load_gotorl_encoder_text(const std::string& text);

// Path of the reference encoder shipped with the repository.
std::string default_gotorl_path();

enum class ReconfigKind { SwapForFb, TransversalForSteane };

// Combined register and circuits for the verification-based encoder feeding
// a flag-based EC cycle: the 3x3 block embedded in the 4x4 grid, six SWAPs
// in two parallel stages moving the data into the compact arrangement, and
// the verification ancilla reset.
struct GotorlFbProtocolCircuits {
    Circuit reg;                     // 4x4 register (only used cells carry qubits)
    Circuit encoder;                 // gotorl encoder mapped onto the register
    Circuit reconfiguration;         // 6 SWAPs (4 then 2) + ancilla reset
    std::array<int, 7> data_after;   // register ids holding q1..q7 afterwards
    std::vector<std::pair<int, int>> stage1, stage2;
};
GotorlFbProtocolCircuits build_gotorl_fb_circuits(const GotorlEncoder& enc);

// Transversal expansion onto a fresh data block for Steane-style EC: seven
// CNOTs from the redefined ancilla block to adjacent fresh data qubits,
// followed by a transversal X-basis measurement of the ancilla block.
struct GotorlSteaneCircuits {
    Circuit reg;                       // block A + fresh data (+ block B for the Z check)
    Circuit encode_anc_zero;           // block A |0>_L encoder (f0X[0])
    Circuit x_check;                   // prep fresh data, 7 CX, MeasX block A -> b0X
    Circuit encode_anc_plus;           // block B |+>_L encoder (f0Z[0])
    Circuit z_check;                   // 7 CX data->block B, MeasZ -> b0Z
    std::array<int, 7> fresh_data;     // register ids of the fresh block, code order
};
GotorlSteaneCircuits build_gotorl_steane_circuits(const GotorlEncoder& enc, bool with_z_check);

// Transversal parity check between two full code blocks (Fig-1a style).
Circuit build_steane_check(const Circuit& reg, CheckType type, const std::array<int, 7>& data,
                           const std::array<int, 7>& anc, const std::string& label);

struct GateCounts {
    int enc_cnots = 0;
    int extra_cnots = 0;  // SWAPs count as three
    int ancillas = 0;
};
GateCounts audit_fb_encoding();
GateCounts audit_gotorl_fb(const GotorlEncoder& enc);
GateCounts audit_gotorl_steane(const GotorlEncoder& enc);

}  // namespace ftqec
