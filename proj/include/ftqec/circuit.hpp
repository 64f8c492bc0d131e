#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ftqec {

enum class GateKind : uint8_t { H, CX, Swap, PrepZ, MeasZ };

enum class QubitRole : uint8_t { Data, Syndrome, Flag, Verification, AncillaData };

const char* to_string(GateKind k);
const char* to_string(QubitRole r);
QubitRole role_from_string(const std::string& s);

struct Gate {
    GateKind kind;
    int q0 = -1;
    int q1 = -1;         // second target for CX (target) and Swap
    int label_id = -1;   // measurement label index, MeasZ only

    bool is_two_qubit() const { return kind == GateKind::CX || kind == GateKind::Swap; }
    bool is_unitary_gate() const {
        return kind == GateKind::H || kind == GateKind::CX || kind == GateKind::Swap;
    }
};

struct Coord {
    int row = -1;
    int col = -1;
    bool valid() const { return row >= 0 && col >= 0; }
};

struct QubitInfo {
    QubitRole role = QubitRole::Data;
    Coord coord;
};

struct ConnectivityViolation {
    int gate_index;
    int q0, q1;
};

// An ordered list of located gates over named qubits. X-basis preparation and
// measurement are always stored expanded as explicit H + Z-basis operations.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(int n) : qubits_(n) {}

    int num_qubits() const { return static_cast<int>(qubits_.size()); }
    const std::vector<QubitInfo>& qubits() const { return qubits_; }
    QubitInfo& qubit(int q) { return qubits_.at(q); }
    const QubitInfo& qubit(int q) const { return qubits_.at(q); }

    const std::vector<Gate>& gates() const { return gates_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int id) const { return labels_.at(id); }

    void set_role(int q, QubitRole r) { qubits_.at(q).role = r; }
    void set_coord(int q, int row, int col) { qubits_.at(q).coord = {row, col}; }

    void h(int q);
    void cx(int c, int t);
    void swap(int a, int b);
    void prep_z(int q);
    void prep_x(int q);                             // PrepZ + H
    void meas_z(int q, const std::string& label);
    void meas_x(int q, const std::string& label);   // H + MeasZ

    void append(const Circuit& other);  // other must use the same qubit indexing

    std::vector<int> qubits_with_role(QubitRole r) const;

    // Ordinal of a gate among unitary gates only (H/CX/Swap), as used when
    // reporting fault locations. Returns -1 for non-unitary ops.
    int gate_ordinal(int gate_index) const;
    int count_kind(GateKind k) const;

    std::string to_text() const;
    static Circuit from_text(const std::string& text);
    static Circuit from_file(const std::string& path);

  private:
    void check_qubit(int q) const;
    int add_label(const std::string& label);

    std::vector<QubitInfo> qubits_;
    std::vector<Gate> gates_;
    std::vector<std::string> labels_;
};

// Empty iff every two-qubit gate acts on a Manhattan-distance-1 pair. Gates
// touching a qubit without a grid coordinate are reported as violations.
std::vector<ConnectivityViolation> validate_connectivity(const Circuit& c);

}  // namespace ftqec
