#include "ftqec/circuit.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ftqec {

const char* to_string(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::CX: return "CX";
        case GateKind::Swap: return "SWAP";
        case GateKind::PrepZ: return "PREPZ";
        case GateKind::MeasZ: return "MEASZ";
    }
    return "?";
}

const char* to_string(QubitRole r) {
    switch (r) {
        case QubitRole::Data: return "data";
        case QubitRole::Syndrome: return "syndrome";
        case QubitRole::Flag: return "flag";
        case QubitRole::Verification: return "verification";
        case QubitRole::AncillaData: return "ancilla-data";
    }
    return "?";
}

QubitRole role_from_string(const std::string& s) {
    if (s == "data") return QubitRole::Data;
    if (s == "syndrome") return QubitRole::Syndrome;
    if (s == "flag") return QubitRole::Flag;
    if (s == "verification") return QubitRole::Verification;
    if (s == "ancilla-data") return QubitRole::AncillaData;
    throw std::invalid_argument("unknown qubit role: " + s);
}

void Circuit::check_qubit(int q) const {
    if (q < 0 || q >= num_qubits()) throw std::out_of_range("qubit id out of range");
}

int Circuit::add_label(const std::string& label) {
    labels_.push_back(label);
    return static_cast<int>(labels_.size()) - 1;
}

void Circuit::h(int q) {
    check_qubit(q);
    gates_.push_back({GateKind::H, q});
}

void Circuit::cx(int c, int t) {
    check_qubit(c);
    check_qubit(t);
    if (c == t) throw std::invalid_argument("CX needs distinct targets");
    gates_.push_back({GateKind::CX, c, t});
}

void Circuit::swap(int a, int b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) throw std::invalid_argument("SWAP needs distinct targets");
    gates_.push_back({GateKind::Swap, a, b});
}

void Circuit::prep_z(int q) {
    check_qubit(q);
    gates_.push_back({GateKind::PrepZ, q});
}

void Circuit::prep_x(int q) {
    prep_z(q);
    h(q);
}

void Circuit::meas_z(int q, const std::string& label) {
    check_qubit(q);
    gates_.push_back({GateKind::MeasZ, q, -1, add_label(label)});
}

void Circuit::meas_x(int q, const std::string& label) {
    h(q);
    meas_z(q, label);
}

void Circuit::append(const Circuit& other) {
    if (other.num_qubits() > num_qubits())
        throw std::invalid_argument("appended circuit uses more qubits");
    for (const Gate& g : other.gates_) {
        Gate copy = g;
        if (g.label_id >= 0) copy.label_id = add_label(other.labels_[g.label_id]);
        gates_.push_back(copy);
    }
}

std::vector<int> Circuit::qubits_with_role(QubitRole r) const {
    std::vector<int> out;
    for (int q = 0; q < num_qubits(); ++q)
        if (qubits_[q].role == r) out.push_back(q);
    return out;
}

int Circuit::gate_ordinal(int gate_index) const {
    if (!gates_.at(gate_index).is_unitary_gate()) return -1;
    int ord = 0;
    for (int i = 0; i < gate_index; ++i)
        if (gates_[i].is_unitary_gate()) ++ord;
    return ord;
}

int Circuit::count_kind(GateKind k) const {
    int n = 0;
    for (const Gate& g : gates_) n += (g.kind == k);
    return n;
}

std::string Circuit::to_text() const {
    std::ostringstream os;
    os << "QUBITS " << num_qubits() << "\n";
    for (int q = 0; q < num_qubits(); ++q) {
        if (qubits_[q].coord.valid())
            os << "COORD " << q << " " << qubits_[q].coord.row << " " << qubits_[q].coord.col << "\n";
        os << "ROLE " << q << " " << to_string(qubits_[q].role) << "\n";
    }
    for (const Gate& g : gates_) {
        switch (g.kind) {
            case GateKind::H: os << "H " << g.q0 << "\n"; break;
            case GateKind::CX: os << "CX " << g.q0 << " " << g.q1 << "\n"; break;
            case GateKind::Swap: os << "SWAP " << g.q0 << " " << g.q1 << "\n"; break;
            case GateKind::PrepZ: os << "PREPZ " << g.q0 << "\n"; break;
            case GateKind::MeasZ: os << "MEASZ " << g.q0 << " " << labels_[g.label_id] << "\n"; break;
        }
    }
    return os.str();
}

Circuit Circuit::from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Circuit c;
    bool have_qubits = false;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op)) continue;
        auto fail = [&](const std::string& why) {
            throw std::runtime_error("circuit parse error at line " + std::to_string(lineno) + ": " + why);
        };
        auto need_int = [&]() {
            long v;
            if (!(ls >> v)) fail("expected integer");
            return static_cast<int>(v);
        };
        if (op == "QUBITS") {
            int n = need_int();
            if (n <= 0 || n > 64) fail("bad qubit count");
            c = Circuit(n);
            have_qubits = true;
            continue;
        }
        if (!have_qubits) fail("QUBITS must come first");
        if (op == "COORD") {
            int q = need_int(), row = need_int(), col = need_int();
            if (q < 0 || q >= c.num_qubits()) fail("qubit id out of range");
            c.set_coord(q, row, col);
        } else if (op == "ROLE") {
            int q = need_int();
            std::string role;
            if (!(ls >> role)) fail("expected role");
            if (q < 0 || q >= c.num_qubits()) fail("qubit id out of range");
            c.set_role(q, role_from_string(role));
        } else if (op == "H") {
            c.h(need_int());
        } else if (op == "CX") {
            int a = need_int(), b = need_int();
            c.cx(a, b);
        } else if (op == "SWAP") {
            int a = need_int(), b = need_int();
            c.swap(a, b);
        } else if (op == "PREPZ") {
            c.prep_z(need_int());
        } else if (op == "PREPX") {
            c.prep_x(need_int());
        } else if (op == "MEASZ") {
            int q = need_int();
            std::string label;
            if (!(ls >> label)) fail("expected measurement label");
            c.meas_z(q, label);
        } else if (op == "MEASX") {
            int q = need_int();
            std::string label;
            if (!(ls >> label)) fail("expected measurement label");
            c.meas_x(q, label);
        } else {
            fail("unknown op " + op);
        }
    }
    if (!have_qubits) throw std::runtime_error("circuit parse error: empty file");
    return c;
}

Circuit Circuit::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open circuit file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_text(ss.str());
}

std::vector<ConnectivityViolation> validate_connectivity(const Circuit& c) {
    std::vector<ConnectivityViolation> out;
    for (int i = 0; i < static_cast<int>(c.gates().size()); ++i) {
        const Gate& g = c.gates()[i];
        if (!g.is_two_qubit()) continue;
        const Coord& a = c.qubit(g.q0).coord;
        const Coord& b = c.qubit(g.q1).coord;
        if (!a.valid() || !b.valid() ||
            std::abs(a.row - b.row) + std::abs(a.col - b.col) != 1) {
            out.push_back({i, g.q0, g.q1});
        }
    }
    return out;
}

}  // namespace ftqec
