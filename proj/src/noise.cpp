#include "ftqec/noise.hpp"

#include <array>

namespace ftqec {

namespace {

constexpr char kPauliChars[4] = {'-', 'X', 'Y', 'Z'};

// Local two-qubit Pauli on (a, b) as char pair, conjugated through CX(c, t).
void conj_through_cx(int c, int t, int a, int b, char& pa, char& pb) {
    auto bits = [](char p) -> std::pair<int, int> {
        switch (p) {
            case 'X': return {1, 0};
            case 'Y': return {1, 1};
            case 'Z': return {0, 1};
            default: return {0, 0};
        }
    };
    auto from_bits = [](int x, int z) -> char {
        if (x && z) return 'Y';
        if (x) return 'X';
        if (z) return 'Z';
        return '-';
    };
    auto [xa, za] = bits(pa);
    auto [xb, zb] = bits(pb);
    int xc = (a == c) ? xa : xb;
    int zc = (a == c) ? za : zb;
    int xt = (a == c) ? xb : xa;
    int zt = (a == c) ? zb : za;
    xt ^= xc;
    zc ^= zt;
    if (a == c) {
        pa = from_bits(xc, zc);
        pb = from_bits(xt, zt);
    } else {
        pa = from_bits(xt, zt);
        pb = from_bits(xc, zc);
    }
}

PauliOperator make_pauli(int n, std::initializer_list<std::pair<int, char>> qs) {
    PauliOperator p(n);
    for (auto [q, c] : qs) {
        if (c == 'X' || c == 'Y') p.set_x(q, true);
        if (c == 'Z' || c == 'Y') p.set_z(q, true);
    }
    return p;
}

std::vector<FaultCandidate> candidates_for_gate(const Circuit& c, int gi, const NoiseParams& params) {
    const Gate& g = c.gates()[gi];
    const int n = c.num_qubits();
    std::vector<FaultCandidate> out;
    switch (g.kind) {
        case GateKind::H: {
            for (char p : {'X', 'Y', 'Z'})
                out.push_back({{gi, SiteKind::OneQubitGate, 0},
                               make_pauli(n, {{g.q0, p}}),
                               false,
                               std::string(1, p)});
            break;
        }
        case GateKind::CX: {
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < 4; ++j) {
                    if (i == 0 && j == 0) continue;
                    char pa = kPauliChars[i], pb = kPauliChars[j];
                    out.push_back({{gi, SiteKind::TwoQubitGate, 0},
                                   make_pauli(n, {{g.q0, pa}, {g.q1, pb}}),
                                   false,
                                   std::string{pa, pb}});
                }
            }
            break;
        }
        case GateKind::Swap: {
            if (params.swap_mode == SwapNoiseMode::Atomic) {
                for (int i = 0; i < 4; ++i) {
                    for (int j = 0; j < 4; ++j) {
                        if (i == 0 && j == 0) continue;
                        char pa = kPauliChars[i], pb = kPauliChars[j];
                        out.push_back({{gi, SiteKind::TwoQubitGate, 0},
                                       make_pauli(n, {{g.q0, pa}, {g.q1, pb}}),
                                       false,
                                       std::string{pa, pb}});
                    }
                }
            } else {
                // SWAP(a,b) = CX(a,b) CX(b,a) CX(a,b); a fault after sub-CNOT k
                // is conjugated through the remaining sub-CNOTs.
                const int a = g.q0, b = g.q1;
                const std::array<std::pair<int, int>, 3> sub = {{{a, b}, {b, a}, {a, b}}};
                for (int k = 0; k < 3; ++k) {
                    for (int i = 0; i < 4; ++i) {
                        for (int j = 0; j < 4; ++j) {
                            if (i == 0 && j == 0) continue;
                            char pa = kPauliChars[i], pb = kPauliChars[j];
                            std::string label{pa, pb};
                            for (int r = k + 1; r < 3; ++r)
                                conj_through_cx(sub[r].first, sub[r].second, a, b, pa, pb);
                            out.push_back({{gi, SiteKind::TwoQubitGate, k},
                                           make_pauli(n, {{a, pa}, {b, pb}}),
                                           false,
                                           label});
                        }
                    }
                }
            }
            break;
        }
        case GateKind::PrepZ: {
            for (char p : {'X', 'Y'})
                out.push_back({{gi, SiteKind::Prep, 0},
                               make_pauli(n, {{g.q0, p}}),
                               false,
                               std::string(1, p)});
            break;
        }
        case GateKind::MeasZ: {
            out.push_back({{gi, SiteKind::Meas, 0}, PauliOperator(n), true, "flip"});
            break;
        }
    }
    return out;
}

}  // namespace

std::vector<std::pair<FaultSite, std::vector<FaultCandidate>>> enumerate_fault_sites(
    const Circuit& c, const NoiseParams& params) {
    std::vector<std::pair<FaultSite, std::vector<FaultCandidate>>> out;
    for (int gi = 0; gi < static_cast<int>(c.gates().size()); ++gi) {
        auto cands = candidates_for_gate(c, gi, params);
        if (cands.empty()) continue;
        // Group by sub-site.
        int sub = -1;
        for (auto& cand : cands) {
            if (cand.site.sub != sub) {
                sub = cand.site.sub;
                out.push_back({cand.site, {}});
            }
            out.back().second.push_back(cand);
        }
    }
    return out;
}

std::vector<FaultCandidate> enumerate_fault_candidates(const Circuit& c, const NoiseParams& params) {
    std::vector<FaultCandidate> out;
    for (int gi = 0; gi < static_cast<int>(c.gates().size()); ++gi) {
        auto cands = candidates_for_gate(c, gi, params);
        out.insert(out.end(), cands.begin(), cands.end());
    }
    return out;
}

std::vector<SampledFault> sample_noise(const Circuit& c, const NoiseParams& params,
                                       std::mt19937_64& rng) {
    std::vector<SampledFault> out;
    if (params.p <= 0.0) return out;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> pick15(0, 14);
    std::uniform_int_distribution<int> pick3(0, 2);
    const int n = c.num_qubits();
    const double p = params.p;

    auto two_qubit_channel = [&](int gi, int a, int b, int conj_from, const Gate* swap_gate) {
        // Draw one of the 15 non-identity pairs uniformly.
        int idx = pick15(rng) + 1;
        char pa = kPauliChars[idx >> 2], pb = kPauliChars[idx & 3];
        if (swap_gate) {
            const std::array<std::pair<int, int>, 3> sub = {
                {{swap_gate->q0, swap_gate->q1}, {swap_gate->q1, swap_gate->q0},
                 {swap_gate->q0, swap_gate->q1}}};
            for (int r = conj_from; r < 3; ++r)
                conj_through_cx(sub[r].first, sub[r].second, a, b, pa, pb);
        }
        out.push_back({gi, make_pauli(n, {{a, pa}, {b, pb}}), false});
    };

    for (int gi = 0; gi < static_cast<int>(c.gates().size()); ++gi) {
        const Gate& g = c.gates()[gi];
        switch (g.kind) {
            case GateKind::H:
                if (unit(rng) < p) {
                    char pc = kPauliChars[pick3(rng) + 1];
                    out.push_back({gi, make_pauli(n, {{g.q0, pc}}), false});
                }
                break;
            case GateKind::CX:
                if (unit(rng) < p) two_qubit_channel(gi, g.q0, g.q1, 3, nullptr);
                break;
            case GateKind::Swap:
                if (params.swap_mode == SwapNoiseMode::Atomic) {
                    if (unit(rng) < p) two_qubit_channel(gi, g.q0, g.q1, 3, nullptr);
                } else {
                    for (int k = 0; k < 3; ++k)
                        if (unit(rng) < p) two_qubit_channel(gi, g.q0, g.q1, k + 1, &g);
                }
                break;
            case GateKind::PrepZ:
                if (unit(rng) < 2.0 * p / 3.0) {
                    char pc = (rng() & 1) ? 'X' : 'Y';
                    out.push_back({gi, make_pauli(n, {{g.q0, pc}}), false});
                }
                break;
            case GateKind::MeasZ:
                if (unit(rng) < 2.0 * p / 3.0) out.push_back({gi, PauliOperator(n), true});
                break;
        }
    }
    return out;
}

double expected_fault_count(const Circuit& c, const NoiseParams& params) {
    double total = 0.0;
    for (const Gate& g : c.gates()) {
        switch (g.kind) {
            case GateKind::H:
            case GateKind::CX: total += params.p; break;
            case GateKind::Swap:
                total += (params.swap_mode == SwapNoiseMode::Atomic) ? params.p : 3.0 * params.p;
                break;
            case GateKind::PrepZ:
            case GateKind::MeasZ: total += 2.0 * params.p / 3.0; break;
        }
    }
    return total;
}

}  // namespace ftqec
