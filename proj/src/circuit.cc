// Copyright 2026 The belldisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "belldisc/circuit.h"

#include <algorithm>
#include <cmath>

#include "belldisc/error.h"

namespace belldisc {

namespace {

int infer_width(int requested, std::initializer_list<int> qubits) {
    int width = requested;
    for (int q : qubits) {
        if (q < 0) {
            throw Error(ErrorKind::BadQubitIndex, "negative qubit index");
        }
        if (requested > 0 && q >= requested) {
            throw Error(ErrorKind::BadQubitIndex, "qubit " + std::to_string(q) + " outside a register of " +
                                                      std::to_string(requested));
        }
        width = std::max(width, q + 1);
    }
    return width;
}

void require_distinct(std::initializer_list<int> qubits) {
    std::vector<int> v(qubits);
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
        throw Error(ErrorKind::BadQubitIndex, "qubit indices must be distinct");
    }
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::X:
            return "X";
        case GateKind::S:
            return "S";
        case GateKind::SDG:
            return "SDG";
        case GateKind::CNOT:
            return "CNOT";
    }
    return "?";
}

Gate Gate::single(GateKind kind, int target) {
    if (kind == GateKind::CNOT) {
        throw Error(ErrorKind::InvalidArgument, "CNOT needs a control qubit");
    }
    return Gate{kind, target, std::nullopt};
}

Gate Gate::cnot(int control, int target) {
    if (control == target) {
        throw Error(ErrorKind::BadQubitIndex, "CNOT control equals target");
    }
    return Gate{GateKind::CNOT, target, control};
}

// ---------------------------------------------------------------------------
// Circuit

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1) {
        throw Error(ErrorKind::InvalidArgument, "a circuit needs at least one qubit");
    }
}

void Circuit::check_qubit(int q) const {
    if (q < 0 || q >= n_qubits_) {
        throw Error(ErrorKind::BadQubitIndex,
                    "qubit " + std::to_string(q) + " outside register of " + std::to_string(n_qubits_));
    }
}

Circuit &Circuit::add(const Gate &gate) {
    check_qubit(gate.target);
    if (gate.kind == GateKind::CNOT) {
        if (!gate.control) {
            throw Error(ErrorKind::InvalidArgument, "CNOT without control");
        }
        check_qubit(*gate.control);
        if (*gate.control == gate.target) {
            throw Error(ErrorKind::BadQubitIndex, "CNOT control equals target");
        }
    } else if (gate.control) {
        throw Error(ErrorKind::InvalidArgument, "single-qubit gate with a control");
    }
    if (measured_.count(gate.target) || (gate.control && measured_.count(*gate.control))) {
        throw Error(ErrorKind::HasMeasurementsBeforeEnd, "gate after a measurement on the same qubit");
    }
    gates_.push_back(gate);
    return *this;
}

Circuit &Circuit::measure(int q) {
    check_qubit(q);
    measured_.insert(q);
    return *this;
}

Circuit &Circuit::measure_all() {
    for (int q = 0; q < n_qubits_; ++q) {
        measured_.insert(q);
    }
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.n_qubits_ > n_qubits_) {
        throw Error(ErrorKind::DimensionMismatch, "appended circuit is wider than the target");
    }
    for (const Gate &g : other.gates_) {
        add(g);
    }
    for (int q : other.measured_) {
        measure(q);
    }
    return *this;
}

Circuit Circuit::widened(int n_qubits) const {
    if (n_qubits < n_qubits_) {
        throw Error(ErrorKind::DimensionMismatch, "cannot narrow a circuit");
    }
    Circuit out(n_qubits);
    out.append(*this);
    return out;
}

Circuit Circuit::without_measurements() const {
    Circuit out(n_qubits_);
    out.gates_ = gates_;
    return out;
}

// ---------------------------------------------------------------------------
// Bell states

std::string_view bell_name(BellKind kind) {
    switch (kind) {
        case BellKind::PSI_PLUS:
            return "psi+";
        case BellKind::PSI_MINUS:
            return "psi-";
        case BellKind::PHI_PLUS:
            return "phi+";
        case BellKind::PHI_MINUS:
            return "phi-";
    }
    return "?";
}

BellKind parse_bell_kind(std::string_view name) {
    for (BellKind kind : kAllBellKinds) {
        if (bell_name(kind) == name) {
            return kind;
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown Bell state '" + std::string(name) + "'");
}

int parity_bit(BellKind kind) {
    return (kind == BellKind::PHI_PLUS || kind == BellKind::PHI_MINUS) ? 1 : 0;
}

int phase_bit(BellKind kind) {
    return (kind == BellKind::PSI_MINUS || kind == BellKind::PHI_MINUS) ? 1 : 0;
}

StateVector bell_state(BellKind kind) {
    const double r = 1.0 / std::sqrt(2.0);
    const double sign = phase_bit(kind) ? -1.0 : 1.0;
    ComplexVector v = ComplexVector::Zero(4);
    if (parity_bit(kind) == 0) {
        v(0) = r;
        v(3) = sign * r;
    } else {
        v(1) = r;
        v(2) = sign * r;
    }
    return StateVector(std::move(v));
}

StateVector bell_ancilla_state(BellKind kind, int ancilla_bit) {
    return bell_state(kind).tensor(StateVector::basis(1, ancilla_bit ? 1 : 0));
}

// ---------------------------------------------------------------------------
// Circuit builders

Circuit bell_prep(BellKind kind, QubitPair system, int n_qubits) {
    const auto [a, b] = system;
    require_distinct({a, b});
    Circuit c(infer_width(n_qubits, {a, b}));
    // |00> -> psi+, |01> -> phi+, |10> -> psi-, |11> -> phi-
    if (phase_bit(kind)) {
        c.x(a);
    }
    if (parity_bit(kind)) {
        c.x(b);
    }
    c.h(a).cnot(a, b);
    return c;
}

Circuit reverse_epr(QubitPair system, int n_qubits) {
    const auto [a, b] = system;
    require_distinct({a, b});
    Circuit c(infer_width(n_qubits, {a, b}));
    c.cnot(a, b).h(a);
    return c;
}

Circuit parity_check_circuit(QubitPair system, int ancilla, int n_qubits) {
    const auto [a, b] = system;
    require_distinct({a, b, ancilla});
    Circuit c(infer_width(n_qubits, {a, b, ancilla}));
    c.cnot(a, ancilla).cnot(b, ancilla);
    return c;
}

Circuit phase_check_circuit(QubitPair system, int ancilla, int n_qubits) {
    const auto [a, b] = system;
    require_distinct({a, b, ancilla});
    Circuit c(infer_width(n_qubits, {a, b, ancilla}));
    c.h(ancilla).cnot(ancilla, a).cnot(ancilla, b).h(ancilla);
    return c;
}

Circuit ancilla_target_phase_check(QubitPair system, int ancilla, int n_qubits) {
    const auto [a, b] = system;
    require_distinct({a, b, ancilla});
    Circuit c(infer_width(n_qubits, {a, b, ancilla}));
    c.h(a).h(b).cnot(a, ancilla).cnot(b, ancilla).h(a).h(b);
    return c;
}

Circuit combined_discriminator(QubitPair system, int phase_anc, int parity_anc, int n_qubits) {
    const auto [a, b] = system;
    require_distinct({a, b, phase_anc, parity_anc});
    Circuit c(infer_width(n_qubits, {a, b, phase_anc, parity_anc}));
    c.append(phase_check_circuit(system, phase_anc));
    c.append(parity_check_circuit(system, parity_anc));
    return c;
}

Circuit check_experiment(BellKind kind, CheckKind check, bool with_reverse_epr, bool measure) {
    constexpr QubitPair kSystem{0, 1};
    constexpr int kAncilla = 2;
    Circuit c(3);
    c.append(bell_prep(kind, kSystem));
    if (check == CheckKind::Parity) {
        c.append(parity_check_circuit(kSystem, kAncilla));
    } else {
        c.append(ancilla_target_phase_check(kSystem, kAncilla));
    }
    if (with_reverse_epr) {
        c.append(reverse_epr(kSystem));
    }
    if (measure) {
        c.measure_all();
    }
    return c;
}

Circuit combined_experiment(BellKind kind, bool measure, const CombinedLayout &layout) {
    Circuit c(4);
    c.append(bell_prep(kind, layout.system));
    c.append(combined_discriminator(layout.system, layout.phase_ancilla, layout.parity_ancilla));
    c.append(reverse_epr(layout.system));
    if (measure) {
        c.measure_all();
    }
    return c;
}

// ---------------------------------------------------------------------------
// Simulation

void apply_gate(const Gate &gate, std::span<Complex> amps, int n_qubits) {
    if (amps.size() != (std::size_t{1} << n_qubits)) {
        throw Error(ErrorKind::DimensionMismatch, "amplitude count does not match register");
    }
    auto mask_of = [n_qubits](int q) {
        if (q < 0 || q >= n_qubits) {
            throw Error(ErrorKind::BadQubitIndex, "gate qubit outside register");
        }
        return std::size_t{1} << (n_qubits - 1 - q);
    };
    const std::size_t t = mask_of(gate.target);
    const std::size_t dim = amps.size();
    const double r = 1.0 / std::sqrt(2.0);
    const Complex i{0.0, 1.0};

    switch (gate.kind) {
        case GateKind::H:
            for (std::size_t k = 0; k < dim; ++k) {
                if (!(k & t)) {
                    const Complex a = amps[k];
                    const Complex b = amps[k | t];
                    amps[k] = (a + b) * r;
                    amps[k | t] = (a - b) * r;
                }
            }
            break;
        case GateKind::X:
            for (std::size_t k = 0; k < dim; ++k) {
                if (!(k & t)) {
                    std::swap(amps[k], amps[k | t]);
                }
            }
            break;
        case GateKind::S:
        case GateKind::SDG: {
            const Complex phase = gate.kind == GateKind::S ? i : -i;
            for (std::size_t k = 0; k < dim; ++k) {
                if (k & t) {
                    amps[k] *= phase;
                }
            }
            break;
        }
        case GateKind::CNOT: {
            const std::size_t c = mask_of(gate.control.value());
            for (std::size_t k = 0; k < dim; ++k) {
                if ((k & c) && !(k & t)) {
                    std::swap(amps[k], amps[k | t]);
                }
            }
            break;
        }
    }
}

StateVector simulate(const Circuit &circuit, const StateVector &initial) {
    if (initial.n_qubits() != circuit.n_qubits()) {
        throw Error(ErrorKind::DimensionMismatch, "initial state does not match circuit width");
    }
    ComplexVector amps = initial.amplitudes();
    std::span<Complex> view(amps.data(), static_cast<std::size_t>(amps.size()));
    for (const Gate &g : circuit.gates()) {
        apply_gate(g, view, circuit.n_qubits());
    }
    return StateVector::normalized(std::move(amps));
}

StateVector simulate(const Circuit &circuit) {
    return simulate(circuit, StateVector::zero(circuit.n_qubits()));
}

ComplexMatrix unitary_of(const Circuit &circuit) {
    if (circuit.has_measurements()) {
        throw Error(ErrorKind::HasMeasurements, "unitary_of needs a circuit without measurements");
    }
    const Eigen::Index dim = Eigen::Index{1} << circuit.n_qubits();
    ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
    // Column j of U is U|j>; Eigen is column-major so columns are contiguous.
    for (Eigen::Index col = 0; col < dim; ++col) {
        std::span<Complex> view(u.col(col).data(), static_cast<std::size_t>(dim));
        for (const Gate &g : circuit.gates()) {
            apply_gate(g, view, circuit.n_qubits());
        }
    }
    return u;
}

std::size_t gate_count(const Circuit &circuit) {
    return circuit.gates().size();
}

// ---------------------------------------------------------------------------
// Coupling map and transpiler

CouplingMap::CouplingMap(int n_physical, std::set<QubitPair> allowed)
    : n_physical_(n_physical), allowed_(std::move(allowed)) {
    if (n_physical < 1) {
        throw Error(ErrorKind::InvalidArgument, "coupling map needs at least one qubit");
    }
    for (const auto &[c, t] : allowed_) {
        if (c < 0 || t < 0 || c >= n_physical || t >= n_physical || c == t) {
            throw Error(ErrorKind::BadQubitIndex, "coupling map edge out of range");
        }
    }
}

CouplingMap CouplingMap::default_star() {
    return CouplingMap(5, {{0, 2}, {1, 2}, {3, 2}, {4, 2}});
}

namespace {

class Router {
   public:
    Router(const CouplingMap &map, Circuit &out) : map_(map), out_(out) {
    }

    /// Gates needed for CNOT(c, t) on a connected pair.
    int cnot_cost(int c, int t) const {
        return map_.allows(c, t) ? 1 : 5;
    }

    int swap_cost(int a, int b) const {
        return (map_.allows(a, b) && map_.allows(b, a)) ? 3 : 7;
    }

    void emit_cnot(int c, int t) {
        if (map_.allows(c, t)) {
            out_.cnot(c, t);
        } else if (map_.allows(t, c)) {
            out_.h(c).h(t).cnot(t, c).h(c).h(t);
        } else {
            throw Error(ErrorKind::UnroutableCircuit, "pair is not connected");
        }
    }

    void emit_swap(int a, int b) {
        // Outer CNOTs run along an allowed direction; only the middle one
        // may need reversing.
        if (!map_.allows(a, b)) {
            std::swap(a, b);
        }
        emit_cnot(a, b);
        emit_cnot(b, a);
        emit_cnot(a, b);
    }

    void route(int c, int t) {
        if (map_.connected(c, t)) {
            emit_cnot(c, t);
            return;
        }
        int best_cost = 0;
        int best_mid = -1;
        bool move_target = true;
        for (int m = 0; m < map_.n_physical(); ++m) {
            if (m == c || m == t || !map_.connected(c, m) || !map_.connected(m, t)) {
                continue;
            }
            const int via_target = 2 * swap_cost(t, m) + cnot_cost(c, m);
            const int via_control = 2 * swap_cost(c, m) + cnot_cost(m, t);
            if (best_mid < 0 || via_target < best_cost) {
                best_cost = via_target;
                best_mid = m;
                move_target = true;
            }
            if (via_control < best_cost) {
                best_cost = via_control;
                best_mid = m;
                move_target = false;
            }
        }
        if (best_mid < 0) {
            throw Error(ErrorKind::UnroutableCircuit,
                        "no single intermediate joins qubits " + std::to_string(c) + " and " + std::to_string(t));
        }
        if (move_target) {
            emit_swap(t, best_mid);
            emit_cnot(c, best_mid);
            emit_swap(t, best_mid);
        } else {
            emit_swap(c, best_mid);
            emit_cnot(best_mid, t);
            emit_swap(c, best_mid);
        }
    }

   private:
    const CouplingMap &map_;
    Circuit &out_;
};

}  // namespace

Circuit transpile(const Circuit &circuit, const CouplingMap &map) {
    if (circuit.n_qubits() > map.n_physical()) {
        throw Error(ErrorKind::BadQubitIndex, "circuit uses " + std::to_string(circuit.n_qubits()) +
                                                  " qubits but the map has " + std::to_string(map.n_physical()));
    }
    // Routing may pass through any physical qubit; build on the full device
    // and narrow afterwards.
    Circuit wide(map.n_physical());
    Router router(map, wide);
    for (const Gate &g : circuit.gates()) {
        if (g.kind == GateKind::CNOT) {
            router.route(*g.control, g.target);
        } else {
            wide.add(g);
        }
    }

    int width = circuit.n_qubits();
    for (const Gate &g : wide.gates()) {
        width = std::max(width, g.target + 1);
        if (g.control) {
            width = std::max(width, *g.control + 1);
        }
    }
    Circuit out(width);
    for (const Gate &g : wide.gates()) {
        out.add(g);
    }
    for (int q : circuit.measured()) {
        out.measure(q);
    }
    return out;
}

}  // namespace belldisc
