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

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "belldisc/qmath.h"

namespace belldisc {

enum class GateKind { H, X, S, SDG, CNOT };

std::string_view gate_name(GateKind kind);

struct Gate {
    GateKind kind = GateKind::H;
    int target = 0;
    std::optional<int> control;

    static Gate single(GateKind kind, int target);
    static Gate cnot(int control, int target);

    bool operator==(const Gate &) const = default;
};

using QubitPair = std::pair<int, int>;

/**
 * Ordered gate list over n qubit lines plus the set of qubits that receive a
 * terminal computational-basis measurement.
 *
 * Once a qubit is marked measured no further gate may touch it; appending
 * one throws HasMeasurementsBeforeEnd.
 */
class Circuit {
   public:
    explicit Circuit(int n_qubits);

    int n_qubits() const noexcept {
        return n_qubits_;
    }
    const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    const std::set<int> &measured() const noexcept {
        return measured_;
    }
    bool has_measurements() const noexcept {
        return !measured_.empty();
    }

    Circuit &add(const Gate &gate);
    Circuit &h(int q) {
        return add(Gate::single(GateKind::H, q));
    }
    Circuit &x(int q) {
        return add(Gate::single(GateKind::X, q));
    }
    Circuit &s(int q) {
        return add(Gate::single(GateKind::S, q));
    }
    Circuit &sdg(int q) {
        return add(Gate::single(GateKind::SDG, q));
    }
    Circuit &cnot(int control, int target) {
        return add(Gate::cnot(control, target));
    }
    Circuit &measure(int q);
    Circuit &measure_all();

    /// Appends the gates and measurement markers of `other`, which may be
    /// narrower than this circuit.
    Circuit &append(const Circuit &other);

    /// Same gates on a wider register.
    Circuit widened(int n_qubits) const;
    /// Same gates with all measurement markers dropped.
    Circuit without_measurements() const;

    bool operator==(const Circuit &) const = default;

   private:
    void check_qubit(int q) const;

    int n_qubits_;
    std::vector<Gate> gates_;
    std::set<int> measured_;
};

/// Bell states in the convention psi(+/-) = (|00> +/- |11>)/sqrt2 and
/// phi(+/-) = (|01> +/- |10>)/sqrt2.
enum class BellKind { PSI_PLUS, PSI_MINUS, PHI_PLUS, PHI_MINUS };

inline constexpr BellKind kAllBellKinds[] = {BellKind::PSI_PLUS, BellKind::PSI_MINUS, BellKind::PHI_PLUS,
                                             BellKind::PHI_MINUS};

/// "psi+", "psi-", "phi+", "phi-".
std::string_view bell_name(BellKind kind);
BellKind parse_bell_kind(std::string_view name);

/// Ancilla outcome of the parity check: 0 for psi(+/-), 1 for phi(+/-).
int parity_bit(BellKind kind);
/// Ancilla outcome of the phase check: 0 for "+" states, 1 for "-" states.
int phase_bit(BellKind kind);

/// Two-qubit Bell state vector.
StateVector bell_state(BellKind kind);
/// Bell pair on qubits (0, 1) followed by one ancilla in |ancilla_bit>.
StateVector bell_ancilla_state(BellKind kind, int ancilla_bit);

/// X gates selecting the input |ab> (psi+ <- 00, phi+ <- 01, psi- <- 10,
/// phi- <- 11), then H(first) and CNOT(first -> second).
Circuit bell_prep(BellKind kind, QubitPair system, int n_qubits = 0);
/// CNOT(first -> second) then H(first).
Circuit reverse_epr(QubitPair system, int n_qubits = 0);
/// CNOT(system0 -> ancilla), CNOT(system1 -> ancilla).
Circuit parity_check_circuit(QubitPair system, int ancilla, int n_qubits = 0);
/// H(ancilla), CNOT(ancilla -> system0), CNOT(ancilla -> system1), H(ancilla).
Circuit phase_check_circuit(QubitPair system, int ancilla, int n_qubits = 0);
/// Phase check written with CNOTs that target the ancilla only:
/// H on both system qubits around a parity check. Unitarily identical to
/// phase_check_circuit.
Circuit ancilla_target_phase_check(QubitPair system, int ancilla, int n_qubits = 0);
/// Phase check on phase_anc followed by parity check on parity_anc.
Circuit combined_discriminator(QubitPair system, int phase_anc, int parity_anc, int n_qubits = 0);

/// Which checking circuit an experiment uses.
enum class CheckKind { Parity, Phase };

/**
 * Three-qubit hardware-style experiment: system qubits 0 and 1, ancilla 2.
 * Bell preparation, the checking block (the phase check in its
 * ancilla-target form), and, when `with_reverse_epr` is set, a reverse EPR
 * block. When `measure` is set all three qubits are marked measured.
 */
Circuit check_experiment(BellKind kind, CheckKind check, bool with_reverse_epr, bool measure);

/// Physical qubit roles of the four-qubit single-shot discriminator as laid
/// out on the default star map: the pair's first qubit sits on the hub.
struct CombinedLayout {
    QubitPair system{2, 0};
    int phase_ancilla = 1;
    int parity_ancilla = 3;
};

/// Bell preparation, combined discriminator and reverse EPR over the
/// layout; all four qubits measured when `measure` is set.
Circuit combined_experiment(BellKind kind, bool measure, const CombinedLayout &layout = {});

/// Applies a single gate to a state vector over n qubits in place.
void apply_gate(const Gate &gate, std::span<Complex> amplitudes, int n_qubits);

/// Applies gates in order; measurement markers are ignored.
StateVector simulate(const Circuit &circuit, const StateVector &initial);
StateVector simulate(const Circuit &circuit);

/// Product of the gate unitaries; throws HasMeasurements on a marked circuit.
ComplexMatrix unitary_of(const Circuit &circuit);

/// Number of gates, measurement markers excluded.
std::size_t gate_count(const Circuit &circuit);

/// Directed set of physically allowed CNOT (control, target) pairs.
class CouplingMap {
   public:
    CouplingMap(int n_physical, std::set<QubitPair> allowed);

    /// Five physical qubits; every leaf may drive a CNOT onto hub qubit 2.
    static CouplingMap default_star();

    int n_physical() const noexcept {
        return n_physical_;
    }
    const std::set<QubitPair> &allowed() const noexcept {
        return allowed_;
    }
    bool allows(int control, int target) const {
        return allowed_.count({control, target}) != 0;
    }
    bool connected(int a, int b) const {
        return allows(a, b) || allows(b, a);
    }

   private:
    int n_physical_;
    std::set<QubitPair> allowed_;
};

/**
 * Rewrites every CNOT onto allowed pairs with identity placement.
 *
 * Rules, in priority order:
 *  1. an allowed CNOT is kept;
 *  2. a CNOT whose reverse is allowed becomes H(c) H(t) CNOT(t,c) H(c) H(t);
 *  3. otherwise one neighbour m connected to both ends is used: either the
 *     target is swapped onto m, CNOT(c,m) applied and the swap undone, or
 *     the control is moved instead. The cheaper option wins (target first on
 *     a tie); each SWAP is three CNOTs with its middle CNOT direction-fixed
 *     by rule 2 when the map is one-way.
 * The output register is widened only when routing uses a higher qubit.
 */
Circuit transpile(const Circuit &circuit, const CouplingMap &map);

}  // namespace belldisc
