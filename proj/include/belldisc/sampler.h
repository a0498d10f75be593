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

#include <cstdint>
#include <json.hpp>
#include <map>
#include <span>
#include <string>

#include "belldisc/circuit.h"
#include "belldisc/qmath.h"

namespace belldisc {

/**
 * Noise applied during density-matrix evolution.
 *
 * Depolarizing strength p replaces the affected qubits by the maximally
 * mixed state with probability p: rho -> (1 - p) rho + p (I/d (x) Tr_q rho).
 * Equivalently each non-identity Pauli error on the d x d block occurs with
 * probability p/d^2, so for a CNOT the 15 two-qubit Pauli errors are
 * equiprobable. Channels act after the gate. Readout error flips each
 * measured bit independently with probability `readout_flip`.
 */
struct NoiseModel {
    double single_qubit_depolarizing = 0.0;
    double cnot_depolarizing = 0.0;
    double readout_flip = 0.0;

    static NoiseModel ideal() {
        return {};
    }
    bool is_ideal() const noexcept {
        return single_qubit_depolarizing == 0.0 && cnot_depolarizing == 0.0 && readout_flip == 0.0;
    }
    /// Throws InvalidArgument unless every probability lies in [0, 1].
    void validate() const;

    bool operator==(const NoiseModel &) const = default;
};

/// Outcome bitstring (qubit order ascending, lowest index leftmost) -> probability.
using ProbabilityMap = std::map<std::string, double>;

/// Measured bitstrings and their counts for one experimental setting.
class CountsHistogram {
   public:
    /// shots is the sum of the counts.
    CountsHistogram(int n_bits, std::map<std::string, std::uint64_t> counts);
    /// Throws InconsistentShotTotals when shots differs from the sum.
    CountsHistogram(int n_bits, std::map<std::string, std::uint64_t> counts, std::uint64_t shots);

    int n_bits() const noexcept {
        return n_bits_;
    }
    std::uint64_t shots() const noexcept {
        return shots_;
    }
    const std::map<std::string, std::uint64_t> &counts() const noexcept {
        return counts_;
    }
    std::uint64_t count(const std::string &bits) const;
    double frequency(const std::string &bits) const;
    ProbabilityMap frequencies() const;

    bool operator==(const CountsHistogram &) const = default;

   private:
    int n_bits_;
    std::map<std::string, std::uint64_t> counts_;
    std::uint64_t shots_ = 0;
};

/// {"n_bits": 3, "shots": 8192, "counts": {"010": 37, ...}}
nlohmann::json counts_to_json(const CountsHistogram &histogram);
CountsHistogram counts_from_json(const nlohmann::json &doc);

/// Derives an independent 64-bit stream seed from a root seed and a counter.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream);

/// Replaces the listed qubits by the maximally mixed state with probability p.
void depolarize(ComplexMatrix &rho, std::span<const int> qubits, double p, int n_qubits);

/// Density matrix after running the circuit from |0...0> under `noise`.
DensityMatrix evolve_density(const Circuit &circuit, const NoiseModel &noise);

/// Exact outcome probabilities over the measured qubits, readout error
/// included. Every one of the 2^k outcomes is present.
ProbabilityMap exact_distribution(const Circuit &circuit, const NoiseModel &noise);

/// Multinomial sample of `shots` terminal measurements. Shot i draws from
/// its own stream derive_seed(seed, i), so the result depends only on the
/// arguments.
CountsHistogram sample(const Circuit &circuit, std::uint64_t shots, const NoiseModel &noise, std::uint64_t seed);

/// Appends per-qubit basis rotations (X: H, Y: SDG then H, Z: none) and
/// marks every qubit measured.
Circuit with_basis_change(const Circuit &circuit, const PauliLabel &setting);

}  // namespace belldisc
