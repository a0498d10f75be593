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
#include <string>
#include <vector>

#include "belldisc/circuit.h"
#include "belldisc/qmath.h"
#include "belldisc/sampler.h"

namespace belldisc {

/// The 3^n measurement settings over {X, Y, Z}^n, lexicographic with X < Y < Z.
struct TomographyPlan {
    int n_qubits = 0;
    std::vector<PauliLabel> settings;
};

/// Throws TooManyQubits outside 1..4.
TomographyPlan tomography_plan(int n_qubits);

/// Pauli expansion coefficients c_L = <sigma_L> for every label over
/// {I, X, Y, Z}^n; the all-identity coefficient is 1.
struct ExpectationTable {
    int n_qubits = 0;
    std::map<std::string, double> coefficients;

    /// Throws IncompleteTable for an absent label.
    double at(const std::string &label) const;
};

/// All 4^n labels in lexicographic order over I < X < Y < Z.
std::vector<PauliLabel> all_pauli_labels(int n_qubits);

/// Measurement setting that supplies a label: identity slots read from Z.
PauliLabel setting_for(const PauliLabel &label);

/**
 * Estimates every coefficient from per-setting outcome frequencies.
 *
 * c_L = sum over outcomes of (-1)^(number of 1 bits at L's non-identity
 * positions) * frequency, read from setting_for(L). Histograms are keyed by
 * setting string and must all carry the same shot total.
 */
ExpectationTable expectations_from_counts(const TomographyPlan &plan,
                                          const std::map<std::string, CountsHistogram> &histograms);
ExpectationTable expectations_from_distributions(const TomographyPlan &plan,
                                                 const std::map<std::string, ProbabilityMap> &distributions);

/// Linear inversion rho = 2^-n sum_L c_L sigma_L. Hermitian with unit trace;
/// positivity is not guaranteed.
DensityMatrix reconstruct(const ExpectationTable &table);

struct TomographyReport {
    DensityMatrix raw;
    DensityMatrix physical;
    bool clipped = false;
    /// Fidelity of the raw reconstruction to the ideal state.
    double fidelity_to_ideal = 0.0;
    /// Same, after make_physical.
    double fidelity_physical = 0.0;
    /// Entrywise deviation of the raw reconstruction from the ideal state.
    DeviationReport deviation;
    /// Purity of the raw reconstruction.
    double purity = 0.0;
    ExpectationTable expectations;
};

/// Metrics of a reconstructed matrix against an ideal one.
TomographyReport analyze_reconstruction(const DensityMatrix &raw, const DensityMatrix &ideal,
                                        ExpectationTable expectations = {});

/**
 * Full protocol: plan, basis changes, sampling of each setting (setting i
 * uses seed derive_seed(seed, i)), estimation, inversion, projection and
 * metrics. The circuit must be unmeasured and at most 4 qubits wide.
 */
TomographyReport run_tomography(const Circuit &circuit, const DensityMatrix &ideal, std::uint64_t shots,
                                const NoiseModel &noise, std::uint64_t seed);

nlohmann::json report_to_json(const TomographyReport &report, const std::string &label, const std::string &ideal);

}  // namespace belldisc
