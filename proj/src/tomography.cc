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

#include "belldisc/tomography.h"

#include <cmath>

#include "belldisc/error.h"
#include "belldisc/paperdata.h"

namespace belldisc {

namespace {

constexpr int kMaxTomographyQubits = 4;

void require_supported_width(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxTomographyQubits) {
        throw Error(ErrorKind::TooManyQubits, "tomography supports 1 to 4 qubits, got " + std::to_string(n_qubits));
    }
}

std::vector<PauliLabel> labels_over(std::string_view alphabet, int n_qubits) {
    const std::size_t base = alphabet.size();
    std::size_t total = 1;
    for (int q = 0; q < n_qubits; ++q) {
        total *= base;
    }
    std::vector<PauliLabel> out;
    out.reserve(total);
    std::string symbols(static_cast<std::size_t>(n_qubits), alphabet[0]);
    for (std::size_t index = 0; index < total; ++index) {
        std::size_t rest = index;
        for (int q = n_qubits - 1; q >= 0; --q) {
            symbols[static_cast<std::size_t>(q)] = alphabet[rest % base];
            rest /= base;
        }
        out.emplace_back(symbols);
    }
    return out;
}

}  // namespace

TomographyPlan tomography_plan(int n_qubits) {
    require_supported_width(n_qubits);
    return TomographyPlan{n_qubits, labels_over("XYZ", n_qubits)};
}

std::vector<PauliLabel> all_pauli_labels(int n_qubits) {
    require_supported_width(n_qubits);
    return labels_over("IXYZ", n_qubits);
}

double ExpectationTable::at(const std::string &label) const {
    auto it = coefficients.find(label);
    if (it == coefficients.end()) {
        throw Error(ErrorKind::IncompleteTable, "no coefficient for " + label);
    }
    return it->second;
}

PauliLabel setting_for(const PauliLabel &label) {
    std::string s = label.str();
    for (char &c : s) {
        if (c == 'I') {
            c = 'Z';
        }
    }
    return PauliLabel(s);
}

ExpectationTable expectations_from_distributions(const TomographyPlan &plan,
                                                 const std::map<std::string, ProbabilityMap> &distributions) {
    require_supported_width(plan.n_qubits);
    for (const PauliLabel &setting : plan.settings) {
        if (!distributions.count(setting.str())) {
            throw Error(ErrorKind::MissingSetting, "no data for setting " + setting.str());
        }
    }

    ExpectationTable table;
    table.n_qubits = plan.n_qubits;
    for (const PauliLabel &label : all_pauli_labels(plan.n_qubits)) {
        if (label.is_identity()) {
            table.coefficients[label.str()] = 1.0;
            continue;
        }
        const auto it = distributions.find(setting_for(label).str());
        if (it == distributions.end()) {
            throw Error(ErrorKind::MissingSetting, "no data for setting " + setting_for(label).str());
        }
        double value = 0.0;
        for (const auto &[bits, probability] : it->second) {
            if (bits.size() != label.n_qubits()) {
                throw Error(ErrorKind::BadDimensions, "outcome '" + bits + "' has the wrong width");
            }
            int ones = 0;
            for (std::size_t q = 0; q < bits.size(); ++q) {
                if (label[q] != 'I' && bits[q] == '1') {
                    ++ones;
                }
            }
            value += (ones % 2 == 0 ? 1.0 : -1.0) * probability;
        }
        table.coefficients[label.str()] = value;
    }
    return table;
}

ExpectationTable expectations_from_counts(const TomographyPlan &plan,
                                          const std::map<std::string, CountsHistogram> &histograms) {
    std::map<std::string, ProbabilityMap> distributions;
    std::optional<std::uint64_t> shots;
    for (const auto &[setting, histogram] : histograms) {
        if (histogram.n_bits() != plan.n_qubits) {
            throw Error(ErrorKind::BadDimensions, "histogram for " + setting + " has the wrong width");
        }
        if (shots && *shots != histogram.shots()) {
            throw Error(ErrorKind::InconsistentShotTotals, "settings were run with different shot totals");
        }
        shots = histogram.shots();
        distributions.emplace(setting, histogram.frequencies());
    }
    return expectations_from_distributions(plan, distributions);
}

DensityMatrix reconstruct(const ExpectationTable &table) {
    require_supported_width(table.n_qubits);
    const Eigen::Index dim = Eigen::Index{1} << table.n_qubits;
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    for (const PauliLabel &label : all_pauli_labels(table.n_qubits)) {
        rho += table.at(label.str()) * pauli_operator(label);
    }
    rho /= static_cast<double>(dim);
    return DensityMatrix(std::move(rho));
}

TomographyReport analyze_reconstruction(const DensityMatrix &raw, const DensityMatrix &ideal,
                                        ExpectationTable expectations) {
    PhysicalProjection projection = make_physical(raw.matrix());
    return TomographyReport{
        .raw = raw,
        .physical = projection.state,
        .clipped = projection.clipped,
        .fidelity_to_ideal = fidelity(ideal, raw),
        .fidelity_physical = fidelity(ideal, projection.state),
        .deviation = deviation(ideal, raw),
        .purity = purity(raw),
        .expectations = std::move(expectations),
    };
}

TomographyReport run_tomography(const Circuit &circuit, const DensityMatrix &ideal, std::uint64_t shots,
                                const NoiseModel &noise, std::uint64_t seed) {
    if (circuit.has_measurements()) {
        throw Error(ErrorKind::HasMeasurements, "tomography appends its own measurements");
    }
    const TomographyPlan plan = tomography_plan(circuit.n_qubits());
    if (ideal.n_qubits() != circuit.n_qubits()) {
        throw Error(ErrorKind::DimensionMismatch, "ideal state does not match the circuit width");
    }

    std::map<std::string, CountsHistogram> histograms;
    for (std::size_t i = 0; i < plan.settings.size(); ++i) {
        const PauliLabel &setting = plan.settings[i];
        histograms.emplace(setting.str(),
                           sample(with_basis_change(circuit, setting), shots, noise, derive_seed(seed, i)));
    }
    ExpectationTable table = expectations_from_counts(plan, histograms);
    const DensityMatrix raw = reconstruct(table);
    return analyze_reconstruction(raw, ideal, std::move(table));
}

nlohmann::json report_to_json(const TomographyReport &report, const std::string &label, const std::string &ideal) {
    constexpr int kDecimals = 6;
    nlohmann::json doc;
    doc["label"] = label;
    doc["ideal"] = ideal;
    doc["fidelity"] = report.fidelity_to_ideal;
    doc["fidelity_physical"] = report.fidelity_physical;
    doc["avg_dev"] = report.deviation.average_abs_deviation;
    doc["max_dev"] = report.deviation.max_abs_deviation;
    doc["purity"] = report.purity;
    doc["clipped"] = report.clipped;
    doc["raw"] = matrix_to_json(label, ideal, report.raw.matrix(), kDecimals);
    doc["physical"] = matrix_to_json(label + ".physical", ideal, report.physical.matrix(), kDecimals);
    nlohmann::json coefficients = nlohmann::json::object();
    for (const auto &[name, value] : report.expectations.coefficients) {
        coefficients[name] = value;
    }
    doc["expectations"] = std::move(coefficients);
    return doc;
}

}  // namespace belldisc
