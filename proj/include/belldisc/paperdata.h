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

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "belldisc/qmath.h"

namespace belldisc {

/// Asymmetry tolerated in matrices copied from print, where the last digit
/// is rounded independently above and below the diagonal.
inline constexpr double kPrintedHermitianTolerance = 2e-3;

/**
 * An experimental 8x8 density matrix together with the ideal state it is
 * meant to approximate. `ideal` names that state as "<bell><ancilla>", for
 * instance "psi-1" for (|001> - |111>)/sqrt2.
 */
struct LabeledMatrix {
    std::string label;
    std::string ideal;
    StateVector ideal_state = StateVector::zero(3);
    std::string source;
    ComplexMatrix matrix;
    double hermitian_tolerance = kPrintedHermitianTolerance;

    DensityMatrix density() const {
        return DensityMatrix(matrix, hermitian_tolerance);
    }
    DensityMatrix ideal_density() const {
        return DensityMatrix::pure(ideal_state);
    }
};

/// "psi+0" -> Bell pair (x) |0>.
StateVector ideal_state_from_name(std::string_view name);

/// The twelve printed matrices: four after preparation, four after the
/// phase check and four after the parity check, in that order.
const std::vector<LabeledMatrix> &embedded_dataset();
/// Throws InvalidArgument for an unknown label.
const LabeledMatrix &embedded_matrix(std::string_view label);

/**
 * Matrix file format:
 *
 *     {"label": "psi_plus_0.prep", "ideal": "psi+0",
 *      "re": [[...8 rows of 8...]], "im": [[...]],
 *      "source": "...", "hermitian_tolerance": 0.002}
 *
 * "source" and "hermitian_tolerance" are optional. Errors: ParseError,
 * BadDimensions (payload not 8x8), NonHermitianBeyondTolerance.
 */
LabeledMatrix parse_matrix_json(std::string_view text);
LabeledMatrix load_matrix(const std::string &path);

/// Serializes a matrix. With `decimals` set every entry is rounded first so
/// the file reloads to exactly the written values.
nlohmann::json matrix_to_json(const std::string &label, const std::string &ideal, const ComplexMatrix &matrix,
                              std::optional<int> decimals = std::nullopt);
nlohmann::json matrix_to_json(const LabeledMatrix &m);

struct MetricsRow {
    std::string label;
    double fidelity = 0.0;
    double avg_dev = 0.0;
    double max_dev = 0.0;
    double purity = 0.0;
    /// Fidelity after make_physical, a diagnostic of the projection drift.
    double fidelity_physical = 0.0;
    bool clipped = false;
};

/// Published reference values for one label; deviations are only printed
/// for the preparation stage.
struct PublishedTarget {
    std::string label;
    double fidelity = 0.0;
    std::optional<double> avg_dev;
    std::optional<double> max_dev;
};

const std::vector<PublishedTarget> &published_targets();

/// Fidelity (pure-state form on the matrix as printed), deviations and purity
/// of every matrix against its ideal state.
std::vector<MetricsRow> reproduce_metrics(const std::vector<LabeledMatrix> &dataset);
std::vector<MetricsRow> reproduce_metrics();

/// label,fidelity,avg_dev,max_dev,purity,fidelity_physical,clipped
std::string metrics_to_csv(const std::vector<MetricsRow> &rows);

}  // namespace belldisc
