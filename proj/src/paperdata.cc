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

#include "belldisc/paperdata.h"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "belldisc/circuit.h"
#include "belldisc/circuit_io.h"
#include "belldisc/error.h"
#include "paperdata_internal.h"

namespace belldisc {

namespace {

constexpr Eigen::Index kDim = 8;
constexpr double kTraceSlack = 0.05;

void validate(const LabeledMatrix &m) {
    if (m.matrix.rows() != kDim || m.matrix.cols() != kDim) {
        throw Error(ErrorKind::BadDimensions, m.label + ": expected an 8x8 matrix");
    }
    if (!all_finite(m.matrix)) {
        throw Error(ErrorKind::ParseError, m.label + ": non-finite entry");
    }
    if (max_asymmetry(m.matrix) > m.hermitian_tolerance) {
        throw Error(ErrorKind::NonHermitianBeyondTolerance, m.label + ": asymmetry beyond tolerance");
    }
    if (std::abs(m.matrix.trace().real() - 1.0) > kTraceSlack) {
        throw Error(ErrorKind::InvalidArgument, m.label + ": trace is not close to 1");
    }
}

Eigen::MatrixXd read_block(const nlohmann::json &rows, const char *name) {
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != kDim) {
        throw Error(ErrorKind::BadDimensions, std::string("'") + name + "' must have 8 rows");
    }
    Eigen::MatrixXd block(kDim, kDim);
    for (Eigen::Index r = 0; r < kDim; ++r) {
        const auto &row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != kDim) {
            throw Error(ErrorKind::BadDimensions, std::string("'") + name + "' must have 8 columns");
        }
        for (Eigen::Index c = 0; c < kDim; ++c) {
            const auto &value = row[static_cast<std::size_t>(c)];
            if (!value.is_number()) {
                throw Error(ErrorKind::ParseError, std::string("'") + name + "' holds a non-number");
            }
            block(r, c) = value.get<double>();
        }
    }
    return block;
}

double rounded(double value, std::optional<int> decimals) {
    if (!decimals) {
        return value;
    }
    const double scale = std::pow(10.0, *decimals);
    const double r = std::round(value * scale) / scale;
    return r == 0.0 ? 0.0 : r;
}

}  // namespace

StateVector ideal_state_from_name(std::string_view name) {
    if (name.size() != 5 || (name[4] != '0' && name[4] != '1')) {
        throw Error(ErrorKind::InvalidArgument, "ideal state name must look like 'psi+0'");
    }
    return bell_ancilla_state(parse_bell_kind(name.substr(0, 4)), name[4] - '0');
}

const std::vector<LabeledMatrix> &embedded_dataset() {
    static const std::vector<LabeledMatrix> kDataset = [] {
        std::vector<LabeledMatrix> out;
        for (const internal::PrintedMatrix &p : internal::printed_matrices()) {
            LabeledMatrix m;
            m.label = p.label;
            m.ideal = p.ideal;
            m.ideal_state = ideal_state_from_name(p.ideal);
            m.source = p.source;
            m.matrix = ComplexMatrix(kDim, kDim);
            for (Eigen::Index r = 0; r < kDim; ++r) {
                for (Eigen::Index c = 0; c < kDim; ++c) {
                    m.matrix(r, c) = Complex(p.re[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)],
                                             p.im[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
                }
            }
            validate(m);
            out.push_back(std::move(m));
        }
        return out;
    }();
    return kDataset;
}

const LabeledMatrix &embedded_matrix(std::string_view label) {
    for (const LabeledMatrix &m : embedded_dataset()) {
        if (m.label == label) {
            return m;
        }
    }
    throw Error(ErrorKind::InvalidArgument, "no embedded matrix named '" + std::string(label) + "'");
}

LabeledMatrix parse_matrix_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("re") || !doc.contains("im") || !doc.contains("label") ||
        !doc.contains("ideal")) {
        throw Error(ErrorKind::ParseError, "matrix file needs label, ideal, re and im");
    }
    LabeledMatrix m;
    try {
        m.label = doc.at("label").get<std::string>();
        m.ideal = doc.at("ideal").get<std::string>();
        m.source = doc.value("source", std::string{});
        m.hermitian_tolerance = doc.value("hermitian_tolerance", kPrintedHermitianTolerance);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    m.ideal_state = ideal_state_from_name(m.ideal);
    const Eigen::MatrixXd re = read_block(doc.at("re"), "re");
    const Eigen::MatrixXd im = read_block(doc.at("im"), "im");
    m.matrix = re.cast<Complex>() + Complex(0.0, 1.0) * im.cast<Complex>();
    validate(m);
    return m;
}

LabeledMatrix load_matrix(const std::string &path) {
    return parse_matrix_json(read_text_file(path));
}

nlohmann::json matrix_to_json(const std::string &label, const std::string &ideal, const ComplexMatrix &matrix,
                              std::optional<int> decimals) {
    nlohmann::json doc;
    doc["label"] = label;
    doc["ideal"] = ideal;
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
        nlohmann::json re_row = nlohmann::json::array();
        nlohmann::json im_row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
            re_row.push_back(rounded(matrix(r, c).real(), decimals));
            im_row.push_back(rounded(matrix(r, c).imag(), decimals));
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    doc["re"] = std::move(re);
    doc["im"] = std::move(im);
    return doc;
}

nlohmann::json matrix_to_json(const LabeledMatrix &m) {
    nlohmann::json doc = matrix_to_json(m.label, m.ideal, m.matrix);
    doc["source"] = m.source;
    doc["hermitian_tolerance"] = m.hermitian_tolerance;
    return doc;
}

const std::vector<PublishedTarget> &published_targets() {
    static const std::vector<PublishedTarget> kTargets = {
        {"psi_plus_0.prep", 0.8890, 0.018, 0.137},
        {"psi_minus_0.prep", 0.8994, 0.018, 0.125},
        {"phi_plus_0.prep", 0.9091, 0.018, 0.119},
        {"phi_minus_0.prep", 0.9060, 0.020, 0.118},
        {"psi_plus_0.phase", 0.8707, std::nullopt, std::nullopt},
        {"psi_minus_1.phase", 0.7114, std::nullopt, std::nullopt},
        {"phi_plus_0.phase", 0.8794, std::nullopt, std::nullopt},
        {"phi_minus_1.phase", 0.7493, std::nullopt, std::nullopt},
        {"psi_plus_0.parity", 0.8751, std::nullopt, std::nullopt},
        {"psi_minus_0.parity", 0.8751, std::nullopt, std::nullopt},
        {"phi_plus_1.parity", 0.7224, std::nullopt, std::nullopt},
        {"phi_minus_1.parity", 0.7576, std::nullopt, std::nullopt},
    };
    return kTargets;
}

std::vector<MetricsRow> reproduce_metrics(const std::vector<LabeledMatrix> &dataset) {
    std::vector<MetricsRow> rows;
    rows.reserve(dataset.size());
    for (const LabeledMatrix &m : dataset) {
        const DensityMatrix ideal = m.ideal_density();
        const DensityMatrix measured = m.density();
        const PhysicalProjection projected = make_physical(m.matrix);
        const DeviationReport dev = deviation(ideal, measured);
        MetricsRow row;
        row.label = m.label;
        row.fidelity = fidelity(ideal, measured);
        row.avg_dev = dev.average_abs_deviation;
        row.max_dev = dev.max_abs_deviation;
        row.purity = purity(measured);
        row.fidelity_physical = fidelity(ideal, projected.state);
        row.clipped = projected.clipped;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<MetricsRow> reproduce_metrics() {
    return reproduce_metrics(embedded_dataset());
}

std::string metrics_to_csv(const std::vector<MetricsRow> &rows) {
    std::ostringstream out;
    out << "label,fidelity,avg_dev,max_dev,purity,fidelity_physical,clipped\n";
    out << std::fixed << std::setprecision(6);
    for (const MetricsRow &r : rows) {
        out << r.label << ',' << r.fidelity << ',' << r.avg_dev << ',' << r.max_dev << ',' << r.purity << ','
            << r.fidelity_physical << ',' << (r.clipped ? "true" : "false") << '\n';
    }
    return out.str();
}

}  // namespace belldisc
