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

#include "belldisc/qmath.h"

#include <algorithm>
#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

#include "belldisc/error.h"

namespace belldisc {

namespace {

void require_hermitian(const DensityMatrix &rho) {
    if (max_asymmetry(rho.matrix()) > rho.hermitian_tolerance()) {
        throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian within its tolerance");
    }
}

void require_same_dim(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()) + " differ");
    }
}

ComplexMatrix hermitian_part(const ComplexMatrix &m) {
    return (m + m.adjoint()) * 0.5;
}

}  // namespace

bool is_power_of_two(std::size_t value) {
    return value != 0 && (value & (value - 1)) == 0;
}

int qubit_count_for_dim(std::size_t dim) {
    if (!is_power_of_two(dim)) {
        throw Error(ErrorKind::BadDimensions, "dimension " + std::to_string(dim) + " is not a power of two");
    }
    int n = 0;
    while ((std::size_t{1} << n) < dim) {
        ++n;
    }
    return n;
}

bool all_finite(const ComplexMatrix &m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        const Complex z = m.data()[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

double max_asymmetry(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::NotSquare, "matrix is not square");
    }
    return m.size() == 0 ? 0.0 : (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    n_qubits_ = qubit_count_for_dim(static_cast<std::size_t>(amplitudes_.size()));
    if (std::abs(amplitudes_.squaredNorm() - 1.0) > tol::kAlgebraic) {
        throw Error(ErrorKind::InvalidArgument, "state vector is not normalized");
    }
}

StateVector StateVector::normalized(ComplexVector amplitudes) {
    const double norm = amplitudes.norm();
    if (!(norm > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "cannot normalize a zero vector");
    }
    return StateVector(amplitudes / norm);
}

StateVector StateVector::zero(int n_qubits) {
    return basis(n_qubits, 0);
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
    if (n_qubits < 0 || n_qubits > 16) {
        throw Error(ErrorKind::InvalidArgument, "unsupported register size");
    }
    const auto dim = Eigen::Index{1} << n_qubits;
    if (index >= static_cast<std::uint64_t>(dim)) {
        throw Error(ErrorKind::InvalidArgument, "basis index out of range");
    }
    ComplexVector v = ComplexVector::Zero(dim);
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(std::move(v));
}

StateVector StateVector::from_ket(std::string_view bits) {
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw Error(ErrorKind::InvalidArgument, "ket string must contain only 0 and 1");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return basis(static_cast<int>(bits.size()), index);
}

StateVector StateVector::tensor(const StateVector &other) const {
    ComplexVector v(amplitudes_.size() * other.amplitudes_.size());
    for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
        v.segment(i * other.amplitudes_.size(), other.amplitudes_.size()) = amplitudes_(i) * other.amplitudes_;
    }
    return StateVector(std::move(v));
}

double StateVector::overlap_probability(const StateVector &other) const {
    if (dim() != other.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "state dimensions differ");
    }
    return std::norm(amplitudes_.dot(other.amplitudes_));
}

// ---------------------------------------------------------------------------
// PauliLabel

PauliLabel::PauliLabel(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty()) {
        throw Error(ErrorKind::InvalidArgument, "empty Pauli label");
    }
    for (char c : symbols_) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw Error(ErrorKind::InvalidArgument, "bad Pauli symbol '" + std::string(1, c) + "'");
        }
    }
}

bool PauliLabel::has_identity() const noexcept {
    return symbols_.find('I') != std::string::npos;
}

bool PauliLabel::is_identity() const noexcept {
    return std::all_of(symbols_.begin(), symbols_.end(), [](char c) { return c == 'I'; });
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(ComplexMatrix matrix, double hermitian_tolerance)
    : matrix_(std::move(matrix)), hermitian_tolerance_(hermitian_tolerance) {
    if (matrix_.rows() != matrix_.cols()) {
        throw Error(ErrorKind::NotSquare, "density matrix must be square");
    }
    qubit_count_for_dim(dim());
    if (!all_finite(matrix_)) {
        throw Error(ErrorKind::InvalidArgument, "density matrix has non-finite entries");
    }
    if (max_asymmetry(matrix_) > hermitian_tolerance_) {
        throw Error(ErrorKind::NotHermitian, "density matrix is not Hermitian");
    }
}

DensityMatrix DensityMatrix::pure(const StateVector &state) {
    const ComplexVector &v = state.amplitudes();
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
    const auto dim = Eigen::Index{1} << n_qubits;
    return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(matrix_), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

// ---------------------------------------------------------------------------
// Operations

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

ComplexMatrix pauli_matrix(char symbol) {
    const Complex i{0.0, 1.0};
    ComplexMatrix m(2, 2);
    switch (symbol) {
        case 'I':
            m << 1, 0, 0, 1;
            break;
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, -i, i, 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        default:
            throw Error(ErrorKind::InvalidArgument, "bad Pauli symbol");
    }
    return m;
}

ComplexMatrix pauli_operator(const PauliLabel &label) {
    ComplexMatrix result = pauli_matrix(label[0]);
    for (std::size_t q = 1; q < label.n_qubits(); ++q) {
        result = tensor(result, pauli_matrix(label[q]));
    }
    return result;
}

double fidelity(const DensityMatrix &rho1, const DensityMatrix &rho2) {
    require_same_dim(rho1, rho2);
    require_hermitian(rho1);
    require_hermitian(rho2);

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> ref(hermitian_part(rho1.matrix()));
    const Eigen::VectorXd &lambda = ref.eigenvalues();
    if (lambda.minCoeff() < -tol::kPhysical) {
        throw Error(ErrorKind::StronglyNonPositive, "reference state has a negative eigenvalue");
    }

    const ComplexMatrix &rho = rho2.matrix();
    if (purity(rho1) > 1.0 - tol::kAlgebraic) {
        // Eigenvalues are ascending; the last column spans the pure state.
        const ComplexVector psi = ref.eigenvectors().col(lambda.size() - 1);
        const double overlap = psi.dot(rho * psi).real();
        return std::sqrt(std::max(0.0, overlap));
    }

    const Eigen::VectorXd root = lambda.cwiseMax(0.0).cwiseSqrt();
    const ComplexMatrix sqrt_rho1 = ref.eigenvectors() * root.asDiagonal() * ref.eigenvectors().adjoint();
    const ComplexMatrix inner = hermitian_part(sqrt_rho1 * rho * sqrt_rho1);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> mid(inner, Eigen::EigenvaluesOnly);
    // Negative eigenvalues here only come from rounding or a non-positive rho2;
    // both contribute nothing to the trace of the square root.
    double total = 0.0;
    for (Eigen::Index k = 0; k < mid.eigenvalues().size(); ++k) {
        total += std::sqrt(std::max(0.0, mid.eigenvalues()(k)));
    }
    return total;
}

double purity(const DensityMatrix &rho) {
    require_hermitian(rho);
    const ComplexMatrix &m = rho.matrix();
    // Tr(rho^2) = sum_ij rho_ij rho_ji, without forming the product.
    const Complex value = m.cwiseProduct(m.transpose()).sum();
    // A matrix that is Hermitian only to a printed tolerance leaves a
    // residue of the same order; exact states are held to 1e-9.
    const double allowed = std::max(tol::kAlgebraic, rho.hermitian_tolerance());
    if (std::abs(value.imag()) > allowed) {
        throw Error(ErrorKind::NotHermitian, "purity has an imaginary residue");
    }
    return value.real();
}

DeviationReport deviation(const DensityMatrix &ideal, const DensityMatrix &experimental) {
    require_same_dim(ideal, experimental);
    const Eigen::MatrixXd modulus = (ideal.matrix() - experimental.matrix()).cwiseAbs();
    DeviationReport report;
    report.dimension = ideal.dim();
    report.average_abs_deviation = modulus.sum() / static_cast<double>(modulus.size());
    report.max_abs_deviation = modulus.maxCoeff();
    return report;
}

PhysicalProjection make_physical(const ComplexMatrix &raw) {
    if (raw.rows() != raw.cols()) {
        throw Error(ErrorKind::NotSquare, "matrix is not square");
    }
    if (!all_finite(raw)) {
        throw Error(ErrorKind::InvalidArgument, "matrix has non-finite entries");
    }
    if (max_asymmetry(raw) > 1e-3) {
        throw Error(ErrorKind::GrosslyNonHermitian, "asymmetry exceeds 1e-3");
    }
    const ComplexMatrix sym = hermitian_part(raw);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    const Eigen::VectorXd &lambda = solver.eigenvalues();

    constexpr double kClipThreshold = 1e-12;
    double negative = 0.0;
    for (Eigen::Index k = 0; k < lambda.size(); ++k) {
        if (lambda(k) < -kClipThreshold) {
            negative -= lambda(k);
        }
    }

    if (negative == 0.0) {
        const double trace = sym.trace().real();
        if (!(trace > 0.0)) {
            throw Error(ErrorKind::StronglyNonPositive, "matrix has no positive weight");
        }
        return {DensityMatrix(sym / trace), false, 0.0};
    }

    const Eigen::VectorXd kept = lambda.cwiseMax(0.0);
    const double total = kept.sum();
    if (!(total > 0.0)) {
        throw Error(ErrorKind::StronglyNonPositive, "matrix has no positive weight");
    }
    ComplexMatrix projected = solver.eigenvectors() * (kept / total).asDiagonal() * solver.eigenvectors().adjoint();
    projected = hermitian_part(projected);
    return {DensityMatrix(std::move(projected)), true, negative};
}

bool is_unitary(const ComplexMatrix &u, double tolerance) {
    if (u.rows() != u.cols()) {
        return false;
    }
    const ComplexMatrix residual = u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
    return residual.cwiseAbs().maxCoeff() <= tolerance;
}

double distance_up_to_global_phase(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
    }
    Eigen::Index row = 0;
    Eigen::Index col = 0;
    a.cwiseAbs().maxCoeff(&row, &col);
    auto phase_of = [&](const ComplexMatrix &m) {
        const Complex z = m(row, col);
        return std::abs(z) > 0.0 ? std::conj(z) / std::abs(z) : Complex{1.0, 0.0};
    };
    return (a * phase_of(a) - b * phase_of(b)).cwiseAbs().maxCoeff();
}

}  // namespace belldisc
